#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scmul/analysis.hpp"
#include "scmul/costmodel.hpp"
#include "scmul/encoder.hpp"
#include "scmul/multiplier.hpp"

namespace {

using namespace scmul;

struct CommonOpts {
  unsigned width = 8;
  std::string design = "proposed";
  std::string out_dir = ".";
  int threads = 0;
  std::uint64_t seed1 = 0x01;
  std::uint64_t seed2 = 0x5A;
  std::vector<unsigned> taps;
  std::optional<std::uint64_t> truncate;
  std::size_t buckets = 16;
  std::string gate_lib_path;
  std::optional<std::size_t> sample;
  std::uint64_t sample_seed = 1;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--b", o.width, "Operand width B in bits")
      ->check(CLI::Range(2u, 16u));
  cmd->add_option("--design", o.design, "proposed|gaines|jenson|umul|all")
      ->check(CLI::IsMember({"proposed", "gaines", "jenson", "umul", "all"}));
  cmd->add_option("--out", o.out_dir, "Output directory for CSV files");
  cmd->add_option("--threads", o.threads, "Worker threads for sweeps (0 = auto)");
  cmd->add_option("--seed1", o.seed1, "Gaines LFSR seed for operand X");
  cmd->add_option("--seed2", o.seed2, "Gaines LFSR seed for operand Y");
  cmd->add_option("--taps", o.taps, "LFSR tap positions (both generators)");
  cmd->add_option("--truncate", o.truncate, "Jenson stream truncation length");
  cmd->add_option("--buckets", o.buckets, "Histogram bucket count K");
  cmd->add_option("--gate-lib", o.gate_lib_path,
                  "Gate library JSON (falls back to $SCMUL_GATE_LIB, then built-in)");
  cmd->add_option("--sample", o.sample, "Sampled sweep with N random pairs");
  cmd->add_option("--seed", o.sample_seed, "RNG seed for sampled sweeps");
}

SweepConfig make_config(const CommonOpts& o, MultiplierKind kind) {
  SweepConfig cfg;
  cfg.kind = kind;
  cfg.width = o.width;
  LfsrConfig lx = o.taps.empty() ? default_lfsr(o.width, o.seed1)
                                 : LfsrConfig{o.width, o.taps, o.seed1};
  LfsrConfig ly = o.taps.empty() ? default_lfsr(o.width, o.seed2)
                                 : LfsrConfig{o.width, o.taps, o.seed2};
  cfg.gaines = {lx, ly};
  cfg.jenson_truncate = o.truncate;
  return cfg;
}

std::vector<MultiplierKind> selected_kinds(const std::string& design) {
  if (design == "all")
    return {MultiplierKind::Proposed, MultiplierKind::Gaines, MultiplierKind::Jenson,
            MultiplierKind::Umul};
  return {multiplier_kind_from_string(design)};
}

GateLibrary load_gate_library(const CommonOpts& o) {
  if (!o.gate_lib_path.empty()) return GateLibrary::from_json_file(o.gate_lib_path);
  if (const char* env = std::getenv("SCMUL_GATE_LIB"); env && *env)
    return GateLibrary::from_json_file(env);
  return GateLibrary::defaults();
}

std::vector<PairRecord> run_sweep(const CommonOpts& o, const SweepConfig& cfg) {
  if (o.sample) return sampled_sweep(cfg, *o.sample, o.sample_seed);
  if (o.width > 8)
    throw std::invalid_argument("exhaustive sweep requires B <= 8; pass --sample N");
  return exhaustive_sweep(cfg, o.threads);
}

std::ofstream open_out(const CommonOpts& o, const std::string& name) {
  std::filesystem::create_directories(o.out_dir);
  const auto path = std::filesystem::path(o.out_dir) / name;
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file " + path.string());
  return os;
}

int cmd_mul(const CommonOpts& o, std::uint32_t x, std::uint32_t y) {
  const SweepConfig cfg = make_config(o, multiplier_kind_from_string(o.design));
  const BinaryOperand ox(x, o.width), oy(y, o.width);
  const MultiplyResult r = run_multiplier(cfg, ox, oy);

  if (cfg.kind == MultiplierKind::Proposed) {
    std::cout << "X_u = " << tcu_decode(x, o.width).render() << " = "
              << value_of(tcu_decode(x, o.width)).to_fraction_string() << "\n";
    std::cout << "Y_u = " << correlation_encode(oy).render() << " = "
              << value_of(correlation_encode(oy)).to_fraction_string() << "\n";
  }
  std::cout << "O_u = " << r.output.render() << "\n";
  std::cout << "observed = " << r.observed.to_fraction_string() << " = "
            << r.observed.to_decimal() << "\n";
  std::cout << "target   = " << r.target.to_fraction_string() << " = "
            << r.target.to_decimal() << "\n";
  std::cout << "error    = " << r.abs_error.to_fraction_string() << " = "
            << r.abs_error.to_decimal() << "\n";
  std::cout << "cycles   = " << r.cycles << "\n";
  return 0;
}

int cmd_sweep(const CommonOpts& o) {
  auto pairs_os = open_out(o, "pairs.csv");
  auto mae_os = open_out(o, "mae.csv");
  bool first = true;
  for (const MultiplierKind kind : selected_kinds(o.design)) {
    const SweepConfig cfg = make_config(o, kind);
    const auto records = run_sweep(o, cfg);
    const ErrorStats stats = mae(records, cfg.describe());
    write_pairs_csv(pairs_os, to_string(kind), o.width, records, cfg.describe());
    write_mae_csv(mae_os, to_string(kind), o.width, stats, cfg.describe(), first);
    std::cout << to_string(kind) << " B=" << o.width << " pairs=" << records.size()
              << " mae=" << stats.mae.to_decimal() << " ("
              << stats.mae.to_fraction_string() << ") max="
              << stats.max_error.to_decimal() << "\n";
    first = false;
  }
  return 0;
}

int cmd_hist(const CommonOpts& o) {
  auto hist_os = open_out(o, "hist.csv");
  bool first = true;
  for (const MultiplierKind kind : selected_kinds(o.design)) {
    const SweepConfig cfg = make_config(o, kind);
    const auto records = run_sweep(o, cfg);
    const Histogram hist = diff_histogram(records, o.buckets);
    write_hist_csv(hist_os, to_string(kind), o.width, hist, cfg.describe(), first);
    const auto r = diff_dependence(records);
    std::cout << to_string(kind) << " B=" << o.width << " pearson_r=";
    if (r)
      std::cout << *r << "\n";
    else
      std::cout << "undefined\n";
    first = false;
  }
  return 0;
}

int cmd_cost(const CommonOpts& o, bool naive) {
  const GateLibrary lib = load_gate_library(o);
  std::vector<CostReport> reports;
  for (const MultiplierKind kind : selected_kinds(o.design)) {
    const GateCounts counts = structural_counts(kind, o.width, naive);
    reports.push_back(evaluate_cost(to_string(kind), counts, lib));
  }
  if (reports.size() < 2) {
    // A single design still gets its report; ratios need the full table.
    const CostReport& r = reports.front();
    std::cout << r.design << ": A=" << r.area_um2 << " um^2, L=" << r.latency_ns
              << " ns, E=" << r.energy_fj << " fJ, AxExL=" << r.aexl_pj_s_mm2
              << " pJ.s.mm^2\n";
    return 0;
  }
  const auto rows = comparison_table(reports);
  auto cost_os = open_out(o, "cost.csv");
  write_cost_csv(cost_os, rows, "B=" + std::to_string(o.width) +
                                    ";lib=" + lib.digest());
  std::cout << format_comparison(rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic multiplier workbench: bit-parallel deterministic "
               "design and serial baselines"};
  app.require_subcommand(1);

  CommonOpts mul_o, sweep_o, hist_o, cost_o;
  std::uint32_t x = 0, y = 0;
  bool naive_counts = false;

  auto* mul = app.add_subcommand("mul", "Multiply one operand pair and print the streams");
  add_common_flags(mul, mul_o);
  mul->add_option("-x", x, "First operand (thermometer side for proposed)")->required();
  mul->add_option("-y", y, "Second operand")->required();

  auto* sweep = app.add_subcommand("sweep", "Operand-pair sweep; writes pairs.csv and mae.csv");
  add_common_flags(sweep, sweep_o);

  auto* hist = app.add_subcommand("hist", "Error-vs-operand-difference histogram; writes hist.csv");
  add_common_flags(hist, hist_o);

  auto* cost = app.add_subcommand("cost", "Gate-level cost comparison; writes cost.csv");
  cost_o.design = "all";
  add_common_flags(cost, cost_o);
  cost->add_flag("--naive-counts", naive_counts,
                 "Include constant-propagated gates in the counts");

  CLI11_PARSE(app, argc, argv);

  try {
    if (mul->parsed()) return cmd_mul(mul_o, x, y);
    if (sweep->parsed()) return cmd_sweep(sweep_o);
    if (hist->parsed()) return cmd_hist(hist_o);
    if (cost->parsed()) return cmd_cost(cost_o, naive_counts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
