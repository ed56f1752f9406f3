#include "scmul/costmodel.hpp"

#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace scmul {

std::string to_string(GateType g) {
  switch (g) {
    case GateType::And2: return "AND2";
    case GateType::Or2: return "OR2";
    case GateType::Not: return "NOT";
    case GateType::Xor2: return "XOR2";
    case GateType::Dff: return "DFF";
    case GateType::CmpBit: return "CMP_BIT";
  }
  throw std::invalid_argument("unknown gate type");
}

GateLibrary GateLibrary::defaults() {
  GateLibrary lib;
  lib.gates = {
      {GateType::And2, {1.0, 0.5, 19.0}},
      {GateType::Or2, {1.0, 0.5, 19.0}},
      {GateType::Not, {0.5, 0.25, 10.0}},
      {GateType::Xor2, {2.0, 1.0, 30.0}},
      {GateType::Dff, {4.5, 2.0, 100.0}},
      {GateType::CmpBit, {3.0, 1.5, 40.0}},
  };
  return lib;
}

GateLibrary GateLibrary::from_json_text(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  GateLibrary lib = defaults();
  for (const GateType g : kAllGateTypes) {
    const std::string name = to_string(g);
    if (!j.contains(name)) continue;
    const auto& e = j.at(name);
    lib.gates[g] = {e.at("area_um2").get<double>(), e.at("energy_fj").get<double>(),
                    e.at("delay_ps").get<double>()};
  }
  if (j.contains("clock_period_ns"))
    lib.clock_period_ns = j.at("clock_period_ns").get<double>();
  if (j.contains("activity_factor"))
    lib.activity_factor = j.at("activity_factor").get<double>();
  lib.validate();
  return lib;
}

GateLibrary GateLibrary::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("gate library: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

void GateLibrary::validate() const {
  double max_delay = 0;
  for (const GateType g : kAllGateTypes) {
    const auto it = gates.find(g);
    if (it == gates.end())
      throw std::invalid_argument("gate library: missing entry for " + to_string(g));
    const GateParams& p = it->second;
    if (p.area_um2 <= 0 || p.energy_fj <= 0 || p.delay_ps <= 0)
      throw std::invalid_argument("gate library: non-positive parameter for " +
                                  to_string(g));
    max_delay = std::max(max_delay, p.delay_ps);
  }
  if (clock_period_ns <= 0 || activity_factor <= 0)
    throw std::invalid_argument("gate library: clock period and activity must be positive");
  if (clock_period_ns * 1000.0 <= max_delay)
    throw std::invalid_argument("gate library: clock period must exceed every gate delay");
}

std::string GateLibrary::digest() const {
  // FNV-1a over the exact parameter bytes; stable across runs and platforms.
  std::uint64_t h = 14695981039346656037ull;
  const auto mix = [&h](double v) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(v));
    std::memcpy(&bits, &v, sizeof(bits));
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  for (const GateType g : kAllGateTypes) {
    const GateParams& p = gates.at(g);
    mix(p.area_um2);
    mix(p.energy_fj);
    mix(p.delay_ps);
  }
  mix(clock_period_ns);
  mix(activity_factor);
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::uint64_t GateCounts::total() const {
  std::uint64_t n = 0;
  for (const auto& [g, c] : counts) n += c;
  return n;
}

namespace {

// TCU decoder gate model: AND/OR halving decomposition, G(k) = G(k-1) + 2^k
// with G(1) = 0, closed form 2^(k+1) - 4, split evenly between AND and OR.
std::uint64_t tcu_gates(unsigned k) {
  return (std::uint64_t{1} << (k + 1)) - 4;
}

}  // namespace

GateCounts structural_counts(MultiplierKind kind, unsigned width, bool naive) {
  if (width < 2)
    throw std::invalid_argument("structural_counts: width must be >= 2");
  const std::uint64_t n = std::uint64_t{1} << width;
  const std::uint64_t half = n / 2;
  GateCounts gc;
  switch (kind) {
    case MultiplierKind::Proposed: {
      const std::uint64_t dec_x = tcu_gates(width);
      const std::uint64_t dec_y = tcu_gates(width - 1);
      // Encoder: one OR per even position, one AND per odd position; the
      // t_0 AND is constant zero and dropped unless counting naively.
      const std::uint64_t enc_or = half;
      const std::uint64_t enc_and = naive ? half : half - 1;
      gc.counts[GateType::And2] = dec_x / 2 + dec_y / 2 + enc_and + n;
      gc.counts[GateType::Or2] = dec_x / 2 + dec_y / 2 + enc_or;
      gc.critical_path_depth = (width - 1) + 1 + 1;  // decoder, encoder, output AND
      gc.cycles = 1;
      break;
    }
    case MultiplierKind::Gaines: {
      // Two B-bit LFSRs, two B-bit comparators, output AND, (B+1)-bit
      // output counter.
      gc.counts[GateType::Dff] = 2 * width + (width + 1);
      gc.counts[GateType::Xor2] = 2 * 3 + (width + 1);  // tap networks + counter carry
      gc.counts[GateType::CmpBit] = 2 * width;
      gc.counts[GateType::And2] = 1;
      gc.critical_path_depth = width + 1;
      gc.cycles = n;
      break;
    }
    case MultiplierKind::Umul: {
      // Shared cycle counter (bit reversal is wiring), two comparators,
      // output AND, output counter.
      gc.counts[GateType::Dff] = width + (width + 1);
      gc.counts[GateType::Xor2] = width + 1;
      gc.counts[GateType::CmpBit] = 2 * width;
      gc.counts[GateType::And2] = 1;
      gc.critical_path_depth = width + 1;
      gc.cycles = n;
      break;
    }
    case MultiplierKind::Jenson: {
      // 2B-bit cycle counter, two comparators, output AND, (2B+1)-bit
      // output counter.
      gc.counts[GateType::Dff] = 2 * width + (2 * width + 1);
      gc.counts[GateType::Xor2] = 2 * width + 1;
      gc.counts[GateType::CmpBit] = 2 * width;
      gc.counts[GateType::And2] = 1;
      gc.critical_path_depth = width + 1;
      gc.cycles = n * n;
      break;
    }
  }
  return gc;
}

CostReport evaluate_cost(const std::string& design, const GateCounts& counts,
                         const GateLibrary& lib) {
  lib.validate();
  CostReport rep;
  rep.design = design;
  rep.cycles = counts.cycles;
  rep.library_digest = lib.digest();

  double max_delay_ps = 0;
  for (const auto& [g, c] : counts.counts) {
    if (c == 0) continue;
    const auto it = lib.gates.find(g);
    if (it == lib.gates.end())
      throw std::invalid_argument("evaluate_cost: library has no entry for " +
                                  to_string(g));
    const GateParams& p = it->second;
    rep.area_um2 += static_cast<double>(c) * p.area_um2;
    rep.energy_fj += static_cast<double>(c) * p.energy_fj * lib.activity_factor *
                     static_cast<double>(counts.cycles);
    max_delay_ps = std::max(max_delay_ps, p.delay_ps);
  }
  rep.latency_ns = counts.cycles == 1
                       ? counts.critical_path_depth * max_delay_ps * 1e-3
                       : static_cast<double>(counts.cycles) * lib.clock_period_ns;
  // E in fJ, L in ns, A in um^2 -> pJ.s and pJ.s.mm^2.
  const double e_pj = rep.energy_fj * 1e-3;
  const double l_s = rep.latency_ns * 1e-9;
  rep.exl_pj_s = e_pj * l_s;
  rep.aexl_pj_s_mm2 = rep.exl_pj_s * rep.area_um2 * 1e-6;
  return rep;
}

std::vector<ComparisonRow> comparison_table(std::span<const CostReport> reports) {
  if (reports.size() < 2)
    throw std::invalid_argument("comparison_table: need at least two reports");
  double proposed_aexl = 0;
  for (const CostReport& r : reports)
    if (r.design == "proposed") proposed_aexl = r.aexl_pj_s_mm2;
  std::vector<ComparisonRow> rows;
  rows.reserve(reports.size());
  for (const CostReport& r : reports) {
    ComparisonRow row{r, 1.0};
    if (proposed_aexl > 0) row.aexl_ratio_vs_proposed = r.aexl_pj_s_mm2 / proposed_aexl;
    rows.push_back(row);
  }
  return rows;
}

namespace {
std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(6) << v;
  return os.str();
}
}  // namespace

void write_cost_csv(std::ostream& os, std::span<const ComparisonRow> rows,
                    const std::string& digest) {
  os << "# " << digest << "\n";
  os << "design,area_um2,latency_ns,energy_fj,exl_pj_s,aexl_pj_s_mm2,cycles,"
        "aexl_ratio_vs_proposed,library_digest\n";
  for (const ComparisonRow& row : rows) {
    const CostReport& r = row.report;
    os << r.design << ',' << sci(r.area_um2) << ',' << sci(r.latency_ns) << ','
       << sci(r.energy_fj) << ',' << sci(r.exl_pj_s) << ',' << sci(r.aexl_pj_s_mm2)
       << ',' << r.cycles << ',' << sci(row.aexl_ratio_vs_proposed) << ','
       << r.library_digest << '\n';
  }
}

std::string format_comparison(std::span<const ComparisonRow> rows) {
  std::ostringstream os;
  os << std::left << std::setw(10) << "design" << std::right << std::setw(14)
     << "A(um^2)" << std::setw(14) << "L(ns)" << std::setw(14) << "E(fJ)"
     << std::setw(14) << "ExL(pJ.s)" << std::setw(16) << "AxExL" << std::setw(16)
     << "ratio" << "\n";
  for (const ComparisonRow& row : rows) {
    const CostReport& r = row.report;
    os << std::left << std::setw(10) << r.design << std::right << std::setw(14)
       << sci(r.area_um2) << std::setw(14) << sci(r.latency_ns) << std::setw(14)
       << sci(r.energy_fj) << std::setw(14) << sci(r.exl_pj_s) << std::setw(16)
       << sci(r.aexl_pj_s_mm2) << std::setw(16) << sci(row.aexl_ratio_vs_proposed)
       << "\n";
  }
  return os.str();
}

}  // namespace scmul
