// Acceptance suite: one pass/fail line per criterion. Soft criteria are
// reported with their measured values and do not affect the exit code.

#include <cmath>
#include <iostream>
#include <random>
#include <string>

#include "scmul/analysis.hpp"
#include "scmul/costmodel.hpp"
#include "scmul/encoder.hpp"
#include "scmul/multiplier.hpp"

using namespace scmul;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = {},
            bool soft = false) {
  std::cout << (ok ? "PASS" : (soft ? "SOFT-FAIL" : "FAIL")) << "  " << name;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!ok && !soft) ++failures;
}

SweepConfig config_for(MultiplierKind kind, unsigned width) {
  SweepConfig cfg;
  cfg.kind = kind;
  cfg.width = width;
  cfg.gaines = GainesConfig::defaults(width);
  return cfg;
}

void criterion1_table1() {
  const auto r1 = multiply_proposed({4, 3}, {6, 3});
  const auto r2 = multiply_proposed({5, 3}, {3, 3});
  const auto r3 = multiply_proposed({3, 3}, {4, 3});
  const bool ok = r1.output.render() == "00001110" && r1.abs_error == Rational(0, 1) &&
                  r2.output.render() == "00001010" && r2.abs_error == Rational(1, 64) &&
                  r3.output.render() == "00000010" && r3.abs_error == Rational(4, 64) &&
                  tcu_decode(4, 3).render() == "00001111" &&
                  correlation_encode({6, 3}).render() == "10111110" &&
                  tcu_decode(5, 3).render() == "00011111" &&
                  correlation_encode({3, 3}).render() == "00101010" &&
                  tcu_decode(3, 3).render() == "00000111" &&
                  correlation_encode({4, 3}).render() == "10101010";
  report("C1 Table I bit-for-bit reproduction at B=3", ok);
}

void criterion2_proposed_mae() {
  const auto recs = exhaustive_sweep(config_for(MultiplierKind::Proposed, 8));
  const auto stats = mae(recs);
  const bool in_band =
      Rational(35, 1000) <= stats.mae && stats.mae <= Rational(45, 1000);
  report("C2 proposed MAE at B=8 rounds to 0.04",
         in_band && recs.size() == 65536,
         "mae=" + stats.mae.to_decimal() + "=" + stats.mae.to_fraction_string());
}

void criterion3_jenson_exact() {
  bool ok = true;
  for (unsigned b = 2; b <= 5 && ok; ++b) {
    const std::uint32_t n = std::uint32_t{1} << b;
    for (std::uint32_t x = 0; x < n && ok; ++x)
      for (std::uint32_t y = 0; y < n && ok; ++y)
        ok = multiply_jenson({x, b}, {y, b}).abs_error == Rational(0, 1);
  }
  std::mt19937_64 rng(123);
  for (int i = 0; i < 1000 && ok; ++i) {
    const auto x = static_cast<std::uint32_t>(rng() % 256);
    const auto y = static_cast<std::uint32_t>(rng() % 256);
    ok = multiply_jenson({x, 8}, {y, 8}).abs_error == Rational(0, 1);
  }
  report("C3 jenson untruncated is exact (exhaustive B<=5, 1000 random B=8)", ok);
}

void criterion4_latency() {
  const auto lib = GateLibrary::defaults();
  const auto prop = structural_counts(MultiplierKind::Proposed, 8);
  const auto gaines = structural_counts(MultiplierKind::Gaines, 8);
  const auto umul = structural_counts(MultiplierKind::Umul, 8);
  const auto jenson = structural_counts(MultiplierKind::Jenson, 8);
  const bool cycles_ok = prop.cycles == 1 && gaines.cycles == 256 &&
                         umul.cycles == 256 && jenson.cycles == 65536;
  const double l_gaines = evaluate_cost("gaines", gaines, lib).latency_ns;
  const double l_umul = evaluate_cost("umul", umul, lib).latency_ns;
  const double l_jenson = evaluate_cost("jenson", jenson, lib).latency_ns;
  const bool latency_ok = l_gaines == 640.0 && l_umul == 640.0 && l_jenson == 163840.0;
  report("C4 cycle structure 1/256/256/65536 and serial latencies 640/163840 ns",
         cycles_ok && latency_ok);
}

void criterion5_cost_ordering() {
  const auto lib = GateLibrary::defaults();
  std::vector<CostReport> reports;
  for (const auto kind : {MultiplierKind::Proposed, MultiplierKind::Umul,
                          MultiplierKind::Gaines, MultiplierKind::Jenson})
    reports.push_back(evaluate_cost(to_string(kind), structural_counts(kind, 8), lib));
  const auto rows = comparison_table(reports);
  bool ok = true;
  double worst = 1e300;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    worst = std::min(worst, rows[i].aexl_ratio_vs_proposed);
    ok = ok && rows[i].aexl_ratio_vs_proposed >= 1000.0;
  }
  report("C5 proposed AxExL beats every serial baseline by >= 10^3", ok,
         "min ratio=" + std::to_string(worst));
}

void criterion6_fig1b() {
  const auto prop = exhaustive_sweep(config_for(MultiplierKind::Proposed, 8));
  const auto gaines = exhaustive_sweep(config_for(MultiplierKind::Gaines, 8));
  const auto r_prop = diff_dependence(prop);
  const auto r_gaines = diff_dependence(gaines);

  const auto spread = [](const Histogram& h) {
    Rational lo{1, 1}, hi{0, 1};
    for (const auto& b : h.buckets) {
      if (b.count == 0) continue;
      if (b.mean_abs_error < lo) lo = b.mean_abs_error;
      if (hi < b.mean_abs_error) hi = b.mean_abs_error;
    }
    return Rational::abs_diff(hi, lo);
  };
  const Rational s_prop = spread(diff_histogram(prop, 16));
  const Rational s_gaines = spread(diff_histogram(gaines, 16));

  const bool r_ok = r_prop && r_gaines && std::abs(*r_prop) < std::abs(*r_gaines);
  const bool spread_ok = s_prop <= s_gaines;
  std::string detail = "|r| proposed=";
  detail += r_prop ? std::to_string(std::abs(*r_prop)) : "undefined";
  detail += " gaines=";
  detail += r_gaines ? std::to_string(std::abs(*r_gaines)) : "undefined";
  detail += "; spread proposed=" + s_prop.to_decimal() +
            " gaines=" + s_gaines.to_decimal();
  report("C6 (soft) error less operand-difference-dependent than gaines",
         r_ok && spread_ok, detail, /*soft=*/true);
}

void criterion7_properties() {
  bool ok = true;
  std::string what;

  // Encoder popcount conservation, exhaustive B <= 8.
  for (unsigned b = 2; b <= 8 && ok; ++b)
    for (std::uint32_t y = 0; y < (std::uint32_t{1} << b) && ok; ++y)
      if (correlation_encode({y, b}).popcount() != y) { ok = false; what = "popcount"; }

  // TCU monotonicity, exhaustive B <= 8.
  for (unsigned b = 1; b <= 8 && ok; ++b) {
    const std::uint64_t n = std::uint64_t{1} << b;
    for (std::uint64_t v = 0; v < n && ok; ++v) {
      const auto bs = tcu_decode(v, b);
      if (bs.popcount() != v) { ok = false; what = "tcu popcount"; }
      for (std::uint64_t p = 2; p <= n; ++p)
        if (bs.bit(p) > bs.bit(p - 1)) { ok = false; what = "tcu monotone"; }
    }
  }

  // Prefix-spread bound at B=8: ones of Y_u within positions 1..x stay
  // within 0.13 * N^2 of the proportional share x*y/N.
  for (std::uint32_t y = 0; y < 256 && ok; ++y) {
    const auto yu = correlation_encode({y, 8});
    std::uint64_t prefix = 0;
    for (std::uint32_t x = 1; x <= 255 && ok; ++x) {
      prefix += yu.bit(x);
      const double dev =
          std::abs(static_cast<double>(prefix) * 256.0 - static_cast<double>(x) * y) /
          65536.0;
      if (dev > 0.13) { ok = false; what = "prefix spread"; }
    }
  }

  // parse/render round trip.
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100 && ok; ++i) {
    const std::uint64_t len = 1 + rng() % 256;
    Bitstream bs(len);
    for (std::uint64_t p = 1; p <= len; ++p)
      if (rng() & 1) bs.set_bit(p, true);
    if (!(Bitstream::parse(bs.render(), len) == bs)) { ok = false; what = "roundtrip"; }
  }

  // LFSR full period for every built-in width.
  for (unsigned w = 3; w <= 16 && ok; ++w) {
    try {
      default_lfsr(w, 1).validate();
    } catch (const std::exception&) {
      ok = false;
      what = "lfsr period";
    }
  }

  // Deterministic parallel-vs-serial sweep equality.
  for (const auto kind : {MultiplierKind::Proposed, MultiplierKind::Gaines,
                          MultiplierKind::Umul}) {
    const auto cfg = config_for(kind, 5);
    if (!(exhaustive_sweep(cfg, 3) == exhaustive_sweep_serial(cfg))) {
      ok = false;
      what = "sweep determinism";
    }
  }

  // Histogram partition completeness.
  const auto recs = exhaustive_sweep(config_for(MultiplierKind::Proposed, 6));
  const auto hist = diff_histogram(recs, 16);
  std::size_t total = 0;
  for (const auto& b : hist.buckets) total += b.count;
  if (total != recs.size()) { ok = false; what = "histogram partition"; }

  report("C7 property suites", ok, ok ? "" : what);
}

void criterion8_baseline_mae() {
  const auto prop = mae(exhaustive_sweep(config_for(MultiplierKind::Proposed, 8)));
  const auto gaines = mae(exhaustive_sweep(config_for(MultiplierKind::Gaines, 8)));
  const auto umul = mae(exhaustive_sweep(config_for(MultiplierKind::Umul, 8)));
  const bool band = Rational(2, 100) <= gaines.mae && gaines.mae <= Rational(12, 100);
  const bool order = prop.mae < gaines.mae && prop.mae < umul.mae;
  report("C8 (soft) baseline MAE sanity", band && order,
         "gaines=" + gaines.mae.to_decimal() + " umul=" + umul.mae.to_decimal() +
             " proposed=" + prop.mae.to_decimal(),
         /*soft=*/true);
}

}  // namespace

int main() {
  criterion1_table1();
  criterion2_proposed_mae();
  criterion3_jenson_exact();
  criterion4_latency();
  criterion5_cost_ordering();
  criterion6_fig1b();
  criterion7_properties();
  criterion8_baseline_mae();
  if (failures > 0) {
    std::cout << failures << " hard criterion(s) failed\n";
    return 1;
  }
  std::cout << "all hard criteria passed\n";
  return 0;
}
