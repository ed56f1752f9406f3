#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "scmul/multiplier.hpp"

namespace scmul {

enum class GateType { And2, Or2, Not, Xor2, Dff, CmpBit };

constexpr std::array<GateType, 6> kAllGateTypes = {
    GateType::And2, GateType::Or2, GateType::Not,
    GateType::Xor2, GateType::Dff, GateType::CmpBit};

std::string to_string(GateType g);

struct GateParams {
  double area_um2 = 0;
  double energy_fj = 0;
  double delay_ps = 0;
};

/// Per-gate area/energy/delay plus clock parameters. The shipped defaults
/// are calibration values, not synthesis results; every report echoes the
/// library digest so numbers stay traceable to their parameter set.
struct GateLibrary {
  std::map<GateType, GateParams> gates;
  double clock_period_ns = 2.5;
  double activity_factor = 0.5;

  static GateLibrary defaults();
  static GateLibrary from_json_file(const std::string& path);
  static GateLibrary from_json_text(const std::string& text);

  /// clock_period must exceed every single-gate delay; all entries positive.
  void validate() const;
  [[nodiscard]] std::string digest() const;
};

struct GateCounts {
  std::map<GateType, std::uint64_t> counts;
  unsigned critical_path_depth = 1;
  std::uint64_t cycles = 1;

  [[nodiscard]] std::uint64_t total() const;
};

/// Gate-level structure of a design. `naive` includes constant-propagated
/// gates in the counts.
GateCounts structural_counts(MultiplierKind kind, unsigned width, bool naive = false);

struct CostReport {
  std::string design;
  double area_um2 = 0;
  double latency_ns = 0;
  double energy_fj = 0;
  double exl_pj_s = 0;        // E x L
  double aexl_pj_s_mm2 = 0;   // A x E x L
  std::uint64_t cycles = 1;
  std::string library_digest;
};

CostReport evaluate_cost(const std::string& design, const GateCounts& counts,
                         const GateLibrary& lib);

struct ComparisonRow {
  CostReport report;
  double aexl_ratio_vs_proposed = 1.0;
};

/// Rows for every report plus its A*E*L ratio against the "proposed" row
/// (ratio of the row's product over the proposed one).
std::vector<ComparisonRow> comparison_table(std::span<const CostReport> reports);

void write_cost_csv(std::ostream& os, std::span<const ComparisonRow> rows,
                    const std::string& digest);
std::string format_comparison(std::span<const ComparisonRow> rows);

}  // namespace scmul
