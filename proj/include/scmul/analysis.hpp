#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "scmul/multiplier.hpp"
#include "scmul/rational.hpp"

namespace scmul {

struct PairRecord {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  Rational observed;
  Rational target;
  Rational abs_error;
  Rational norm_diff;  // |x - y| / 2^B

  bool operator==(const PairRecord&) const = default;
};

struct ErrorStats {
  Rational mae;
  Rational max_error;
  std::size_t count = 0;
  std::string config;
};

struct HistogramBucket {
  Rational lo;  // left-closed
  Rational hi;  // right-open
  std::size_t count = 0;
  Rational mean_abs_error;
  Rational max_abs_error;
  Rational p95_abs_error;  // nearest-rank
};

struct Histogram {
  std::vector<HistogramBucket> buckets;
};

struct SweepConfig {
  MultiplierKind kind = MultiplierKind::Proposed;
  unsigned width = 8;
  GainesConfig gaines = GainesConfig::defaults(8);
  std::optional<std::uint64_t> jenson_truncate;
  /// Exhaustive sweeps refuse to run when 2^(2B) exceeds this.
  std::uint64_t pair_cap = std::uint64_t{1} << 16;

  [[nodiscard]] std::string describe() const;
};

/// One multiply through the configured design.
MultiplyResult run_multiplier(const SweepConfig& cfg, const BinaryOperand& x,
                              const BinaryOperand& y);

/// All ordered pairs (x, y) in [0, 2^B - 1]^2, ordered by (x, y).
/// Serial reference implementation.
std::vector<PairRecord> exhaustive_sweep_serial(const SweepConfig& cfg);

/// OpenMP-parallel sweep; produces the identical record sequence as the
/// serial reference for any thread count. threads <= 0 means the runtime
/// default.
std::vector<PairRecord> exhaustive_sweep(const SweepConfig& cfg, int threads = 0);

/// `count` pseudo-random pairs for widths where exhaustion is infeasible.
/// Deterministic given the seed.
std::vector<PairRecord> sampled_sweep(const SweepConfig& cfg, std::size_t count,
                                      std::uint64_t seed);

/// Exact rational mean of abs_error; order-independent.
ErrorStats mae(std::span<const PairRecord> records, std::string config = {});

/// K equal-width buckets over norm_diff in [0, 1).
Histogram diff_histogram(std::span<const PairRecord> records, std::size_t k);

/// Pearson correlation between norm_diff and abs_error; nullopt when either
/// variable has zero variance.
std::optional<double> diff_dependence(std::span<const PairRecord> records);

void write_pairs_csv(std::ostream& os, const std::string& design, unsigned width,
                     std::span<const PairRecord> records, const std::string& digest);
void write_mae_csv(std::ostream& os, const std::string& design, unsigned width,
                   const ErrorStats& stats, const std::string& digest,
                   bool header = true);
void write_hist_csv(std::ostream& os, const std::string& design, unsigned width,
                    const Histogram& hist, const std::string& digest,
                    bool header = true);

}  // namespace scmul
