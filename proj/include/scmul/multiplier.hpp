#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "scmul/bitstream.hpp"
#include "scmul/encoder.hpp"
#include "scmul/operand.hpp"
#include "scmul/rational.hpp"

namespace scmul {

enum class MultiplierKind { Proposed, Gaines, Jenson, Umul };

std::string to_string(MultiplierKind kind);
MultiplierKind multiplier_kind_from_string(const std::string& name);

/// Generator pair for the Gaines baseline. The two streams must not be
/// identical (same seed and same taps would make them fully correlated).
struct GainesConfig {
  LfsrConfig x_lfsr = default_lfsr(8, 0x01);
  LfsrConfig y_lfsr = default_lfsr(8, 0x5A);

  /// Default generators for a B-bit operand: register width B (clamped to
  /// the supported 3..16 range), seeds 0x01 and 0x5A masked to the width.
  static GainesConfig defaults(unsigned width);
  void validate() const;
  [[nodiscard]] std::string describe() const;
};

struct MultiplyResult {
  Bitstream output;
  Rational observed;   // popcount / length, unreduced
  Rational target;     // x*y / 2^(2B)
  Rational abs_error;  // |observed - target|, exact
  std::uint64_t cycles = 1;
};

/// The bit-parallel design: AND of the thermometer-coded X stream with the
/// correlation-encoded Y stream. Asymmetric in its arguments; the first
/// operand is always the thermometer side. cycles = 1 (combinational).
MultiplyResult multiply_proposed(const BinaryOperand& x, const BinaryOperand& y);

/// LFSR + comparator baseline over 2^B cycles.
MultiplyResult multiply_gaines(const BinaryOperand& x, const BinaryOperand& y,
                               const GainesConfig& cfg);

/// Clock-division baseline: bit_A(t) = [t mod 2^B < x], bit_B(t) = [t / 2^B < y]
/// over 2^(2B) cycles. Untruncated, every (i < x, j < y) pair contributes
/// exactly once, so the product is exact. `truncate` limits to the first L
/// cycles.
MultiplyResult multiply_jenson(const BinaryOperand& x, const BinaryOperand& y,
                               std::optional<std::uint64_t> truncate = std::nullopt);

/// Unary baseline over 2^B cycles: temporal coding for X, bit-reversal
/// (low-discrepancy) rate coding for Y.
MultiplyResult multiply_umul(const BinaryOperand& x, const BinaryOperand& y);

}  // namespace scmul
