#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "scmul/bitstream.hpp"
#include "scmul/operand.hpp"

namespace scmul {

/// Binary-to-transition-coded-unary (thermometer) decode: 2^k bits with
/// ones grouped at the trailing end, popcount == value.
Bitstream tcu_decode(std::uint64_t value, unsigned width_log2);

/// Bit-position correlation encoder for the Y operand, stream length 2^B.
///
/// With m the MSB of y, s the lower B-1 bits and t = tcu_decode(s, B-1):
///   position 2i   = m OR t_i
///   position 2i-1 = m AND t_{i-1}   (t_0 = 0)
/// The encoding is value-preserving: popcount == y.value.
Bitstream correlation_encode(const BinaryOperand& y);

/// Fibonacci LFSR configuration. Taps are stage numbers (1..width, tap
/// `width` is the register MSB); the tap set must describe a maximal-length
/// polynomial.
struct LfsrConfig {
  unsigned width = 8;
  std::vector<unsigned> taps = {8, 6, 5, 4};
  std::uint64_t seed = 0x01;

  /// Throws unless width is in [3, 16], seed is a nonzero width-bit value
  /// and the taps give the full 2^width - 1 period (checked by iteration).
  void validate() const;
};

/// Known maximal-length tap sets, widths 3..16.
std::span<const unsigned> maximal_taps(unsigned width);

/// Default Gaines generator config for a given operand width and seed.
LfsrConfig default_lfsr(unsigned width, std::uint64_t seed);

/// One shift: feedback = XOR of tapped bits, shifted in at the LSB.
std::uint64_t lfsr_step(std::uint64_t state, const LfsrConfig& cfg);

/// First `count` states starting from (and including) the seed.
std::vector<std::uint64_t> lfsr_states(const LfsrConfig& cfg, std::size_t count);

/// Comparator SNG: bit p = 1 iff states[p-1] < operand.value.
Bitstream sng_compare(std::span<const std::uint64_t> states,
                      const BinaryOperand& operand);

/// Reverses the low `width` bits of t; involution and bijection on [0, 2^width).
std::uint64_t bit_reversal_index(std::uint64_t t, unsigned width);

}  // namespace scmul
