#include "scmul/encoder.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace scmul {

Bitstream tcu_decode(std::uint64_t value, unsigned width_log2) {
  if (width_log2 < 1 || width_log2 > 16)
    throw std::invalid_argument("tcu_decode: width exponent must be in [1, 16]");
  const std::uint64_t n = std::uint64_t{1} << width_log2;
  if (value > n - 1)
    throw std::invalid_argument("tcu_decode: value " + std::to_string(value) +
                                " out of range for 2^" + std::to_string(width_log2));
  return Bitstream::prefix_ones(n, value);
}

Bitstream correlation_encode(const BinaryOperand& y) {
  if (y.width < 2)
    throw std::invalid_argument("correlation_encode: operand width must be >= 2");
  const unsigned b = y.width;
  const bool msb = (y.value >> (b - 1)) & 1u;
  const std::uint64_t lower = y.value & ((std::uint64_t{1} << (b - 1)) - 1);
  const Bitstream t = tcu_decode(lower, b - 1);

  Bitstream out(std::uint64_t{1} << b);
  const std::uint64_t half = std::uint64_t{1} << (b - 1);
  for (std::uint64_t i = 1; i <= half; ++i) {
    const bool t_i = t.bit(i);
    const bool t_prev = i >= 2 && t.bit(i - 1);  // t_0 = 0
    if (msb || t_i) out.set_bit(2 * i, true);
    if (msb && t_prev) out.set_bit(2 * i - 1, true);
  }
  return out;
}

namespace {

// Maximal-length (primitive polynomial) tap sets, one per width. The
// {8,6,5,4} entry is the library default for B=8.
constexpr std::array<std::array<unsigned, 4>, 17> kMaximalTaps = {{
    {},            // 0
    {},            // 1
    {},            // 2
    {3, 2},        // 3
    {4, 3},        // 4
    {5, 3},        // 5
    {6, 5},        // 6
    {7, 6},        // 7
    {8, 6, 5, 4},  // 8
    {9, 5},        // 9
    {10, 7},       // 10
    {11, 9},       // 11
    {12, 6, 4, 1},     // 12
    {13, 4, 3, 1},     // 13
    {14, 5, 3, 1},     // 14
    {15, 14},          // 15
    {16, 15, 13, 4},   // 16
}};

std::uint64_t raw_step(std::uint64_t state, unsigned width,
                       std::span<const unsigned> taps) {
  std::uint64_t fb = 0;
  for (const unsigned t : taps) fb ^= (state >> (t - 1)) & 1u;
  return ((state << 1) | fb) & ((std::uint64_t{1} << width) - 1);
}

}  // namespace

std::span<const unsigned> maximal_taps(unsigned width) {
  if (width < 3 || width > 16)
    throw std::invalid_argument("maximal_taps: width must be in [3, 16]");
  const auto& row = kMaximalTaps[width];
  const std::size_t n = row[2] == 0 ? 2 : (row[3] == 0 ? 3 : 4);
  return {row.data(), n};
}

void LfsrConfig::validate() const {
  if (width < 3 || width > 16)
    throw std::invalid_argument("LfsrConfig: width must be in [3, 16]");
  if (seed == 0) throw std::invalid_argument("LfsrConfig: seed must be nonzero");
  if (seed >= (std::uint64_t{1} << width))
    throw std::invalid_argument("LfsrConfig: seed does not fit in the register width");
  for (const unsigned t : taps)
    if (t < 1 || t > width)
      throw std::invalid_argument("LfsrConfig: tap position out of range");
  // Full-period check by iteration; cheap for width <= 16.
  const std::uint64_t period = (std::uint64_t{1} << width) - 1;
  std::uint64_t s = 1;
  for (std::uint64_t i = 0; i < period; ++i) {
    s = raw_step(s, width, taps);
    if (s == 1 && i + 1 != period)
      throw std::invalid_argument("LfsrConfig: taps are not maximal-length");
  }
  if (s != 1)
    throw std::invalid_argument("LfsrConfig: taps are not maximal-length");
}

LfsrConfig default_lfsr(unsigned width, std::uint64_t seed) {
  const auto taps = maximal_taps(width);
  return LfsrConfig{width, {taps.begin(), taps.end()}, seed};
}

std::uint64_t lfsr_step(std::uint64_t state, const LfsrConfig& cfg) {
  if (state == 0) throw std::invalid_argument("lfsr_step: zero state is a fixed point");
  return raw_step(state, cfg.width, cfg.taps);
}

std::vector<std::uint64_t> lfsr_states(const LfsrConfig& cfg, std::size_t count) {
  cfg.validate();
  std::vector<std::uint64_t> states;
  states.reserve(count);
  std::uint64_t s = cfg.seed;
  for (std::size_t i = 0; i < count; ++i) {
    states.push_back(s);
    s = raw_step(s, cfg.width, cfg.taps);
  }
  return states;
}

Bitstream sng_compare(std::span<const std::uint64_t> states,
                      const BinaryOperand& operand) {
  Bitstream out(states.size());
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] < operand.value) out.set_bit(i + 1, true);
  return out;
}

std::uint64_t bit_reversal_index(std::uint64_t t, unsigned width) {
  if (width < 1 || width > 32)
    throw std::invalid_argument("bit_reversal_index: width must be in [1, 32]");
  if (t >= (std::uint64_t{1} << width))
    throw std::invalid_argument("bit_reversal_index: index out of range");
  std::uint64_t r = 0;
  for (unsigned i = 0; i < width; ++i) r |= ((t >> i) & 1u) << (width - 1 - i);
  return r;
}

}  // namespace scmul
