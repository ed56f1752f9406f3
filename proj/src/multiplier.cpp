#include "scmul/multiplier.hpp"
#include <algorithm>

#include <sstream>
#include <stdexcept>

namespace scmul {

std::string to_string(MultiplierKind kind) {
  switch (kind) {
    case MultiplierKind::Proposed: return "proposed";
    case MultiplierKind::Gaines: return "gaines";
    case MultiplierKind::Jenson: return "jenson";
    case MultiplierKind::Umul: return "umul";
  }
  throw std::invalid_argument("unknown multiplier kind");
}

MultiplierKind multiplier_kind_from_string(const std::string& name) {
  if (name == "proposed") return MultiplierKind::Proposed;
  if (name == "gaines") return MultiplierKind::Gaines;
  if (name == "jenson") return MultiplierKind::Jenson;
  if (name == "umul") return MultiplierKind::Umul;
  throw std::invalid_argument("unknown multiplier kind: " + name);
}

GainesConfig GainesConfig::defaults(unsigned width) {
  const unsigned w = std::clamp(width, 3u, 16u);
  const std::uint64_t mask = (std::uint64_t{1} << w) - 1;
  const std::uint64_t seed1 = 0x01;
  std::uint64_t seed2 = 0x5A & mask;
  if (seed2 == 0 || seed2 == seed1) seed2 = mask;
  return {default_lfsr(w, seed1), default_lfsr(w, seed2)};
}

void GainesConfig::validate() const {
  x_lfsr.validate();
  y_lfsr.validate();
  if (x_lfsr.seed == y_lfsr.seed && x_lfsr.taps == y_lfsr.taps)
    throw std::invalid_argument(
        "GainesConfig: identical seeds and taps give fully correlated streams");
}

std::string GainesConfig::describe() const {
  const auto one = [](const LfsrConfig& c) {
    std::ostringstream os;
    // No commas; this string ends up inside CSV fields.
    os << "lfsr(w=" << c.width << ";taps=";
    for (std::size_t i = 0; i < c.taps.size(); ++i)
      os << (i ? "." : "") << c.taps[i];
    os << ";seed=0x" << std::hex << c.seed << std::dec << ")";
    return os.str();
  };
  return one(x_lfsr) + "+" + one(y_lfsr);
}

namespace {

void check_widths(const BinaryOperand& x, const BinaryOperand& y, unsigned min_width) {
  if (x.width != y.width)
    throw std::invalid_argument("multiply: operand widths differ");
  if (x.width < min_width)
    throw std::invalid_argument("multiply: operand width must be >= " +
                                std::to_string(min_width));
}

MultiplyResult finish(Bitstream output, const BinaryOperand& x,
                      const BinaryOperand& y, std::uint64_t cycles) {
  Rational observed = output.value();
  Rational target = exact_product(x, y);
  Rational err = abs_error(observed, target);
  return {std::move(output), observed, target, err, cycles};
}

}  // namespace

MultiplyResult multiply_proposed(const BinaryOperand& x, const BinaryOperand& y) {
  check_widths(x, y, 2);
  Bitstream out =
      bitwise_and(tcu_decode(x.value, x.width), correlation_encode(y));
  return finish(std::move(out), x, y, 1);
}

MultiplyResult multiply_gaines(const BinaryOperand& x, const BinaryOperand& y,
                               const GainesConfig& cfg) {
  check_widths(x, y, 2);
  cfg.validate();
  const std::size_t n = x.stream_length();
  const auto xs = lfsr_states(cfg.x_lfsr, n);
  const auto ys = lfsr_states(cfg.y_lfsr, n);
  Bitstream out = bitwise_and(sng_compare(xs, x), sng_compare(ys, y));
  return finish(std::move(out), x, y, n);
}

MultiplyResult multiply_jenson(const BinaryOperand& x, const BinaryOperand& y,
                               std::optional<std::uint64_t> truncate) {
  check_widths(x, y, 2);
  const std::uint64_t n = x.stream_length();
  const std::uint64_t full = n * n;
  if (truncate && (*truncate == 0 || *truncate > full))
    throw std::invalid_argument("multiply_jenson: truncation length out of [1, 2^(2B)]");
  const std::uint64_t len = truncate.value_or(full);

  // Stream A is the x-thermometer tile repeated per block; stream B is a
  // single prefix of y full blocks. Their AND: x ones per block for the
  // first y blocks, then a partial block if the truncation cuts mid-block.
  Bitstream out(len);
  const std::uint64_t full_blocks = std::min<std::uint64_t>(y.value, len / n);
  for (std::uint64_t b = 0; b < full_blocks; ++b)
    if (x.value > 0) out.set_range(b * n + 1, b * n + x.value);
  if (full_blocks < y.value && full_blocks * n < len) {
    const std::uint64_t tail = std::min<std::uint64_t>(len - full_blocks * n, x.value);
    if (tail > 0) out.set_range(full_blocks * n + 1, full_blocks * n + tail);
  }
  return finish(std::move(out), x, y, len);
}

MultiplyResult multiply_umul(const BinaryOperand& x, const BinaryOperand& y) {
  check_widths(x, y, 2);
  const std::uint64_t n = x.stream_length();
  Bitstream out(n);
  for (std::uint64_t t = 0; t < n; ++t)
    if (t < x.value && bit_reversal_index(t, x.width) < y.value)
      out.set_bit(t + 1, true);
  return finish(std::move(out), x, y, n);
}

}  // namespace scmul
