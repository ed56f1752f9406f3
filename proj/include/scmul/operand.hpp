#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "scmul/rational.hpp"

namespace scmul {

/// B-bit unsigned binary operand, 1 <= B <= 16.
struct BinaryOperand {
  std::uint32_t value = 0;
  unsigned width = 8;

  BinaryOperand() = default;
  BinaryOperand(std::uint32_t v, unsigned b) : value(v), width(b) {
    if (b < 1 || b > 16)
      throw std::invalid_argument("BinaryOperand: width must be in [1, 16]");
    if (v > max_value())
      throw std::invalid_argument("BinaryOperand: value " + std::to_string(v) +
                                  " does not fit in " + std::to_string(b) + " bits");
  }

  [[nodiscard]] std::uint32_t max_value() const {
    return (std::uint32_t{1} << width) - 1;
  }
  [[nodiscard]] std::uint64_t stream_length() const {
    return std::uint64_t{1} << width;
  }
};

/// Target probability x*y / 2^(2B), exact and unreduced.
inline Rational exact_product(const BinaryOperand& x, const BinaryOperand& y) {
  if (x.width != y.width)
    throw std::invalid_argument("exact_product: operand widths differ");
  const auto den = std::int64_t{1} << (2 * x.width);
  return {static_cast<std::int64_t>(x.value) * y.value, den};
}

inline Rational abs_error(const Rational& observed, const Rational& target) {
  return Rational::abs_diff(observed, target);
}

}  // namespace scmul
