#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace scmul {

/// Exact non-negative rational. Denominators are powers of two throughout
/// this library, so int64 components never overflow in practice; all
/// intermediates go through 128-bit arithmetic anyway.
///
/// Values are kept as constructed (4/64 stays 4/64, matching the table
/// rendering convention); arithmetic results are reduced to keep components
/// small. Equality is mathematical (cross-multiplied), not representational.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d <= 0) throw std::invalid_argument("Rational: denominator must be positive");
    if (n < 0) throw std::invalid_argument("Rational: negative value");
  }

  [[nodiscard]] Rational reduced() const {
    const std::int64_t g = std::gcd(num, den);
    return g > 1 ? Rational{num / g, den / g} : *this;
  }

  [[nodiscard]] double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const std::int64_t l = std::lcm(a.den, b.den);
    return Rational{a.num * (l / a.den) + b.num * (l / b.den), l}.reduced();
  }

  /// |a - b| over the common denominator, not reduced (Table I keeps 4/64).
  [[nodiscard]] static Rational abs_diff(const Rational& a, const Rational& b) {
    const std::int64_t l = std::lcm(a.den, b.den);
    const std::int64_t x = a.num * (l / a.den);
    const std::int64_t y = b.num * (l / b.den);
    return Rational{x >= y ? x - y : y - x, l};
  }

  [[nodiscard]] Rational divided_by(std::int64_t k) const {
    if (k <= 0) throw std::invalid_argument("Rational: division by non-positive count");
    return Rational{num, den * k}.reduced();
  }

  /// Fixed 6-fractional-digit decimal, round half away from zero,
  /// locale-independent.
  [[nodiscard]] std::string to_decimal() const {
    const __int128 scaled =
        (static_cast<__int128>(num) * 1000000 + den / 2) / den;
    const auto whole = static_cast<std::int64_t>(scaled / 1000000);
    const auto frac = static_cast<std::int64_t>(scaled % 1000000);
    std::string f = std::to_string(frac);
    return std::to_string(whole) + "." + std::string(6 - f.size(), '0') + f;
  }

  [[nodiscard]] std::string to_fraction_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace scmul
