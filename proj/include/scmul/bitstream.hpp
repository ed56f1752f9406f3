#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "scmul/rational.hpp"

namespace scmul {

/// Word-packed stochastic bit-stream.
///
/// Positions are 1-based: position 1 is the trailing end and renders as the
/// rightmost character, position N renders leftmost. Internally position p
/// lives at bit (p-1) % 64 of word (p-1) / 64; bits past the length are kept
/// zero so whole-word popcount and equality need no masking.
class Bitstream {
 public:
  explicit Bitstream(std::uint64_t length);

  /// Stream of `length` bits with ones at positions 1..ones (thermometer
  /// pattern).
  static Bitstream prefix_ones(std::uint64_t length, std::uint64_t ones);

  /// Parses the rendered form (position N leftmost). Only '0'/'1' allowed.
  static Bitstream parse(std::string_view s, std::uint64_t expected_length);

  [[nodiscard]] std::uint64_t length() const { return length_; }
  [[nodiscard]] bool bit(std::uint64_t pos) const;
  void set_bit(std::uint64_t pos, bool value);
  /// Sets positions lo..hi (inclusive) to one, word at a time.
  void set_range(std::uint64_t lo, std::uint64_t hi);

  [[nodiscard]] std::uint64_t popcount() const;
  [[nodiscard]] Rational value() const { return {static_cast<std::int64_t>(popcount()),
                                                 static_cast<std::int64_t>(length_)}; }

  [[nodiscard]] Bitstream and_with(const Bitstream& other) const;

  [[nodiscard]] std::string render() const;

  bool operator==(const Bitstream&) const = default;

 private:
  std::uint64_t length_;
  std::vector<std::uint64_t> words_;
};

/// υ = N₁/N of the stream, as an exact (unreduced) rational.
inline Rational value_of(const Bitstream& bs) { return bs.value(); }

inline Bitstream bitwise_and(const Bitstream& a, const Bitstream& b) {
  return a.and_with(b);
}

}  // namespace scmul
