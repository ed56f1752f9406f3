#include "scmul/bitstream.hpp"

#include <bit>
#include <stdexcept>

namespace scmul {

namespace {
constexpr std::uint64_t kWordBits = 64;

std::uint64_t word_count(std::uint64_t length) {
  return (length + kWordBits - 1) / kWordBits;
}
}  // namespace

Bitstream::Bitstream(std::uint64_t length)
    : length_(length), words_(word_count(length), 0) {
  if (length == 0) throw std::invalid_argument("Bitstream: length must be >= 1");
}

Bitstream Bitstream::prefix_ones(std::uint64_t length, std::uint64_t ones) {
  if (ones > length)
    throw std::invalid_argument("Bitstream: more ones than bits requested");
  Bitstream bs(length);
  if (ones > 0) bs.set_range(1, ones);
  return bs;
}

Bitstream Bitstream::parse(std::string_view s, std::uint64_t expected_length) {
  if (s.size() != expected_length)
    throw std::invalid_argument("Bitstream: string length " + std::to_string(s.size()) +
                                " does not match expected " + std::to_string(expected_length));
  Bitstream bs(expected_length);
  for (std::uint64_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c != '0' && c != '1')
      throw std::invalid_argument("Bitstream: invalid character in stream string");
    // Leftmost character is position N.
    if (c == '1') bs.set_bit(expected_length - i, true);
  }
  return bs;
}

bool Bitstream::bit(std::uint64_t pos) const {
  if (pos < 1 || pos > length_)
    throw std::out_of_range("Bitstream: position out of range");
  return (words_[(pos - 1) / kWordBits] >> ((pos - 1) % kWordBits)) & 1u;
}

void Bitstream::set_bit(std::uint64_t pos, bool value) {
  if (pos < 1 || pos > length_)
    throw std::out_of_range("Bitstream: position out of range");
  const std::uint64_t mask = std::uint64_t{1} << ((pos - 1) % kWordBits);
  if (value)
    words_[(pos - 1) / kWordBits] |= mask;
  else
    words_[(pos - 1) / kWordBits] &= ~mask;
}

void Bitstream::set_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 1 || hi > length_ || lo > hi)
    throw std::out_of_range("Bitstream: bad range");
  std::uint64_t first = lo - 1;  // 0-based inclusive
  const std::uint64_t last = hi - 1;
  while (first <= last) {
    const std::uint64_t w = first / kWordBits;
    const std::uint64_t lobit = first % kWordBits;
    const std::uint64_t span_end = std::min(last, w * kWordBits + 63);
    const std::uint64_t hibit = span_end % kWordBits;
    const std::uint64_t mask =
        (hibit == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (hibit + 1)) - 1)) &
        ~((std::uint64_t{1} << lobit) - 1);
    words_[w] |= mask;
    first = span_end + 1;
  }
}

std::uint64_t Bitstream::popcount() const {
  std::uint64_t n = 0;
  for (const std::uint64_t w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

Bitstream Bitstream::and_with(const Bitstream& other) const {
  if (length_ != other.length_)
    throw std::invalid_argument("Bitstream: AND of streams with different lengths (" +
                                std::to_string(length_) + " vs " +
                                std::to_string(other.length_) + ")");
  Bitstream out(length_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    out.words_[i] = words_[i] & other.words_[i];
  return out;
}

std::string Bitstream::render() const {
  std::string s(length_, '0');
  for (std::uint64_t p = 1; p <= length_; ++p)
    if (bit(p)) s[length_ - p] = '1';
  return s;
}

}  // namespace scmul
