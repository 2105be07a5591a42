#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace pprev {

inline constexpr unsigned kMaxRowWidth = 64;

/// Mask with the low `width` bits set. `width` may be 64.
constexpr std::uint64_t low_mask(unsigned width) noexcept {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

/// XOR of all bits: 1 iff the number of ones is odd.
constexpr bool parity(std::uint64_t value) noexcept { return (std::popcount(value) & 1) != 0; }

/// Smallest e with 2^e >= value; 0 for value <= 1.
constexpr unsigned ceil_log2(std::uint64_t value) noexcept {
  return value <= 1 ? 0u : static_cast<unsigned>(std::bit_width(value - 1));
}

/// Fixed-width bit string of at most 64 bits.
///
/// Position 0 is the leftmost table column and the most significant bit of
/// `value()`, so the row "10" has value 2.
class BitRow {
 public:
  constexpr BitRow() = default;
  BitRow(std::uint64_t value, unsigned width);

  /// Parses a string over {0,1}; throws std::invalid_argument on other characters.
  static BitRow parse(std::string_view bits);

  unsigned width() const noexcept { return width_; }
  std::uint64_t value() const noexcept { return value_; }
  bool empty() const noexcept { return width_ == 0; }

  bool operator[](unsigned pos) const noexcept { return ((value_ >> (width_ - 1 - pos)) & 1) != 0; }

  unsigned ones() const noexcept { return static_cast<unsigned>(std::popcount(value_)); }
  BitRow flipped(unsigned pos) const;

  std::string str() const;

  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  std::uint64_t value_ = 0;
  unsigned width_ = 0;
};

/// `left` followed by `right`; the combined width must stay within 64.
BitRow concat(const BitRow& left, const BitRow& right);

inline bool row_parity(const BitRow& row) noexcept { return parity(row.value()); }

}  // namespace pprev
