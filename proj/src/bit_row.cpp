#include "pprev/bit_row.hpp"

#include <stdexcept>

#include "pprev/errors.hpp"

namespace pprev {

BitRow::BitRow(std::uint64_t value, unsigned width) : value_(value), width_(width) {
  if (width > kMaxRowWidth) {
    throw WidthError("row width " + std::to_string(width) + " exceeds " + std::to_string(kMaxRowWidth));
  }
  if ((value & ~low_mask(width)) != 0) {
    throw WidthError("value does not fit in " + std::to_string(width) + " bits");
  }
}

BitRow BitRow::parse(std::string_view bits) {
  if (bits.size() > kMaxRowWidth) {
    throw WidthError("row width " + std::to_string(bits.size()) + " exceeds " + std::to_string(kMaxRowWidth));
  }
  std::uint64_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("invalid bit character '" + std::string(1, c) + "'");
    }
    value = (value << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return BitRow(value, static_cast<unsigned>(bits.size()));
}

BitRow BitRow::flipped(unsigned pos) const {
  if (pos >= width_) {
    throw std::out_of_range("bit position out of range");
  }
  return BitRow(value_ ^ (std::uint64_t{1} << (width_ - 1 - pos)), width_);
}

std::string BitRow::str() const {
  std::string out(width_, '0');
  for (unsigned pos = 0; pos < width_; ++pos) {
    if ((*this)[pos]) out[pos] = '1';
  }
  return out;
}

BitRow concat(const BitRow& left, const BitRow& right) {
  const unsigned width = left.width() + right.width();
  if (width > kMaxRowWidth) {
    throw WidthError("concatenated width " + std::to_string(width) + " exceeds " + std::to_string(kMaxRowWidth));
  }
  const std::uint64_t high = right.width() >= 64 ? 0 : left.value() << right.width();
  return BitRow(high | right.value(), width);
}

}  // namespace pprev
