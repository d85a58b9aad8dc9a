#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "labelcode/word.hpp"

namespace labelcode {

// Fixed-width, most-significant-first digits.
struct DigitString {
  int base = 10;
  Word digits;

  std::uint64_t value() const;
  std::string str() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;
};

// Throws InvalidInput if value >= base^width.
DigitString to_digits(std::uint64_t value, int base, std::size_t width);

std::uint64_t from_digits(std::span<const Symbol> digits, int base);

// Re-expresses a number written in from_base as width digits of to_base,
// e.g. 7 (base 11) -> "13" (base 4).
DigitString base_convert(std::span<const Symbol> digits, int from_base, int to_base, std::size_t width);
DigitString base_convert(std::uint64_t value, int from_base, int to_base, std::size_t width);

// Smallest w with base^w >= value (so values 0..value-1 fit in w digits).
std::size_t digits_needed(std::uint64_t value, int base);

}  // namespace labelcode
