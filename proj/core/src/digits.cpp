#include "labelcode/digits.hpp"

#include <limits>
#include <string>

#include "labelcode/errors.hpp"

namespace labelcode {

std::uint64_t DigitString::value() const { return from_digits(digits, base); }

std::string DigitString::str() const { return render_labeling(digits); }

DigitString to_digits(std::uint64_t value, int base, std::size_t width) {
  if (base < 2) throw InvalidInput("base must be at least 2");
  DigitString out{base, Word(width, 0)};
  std::uint64_t rest = value;
  for (std::size_t i = width; i > 0; --i) {
    out.digits[i - 1] = static_cast<Symbol>(rest % base);
    rest /= base;
  }
  if (rest != 0) {
    throw InvalidInput("value " + std::to_string(value) + " does not fit in " + std::to_string(width) +
                       " base-" + std::to_string(base) + " digits");
  }
  return out;
}

std::uint64_t from_digits(std::span<const Symbol> digits, int base) {
  if (base < 2) throw InvalidInput("base must be at least 2");
  std::uint64_t v = 0;
  for (Symbol d : digits) {
    if (d >= base) throw InvalidInput("digit exceeds base");
    if (v > (std::numeric_limits<std::uint64_t>::max() - d) / base) throw InvalidInput("digit string overflows");
    v = v * base + d;
  }
  return v;
}

DigitString base_convert(std::span<const Symbol> digits, int from_base, int to_base, std::size_t width) {
  return to_digits(from_digits(digits, from_base), to_base, width);
}

DigitString base_convert(std::uint64_t value, int from_base, int to_base, std::size_t width) {
  if (from_base < 2) throw InvalidInput("base must be at least 2");
  return to_digits(value, to_base, width);
}

std::size_t digits_needed(std::uint64_t value, int base) {
  std::size_t width = 0;
  std::uint64_t reach = 1;
  while (reach < value) {
    reach *= static_cast<std::uint64_t>(base);
    ++width;
  }
  return width;
}

}  // namespace labelcode
