#pragma once

#include <span>

#include "labelcode/word.hpp"

namespace labelcode {

// d(x) = (x_1, x_2 - x_1, ..., x_n - x_{n-1}) mod q.
Word derivative(std::span<const Symbol> x, int q);

// Prefix sums mod q; the inverse of derivative.
Word integrate(std::span<const Symbol> d, int q);

// Bit i is 1 iff x_{i+1} >= x_i. Length |x| - 1; throws on an empty word.
Word signature(std::span<const Symbol> x);

}  // namespace labelcode
