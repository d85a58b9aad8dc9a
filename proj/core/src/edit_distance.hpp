#pragma once

#include <span>

#include "labelcode/word.hpp"

namespace labelcode::detail {

// True iff `longer` becomes `shorter` after deleting exactly one symbol.
inline bool one_deletion_apart(std::span<const Symbol> longer, std::span<const Symbol> shorter) {
  if (longer.size() != shorter.size() + 1) return false;
  std::size_t i = 0;
  while (i < shorter.size() && longer[i] == shorter[i]) ++i;
  for (std::size_t j = i; j < shorter.size(); ++j) {
    if (longer[j + 1] != shorter[j]) return false;
  }
  return true;
}

// True iff a and b are equal or one indel apart.
inline bool within_one_indel(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() == b.size()) return std::equal(a.begin(), a.end(), b.begin());
  if (a.size() == b.size() + 1) return one_deletion_apart(a, b);
  if (b.size() == a.size() + 1) return one_deletion_apart(b, a);
  return false;
}

inline std::size_t hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i] ? 1 : 0;
  return d;
}

}  // namespace labelcode::detail
