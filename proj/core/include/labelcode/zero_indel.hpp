#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "labelcode/word.hpp"

namespace labelcode {

using BigInt = boost::multiprecision::cpp_int;

// T_{w,a}^{m,w+1}: words of length m with exactly w nonzero symbols whose
// nonzero positions satisfy sum i == a (mod w+1). For q = 2 this is the
// binary S-set.
struct ZeroIndelParams {
  std::size_t m = 0;
  std::size_t w = 0;
  std::size_t a = 0;
  int q = 2;

  void validate() const;
};

// Number of nonzero symbols and sum of their 1-based positions (unreduced).
struct ZeroProfile {
  std::size_t weight = 0;
  std::size_t index_sum = 0;
};
ZeroProfile zero_profile(std::span<const Symbol> t);

bool zero_indel_member(std::span<const Symbol> t, const ZeroIndelParams& params);

// Corrects one inserted or deleted zero by trying one candidate per zero-run
// boundary. Throws NoCodeword / MultipleCandidates.
Word zero_indel_decode(std::span<const Symbol> y, const ZeroIndelParams& params);

// |S_{w,a}^{m,w+1}| for a = 0..w.
std::vector<BigInt> binary_class_sizes(std::size_t m, std::size_t w);

enum class SizingMode { Exhaustive, Counting };

// Union over w of the largest class T_{w,a*_w} (smallest a on ties).
struct ZeroIndelUnion {
  std::size_t m = 0;
  int q = 2;
  std::vector<std::size_t> best_residue;  // a*_w, indexed by w
  std::vector<BigInt> class_size;         // |T_{w,a*_w}|

  BigInt size() const;
  bool contains(std::span<const Symbol> t) const;
  ZeroIndelParams class_params(std::size_t w) const;
  // Throws NoCodeword / MultipleCandidates.
  Word decode(std::span<const Symbol> y) const;
};

ZeroIndelUnion zero_indel_union(std::size_t m, int q, SizingMode mode = SizingMode::Counting);

}  // namespace labelcode
