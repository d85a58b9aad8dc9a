#pragma once

#include <span>
#include <vector>

#include "labelcode/labeling.hpp"
#include "labelcode/zero_indel.hpp"

namespace labelcode {

// Single-deletion code for the all-labels set Sigma_q^2: x belongs to the
// code iff the difference word of x_0 x x_end lies in the zero-indel union
// over m = n + 1.
struct AllLabelsCodeParams {
  int q = 2;
  std::size_t n = 0;
  FlankConvention flanks;  // right flank chosen to maximize the code
  ZeroIndelUnion difference_code;
  BigInt size;
  std::vector<BigInt> size_by_right_flank;

  LabelSet label_set() const { return LabelSet::all_labels(q); }
  bool contains(std::span<const Symbol> x) const;
};

enum class CodebookMode { Enumerate, Formula };

struct AllLabelsCode {
  AllLabelsCodeParams params;
  std::vector<Word> codebook;  // empty in Formula mode
};

// Difference word (x_1 - x_0, ..., x_end - x_n) mod q, length |x| + 1.
Word flank_differences(std::span<const Symbol> x, int q, FlankConvention flanks);

AllLabelsCode build_all_labels_deletion_code(int q, std::size_t n, Symbol left_flank,
                                             CodebookMode mode = CodebookMode::Enumerate);

// Accepts the framed labeling of a codeword after at most one deletion or
// insertion of a pair code. Throws NotDecodable.
Word decode_all_labels_deletion(std::span<const Symbol> u, const AllLabelsCodeParams& params);

// Reference decoder over all single-indel preimages.
Word decode_all_labels_by_enumeration(std::span<const Symbol> u, const AllLabelsCodeParams& params);

}  // namespace labelcode
