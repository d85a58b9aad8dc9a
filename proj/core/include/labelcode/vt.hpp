#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "labelcode/word.hpp"

namespace labelcode {

// VT_a(n) = { x in {0,1}^n : sum i*x_i == a (mod n+1) }.
struct VtParams {
  std::size_t n = 0;
  std::size_t a = 0;

  void validate() const;
};

// sum_{i>=1} i*x_i reduced mod |x|+1.
std::size_t vt_syndrome(std::span<const Symbol> x);
std::size_t vt_syndrome(std::span<const Symbol> x, std::size_t modulus);

bool vt_member(std::span<const Symbol> x, const VtParams& params);

// Corrects one deletion or insertion (input length n-1 or n+1); a length-n
// input must already be a codeword. Throws NoCodeword otherwise.
Word vt_decode_indel(std::span<const Symbol> y, const VtParams& params);

std::vector<Word> vt_codebook(const VtParams& params);

}  // namespace labelcode
