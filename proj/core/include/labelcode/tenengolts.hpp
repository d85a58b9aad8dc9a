#pragma once

#include <span>
#include <vector>

#include "labelcode/word.hpp"

namespace labelcode {

// T_{a,b}(n;q): signature in VT_a(n-1) (taken mod n) and symbol sum == b (mod q).
struct TenengoltsParams {
  std::size_t n = 0;
  int q = 0;
  std::size_t a = 0;
  Symbol b = 0;

  void validate() const;
};

bool tenengolts_member(std::span<const Symbol> x, const TenengoltsParams& params);

// Signature VT syndrome and symbol-sum residue of x.
TenengoltsParams tenengolts_class_of(std::span<const Symbol> x, int q);

// Two-stage decoder: the missing (or extra) value follows from the sum, the
// signature is restored by VT decoding, and the position is chosen to match
// the restored signature. Throws NoCodeword / MultipleCandidates.
Word tenengolts_decode(std::span<const Symbol> y, const TenengoltsParams& params);

// Reference decoder: every single-indel preimage of y, filtered by
// membership. Throws NoCodeword / MultipleCandidates.
Word tenengolts_decode_by_enumeration(std::span<const Symbol> y, const TenengoltsParams& params);

}  // namespace labelcode
