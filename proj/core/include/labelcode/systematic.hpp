#pragma once

#include <optional>
#include <span>

#include "labelcode/labeling.hpp"

namespace labelcode {

// Codeword layout of the single-indel encoder:
//   x (k) | s s (2) | packed syndromes (2 + ceil(log4 k))
// where s = T unless x_k = T (then G). The packed field holds
// gamma * 11 + beta in base 4.
struct E1Layout {
  std::size_t k = 0;
  std::size_t gamma_width = 0;  // ceil(log4 k)

  static E1Layout for_data_length(std::size_t k);

  std::size_t separator_width() const noexcept { return 2; }
  std::size_t syndrome_width() const noexcept { return 2 + gamma_width; }
  std::size_t n() const noexcept { return k + separator_width() + syndrome_width(); }
  std::size_t redundancy_bits() const noexcept { return 2 * (n() - k); }
};

// Codeword layout of the single-substitution encoder:
//   x (k) | G (1) | parity label (2) | Hamming parity (2r)
// with GF(11) Hamming parity over the k + 1 framed data labels.
struct E2Layout {
  std::size_t k = 0;
  std::size_t r = 0;

  static E2Layout for_data_length(std::size_t k);

  std::size_t n() const noexcept { return k + 3 + 2 * r; }
};

// Framed labels of the data region x between the left flank and the symbol
// that follows x in the codeword.
LabelingWord data_region_labels(std::span<const Symbol> x, Symbol follower, Symbol left_flank = 0);

Word e1_encode(std::span<const Symbol> x, FlankConvention flanks = {});
Word e1_decode(std::span<const Symbol> u, const E1Layout& layout, FlankConvention flanks = {});
// Outline decoder: locate the error with the separator label, restore the
// data labels with Tenengolts decoding. Empty when it cannot conclude.
std::optional<Word> e1_decode_fast(std::span<const Symbol> u, const E1Layout& layout, FlankConvention flanks = {});
Word e1_decode_by_enumeration(std::span<const Symbol> u, const E1Layout& layout, FlankConvention flanks = {});

Word e2_encode(std::span<const Symbol> x, FlankConvention flanks = {});
Word e2_decode(std::span<const Symbol> u, const E2Layout& layout, FlankConvention flanks = {});
std::optional<Word> e2_decode_fast(std::span<const Symbol> u, const E2Layout& layout, FlankConvention flanks = {});
Word e2_decode_by_enumeration(std::span<const Symbol> u, const E2Layout& layout, FlankConvention flanks = {});

}  // namespace labelcode
