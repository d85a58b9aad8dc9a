#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "labelcode/labeling.hpp"

namespace labelcode {

// { x : label_framed(x, A, f) in code }.
std::vector<Word> lift_code(const std::vector<LabelingWord>& code, const LabelSet& labels,
                            FlankConvention flanks = {});

// Tenengolts class T_{a,b}(n+1; p) (p = |A| + 1) holding the most framed
// labelings of Sigma_q^n. Ties go to the smallest (a, b).
struct TenengoltsSearchResult {
  std::size_t n = 0;
  int p = 0;
  std::size_t a = 0;
  Symbol b = 0;
  std::uint64_t size = 0;
  std::uint64_t valid_labelings = 0;
  std::vector<std::uint64_t> histogram;  // index a * p + b

  std::size_t labeling_length() const noexcept { return n + 1; }
};

TenengoltsSearchResult search_tenengolts_labeling_code(std::size_t n, const LabelSet& labels,
                                                       FlankConvention flanks = {});
std::vector<Word> tenengolts_labeling_codebook(const TenengoltsSearchResult& found, const LabelSet& labels,
                                               FlankConvention flanks = {});
Word decode_tenengolts_labeling(std::span<const Symbol> u, const TenengoltsSearchResult& found,
                                const LabelSet& labels, FlankConvention flanks = {});

// Coset of the shortened GF(p) Hamming code of length n+1 that holds the most
// framed labelings. Cosets are identified by syndrome; ties go to the
// smallest syndrome read as a base-p number.
struct HammingCosetResult {
  std::size_t n = 0;
  int p = 0;
  std::size_t r = 0;
  Word syndrome;
  std::uint64_t size = 0;
  std::uint64_t valid_labelings = 0;
  std::vector<std::uint64_t> histogram;  // index = syndrome as base-p number
};

HammingCosetResult search_hamming_coset(std::size_t n, const LabelSet& labels, int p = 11,
                                        FlankConvention flanks = {});
std::vector<Word> hamming_coset_codebook(const HammingCosetResult& found, const LabelSet& labels,
                                         FlankConvention flanks = {});
Word decode_hamming_coset(std::span<const Symbol> u, const HammingCosetResult& found, const LabelSet& labels,
                          FlankConvention flanks = {});

// Redundancy r with (p^r - 1)/(p - 1) >= length.
std::size_t hamming_redundancy_for_length(int p, std::size_t length);

}  // namespace labelcode
