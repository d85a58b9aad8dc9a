#pragma once

#include <span>
#include <vector>

#include "labelcode/word.hpp"

namespace labelcode {

// Systematic shortened Hamming code over GF(p), p prime.
//
// The parity-check matrix H has as columns every nonzero r-vector whose
// topmost nonzero entry is 1, in ascending order read as base-p numbers
// (top row most significant). A codeword is (m_1..m_k, c_1..c_r): message
// digit i sits on the i-th non-unit column, parity digit j on the unit
// column e_j.
class HammingCode {
 public:
  HammingCode(int p, std::size_t r, std::size_t message_length);

  // Smallest r with (p^r - 1)/(p - 1) >= k + r.
  static HammingCode for_message_length(int p, std::size_t k);

  int field_size() const noexcept { return p_; }
  std::size_t redundancy() const noexcept { return r_; }
  std::size_t message_length() const noexcept { return k_; }
  std::size_t length() const noexcept { return k_ + r_; }

  // Full canonical column list, (p^r - 1)/(p - 1) columns.
  const std::vector<Word>& columns() const noexcept { return columns_; }
  // Column of H used by codeword position i.
  const Word& column_at(std::size_t position) const { return position_columns_.at(position); }

  Word parity(std::span<const Symbol> message) const;
  Word encode(std::span<const Symbol> message) const;

  // H * word^T for a word of length k + r.
  Word syndrome(std::span<const Symbol> word) const;

  // Corrects at most one substitution relative to the coset with the given
  // syndrome (zero syndrome = the code itself). Throws UncorrectableSyndrome.
  Word correct(std::span<const Symbol> word, std::span<const Symbol> coset_syndrome = {}) const;

 private:
  int p_;
  std::size_t r_;
  std::size_t k_;
  std::vector<Word> columns_;
  std::vector<Word> position_columns_;
};

bool is_prime(int p);

}  // namespace labelcode
