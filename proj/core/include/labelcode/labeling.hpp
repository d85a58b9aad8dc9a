#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "labelcode/word.hpp"

namespace labelcode {

enum class LabelSetKind { MinimalDna, AllLabels, Custom };

// Ordered, prefix-free set of labels over Sigma_q. Label j (1-based) is the
// j-th label in lexicographic order; 0 marks "no label starts here".
class LabelSet {
 public:
  // S = {AC, CA, GA, GC, GG, GT, TA, TC, TG, TT}.
  static LabelSet minimal_dna();
  // Sigma_q^2. Framed labelings over this set use pair codes q*a + b.
  static LabelSet all_labels(int q);
  // Sorts the labels; throws InvalidInput on duplicates, prefixes, empty
  // labels or out-of-range symbols.
  static LabelSet custom(int q, std::vector<Word> labels);

  int q() const noexcept { return q_; }
  LabelSetKind kind() const noexcept { return kind_; }
  const std::vector<Word>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  bool all_length_two() const noexcept { return all_length_two_; }

  // Size of the alphabet framed labelings live in: q^2 for the all-labels
  // set, |A| + 1 otherwise.
  int labeling_alphabet_size() const noexcept;

  // Framed-labeling symbol of the pair (a, b). Requires length-two labels.
  Symbol pair_symbol(Symbol a, Symbol b) const;

  // Label index (1-based) of a length-two label, 0 if the pair is unlabeled.
  Symbol index_of(Symbol a, Symbol b) const;

  // The length-two label with the given 1-based index.
  const Word& label(std::size_t index) const;

 private:
  LabelSet(int q, LabelSetKind kind, std::vector<Word> labels);

  int q_;
  LabelSetKind kind_;
  std::vector<Word> labels_;
  bool all_length_two_ = false;
  std::vector<Symbol> pair_index_;  // q*q table, valid when all_length_two_
};

struct FlankConvention {
  Symbol left = 0;
  Symbol right = 0;

  friend bool operator==(const FlankConvention&, const FlankConvention&) = default;
};

// Directed graph on Sigma_q whose edges are the unlabeled pairs.
class ZeroGraph {
 public:
  ZeroGraph(int q, std::vector<std::pair<Symbol, Symbol>> edges);
  static ZeroGraph of(const LabelSet& labels);

  int vertex_count() const noexcept { return q_; }
  const std::vector<std::pair<Symbol, Symbol>>& edges() const noexcept { return edges_; }
  bool has_edge(Symbol from, Symbol to) const;

 private:
  int q_;
  std::vector<std::pair<Symbol, Symbol>> edges_;
  std::vector<bool> adjacency_;
};

// c_i = j when the label alpha_j starts at position i and fits, else 0.
// Works for labels of any length. For the all-labels set the 1-based label
// index is used here, not the pair code.
LabelingWord label_word(std::span<const Symbol> x, const LabelSet& labels);

// Labeling of f.left x f.right: |x|+1 symbols, symbol i describing the pair
// (x_{i-1}, x_i).
LabelingWord label_framed(std::span<const Symbol> x, const LabelSet& labels,
                          FlankConvention flanks = {});

enum class InversionStatus { Ok, Invalid, Ambiguous };

struct InversionResult {
  InversionStatus status = InversionStatus::Invalid;
  Word word;

  bool ok() const noexcept { return status == InversionStatus::Ok; }
};

// Non-throwing inverse of label_framed.
InversionResult try_invert_labeling(std::span<const Symbol> u, const LabelSet& labels,
                                    FlankConvention flanks = {});

// Throws InvalidLabeling or AmbiguousLabeling.
Word invert_labeling(std::span<const Symbol> u, const LabelSet& labels,
                     FlankConvention flanks = {});

// Minimal number of length-two labels reaching full labeling capacity.
int phi(int q);

// True iff every ordered vertex pair is joined by at most one path of each
// length 1..max_len.
bool check_path_unique(const ZeroGraph& graph, int max_len);

struct CapacityCount {
  std::uint64_t count = 0;
  std::size_t n = 0;

  double rate() const;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1ULL << 20;  // 4^10 words

// Distinct labelings over Sigma_q^n: framed with the given flanks, or the
// standalone label_word when no flanks are supplied.
CapacityCount empirical_capacity(const LabelSet& labels, std::size_t n,
                                 std::optional<FlankConvention> flanks,
                                 std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace labelcode
