#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace labelcode {

using Symbol = std::uint16_t;

// Words over Sigma_q and labeling words share one representation; the
// alphabet size travels separately.
using Word = std::vector<Symbol>;
using LabelingWord = Word;

class Alphabet {
 public:
  explicit Alphabet(int q);

  static Alphabet dna() { return Alphabet(4); }

  int size() const noexcept { return q_; }
  bool contains(Symbol s) const noexcept { return s < q_; }

  // Throws InvalidInput when any symbol is >= q.
  void validate(std::span<const Symbol> w) const;

  // q=4 renders as ACGT, every other q as base-36 digits.
  char render(Symbol s) const;
  Symbol parse(char c) const;

  std::string render(std::span<const Symbol> w) const;
  Word parse(std::string_view text) const;

 private:
  int q_;
};

// Labeling words as base-11 (or wider) digit strings: '0'-'9', then 'a', 'b', ...
std::string render_labeling(std::span<const Symbol> u);
LabelingWord parse_labeling(std::string_view text);

inline Word dna(std::string_view text) { return Alphabet::dna().parse(text); }
inline std::string dna_string(std::span<const Symbol> w) { return Alphabet::dna().render(w); }

// Every word of length n over Sigma_q, in lexicographic order, visited without
// materializing the whole set.
template <typename Fn>
void for_each_word(int q, std::size_t n, Fn&& fn) {
  Word w(n, 0);
  while (true) {
    fn(static_cast<const Word&>(w));
    std::size_t i = n;
    while (true) {
      if (i == 0) return;
      --i;
      if (++w[i] < q) break;
      w[i] = 0;
    }
  }
}

// Throws BudgetExceeded on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Symbol s : w) {
      h ^= s + 1;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (w.size() << 56));
  }
};

}  // namespace labelcode
