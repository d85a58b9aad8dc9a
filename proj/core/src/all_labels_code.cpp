#include "labelcode/all_labels_code.hpp"

#include <algorithm>
#include <string>

#include "labelcode/derivative.hpp"
#include "labelcode/errors.hpp"

namespace labelcode {

namespace {

struct Pair {
  Symbol first;
  Symbol second;
};

Pair split(Symbol code, int q) { return {static_cast<Symbol>(code / q), static_cast<Symbol>(code % q)}; }

Symbol join(Symbol a, Symbol b, int q) { return static_cast<Symbol>(a * q + b); }

// The symbol chain read from consecutive pair codes, or empty when two
// neighbours disagree or the flanks do not match.
Word consistent_chain(std::span<const Symbol> u, int q, FlankConvention flanks) {
  if (u.empty()) return {};
  Word chain;
  chain.reserve(u.size() + 1);
  chain.push_back(split(u[0], q).first);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Pair p = split(u[i], q);
    if (p.first != chain.back()) return {};
    chain.push_back(p.second);
  }
  if (chain.front() != flanks.left || chain.back() != flanks.right) return {};
  return chain;
}

Word differences_of_chain(const Word& chain, int q) {
  Word d(chain.size() - 1);
  for (std::size_t i = 1; i < chain.size(); ++i) d[i - 1] = static_cast<Symbol>((chain[i] + q - chain[i - 1]) % q);
  return d;
}

// x from the difference word of x_0 x x_end.
Word from_differences(const Word& t, int q, FlankConvention flanks) {
  Word x;
  x.reserve(t.size());
  int acc = flanks.left;
  for (Symbol d : t) {
    acc = (acc + d) % q;
    x.push_back(static_cast<Symbol>(acc));
  }
  if (x.empty() || x.back() != flanks.right) throw NotDecodable("corrected differences miss the right flank");
  x.pop_back();
  return x;
}

Word invert_or_throw(std::span<const Symbol> u, const AllLabelsCodeParams& params) {
  auto inv = try_invert_labeling(u, params.label_set(), params.flanks);
  if (!inv.ok()) throw NotDecodable("repaired labeling has no preimage");
  return std::move(inv.word);
}

Word accept(Word x, const AllLabelsCodeParams& params) {
  if (!params.contains(x)) throw NotDecodable("decoded word is not a codeword");
  return x;
}

// #{ v in {1..q-1}^w : sum v == s (mod q) } for every w <= m and s.
std::vector<std::vector<BigInt>> nonzero_sum_counts(std::size_t m, int q) {
  std::vector<std::vector<BigInt>> counts(m + 1, std::vector<BigInt>(q, 0));
  counts[0][0] = 1;
  for (std::size_t w = 1; w <= m; ++w) {
    for (int s = 0; s < q; ++s) {
      if (counts[w - 1][s] == 0) continue;
      for (int v = 1; v < q; ++v) counts[w][(s + v) % q] += counts[w - 1][s];
    }
  }
  return counts;
}

}  // namespace

Word flank_differences(std::span<const Symbol> x, int q, FlankConvention flanks) {
  Word framed;
  framed.reserve(x.size() + 2);
  framed.push_back(flanks.left);
  framed.insert(framed.end(), x.begin(), x.end());
  framed.push_back(flanks.right);
  Word d = derivative(framed, q);
  return {d.begin() + 1, d.end()};
}

bool AllLabelsCodeParams::contains(std::span<const Symbol> x) const {
  if (x.size() != n) return false;
  for (Symbol s : x) {
    if (s >= q) return false;
  }
  return difference_code.contains(flank_differences(x, q, flanks));
}

AllLabelsCode build_all_labels_deletion_code(int q, std::size_t n, Symbol left_flank, CodebookMode mode) {
  Alphabet alphabet(q);
  if (!alphabet.contains(left_flank)) throw InvalidInput("left flank outside alphabet");
  AllLabelsCode code;
  auto& params = code.params;
  params.q = q;
  params.n = n;
  params.difference_code = zero_indel_union(n + 1, q);

  // The differences sum to x_end - x_0, so each right flank selects the union
  // members with that sum; the nonzero values are free of the positions.
  const std::size_t m = n + 1;
  const auto sums = nonzero_sum_counts(m, q);
  params.size_by_right_flank.assign(q, 0);
  for (int right = 0; right < q; ++right) {
    const int target = (right + q - left_flank) % q;
    BigInt total = 0;
    for (std::size_t w = 0; w <= m; ++w) {
      const auto binary = binary_class_sizes(m, w)[params.difference_code.best_residue[w]];
      total += binary * sums[w][target];
    }
    params.size_by_right_flank[right] = total;
  }
  const auto best = std::max_element(params.size_by_right_flank.begin(), params.size_by_right_flank.end());
  params.flanks = {left_flank, static_cast<Symbol>(best - params.size_by_right_flank.begin())};
  params.size = *best;

  if (mode == CodebookMode::Enumerate) {
    const std::uint64_t words = checked_pow(static_cast<std::uint64_t>(q), static_cast<unsigned>(n));
    if (words > kDefaultEnumerationCap) throw BudgetExceeded("codebook enumeration exceeds cap; use Formula mode");
    for_each_word(q, n, [&](const Word& x) {
      if (params.contains(x)) code.codebook.push_back(x);
    });
  }
  return code;
}

Word decode_all_labels_deletion(std::span<const Symbol> u, const AllLabelsCodeParams& params) {
  const int q = params.q;
  const std::size_t full = params.n + 1;
  for (Symbol s : u) {
    if (s >= q * q) throw NotDecodable("pair code outside alphabet");
  }
  try {
    if (u.size() == full) return accept(invert_or_throw(u, params), params);

    if (u.size() + 1 == full) {
      if (u.empty()) return accept(Word{}, params);
      Word repaired(u.begin(), u.end());
      const Pair head = split(u.front(), q);
      const Pair tail = split(u.back(), q);
      bool repaired_chain = true;
      if (head.first != params.flanks.left) {
        repaired.insert(repaired.begin(), join(params.flanks.left, head.first, q));
      } else if (tail.second != params.flanks.right) {
        repaired.push_back(join(tail.second, params.flanks.right, q));
      } else {
        repaired_chain = false;
        for (std::size_t i = 0; i + 1 < u.size(); ++i) {
          const Pair left = split(u[i], q);
          const Pair right = split(u[i + 1], q);
          if (left.second != right.first) {
            repaired.insert(repaired.begin() + static_cast<std::ptrdiff_t>(i + 1), join(left.second, right.first, q));
            repaired_chain = true;
            break;
          }
        }
      }
      if (repaired_chain) return accept(invert_or_throw(repaired, params), params);

      // Consistent chain: a pair was lost inside a run, i.e. a zero vanished
      // from the difference word.
      const Word chain = consistent_chain(u, q, params.flanks);
      if (chain.empty()) throw NotDecodable("labeling chain is inconsistent");
      const Word t = params.difference_code.decode(differences_of_chain(chain, q));
      return accept(from_differences(t, q, params.flanks), params);
    }

    if (u.size() == full + 1) {
      const Word chain = consistent_chain(u, q, params.flanks);
      if (!chain.empty()) {
        const Word t = params.difference_code.decode(differences_of_chain(chain, q));
        return accept(from_differences(t, q, params.flanks), params);
      }
      std::vector<Word> candidates;
      for (std::size_t i = 0; i < u.size(); ++i) {
        Word shorter(u.begin(), u.end());
        shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(i));
        if (consistent_chain(shorter, q, params.flanks).empty()) continue;
        auto inv = try_invert_labeling(shorter, params.label_set(), params.flanks);
        if (inv.ok() && params.contains(inv.word)) candidates.push_back(std::move(inv.word));
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      if (candidates.size() == 1) return candidates.front();
      if (candidates.size() > 1) throw AmbiguousDecoding("several codewords within one insertion");
      throw NotDecodable("no codeword within one insertion");
    }
  } catch (const NoCodeword& e) {
    throw NotDecodable(e.what());
  } catch (const MultipleCandidates& e) {
    throw NotDecodable(e.what());
  }
  throw NotDecodable("labeling length " + std::to_string(u.size()) + " is not within one indel of " +
                     std::to_string(full));
}

Word decode_all_labels_by_enumeration(std::span<const Symbol> u, const AllLabelsCodeParams& params) {
  const int q = params.q;
  const auto labels = params.label_set();
  const std::size_t full = params.n + 1;
  std::vector<Word> candidates;
  auto consider = [&](const Word& v) {
    auto inv = try_invert_labeling(v, labels, params.flanks);
    if (inv.ok() && params.contains(inv.word)) candidates.push_back(std::move(inv.word));
  };
  if (u.size() == full) {
    consider(Word(u.begin(), u.end()));
  } else if (u.size() + 1 == full) {
    for (std::size_t pos = 0; pos <= u.size(); ++pos) {
      for (int s = 0; s < q * q; ++s) {
        Word v(u.begin(), u.end());
        v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<Symbol>(s));
        consider(v);
      }
    }
  } else if (u.size() == full + 1) {
    for (std::size_t pos = 0; pos < u.size(); ++pos) {
      Word v(u.begin(), u.end());
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(pos));
      consider(v);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  if (candidates.empty()) throw NotDecodable("no codeword within one indel");
  if (candidates.size() > 1) throw AmbiguousDecoding("several codewords within one indel");
  return candidates.front();
}

}  // namespace labelcode
