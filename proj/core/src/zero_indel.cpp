#include "labelcode/zero_indel.hpp"

#include <algorithm>
#include <string>

#include "labelcode/errors.hpp"

namespace labelcode {

namespace {

// Reject anything but a unique member among the candidates.
Word unique_member(std::vector<Word> candidates) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  if (candidates.empty()) throw NoCodeword("no zero-indel codeword within one zero insertion/deletion");
  if (candidates.size() > 1) throw MultipleCandidates("zero-indel decoding is ambiguous");
  return std::move(candidates.front());
}

void enumerate_weight_class(std::size_t m, std::size_t w, std::vector<BigInt>& sizes) {
  // Walk all w-subsets of {1..m} in lexicographic order.
  std::vector<std::size_t> pick(w);
  for (std::size_t i = 0; i < w; ++i) pick[i] = i + 1;
  while (true) {
    std::size_t sum = 0;
    for (std::size_t p : pick) sum += p;
    sizes[sum % (w + 1)] += 1;
    std::size_t i = w;
    while (i > 0 && pick[i - 1] == m - w + i) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < w; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

void ZeroIndelParams::validate() const {
  if (q < 2) throw InvalidInput("alphabet size must be at least 2");
  if (w > m) throw InvalidInput("weight exceeds length");
  if (a > w) throw InvalidInput("residue must lie in 0..w");
}

ZeroProfile zero_profile(std::span<const Symbol> t) {
  ZeroProfile p;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] != 0) {
      ++p.weight;
      p.index_sum += i + 1;
    }
  }
  return p;
}

bool zero_indel_member(std::span<const Symbol> t, const ZeroIndelParams& params) {
  params.validate();
  if (t.size() != params.m) return false;
  for (Symbol s : t) {
    if (s >= params.q) return false;
  }
  const auto profile = zero_profile(t);
  return profile.weight == params.w && profile.index_sum % (params.w + 1) == params.a;
}

Word zero_indel_decode(std::span<const Symbol> y, const ZeroIndelParams& params) {
  params.validate();
  Alphabet(params.q).validate(y);
  std::vector<Word> candidates;
  if (y.size() == params.m) {
    if (zero_indel_member(y, params)) candidates.emplace_back(y.begin(), y.end());
  } else if (y.size() + 1 == params.m) {
    // One candidate per gap between nonzero symbols.
    for (std::size_t pos = 0; pos <= y.size(); ++pos) {
      if (pos > 0 && y[pos - 1] == 0) continue;
      Word t(y.begin(), y.end());
      t.insert(t.begin() + static_cast<std::ptrdiff_t>(pos), Symbol{0});
      if (zero_indel_member(t, params)) candidates.push_back(std::move(t));
    }
  } else if (y.size() == params.m + 1) {
    // One candidate per zero run.
    for (std::size_t pos = 0; pos < y.size(); ++pos) {
      if (y[pos] != 0 || (pos > 0 && y[pos - 1] == 0)) continue;
      Word t(y.begin(), y.end());
      t.erase(t.begin() + static_cast<std::ptrdiff_t>(pos));
      if (zero_indel_member(t, params)) candidates.push_back(std::move(t));
    }
  } else {
    throw NoCodeword("input length " + std::to_string(y.size()) + " is not within one zero indel of " +
                     std::to_string(params.m));
  }
  return unique_member(std::move(candidates));
}

std::vector<BigInt> binary_class_sizes(std::size_t m, std::size_t w) {
  if (w > m) throw InvalidInput("weight exceeds length");
  const std::size_t mod = w + 1;
  // ways[j * mod + r]: j ones placed so far, index sum == r (mod w+1).
  std::vector<BigInt> ways((w + 1) * mod);
  ways[0] = 1;
  for (std::size_t pos = 1; pos <= m; ++pos) {
    for (std::size_t j = std::min(w, pos); j > 0; --j) {
      for (std::size_t r = 0; r < mod; ++r) {
        const auto& from = ways[(j - 1) * mod + r];
        if (from != 0) ways[j * mod + (r + pos) % mod] += from;
      }
    }
  }
  return {ways.begin() + static_cast<std::ptrdiff_t>(w * mod), ways.end()};
}

BigInt ZeroIndelUnion::size() const {
  BigInt total = 0;
  for (const auto& s : class_size) total += s;
  return total;
}

bool ZeroIndelUnion::contains(std::span<const Symbol> t) const {
  if (t.size() != m) return false;
  for (Symbol s : t) {
    if (s >= q) return false;
  }
  const auto profile = zero_profile(t);
  return profile.index_sum % (profile.weight + 1) == best_residue[profile.weight];
}

ZeroIndelParams ZeroIndelUnion::class_params(std::size_t w) const {
  if (w > m) throw InvalidInput("weight exceeds length");
  return {m, w, best_residue[w], q};
}

Word ZeroIndelUnion::decode(std::span<const Symbol> y) const {
  // A zero indel keeps the weight, so only one class can be involved.
  const auto w = zero_profile(y).weight;
  if (w > m) throw NoCodeword("weight exceeds code length");
  return zero_indel_decode(y, class_params(w));
}

ZeroIndelUnion zero_indel_union(std::size_t m, int q, SizingMode mode) {
  if (q < 2) throw InvalidInput("alphabet size must be at least 2");
  if (mode == SizingMode::Exhaustive && m > 30) throw BudgetExceeded("exhaustive sizing limited to m <= 30");
  ZeroIndelUnion code;
  code.m = m;
  code.q = q;
  BigInt nonzero_choices = 1;  // (q-1)^w
  for (std::size_t w = 0; w <= m; ++w) {
    std::vector<BigInt> sizes;
    if (mode == SizingMode::Counting) {
      sizes = binary_class_sizes(m, w);
    } else {
      sizes.assign(w + 1, 0);
      enumerate_weight_class(m, w, sizes);
    }
    const auto best = std::max_element(sizes.begin(), sizes.end());  // first maximum = smallest a
    code.best_residue.push_back(static_cast<std::size_t>(best - sizes.begin()));
    code.class_size.push_back(*best * nonzero_choices);
    nonzero_choices *= (q - 1);
  }
  return code;
}

}  // namespace labelcode
