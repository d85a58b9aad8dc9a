#include "labelcode/tenengolts.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "labelcode/derivative.hpp"
#include "labelcode/errors.hpp"
#include "labelcode/vt.hpp"

namespace labelcode {

namespace {

int symbol_sum_mod(std::span<const Symbol> x, int q) {
  int s = 0;
  for (Symbol v : x) s = (s + v) % q;
  return s;
}

Word single_survivor(std::vector<Word> candidates, const char* what) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  if (candidates.empty()) throw NoCodeword(std::string("no ") + what + " codeword within one indel");
  if (candidates.size() > 1) throw MultipleCandidates(std::string("several ") + what + " codewords within one indel");
  return std::move(candidates.front());
}

}  // namespace

void TenengoltsParams::validate() const {
  if (q < 2) throw InvalidInput("Tenengolts alphabet size must be at least 2");
  if (n < 1) throw InvalidInput("Tenengolts length must be positive");
  if (a >= n) throw InvalidInput("Tenengolts residue a must lie in 0..n-1");
  if (b >= q) throw InvalidInput("Tenengolts residue b must lie in 0..q-1");
}

TenengoltsParams tenengolts_class_of(std::span<const Symbol> x, int q) {
  if (x.empty()) throw InvalidInput("empty word has no Tenengolts class");
  Alphabet(q).validate(x);
  const Word s = signature(x);
  return {x.size(), q, vt_syndrome(s, x.size()), static_cast<Symbol>(symbol_sum_mod(x, q))};
}

bool tenengolts_member(std::span<const Symbol> x, const TenengoltsParams& params) {
  params.validate();
  if (x.size() != params.n) return false;
  for (Symbol v : x) {
    if (v >= params.q) return false;
  }
  if (symbol_sum_mod(x, params.q) != params.b) return false;
  return vt_syndrome(signature(x), params.n) == params.a;
}

Word tenengolts_decode(std::span<const Symbol> y, const TenengoltsParams& params) {
  params.validate();
  Alphabet(params.q).validate(y);
  const std::size_t n = params.n;
  const int q = params.q;
  if (y.size() == n) {
    if (tenengolts_member(y, params)) return Word(y.begin(), y.end());
    throw NoCodeword("length-n input is not a Tenengolts codeword");
  }
  if (n < 2) return tenengolts_decode_by_enumeration(y, params);

  const VtParams sig_params{n - 1, params.a};
  std::vector<Word> candidates;
  if (y.size() + 1 == n) {
    const auto missing = static_cast<Symbol>((params.b + q - symbol_sum_mod(y, q)) % q);
    const Word restored = y.empty() ? Word{} : signature(y);
    Word target;
    try {
      target = y.empty() ? Word{} : vt_decode_indel(restored, sig_params);
    } catch (const NoCodeword&) {
      throw NoCodeword("signature cannot be restored");
    }
    for (std::size_t pos = 0; pos <= y.size(); ++pos) {
      Word x(y.begin(), y.end());
      x.insert(x.begin() + static_cast<std::ptrdiff_t>(pos), missing);
      if (y.empty() || signature(x) == target) candidates.push_back(std::move(x));
    }
  } else if (y.size() == n + 1) {
    const auto extra = static_cast<Symbol>((symbol_sum_mod(y, q) + q - params.b) % q);
    Word target;
    try {
      target = vt_decode_indel(signature(y), sig_params);
    } catch (const NoCodeword&) {
      throw NoCodeword("signature cannot be restored");
    }
    for (std::size_t pos = 0; pos < y.size(); ++pos) {
      if (y[pos] != extra) continue;
      Word x(y.begin(), y.end());
      x.erase(x.begin() + static_cast<std::ptrdiff_t>(pos));
      if (signature(x) == target) candidates.push_back(std::move(x));
    }
  } else {
    throw NoCodeword("input length " + std::to_string(y.size()) + " is not within one indel of " +
                     std::to_string(n));
  }
  std::erase_if(candidates, [&](const Word& x) { return !tenengolts_member(x, params); });
  return single_survivor(std::move(candidates), "Tenengolts");
}

Word tenengolts_decode_by_enumeration(std::span<const Symbol> y, const TenengoltsParams& params) {
  params.validate();
  Alphabet(params.q).validate(y);
  std::vector<Word> candidates;
  if (y.size() == params.n) {
    if (tenengolts_member(y, params)) candidates.emplace_back(y.begin(), y.end());
  } else if (y.size() + 1 == params.n) {
    for (std::size_t pos = 0; pos <= y.size(); ++pos) {
      for (Symbol v = 0; v < params.q; ++v) {
        Word x(y.begin(), y.end());
        x.insert(x.begin() + static_cast<std::ptrdiff_t>(pos), v);
        if (tenengolts_member(x, params)) candidates.push_back(std::move(x));
      }
    }
  } else if (y.size() == params.n + 1) {
    for (std::size_t pos = 0; pos < y.size(); ++pos) {
      Word x(y.begin(), y.end());
      x.erase(x.begin() + static_cast<std::ptrdiff_t>(pos));
      if (tenengolts_member(x, params)) candidates.push_back(std::move(x));
    }
  }
  return single_survivor(std::move(candidates), "Tenengolts");
}

}  // namespace labelcode
