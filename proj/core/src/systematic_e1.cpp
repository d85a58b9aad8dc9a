#include <algorithm>
#include <string>

#include "edit_distance.hpp"
#include "labelcode/derivative.hpp"
#include "labelcode/digits.hpp"
#include "labelcode/errors.hpp"
#include "labelcode/systematic.hpp"
#include "labelcode/tenengolts.hpp"
#include "labelcode/vt.hpp"

namespace labelcode {

namespace {

constexpr Symbol kA = 0;
constexpr Symbol kG = 2;
constexpr Symbol kT = 3;
constexpr int kLabelField = 11;

// Separator-pair labels GG and TT in S.
bool is_separator_label(Symbol s) { return s == 5 || s == 10; }
Symbol separator_from_label(Symbol s) { return s == 5 ? kG : kT; }

const LabelSet& minimal() {
  static const LabelSet set = LabelSet::minimal_dna();
  return set;
}

Symbol separator_for(Symbol last) { return last == kT ? kG : kT; }

bool is_codeword(std::span<const Symbol> c, const E1Layout& layout, FlankConvention flanks) {
  if (c.size() != layout.n()) return false;
  const Word x(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(layout.k));
  const Word expected = e1_encode(x, flanks);
  return std::equal(expected.begin(), expected.end(), c.begin());
}

// x if its codeword's labeling lies within one indel of u.
std::optional<Word> confirm(const Word& x, std::span<const Symbol> u, FlankConvention flanks) {
  const auto expected = label_framed(e1_encode(x, flanks), minimal(), flanks);
  if (detail::within_one_indel(expected, u)) return x;
  return std::nullopt;
}

std::optional<Word> invert_data(std::span<const Symbol> z, Symbol separator, FlankConvention flanks) {
  auto inv = try_invert_labeling(z, minimal(), {flanks.left, separator});
  if (!inv.ok() || inv.word.empty() || separator_for(inv.word.back()) != separator) return std::nullopt;
  return std::move(inv.word);
}

struct TailSyndromes {
  Symbol beta;
  std::size_t gamma;
};

std::optional<TailSyndromes> read_tail(std::span<const Symbol> tail, Symbol separator, const E1Layout& layout,
                                       FlankConvention flanks) {
  auto inv = try_invert_labeling(tail, minimal(), {separator, flanks.right});
  if (!inv.ok() || inv.word.size() != layout.syndrome_width()) return std::nullopt;
  const std::uint64_t packed = from_digits(inv.word, 4);
  const std::size_t gamma = packed / kLabelField;
  if (gamma > layout.k) return std::nullopt;
  return TailSyndromes{static_cast<Symbol>(packed % kLabelField), gamma};
}

}  // namespace

E1Layout E1Layout::for_data_length(std::size_t k) {
  if (k < 2) throw InvalidInput("E1 needs k >= 2");
  return {k, digits_needed(k, 4)};
}

LabelingWord data_region_labels(std::span<const Symbol> x, Symbol follower, Symbol left_flank) {
  return label_framed(x, minimal(), {left_flank, follower});
}

Word e1_encode(std::span<const Symbol> x, FlankConvention flanks) {
  const auto layout = E1Layout::for_data_length(x.size());
  Alphabet::dna().validate(x);
  const Symbol s = separator_for(x.back());
  const LabelingWord z = data_region_labels(x, s, flanks.left);

  const auto params = tenengolts_class_of(z, kLabelField);
  const std::uint64_t packed = params.a * kLabelField + params.b;

  Word c(x.begin(), x.end());
  c.push_back(s);
  c.push_back(s);
  const auto field = to_digits(packed, 4, layout.syndrome_width());
  c.insert(c.end(), field.digits.begin(), field.digits.end());
  return c;
}

std::optional<Word> e1_decode_fast(std::span<const Symbol> u, const E1Layout& layout, FlankConvention flanks) {
  const std::size_t k = layout.k;
  const std::size_t full = layout.n() + 1;
  auto sub = [&](std::size_t from, std::size_t to) { return u.subspan(from, to - from); };
  try {
    if (u.size() == full) {
      auto inv = try_invert_labeling(u, minimal(), flanks);
      if (!inv.ok() || !is_codeword(inv.word, layout, flanks)) return std::nullopt;
      inv.word.resize(k);
      return inv.word;
    }

    if (u.size() + 1 == full) {
      if (!is_separator_label(u[k])) {
        // Data region intact; its last label tells T (TG) from the rest.
        const Symbol s = u[k] == 9 ? kG : kT;
        if (auto x = invert_data(sub(0, k + 1), s, flanks)) return confirm(*x, u, flanks);
        return std::nullopt;
      }
      const Symbol s = separator_from_label(u[k]);
      const auto syn = read_tail(sub(k + 1, u.size()), s, layout, flanks);
      if (!syn) return std::nullopt;
      const TenengoltsParams params{k + 1, kLabelField, syn->gamma, syn->beta};
      const Word z = tenengolts_decode(sub(0, k), params);
      if (auto x = invert_data(z, s, flanks)) return confirm(*x, u, flanks);
      return std::nullopt;
    }

    if (u.size() == full + 1) {
      if (is_separator_label(u[k + 1])) {
        const Symbol s = separator_from_label(u[k + 1]);
        if (auto x = invert_data(sub(0, k + 1), s, flanks)) return confirm(*x, u, flanks);
        return std::nullopt;
      }
      if (!is_separator_label(u[k + 2])) return std::nullopt;
      const Symbol s = separator_from_label(u[k + 2]);
      const auto syn = read_tail(sub(k + 3, u.size()), s, layout, flanks);
      if (!syn) return std::nullopt;
      const TenengoltsParams params{k + 1, kLabelField, syn->gamma, syn->beta};
      const Word z = tenengolts_decode(sub(0, k + 2), params);
      if (auto x = invert_data(z, s, flanks)) return confirm(*x, u, flanks);
      return std::nullopt;
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return std::nullopt;
}

Word e1_decode_by_enumeration(std::span<const Symbol> u, const E1Layout& layout, FlankConvention flanks) {
  const std::size_t full = layout.n() + 1;
  const int sigma = minimal().labeling_alphabet_size();
  std::vector<Word> found;
  auto consider = [&](std::span<const Symbol> v) {
    auto inv = try_invert_labeling(v, minimal(), flanks);
    if (inv.ok() && is_codeword(inv.word, layout, flanks)) {
      inv.word.resize(layout.k);
      found.push_back(std::move(inv.word));
    }
  };
  if (u.size() == full) {
    consider(u);
  } else if (u.size() + 1 == full) {
    Word v(u.size() + 1);
    for (std::size_t pos = 0; pos <= u.size(); ++pos) {
      std::copy(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(pos), v.begin());
      std::copy(u.begin() + static_cast<std::ptrdiff_t>(pos), u.end(), v.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
      for (int s = 0; s < sigma; ++s) {
        v[pos] = static_cast<Symbol>(s);
        consider(v);
      }
    }
  } else if (u.size() == full + 1) {
    for (std::size_t pos = 0; pos < u.size(); ++pos) {
      Word v(u.begin(), u.end());
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(pos));
      consider(v);
    }
  } else {
    throw NotDecodable("labeling length " + std::to_string(u.size()) + " is not within one indel of " +
                       std::to_string(full));
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  if (found.empty()) throw NotDecodable("no E1 codeword within one indel");
  if (found.size() > 1) throw AmbiguousDecoding("several E1 codewords within one indel");
  return found.front();
}

Word e1_decode(std::span<const Symbol> u, const E1Layout& layout, FlankConvention flanks) {
  if (auto x = e1_decode_fast(u, layout, flanks)) return *x;
  return e1_decode_by_enumeration(u, layout, flanks);
}

}  // namespace labelcode
