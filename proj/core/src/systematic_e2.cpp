#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "edit_distance.hpp"
#include "labelcode/digits.hpp"
#include "labelcode/errors.hpp"
#include "labelcode/hamming.hpp"
#include "labelcode/systematic.hpp"

namespace labelcode {

namespace {

constexpr Symbol kG = 2;
constexpr int kLabelField = 11;

const LabelSet& minimal() {
  static const LabelSet set = LabelSet::minimal_dna();
  return set;
}

// The pair whose label is t; AA (unlabeled) stands for 0.
std::array<Symbol, 2> parity_pair(Symbol t) {
  if (t == 0) return {0, 0};
  const Word& label = minimal().label(t);
  return {label[0], label[1]};
}

Symbol label_sum(std::span<const Symbol> z) {
  return static_cast<Symbol>(std::accumulate(z.begin(), z.end(), 0u) % kLabelField);
}

Word encode_with(std::span<const Symbol> x, const HammingCode& hamming, FlankConvention flanks) {
  const LabelingWord z = data_region_labels(x, kG, flanks.left);
  const auto pair = parity_pair(label_sum(z));
  Word c(x.begin(), x.end());
  c.push_back(kG);
  c.insert(c.end(), pair.begin(), pair.end());
  for (Symbol digit : hamming.parity(z)) {
    const auto pairs = to_digits(digit, 4, 2);
    c.insert(c.end(), pairs.digits.begin(), pairs.digits.end());
  }
  return c;
}

HammingCode code_for(const E2Layout& layout) { return HammingCode(kLabelField, layout.r, layout.k + 1); }

bool is_codeword(std::span<const Symbol> c, const E2Layout& layout, const HammingCode& hamming,
                 FlankConvention flanks) {
  if (c.size() != layout.n()) return false;
  const Word expected = encode_with(c.first(layout.k), hamming, flanks);
  return std::equal(expected.begin(), expected.end(), c.begin());
}

std::optional<Word> confirm(std::span<const Symbol> z, std::span<const Symbol> u, FlankConvention flanks) {
  auto inv = try_invert_labeling(z, minimal(), {flanks.left, kG});
  if (!inv.ok()) return std::nullopt;
  const auto expected = label_framed(e2_encode(inv.word, flanks), minimal(), flanks);
  if (expected.size() != u.size() || detail::hamming_distance(expected, u) > 1) return std::nullopt;
  return std::move(inv.word);
}

std::optional<Word> read_redundancy(std::span<const Symbol> tail, Symbol anchor, const E2Layout& layout,
                                    FlankConvention flanks) {
  auto inv = try_invert_labeling(tail, minimal(), {anchor, flanks.right});
  if (!inv.ok() || inv.word.size() != 2 * layout.r) return std::nullopt;
  Word digits(layout.r);
  for (std::size_t j = 0; j < layout.r; ++j) {
    const std::uint64_t v = from_digits(std::span<const Symbol>(inv.word).subspan(2 * j, 2), 4);
    if (v >= kLabelField) return std::nullopt;
    digits[j] = static_cast<Symbol>(v);
  }
  return digits;
}

}  // namespace

E2Layout E2Layout::for_data_length(std::size_t k) {
  if (k < 1) throw InvalidInput("E2 needs k >= 1");
  return {k, HammingCode::for_message_length(kLabelField, k + 1).redundancy()};
}

Word e2_encode(std::span<const Symbol> x, FlankConvention flanks) {
  const auto layout = E2Layout::for_data_length(x.size());
  Alphabet::dna().validate(x);
  return encode_with(x, code_for(layout), flanks);
}

std::optional<Word> e2_decode_fast(std::span<const Symbol> u, const E2Layout& layout, FlankConvention flanks) {
  const std::size_t k = layout.k;
  if (u.size() != layout.n() + 1) return std::nullopt;
  const auto z = u.subspan(0, k + 1);
  const Symbol t = u[k + 2];
  try {
    const Symbol sum = label_sum(z);
    if (sum == t) return confirm(z, u, flanks);

    const HammingCode hamming = code_for(layout);
    const auto tail = u.subspan(k + 3);
    for (Symbol guess : {t, sum}) {
      if (guess >= kLabelField) continue;
      const auto red = read_redundancy(tail, parity_pair(guess)[1], layout, flanks);
      if (!red) continue;
      Word received(z.begin(), z.end());
      received.insert(received.end(), red->begin(), red->end());
      const Word fixed = hamming.correct(received);
      if (auto x = confirm(std::span<const Symbol>(fixed).subspan(0, k + 1), u, flanks)) return x;
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return std::nullopt;
}

Word e2_decode_by_enumeration(std::span<const Symbol> u, const E2Layout& layout, FlankConvention flanks) {
  const std::size_t full = layout.n() + 1;
  if (u.size() != full) {
    throw NotDecodable("labeling length " + std::to_string(u.size()) + " differs from " + std::to_string(full));
  }
  const int sigma = minimal().labeling_alphabet_size();
  const HammingCode hamming = code_for(layout);
  std::vector<Word> found;
  Word v(u.begin(), u.end());
  auto consider = [&] {
    auto inv = try_invert_labeling(v, minimal(), flanks);
    if (inv.ok() && is_codeword(inv.word, layout, hamming, flanks)) {
      inv.word.resize(layout.k);
      found.push_back(std::move(inv.word));
    }
  };
  consider();
  for (std::size_t pos = 0; pos < v.size(); ++pos) {
    const Symbol original = v[pos];
    for (int s = 0; s < sigma; ++s) {
      if (s == original) continue;
      v[pos] = static_cast<Symbol>(s);
      consider();
    }
    v[pos] = original;
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  if (found.empty()) throw NotDecodable("no E2 codeword within one substitution");
  if (found.size() > 1) throw AmbiguousDecoding("several E2 codewords within one substitution");
  return found.front();
}

Word e2_decode(std::span<const Symbol> u, const E2Layout& layout, FlankConvention flanks) {
  if (auto x = e2_decode_fast(u, layout, flanks)) return *x;
  return e2_decode_by_enumeration(u, layout, flanks);
}

}  // namespace labelcode
