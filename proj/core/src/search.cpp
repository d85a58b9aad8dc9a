#include "labelcode/search.hpp"

#include <algorithm>

#include "labelcode/digits.hpp"
#include "labelcode/errors.hpp"
#include "labelcode/hamming.hpp"
#include "labelcode/tenengolts.hpp"

namespace labelcode {

namespace {

template <class Fn>
void for_each_labeling(std::size_t n, const LabelSet& labels, FlankConvention flanks, Fn&& fn) {
  checked_pow(static_cast<std::uint64_t>(labels.q()), static_cast<unsigned>(n));
  for_each_word(labels.q(), n, [&](const Word& x) { fn(x, label_framed(x, labels, flanks)); });
}

Word invert_or_fail(std::span<const Symbol> u, const LabelSet& labels, FlankConvention flanks) {
  auto inv = try_invert_labeling(u, labels, flanks);
  if (!inv.ok()) throw NotDecodable("corrected labeling is not a valid labeling");
  return std::move(inv.word);
}

HammingCode coset_code(const HammingCosetResult& found) {
  return HammingCode(found.p, found.r, found.n + 1 - found.r);
}

}  // namespace

std::vector<Word> lift_code(const std::vector<LabelingWord>& code, const LabelSet& labels, FlankConvention flanks) {
  std::vector<Word> lifted;
  for (const auto& u : code) {
    auto inv = try_invert_labeling(u, labels, flanks);
    if (inv.ok()) lifted.push_back(std::move(inv.word));
  }
  std::sort(lifted.begin(), lifted.end());
  lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
  return lifted;
}

TenengoltsSearchResult search_tenengolts_labeling_code(std::size_t n, const LabelSet& labels,
                                                       FlankConvention flanks) {
  if (n < 1) throw InvalidInput("search needs n >= 1");
  TenengoltsSearchResult result;
  result.n = n;
  result.p = labels.labeling_alphabet_size();
  const std::size_t length = n + 1;
  result.histogram.assign(length * static_cast<std::size_t>(result.p), 0);
  for_each_labeling(n, labels, flanks, [&](const Word&, const LabelingWord& u) {
    const auto cls = tenengolts_class_of(u, result.p);
    ++result.histogram[cls.a * static_cast<std::size_t>(result.p) + cls.b];
    ++result.valid_labelings;
  });
  const auto best = std::max_element(result.histogram.begin(), result.histogram.end());
  const auto index = static_cast<std::size_t>(best - result.histogram.begin());
  result.a = index / static_cast<std::size_t>(result.p);
  result.b = static_cast<Symbol>(index % static_cast<std::size_t>(result.p));
  result.size = *best;
  return result;
}

std::vector<Word> tenengolts_labeling_codebook(const TenengoltsSearchResult& found, const LabelSet& labels,
                                               FlankConvention flanks) {
  const TenengoltsParams params{found.labeling_length(), found.p, found.a, found.b};
  std::vector<Word> book;
  for_each_labeling(found.n, labels, flanks, [&](const Word& x, const LabelingWord& u) {
    if (tenengolts_member(u, params)) book.push_back(x);
  });
  return book;
}

Word decode_tenengolts_labeling(std::span<const Symbol> u, const TenengoltsSearchResult& found,
                                const LabelSet& labels, FlankConvention flanks) {
  const TenengoltsParams params{found.labeling_length(), found.p, found.a, found.b};
  if (u.size() == params.n) {
    if (!tenengolts_member(u, params)) throw NotDecodable("labeling is not in the chosen class");
    return invert_or_fail(u, labels, flanks);
  }
  try {
    return invert_or_fail(tenengolts_decode(u, params), labels, flanks);
  } catch (const NoCodeword& e) {
    throw NotDecodable(e.what());
  } catch (const MultipleCandidates& e) {
    throw NotDecodable(e.what());
  }
}

std::size_t hamming_redundancy_for_length(int p, std::size_t length) {
  std::size_t r = 1;
  std::uint64_t columns = 1;
  std::uint64_t power = static_cast<std::uint64_t>(p);
  while (columns < length) {
    columns += power;
    power *= static_cast<std::uint64_t>(p);
    ++r;
  }
  return r;
}

HammingCosetResult search_hamming_coset(std::size_t n, const LabelSet& labels, int p, FlankConvention flanks) {
  if (p < labels.labeling_alphabet_size()) throw InvalidInput("field smaller than the labeling alphabet");
  HammingCosetResult result;
  result.n = n;
  result.p = p;
  result.r = hamming_redundancy_for_length(p, n + 1);
  if (result.r >= n + 1) throw InvalidInput("labeling too short for a Hamming coset search");
  const HammingCode code = coset_code(result);
  result.histogram.assign(checked_pow(static_cast<std::uint64_t>(p), static_cast<unsigned>(result.r)), 0);
  for_each_labeling(n, labels, flanks, [&](const Word&, const LabelingWord& u) {
    ++result.histogram[from_digits(code.syndrome(u), p)];
    ++result.valid_labelings;
  });
  const auto best = std::max_element(result.histogram.begin(), result.histogram.end());
  result.size = *best;
  result.syndrome = to_digits(static_cast<std::uint64_t>(best - result.histogram.begin()), p, result.r).digits;
  return result;
}

std::vector<Word> hamming_coset_codebook(const HammingCosetResult& found, const LabelSet& labels,
                                         FlankConvention flanks) {
  const HammingCode code = coset_code(found);
  std::vector<Word> book;
  for_each_labeling(found.n, labels, flanks, [&](const Word& x, const LabelingWord& u) {
    if (code.syndrome(u) == found.syndrome) book.push_back(x);
  });
  return book;
}

Word decode_hamming_coset(std::span<const Symbol> u, const HammingCosetResult& found, const LabelSet& labels,
                          FlankConvention flanks) {
  if (u.size() != found.n + 1) throw NotDecodable("labeling has the wrong length");
  try {
    return invert_or_fail(coset_code(found).correct(u, found.syndrome), labels, flanks);
  } catch (const UncorrectableSyndrome& e) {
    throw NotDecodable(e.what());
  }
}

}  // namespace labelcode
