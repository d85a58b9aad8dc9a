#include <gtest/gtest.h>

#include <bit>
#include <map>
#include <set>

#include "labelcode/derivative.hpp"
#include "labelcode/digits.hpp"
#include "labelcode/errors.hpp"
#include "labelcode/labeling.hpp"
#include "oracles.hpp"

using namespace labelcode;

namespace {

LabelSet custom_dna(std::vector<std::string> labels) {
  std::vector<Word> words;
  for (const auto& l : labels) words.push_back(dna(l));
  return LabelSet::custom(4, std::move(words));
}

std::vector<std::pair<int, LabelSet>> path_unique_sets() {
  return {{4, LabelSet::minimal_dna()}, {2, LabelSet::all_labels(2)}, {3, LabelSet::all_labels(3)},
          {4, LabelSet::all_labels(4)}};
}

}  // namespace

TEST(Alphabet, RendersDnaAndDigits) {
  EXPECT_EQ(dna("ACGT"), (Word{0, 1, 2, 3}));
  EXPECT_EQ(dna_string(Word{3, 2, 1, 0}), "TGCA");
  EXPECT_EQ(Alphabet(3).render(Word{2, 0, 1}), "201");
  EXPECT_THROW(dna("ACGU"), InvalidInput);
  EXPECT_THROW(Alphabet(3).parse("3"), InvalidInput);
  EXPECT_THROW(Alphabet(1), InvalidInput);
}

TEST(Alphabet, LabelingDigits) {
  EXPECT_EQ(render_labeling(Word{0, 1, 10, 6}), "01a6");
  EXPECT_EQ(parse_labeling("01a6"), (Word{0, 1, 10, 6}));
  EXPECT_THROW(parse_labeling("0A"), InvalidInput);
}

TEST(LabelSet, MinimalSetAndZeroGraph) {
  const auto s = LabelSet::minimal_dna();
  std::vector<std::string> rendered;
  for (const auto& l : s.labels()) rendered.push_back(dna_string(l));
  EXPECT_EQ(rendered, oracles::minimal_labels());
  const auto g = ZeroGraph::of(s);
  std::set<std::string> edges;
  for (auto [a, b] : g.edges()) edges.insert(dna_string(Word{a, b}));
  EXPECT_EQ(edges, (std::set<std::string>{"AA", "AG", "AT", "CC", "CG", "CT"}));
}

TEST(LabelSet, RejectsPrefixesAndDuplicates) {
  EXPECT_THROW(custom_dna({"A", "AC"}), InvalidInput);
  EXPECT_THROW(custom_dna({"AC", "AC"}), InvalidInput);
  EXPECT_THROW(custom_dna({""}), InvalidInput);
  EXPECT_NO_THROW(custom_dna({"CC", "A"}));
}

TEST(LabelWord, ReferenceExamples) {
  EXPECT_EQ(render_labeling(label_word(dna("ACGTATAGACAC"), custom_dna({"AC"}))), "100000001010");
  EXPECT_EQ(render_labeling(label_word(dna("ACGTATAGACAC"), custom_dna({"AC", "T"}))), "100202001010");
  EXPECT_EQ(render_labeling(label_word(dna("TAGCCAACCCG"), custom_dna({"A", "CC"}))), "01020112200");
  EXPECT_EQ(label_word(dna("ACGT"), LabelSet::minimal_dna()), (Word{1, 0, 6, 0}));
}

TEST(LabelWord, MatchesDefinitionOnEveryShortWord) {
  const std::vector<std::vector<std::string>> sets{{"AC"}, {"AC", "T"}, {"A", "CC"}, {"GAT", "TT", "C"}};
  for (const auto& labels : sets) {
    const auto set = custom_dna(labels);
    for (const auto& x : oracles::all_words(4, 6)) {
      const std::string text = oracles::to_dna(x);
      ASSERT_EQ(label_word(x, set), oracles::label_by_definition(text, labels)) << text;
    }
  }
}

TEST(LabelWord, LastPositionZeroForPairLabels) {
  for (const auto& x : oracles::all_words(4, 5)) {
    ASSERT_EQ(label_word(x, LabelSet::minimal_dna()).back(), 0);
  }
}

TEST(LabelFramed, Examples) {
  const auto s = LabelSet::minimal_dna();
  EXPECT_EQ(label_framed(dna("ACGT"), s), (Word{0, 1, 0, 6, 7}));
  EXPECT_EQ(label_framed(dna("AA"), s), (Word{0, 0, 0}));
  EXPECT_EQ(label_framed(dna("CT"), LabelSet::all_labels(4)), (Word{1, 7, 12}));
}

TEST(LabelFramed, MatchesPairDefinition) {
  const auto s = LabelSet::minimal_dna();
  for (const auto& x : oracles::all_words(4, 6)) {
    const std::string text = oracles::to_dna(x);
    ASSERT_EQ(label_framed(x, s), oracles::framed_minimal(text)) << text;
    ASSERT_EQ(label_framed(x, s, {dna("G")[0], dna("T")[0]}), oracles::framed_minimal(text, 'G', 'T')) << text;
  }
}

TEST(LabelFramed, AllLabelsChain) {
  for (int q = 2; q <= 4; ++q) {
    const auto set = LabelSet::all_labels(q);
    for (const auto& x : oracles::all_words(q, 5)) {
      const auto u = label_framed(x, set, {1, static_cast<Symbol>(q - 1)});
      ASSERT_EQ(u.front() / q, 1);
      ASSERT_EQ(u.back() % q, q - 1);
      for (std::size_t i = 0; i + 1 < u.size(); ++i) ASSERT_EQ(u[i] % q, u[i + 1] / q);
    }
  }
}

TEST(InvertLabeling, Examples) {
  const auto s = LabelSet::minimal_dna();
  EXPECT_EQ(dna_string(invert_labeling(Word{0, 1, 0, 6, 7}, s)), "ACGT");
  EXPECT_EQ(dna_string(invert_labeling(Word{0, 0, 0}, s)), "AA");
  EXPECT_THROW(invert_labeling(Word{1, 1}, s), InvalidLabeling);
  EXPECT_EQ(try_invert_labeling(Word{1, 1}, s).status, InversionStatus::Invalid);
}

TEST(InvertLabeling, RoundTripAndInjectivity) {
  for (const auto& [q, set] : path_unique_sets()) {
    const std::size_t n_max = q == 4 ? 7 : 8;
    for (std::size_t n = 1; n <= n_max; ++n) {
      std::set<Word> seen;
      for (const auto& x : oracles::all_words(q, n)) {
        const auto u = label_framed(x, set);
        ASSERT_EQ(invert_labeling(u, set), x);
        seen.insert(u);
      }
      ASSERT_EQ(seen.size(), oracles::all_words(q, n).size());
    }
  }
}

TEST(InvertLabeling, ReportsAmbiguityForNonPathUniqueSets) {
  const auto set = custom_dna({"AC"});
  // Both AAAA and GGGG frame to zeros only.
  EXPECT_THROW(invert_labeling(Word(5, 0), set), AmbiguousLabeling);
}

TEST(InvertLabeling, RejectsEveryInvalidWordOfLengthFour) {
  // Oracle: the valid labelings of length 4 are exactly the images of Sigma_4^3.
  const auto s = LabelSet::minimal_dna();
  std::set<Word> images;
  for (const auto& x : oracles::all_words(4, 3)) images.insert(oracles::framed_minimal(oracles::to_dna(x)));
  for (const auto& u : oracles::all_words(11, 4)) {
    const auto r = try_invert_labeling(u, s);
    ASSERT_EQ(r.ok(), images.count(u) == 1);
  }
}

TEST(Phi, Values) {
  EXPECT_EQ(phi(4), 10);
  EXPECT_EQ(phi(2), 2);
  EXPECT_EQ(phi(5), 16);
  EXPECT_EQ(phi(3), 5);
  EXPECT_THROW(phi(1), InvalidInput);
}

TEST(Phi, SmallAlphabetsHaveInjectiveSetsOfThatSize) {
  // Exhaustive over label subsets of Sigma_q^2 of size phi(q) for q = 2, 3.
  for (int q : {2, 3}) {
    std::vector<Word> pairs;
    for (const auto& p : oracles::all_words(q, 2)) pairs.push_back(p);
    bool found = false;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()) && !found; ++mask) {
      if (std::popcount(mask) != phi(q)) continue;
      std::vector<Word> chosen;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1u) chosen.push_back(pairs[i]);
      }
      const auto set = LabelSet::custom(q, chosen);
      bool injective = true;
      for (std::size_t n = 1; n <= 6 && injective; ++n) {
        std::set<Word> seen;
        for (const auto& x : oracles::all_words(q, n)) seen.insert(label_framed(x, set));
        injective = seen.size() == oracles::all_words(q, n).size();
      }
      found = injective;
    }
    EXPECT_TRUE(found) << "q=" << q;
  }
}

TEST(PathUnique, Examples) {
  EXPECT_TRUE(check_path_unique(ZeroGraph::of(LabelSet::minimal_dna()), 16));
  EXPECT_FALSE(check_path_unique(ZeroGraph(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}), 2));
  EXPECT_TRUE(check_path_unique(ZeroGraph(4, {}), 8));
}

TEST(PathUnique, AgreesWithBruteForcePathCount) {
  // Every digraph on three vertices, paths counted by walking all vertex
  // sequences.
  for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
    std::vector<std::pair<Symbol, Symbol>> edges;
    for (Symbol a = 0; a < 3; ++a) {
      for (Symbol b = 0; b < 3; ++b) {
        if (mask >> (3 * a + b) & 1u) edges.push_back({a, b});
      }
    }
    bool unique = true;
    for (std::size_t len = 1; len <= 4 && unique; ++len) {
      std::map<std::pair<Symbol, Symbol>, int> count;
      for (const auto& walk : oracles::all_words(3, len + 1)) {
        bool ok = true;
        for (std::size_t i = 0; i < len; ++i) ok = ok && (mask >> (3 * walk[i] + walk[i + 1]) & 1u);
        if (ok && ++count[{walk.front(), walk.back()}] > 1) unique = false;
      }
    }
    ASSERT_EQ(check_path_unique(ZeroGraph(3, edges), 4), unique) << mask;
  }
}

TEST(PathUnique, RemovingAnyLabelOfTheMinimalSetBreaksInjectivity) {
  const auto s = LabelSet::minimal_dna();
  for (std::size_t drop = 0; drop < s.size(); ++drop) {
    std::vector<Word> labels = s.labels();
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(drop));
    const auto reduced = LabelSet::custom(4, labels);
    bool broken = false;
    for (std::size_t n = 1; n <= 8 && !broken; ++n) {
      broken = empirical_capacity(reduced, n, FlankConvention{}).count < (std::uint64_t{1} << (2 * n));
    }
    EXPECT_TRUE(broken) << dna_string(s.labels()[drop]);
  }
}

TEST(Capacity, Counts) {
  EXPECT_EQ(empirical_capacity(LabelSet::minimal_dna(), 4, FlankConvention{}).count, 256u);
  EXPECT_DOUBLE_EQ(empirical_capacity(LabelSet::minimal_dna(), 4, FlankConvention{}).rate(), 2.0);
  EXPECT_EQ(empirical_capacity(custom_dna({"A"}), 1, std::nullopt).count, 2u);
  EXPECT_EQ(empirical_capacity(LabelSet::all_labels(4), 2, FlankConvention{}).count, 16u);
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(empirical_capacity(LabelSet::minimal_dna(), n, FlankConvention{}).count, std::uint64_t{1} << (2 * n));
  }
  EXPECT_THROW(empirical_capacity(LabelSet::minimal_dna(), 11, FlankConvention{}), BudgetExceeded);
}

TEST(Derivative, Examples) {
  EXPECT_EQ(derivative(Word{1, 2, 2, 0}, 4), (Word{1, 1, 0, 2}));
  EXPECT_EQ(derivative(Word{0, 0, 0}, 4), (Word{0, 0, 0}));
  EXPECT_EQ(derivative(Word{1, 0, 1}, 2), (Word{1, 1, 1}));
  EXPECT_EQ(integrate(Word{1, 1, 0, 2}, 4), (Word{1, 2, 2, 0}));
  EXPECT_EQ(integrate(Word{1, 1, 1}, 2), (Word{1, 0, 1}));
}

TEST(Derivative, IntegrateInvertsExhaustively) {
  for (int q = 2; q <= 4; ++q) {
    for (const auto& x : oracles::all_words(q, q == 4 ? 7 : 8)) ASSERT_EQ(integrate(derivative(x, q), q), x);
  }
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature(Word{2, 0, 1, 1}), (Word{0, 1, 1}));
  EXPECT_EQ(signature(Word{3, 3, 3}), (Word{1, 1}));
  EXPECT_EQ(signature(Word{3, 2, 1, 0}), (Word{0, 0, 0}));
  for (const auto& x : oracles::all_words(3, 6)) ASSERT_EQ(signature(x), oracles::signature_by_definition(x));
}

TEST(Digits, BaseConversion) {
  EXPECT_EQ(base_convert(7, 11, 4, 2).str(), "13");
  EXPECT_EQ(base_convert(0, 11, 4, 2).str(), "00");
  EXPECT_EQ(base_convert(10, 11, 4, 2).str(), "22");
  EXPECT_EQ(base_convert(Word{7}, 11, 4, 2).str(), "13");
  EXPECT_THROW(to_digits(16, 4, 2), InvalidInput);
  for (std::uint64_t v = 0; v < 4 * 4 * 4; ++v) {
    const auto d = to_digits(v, 4, 3);
    ASSERT_EQ(d.digits, oracles::digits_of(v, 4, 3));
    ASSERT_EQ(from_digits(d.digits, 4), v);
  }
  EXPECT_EQ(digits_needed(4, 4), 1u);
  EXPECT_EQ(digits_needed(5, 4), 2u);
  EXPECT_EQ(digits_needed(1, 4), 0u);
}
