#include <gtest/gtest.h>

#include "labelcode/errors.hpp"
#include "labelcode/oracle.hpp"
#include "oracles.hpp"

using namespace labelcode;

namespace {

BallSet as_ball(std::initializer_list<Word> words) { return BallSet(words.begin(), words.end()); }

// Ball by repeated application of the single-error oracles.
std::set<Word> brute_ball(const Word& u, const ErrorSpec& e, int sigma) {
  std::set<Word> ball{u};
  auto grow = [&](std::size_t rounds, auto&& step) {
    for (std::size_t r = 0; r < rounds; ++r) {
      std::set<Word> next = ball;
      for (const auto& w : ball) {
        for (const auto& v : step(w)) next.insert(v);
      }
      ball = next;
    }
  };
  grow(e.deletions, [](const Word& w) { return oracles::single_deletions(w); });
  grow(e.substitutions, [&](const Word& w) { return oracles::single_substitutions(w, sigma); });
  grow(e.insertions, [&](const Word& w) { return oracles::single_insertions(w, sigma); });
  return ball;
}

}  // namespace

TEST(ErrorBall, Examples) {
  EXPECT_EQ(error_ball(Word{1, 0, 6, 0}, {0, 0, 1}, 11),
            as_ball({Word{0, 6, 0}, Word{1, 6, 0}, Word{1, 0, 0}, Word{1, 0, 6}, Word{1, 0, 6, 0}}));
  EXPECT_EQ(error_ball(Word{0, 0}, {0, 0, 1}, 11), as_ball({Word{0}, Word{0, 0}}));
  EXPECT_EQ(error_ball(Word{3, 4}, {0, 0, 0}, 11), as_ball({Word{3, 4}}));
  EXPECT_THROW(error_ball(Word{1}, {0, 0, 2}, 11), InvalidInput);
  EXPECT_THROW(error_ball(Word(8, 0), {2, 2, 0}, 11, 1000), BudgetExceeded);
}

TEST(ErrorBall, MatchesRepeatedSingleErrors) {
  const std::vector<ErrorSpec> specs{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
  for (const auto& u : oracles::all_words(3, 4)) {
    for (const auto& e : specs) {
      const auto ball = error_ball(u, e, 3);
      const auto expected = brute_ball(u, e, 3);
      ASSERT_EQ(std::set<Word>(ball.begin(), ball.end()), expected) << e.str();
    }
  }
}

TEST(ErrorBall, SubstitutionBallSize) {
  for (const auto& u : oracles::all_words(4, 4)) ASSERT_EQ(error_ball(u, {1, 0, 0}, 11).size(), 1u + 10u * 4u);
}

TEST(ErrorBall, IndelSymmetry) {
  const auto words3 = oracles::all_words(3, 3);
  const auto words4 = oracles::all_words(3, 4);
  for (const auto& u : words3) {
    const auto up = error_ball(u, {0, 1, 0}, 3);
    for (const auto& v : words4) {
      const auto down = error_ball(v, {0, 0, 1}, 3);
      ASSERT_EQ(up.count(v) == 1, down.count(u) == 1);
    }
  }
}

TEST(ErrorBall, ValidOnlyRestriction) {
  const auto s = LabelSet::minimal_dna();
  const auto ball = error_ball(Word{0, 1, 0, 6, 7}, {1, 0, 0}, 11);
  const auto valid = restrict_to_valid(ball, s, {});
  EXPECT_LT(valid.size(), ball.size());
  for (const auto& w : valid) EXPECT_TRUE(try_invert_labeling(w, s).ok());
}

TEST(IsLabelingCode, Examples) {
  const auto s = LabelSet::minimal_dna();
  const auto report = is_labeling_code({dna("AA"), dna("CC")}, s, {}, {1, 0, 0});
  EXPECT_FALSE(report.pass());
  ASSERT_FALSE(report.violations.empty());
  EXPECT_EQ(is_labeling_code({dna("ACGT")}, s, {}, {1, 1, 1}).violation_count, 0u);
  // e = 0 passes iff framed labelings are distinct.
  std::vector<Word> all;
  for (const auto& x : oracles::all_words(4, 3)) all.push_back(x);
  EXPECT_TRUE(is_labeling_code(all, s, {}, {0, 0, 0}).pass());
  const auto custom = LabelSet::custom(4, {dna("AC")});
  EXPECT_FALSE(is_labeling_code({dna("AA"), dna("GG")}, custom, {}, {0, 0, 0}).pass());
}

TEST(IsLabelingCode, ValidOnlySemanticsIsWeaker) {
  const auto s = LabelSet::minimal_dna();
  std::vector<Word> code;
  for (const auto& x : oracles::all_words(4, 2)) code.push_back(x);
  const auto permissive = is_labeling_code(code, s, {}, {1, 0, 0});
  const auto valid_only = is_labeling_code(code, s, {}, {1, 0, 0}, BallSemantics::ValidOnly);
  EXPECT_LE(valid_only.violation_count, permissive.violation_count);
}

TEST(Simulate, DeterministicAndInsideTheBall) {
  const Word u{0, 1, 0, 6, 9, 5, 5, 4, 0, 3};
  EXPECT_EQ(simulate_channel(u, {0, 0, 0}, 42, 11), u);
  const std::vector<ErrorSpec> specs{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  for (const auto& e : specs) {
    const auto ball = error_ball(u, e, 11);
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
      const auto v = simulate_channel(u, e, seed, 11);
      ASSERT_EQ(v.size(), u.size() + e.insertions - e.deletions);
      ASSERT_EQ(ball.count(v), 1u) << e.str() << ' ' << seed;
    }
    EXPECT_EQ(simulate_channel(u, e, 7, 11), simulate_channel(u, e, 7, 11));
  }
  EXPECT_NE(simulate_channel(u, {1, 0, 0}, 1, 11), u);
}

TEST(DecoderCheck, SmallSchemesPass) {
  EXPECT_TRUE(exhaustive_decoder_check(DecoderScheme::E1, {3}).pass());
  EXPECT_TRUE(exhaustive_decoder_check(DecoderScheme::E2, {3}).pass());
  EXPECT_TRUE(exhaustive_decoder_check(DecoderScheme::AllLabelsDeletion, {5, 2}).pass());
  EXPECT_TRUE(exhaustive_decoder_check(DecoderScheme::Tenengolts, {4}).pass());
  EXPECT_TRUE(exhaustive_decoder_check(DecoderScheme::Coset, {4}).pass());
  const auto e1 = exhaustive_decoder_check(DecoderScheme::E1, {2});
  EXPECT_EQ(e1.words_checked, 16u);
  EXPECT_GT(e1.channel_outputs, 16u);
}

TEST(DecoderCheck, SchemeNames) {
  for (auto s : {DecoderScheme::E1, DecoderScheme::E2, DecoderScheme::AllLabelsDeletion, DecoderScheme::Tenengolts,
                 DecoderScheme::Coset}) {
    EXPECT_EQ(parse_scheme(scheme_name(s)), s);
  }
  EXPECT_FALSE(parse_scheme("e3").has_value());
}
