#include "labelcode/oracle.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <unordered_map>

#include "labelcode/all_labels_code.hpp"
#include "labelcode/errors.hpp"
#include "labelcode/search.hpp"
#include "labelcode/systematic.hpp"

namespace labelcode {

namespace {

constexpr std::size_t kKeptViolations = 16;

void guard(const BallSet& set, std::uint64_t cap) {
  if (set.size() > cap) throw BudgetExceeded("error ball exceeds the enumeration cap");
}

BallSet expand(const BallSet& from, std::size_t rounds, std::uint64_t cap,
               const std::function<void(const LabelingWord&, BallSet&)>& step) {
  BallSet all = from;
  BallSet frontier = from;
  for (std::size_t r = 0; r < rounds && !frontier.empty(); ++r) {
    BallSet next;
    for (const auto& w : frontier) step(w, next);
    BallSet fresh;
    for (auto& w : next) {
      if (all.insert(w).second) fresh.insert(w);
    }
    guard(all, cap);
    frontier = std::move(fresh);
  }
  return all;
}

class Recorder {
 public:
  explicit Recorder(VerificationReport& report) : report_(report) {}

  void fail(const Word& first, const Word& second, std::span<const Symbol> output, std::string detail) {
    ++report_.violation_count;
    if (report_.violations.size() < kKeptViolations) {
      report_.violations.push_back({first, second, LabelingWord(output.begin(), output.end()), std::move(detail)});
    }
  }

 private:
  VerificationReport& report_;
};

std::vector<LabelingWord> single_deletions(const LabelingWord& u) {
  BallSet set = error_ball(u, {0, 0, 1}, 1);
  set.erase(u);
  return {set.begin(), set.end()};
}

std::vector<LabelingWord> single_insertions(const LabelingWord& u, int sigma) {
  BallSet set = error_ball(u, {0, 1, 0}, sigma);
  set.erase(u);
  return {set.begin(), set.end()};
}

std::vector<LabelingWord> single_substitutions(const LabelingWord& u, int sigma) {
  BallSet set = error_ball(u, {1, 0, 0}, sigma);
  set.erase(u);
  return {set.begin(), set.end()};
}

template <class Decode>
void check_decode(Recorder& rec, VerificationReport& report, const Word& expected, const LabelingWord& v,
                  Decode&& decode) {
  ++report.channel_outputs;
  try {
    Word got = decode(v);
    if (got != expected) rec.fail(expected, got, v, "decoded to a different word");
  } catch (const Error& e) {
    rec.fail(expected, {}, v, e.what());
  }
}

template <class Fast, class Slow>
void check_agreement(Recorder& rec, const Word& expected, const LabelingWord& v, Fast&& fast, Slow&& slow) {
  std::optional<Word> quick;
  try {
    quick = fast(v);
  } catch (const Error&) {
    quick.reset();
  }
  if (!quick) return;
  try {
    Word reference = slow(v);
    if (reference != *quick) rec.fail(expected, *quick, v, "fast decoder disagrees with fallback");
  } catch (const Error& e) {
    rec.fail(expected, *quick, v, std::string("fallback failed where fast decoder answered: ") + e.what());
  }
}

}  // namespace

std::string ErrorSpec::str() const {
  std::ostringstream out;
  out << '(' << substitutions << ',' << insertions << ',' << deletions << ')';
  return out.str();
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  out << target << ' ' << params << ": " << (pass() ? "pass" : "FAIL") << ", " << words_checked << " words";
  if (channel_outputs > 0) out << ", " << channel_outputs << " channel outputs";
  out << ", " << violation_count << " violations, " << wall_seconds << " s";
  return out.str();
}

BallSet error_ball(std::span<const Symbol> u, const ErrorSpec& e, int sigma, std::uint64_t cap) {
  if (u.size() < e.deletions) throw InvalidInput("more deletions than symbols");
  BallSet ball{LabelingWord(u.begin(), u.end())};
  ball = expand(ball, e.deletions, cap, [](const LabelingWord& w, BallSet& out) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0 && w[i] == w[i - 1]) continue;
      LabelingWord v = w;
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
      out.insert(std::move(v));
    }
  });
  ball = expand(ball, e.substitutions, cap, [sigma](const LabelingWord& w, BallSet& out) {
    LabelingWord v = w;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Symbol original = v[i];
      for (int s = 0; s < sigma; ++s) {
        if (s == original) continue;
        v[i] = static_cast<Symbol>(s);
        out.insert(v);
      }
      v[i] = original;
    }
  });
  ball = expand(ball, e.insertions, cap, [sigma](const LabelingWord& w, BallSet& out) {
    for (std::size_t i = 0; i <= w.size(); ++i) {
      for (int s = 0; s < sigma; ++s) {
        LabelingWord v = w;
        v.insert(v.begin() + static_cast<std::ptrdiff_t>(i), static_cast<Symbol>(s));
        out.insert(std::move(v));
      }
    }
  });
  return ball;
}

BallSet restrict_to_valid(const BallSet& ball, const LabelSet& labels, FlankConvention flanks) {
  BallSet valid;
  for (const auto& w : ball) {
    if (try_invert_labeling(w, labels, flanks).status != InversionStatus::Invalid) valid.insert(w);
  }
  return valid;
}

VerificationReport is_labeling_code(const std::vector<Word>& code, const LabelSet& labels, FlankConvention flanks,
                                    const ErrorSpec& e, BallSemantics semantics) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.target = "labeling-code";
  report.params = "|C|=" + std::to_string(code.size()) + " e=" + e.str() +
                  (semantics == BallSemantics::ValidOnly ? " valid-only" : "");
  Recorder rec(report);
  const int sigma = labels.labeling_alphabet_size();
  std::unordered_map<LabelingWord, std::size_t, WordHash> owner;
  for (std::size_t i = 0; i < code.size(); ++i) {
    ++report.words_checked;
    const auto u = label_framed(code[i], labels, flanks);
    BallSet ball = error_ball(u, e, sigma);
    if (semantics == BallSemantics::ValidOnly) ball = restrict_to_valid(ball, labels, flanks);
    for (const auto& w : ball) {
      auto [it, inserted] = owner.emplace(w, i);
      if (!inserted && code[it->second] != code[i]) rec.fail(code[it->second], code[i], w, "balls intersect");
    }
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::optional<DecoderScheme> parse_scheme(std::string_view name) {
  if (name == "e1") return DecoderScheme::E1;
  if (name == "e2") return DecoderScheme::E2;
  if (name == "all-labels-del") return DecoderScheme::AllLabelsDeletion;
  if (name == "tenengolts") return DecoderScheme::Tenengolts;
  if (name == "coset") return DecoderScheme::Coset;
  return std::nullopt;
}

std::string scheme_name(DecoderScheme scheme) {
  switch (scheme) {
    case DecoderScheme::E1: return "e1";
    case DecoderScheme::E2: return "e2";
    case DecoderScheme::AllLabelsDeletion: return "all-labels-del";
    case DecoderScheme::Tenengolts: return "tenengolts";
    case DecoderScheme::Coset: return "coset";
  }
  return "?";
}

VerificationReport exhaustive_decoder_check(DecoderScheme scheme, const DecoderCheckParams& params) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.target = scheme_name(scheme);
  report.params = "length=" + std::to_string(params.length);
  Recorder rec(report);
  const FlankConvention flanks = params.flanks;
  const LabelSet minimal = LabelSet::minimal_dna();
  const int sigma = minimal.labeling_alphabet_size();

  switch (scheme) {
    case DecoderScheme::E1: {
      const auto layout = E1Layout::for_data_length(params.length);
      for_each_word(4, params.length, [&](const Word& x) {
        ++report.words_checked;
        const auto u = label_framed(e1_encode(x, flanks), minimal, flanks);
        auto outputs = single_deletions(u);
        const auto inserted = single_insertions(u, sigma);
        outputs.insert(outputs.end(), inserted.begin(), inserted.end());
        outputs.push_back(u);
        for (const auto& v : outputs) {
          check_decode(rec, report, x, v, [&](const LabelingWord& w) { return e1_decode(w, layout, flanks); });
          if (params.compare_fallback) {
            check_agreement(
                rec, x, v, [&](const LabelingWord& w) { return e1_decode_fast(w, layout, flanks); },
                [&](const LabelingWord& w) { return e1_decode_by_enumeration(w, layout, flanks); });
          }
        }
      });
      break;
    }
    case DecoderScheme::E2: {
      const auto layout = E2Layout::for_data_length(params.length);
      for_each_word(4, params.length, [&](const Word& x) {
        ++report.words_checked;
        const auto u = label_framed(e2_encode(x, flanks), minimal, flanks);
        auto outputs = single_substitutions(u, sigma);
        outputs.push_back(u);
        for (const auto& v : outputs) {
          check_decode(rec, report, x, v, [&](const LabelingWord& w) { return e2_decode(w, layout, flanks); });
          if (params.compare_fallback) {
            check_agreement(
                rec, x, v, [&](const LabelingWord& w) { return e2_decode_fast(w, layout, flanks); },
                [&](const LabelingWord& w) { return e2_decode_by_enumeration(w, layout, flanks); });
          }
        }
      });
      break;
    }
    case DecoderScheme::AllLabelsDeletion: {
      const auto code = build_all_labels_deletion_code(params.q, params.length, flanks.left);
      const auto labels = code.params.label_set();
      for (const auto& x : code.codebook) {
        ++report.words_checked;
        const auto u = label_framed(x, labels, code.params.flanks);
        auto outputs = single_deletions(u);
        outputs.push_back(u);
        for (const auto& v : outputs) {
          check_decode(rec, report, x, v,
                       [&](const LabelingWord& w) { return decode_all_labels_deletion(w, code.params); });
          if (params.compare_fallback) {
            check_agreement(
                rec, x, v,
                [&](const LabelingWord& w) -> std::optional<Word> { return decode_all_labels_deletion(w, code.params); },
                [&](const LabelingWord& w) { return decode_all_labels_by_enumeration(w, code.params); });
          }
        }
      }
      break;
    }
    case DecoderScheme::Tenengolts: {
      const auto found = search_tenengolts_labeling_code(params.length, minimal, flanks);
      for (const auto& x : tenengolts_labeling_codebook(found, minimal, flanks)) {
        ++report.words_checked;
        const auto u = label_framed(x, minimal, flanks);
        auto outputs = single_deletions(u);
        const auto inserted = single_insertions(u, sigma);
        outputs.insert(outputs.end(), inserted.begin(), inserted.end());
        outputs.push_back(u);
        for (const auto& v : outputs) {
          check_decode(rec, report, x, v,
                       [&](const LabelingWord& w) { return decode_tenengolts_labeling(w, found, minimal, flanks); });
        }
      }
      break;
    }
    case DecoderScheme::Coset: {
      const auto found = search_hamming_coset(params.length, minimal, 11, flanks);
      for (const auto& x : hamming_coset_codebook(found, minimal, flanks)) {
        ++report.words_checked;
        const auto u = label_framed(x, minimal, flanks);
        auto outputs = single_substitutions(u, sigma);
        outputs.push_back(u);
        for (const auto& v : outputs) {
          check_decode(rec, report, x, v,
                       [&](const LabelingWord& w) { return decode_hamming_coset(w, found, minimal, flanks); });
        }
      }
      break;
    }
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

LabelingWord simulate_channel(std::span<const Symbol> u, const ErrorSpec& e, std::uint64_t seed, int sigma) {
  if (u.size() < e.deletions) throw InvalidInput("more deletions than symbols");
  if (e.substitutions > 0 && sigma < 2) throw InvalidInput("substitutions need an alphabet of size >= 2");
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t bound) { return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng); };
  LabelingWord v(u.begin(), u.end());
  for (std::size_t i = 0; i < e.deletions; ++i) {
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(pick(v.size())));
  }
  for (std::size_t i = 0; i < e.substitutions && !v.empty(); ++i) {
    const std::size_t pos = pick(v.size());
    const auto shift = static_cast<Symbol>(1 + pick(static_cast<std::size_t>(sigma - 1)));
    v[pos] = static_cast<Symbol>((v[pos] + shift) % sigma);
  }
  for (std::size_t i = 0; i < e.insertions; ++i) {
    const std::size_t pos = pick(v.size() + 1);
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<Symbol>(pick(static_cast<std::size_t>(sigma))));
  }
  return v;
}

}  // namespace labelcode
