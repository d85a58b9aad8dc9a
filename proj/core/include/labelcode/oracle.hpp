#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "labelcode/labeling.hpp"

namespace labelcode {

struct ErrorSpec {
  std::size_t substitutions = 0;
  std::size_t insertions = 0;
  std::size_t deletions = 0;

  std::size_t total() const noexcept { return substitutions + insertions + deletions; }
  std::string str() const;

  friend bool operator==(const ErrorSpec&, const ErrorSpec&) = default;
};

using BallSet = std::unordered_set<LabelingWord, WordHash>;

inline constexpr std::uint64_t kDefaultBallCap = std::uint64_t{1} << 24;

// Every word reachable from u with at most the given number of
// substitutions, insertions and deletions over an alphabet of size sigma,
// valid labeling or not. Throws BudgetExceeded past cap elements.
BallSet error_ball(std::span<const Symbol> u, const ErrorSpec& e, int sigma, std::uint64_t cap = kDefaultBallCap);

// Keeps the elements that are valid framed labelings for the given set.
BallSet restrict_to_valid(const BallSet& ball, const LabelSet& labels, FlankConvention flanks);

enum class BallSemantics { Permissive, ValidOnly };

struct Violation {
  Word first;
  Word second;          // empty for decoder failures
  LabelingWord output;  // the shared ball element or the channel output
  std::string detail;
};

struct VerificationReport {
  std::string target;
  std::string params;
  std::uint64_t words_checked = 0;
  std::uint64_t channel_outputs = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;  // first few only
  double wall_seconds = 0.0;

  bool pass() const noexcept { return violation_count == 0; }
  std::string summary() const;
};

VerificationReport is_labeling_code(const std::vector<Word>& code, const LabelSet& labels, FlankConvention flanks,
                                    const ErrorSpec& e, BallSemantics semantics = BallSemantics::Permissive);

enum class DecoderScheme { E1, E2, AllLabelsDeletion, Tenengolts, Coset };

std::optional<DecoderScheme> parse_scheme(std::string_view name);
std::string scheme_name(DecoderScheme scheme);

struct DecoderCheckParams {
  std::size_t length = 0;  // k for e1/e2, n otherwise
  int q = 4;               // alphabet of the all-labels scheme
  FlankConvention flanks;
  bool compare_fallback = true;
};

// Sends every codeword through every channel corruption within the scheme's
// budget (one indel for e1, all-labels-del and tenengolts; one substitution
// for e2 and coset) and checks the decoder returns the data. Where a fast
// decoder exists it must agree with the enumeration fallback.
VerificationReport exhaustive_decoder_check(DecoderScheme scheme, const DecoderCheckParams& params);

// Applies exactly e.deletions, e.substitutions and e.insertions random
// errors (in that order) with std::mt19937_64 seeded by seed.
LabelingWord simulate_channel(std::span<const Symbol> u, const ErrorSpec& e, std::uint64_t seed, int sigma);

inline constexpr const char* kChannelGenerator = "std::mt19937_64";

}  // namespace labelcode
