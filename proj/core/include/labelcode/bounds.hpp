#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "labelcode/word.hpp"
#include "labelcode/zero_indel.hpp"

namespace labelcode {

using Rational = boost::multiprecision::cpp_rational;

// Words of length L over Sigma_q with exactly z maximal runs of zeros.
BigInt count_zero_run_sequences(std::size_t L, std::size_t z, int q);

// Number of maximal zero runs of t.
std::size_t zero_runs(std::span<const Symbol> t);

struct ZeroDeletionBound {
  Rational transversal_sum;
  std::optional<Rational> binary_closed_form;  // 2^{m+2}/(m-2), q = 2 and m > 2 only
};

// Sum over z >= 1 of count_zero_run_sequences(m-1, z, q) / z.
ZeroDeletionBound upper_bound_zero_deletion(std::size_t m, int q);

// upper_bound_zero_deletion(n+1, q).transversal_sum
Rational upper_bound_labeling(std::size_t n, int q);

// q^{n+1} / ((q-1)(n+2))
Rational lower_bound_size(std::size_t n, int q);

// Weight missing from the transversal sum: zero-free words of length
// m-1 (they sit alone in some balls) plus the zero-free words of length m,
// whose balls are empty.
BigInt zero_free_correction(std::size_t m, int q);

struct BoundRow {
  int q = 0;
  std::size_t n = 0;
  Rational lower;
  Rational upper;
  double gap = 0.0;  // log_q(upper) - log_q(lower)
};

std::vector<BoundRow> redundancy_gap_table(int q, std::span<const std::size_t> ns);

// log_q of a positive rational, accurate for huge numerators/denominators.
double log_base(const Rational& value, int q);

struct TransversalCheck {
  bool valid = true;
  std::uint64_t balls = 0;
  std::uint64_t empty_balls = 0;
  std::uint64_t balls_with_zero_free_word = 0;
  std::uint64_t size_mismatches = 0;
  std::uint64_t monotonicity_violations = 0;
  std::uint64_t undercovered = 0;
};

// Checks the weights 1/z(y) on every zero-deletion ball of Sigma_q^m: ball
// size equals z(x), z(y) <= z(x) inside the ball, and each nonempty ball
// has weight >= 1. A ball holding a zero-free word counts as covered.
TransversalCheck fractional_transversal_report(std::size_t m, int q,
                                               std::uint64_t cap = std::uint64_t{1} << 22);
bool fractional_transversal_check(std::size_t m, int q);

}  // namespace labelcode
