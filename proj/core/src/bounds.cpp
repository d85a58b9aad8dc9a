#include "labelcode/bounds.hpp"

#include <cmath>
#include <set>


#include "labelcode/errors.hpp"

namespace labelcode {

namespace {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt power(int base, std::size_t exp) { return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp)); }

void check_q(int q) {
  if (q < 2) throw InvalidInput("alphabet size must be at least 2");
}

double log2_of(const BigInt& value) {
  const std::size_t bits = boost::multiprecision::msb(value);
  if (bits < 60) return std::log2(value.convert_to<double>());
  const BigInt top = value >> (bits - 52);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 52);
}

}  // namespace

BigInt count_zero_run_sequences(std::size_t L, std::size_t z, int q) {
  check_q(q);
  if (z == 0) return power(q - 1, L);
  const auto len = static_cast<std::int64_t>(L);
  const auto runs = static_cast<std::int64_t>(z);
  if (2 * runs - 1 > len) return 0;
  if (q == 2) return binomial(len + 1, 2 * runs);
  // i counts the zeros beyond one per run; the nonzero symbols (at least
  // z - 1 separators) fill the remaining places.
  BigInt total = 0;
  const std::int64_t spare = len - (2 * runs - 1);
  for (std::int64_t i = 0; i <= spare; ++i) {
    total += binomial(i + runs - 1, runs - 1) * binomial(spare - i + runs, runs) * power(q - 1, L - z - i);
  }
  return total;
}

std::size_t zero_runs(std::span<const Symbol> t) {
  std::size_t runs = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == 0 && (i == 0 || t[i - 1] != 0)) ++runs;
  }
  return runs;
}

ZeroDeletionBound upper_bound_zero_deletion(std::size_t m, int q) {
  if (m < 2) throw InvalidInput("upper bound needs m >= 2");
  check_q(q);
  ZeroDeletionBound bound;
  for (std::size_t z = 1; 2 * z - 1 <= m - 1; ++z) {
    bound.transversal_sum += Rational(count_zero_run_sequences(m - 1, z, q), BigInt(z));
  }
  if (q == 2 && m > 2) {
    bound.binary_closed_form = Rational(power(2, m + 2), BigInt(m - 2));
  }
  return bound;
}

Rational upper_bound_labeling(std::size_t n, int q) {
  if (n < 1) throw InvalidInput("upper bound needs n >= 1");
  return upper_bound_zero_deletion(n + 1, q).transversal_sum;
}

Rational lower_bound_size(std::size_t n, int q) {
  if (n < 1) throw InvalidInput("lower bound needs n >= 1");
  check_q(q);
  return Rational(power(q, n + 1), BigInt(q - 1) * BigInt(n + 2));
}

BigInt zero_free_correction(std::size_t m, int q) {
  check_q(q);
  if (m < 1) throw InvalidInput("correction needs m >= 1");
  return power(q - 1, m - 1) + power(q - 1, m);
}

double log_base(const Rational& value, int q) {
  if (value <= 0) throw InvalidInput("logarithm of a non-positive value");
  const double bits = log2_of(boost::multiprecision::numerator(value)) -
                      log2_of(boost::multiprecision::denominator(value));
  return bits / std::log2(static_cast<double>(q));
}

std::vector<BoundRow> redundancy_gap_table(int q, std::span<const std::size_t> ns) {
  std::vector<BoundRow> rows;
  rows.reserve(ns.size());
  for (std::size_t n : ns) {
    BoundRow row{q, n, lower_bound_size(n, q), upper_bound_labeling(n, q), 0.0};
    row.gap = log_base(row.upper, q) - log_base(row.lower, q);
    rows.push_back(std::move(row));
  }
  return rows;
}

TransversalCheck fractional_transversal_report(std::size_t m, int q, std::uint64_t cap) {
  check_q(q);
  if (m < 1) throw InvalidInput("transversal check needs m >= 1");
  if (checked_pow(static_cast<std::uint64_t>(q), static_cast<unsigned>(m)) > cap) {
    throw BudgetExceeded("Sigma_q^m exceeds the enumeration cap");
  }
  TransversalCheck report;
  for_each_word(q, m, [&](const Word& x) {
    ++report.balls;
    const std::size_t zx = zero_runs(x);
    std::set<Word> ball;
    for (std::size_t i = 0; i < m; ++i) {
      if (x[i] != 0) continue;
      Word y = x;
      y.erase(y.begin() + static_cast<std::ptrdiff_t>(i));
      ball.insert(std::move(y));
    }
    if (ball.size() != zx) ++report.size_mismatches;
    if (ball.empty()) {
      ++report.empty_balls;
      return;
    }
    Rational weight = 0;
    bool zero_free = false;
    for (const auto& y : ball) {
      const std::size_t zy = zero_runs(y);
      if (zy > zx) ++report.monotonicity_violations;
      if (zy == 0) {
        zero_free = true;
      } else {
        weight += Rational(BigInt(1), BigInt(zy));
      }
    }
    if (zero_free) {
      ++report.balls_with_zero_free_word;
    } else if (weight < 1) {
      ++report.undercovered;
    }
  });
  report.valid = report.size_mismatches == 0 && report.monotonicity_violations == 0 && report.undercovered == 0;
  return report;
}

bool fractional_transversal_check(std::size_t m, int q) { return fractional_transversal_report(m, q).valid; }

}  // namespace labelcode
