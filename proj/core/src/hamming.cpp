#include "labelcode/hamming.hpp"

#include <algorithm>
#include <string>

#include "labelcode/errors.hpp"

namespace labelcode {

namespace {

int inverse_mod(int v, int p) {
  for (int x = 1; x < p; ++x) {
    if (v * x % p == 1) return x;
  }
  throw InvalidInput("no inverse");
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

HammingCode::HammingCode(int p, std::size_t r, std::size_t message_length) : p_(p), r_(r), k_(message_length) {
  if (!is_prime(p)) throw InvalidInput("Hamming field size must be prime, got " + std::to_string(p));
  if (r == 0) throw InvalidInput("Hamming redundancy must be positive");
  std::uint64_t total = checked_pow(static_cast<std::uint64_t>(p), static_cast<unsigned>(r));
  if (total > (1u << 24)) throw BudgetExceeded("Hamming matrix too large");

  std::vector<Word> unit(r);
  std::vector<Word> others;
  for (std::uint64_t v = 1; v < total; ++v) {
    Word col(r);
    std::uint64_t rest = v;
    for (std::size_t row = r; row > 0; --row) {
      col[row - 1] = static_cast<Symbol>(rest % p);
      rest /= p;
    }
    auto top = std::find_if(col.begin(), col.end(), [](Symbol s) { return s != 0; });
    if (*top != 1) continue;
    columns_.push_back(col);
    if (std::count(col.begin(), col.end(), Symbol{0}) + 1 == static_cast<std::ptrdiff_t>(r)) {
      unit[static_cast<std::size_t>(top - col.begin())] = col;
    } else {
      others.push_back(col);
    }
  }
  if (k_ > others.size()) {
    throw InvalidInput("message length " + std::to_string(k_) + " exceeds Hamming capacity " +
                       std::to_string(others.size()));
  }
  position_columns_.assign(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(k_));
  position_columns_.insert(position_columns_.end(), unit.begin(), unit.end());
}

HammingCode HammingCode::for_message_length(int p, std::size_t k) {
  if (!is_prime(p)) throw InvalidInput("Hamming field size must be prime");
  std::size_t r = 1;
  std::uint64_t power = static_cast<std::uint64_t>(p);
  while ((power - 1) / static_cast<std::uint64_t>(p - 1) < k + r) {
    ++r;
    power *= static_cast<std::uint64_t>(p);
  }
  return HammingCode(p, r, k);
}

Word HammingCode::parity(std::span<const Symbol> message) const {
  if (message.size() != k_) throw InvalidInput("Hamming message has wrong length");
  Word acc(r_, 0);
  for (std::size_t i = 0; i < k_; ++i) {
    if (message[i] >= p_) throw InvalidInput("message digit outside GF(p)");
    for (std::size_t row = 0; row < r_; ++row) {
      acc[row] = static_cast<Symbol>((acc[row] + message[i] * position_columns_[i][row]) % p_);
    }
  }
  for (auto& d : acc) d = static_cast<Symbol>((p_ - d) % p_);
  return acc;
}

Word HammingCode::encode(std::span<const Symbol> message) const {
  Word out(message.begin(), message.end());
  const Word par = parity(message);
  out.insert(out.end(), par.begin(), par.end());
  return out;
}

Word HammingCode::syndrome(std::span<const Symbol> word) const {
  if (word.size() != length()) throw InvalidInput("Hamming word has wrong length");
  Word s(r_, 0);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] >= p_) throw InvalidInput("digit outside GF(p)");
    for (std::size_t row = 0; row < r_; ++row) {
      s[row] = static_cast<Symbol>((s[row] + word[i] * position_columns_[i][row]) % p_);
    }
  }
  return s;
}

Word HammingCode::correct(std::span<const Symbol> word, std::span<const Symbol> coset_syndrome) const {
  Word diff = syndrome(word);
  if (!coset_syndrome.empty()) {
    if (coset_syndrome.size() != r_) throw InvalidInput("coset syndrome has wrong length");
    for (std::size_t row = 0; row < r_; ++row) {
      diff[row] = static_cast<Symbol>((diff[row] + p_ - coset_syndrome[row] % p_) % p_);
    }
  }
  Word out(word.begin(), word.end());
  auto top = std::find_if(diff.begin(), diff.end(), [](Symbol s) { return s != 0; });
  if (top == diff.end()) return out;

  const int magnitude = *top;
  const int inv = inverse_mod(magnitude, p_);
  for (auto& d : diff) d = static_cast<Symbol>(d * inv % p_);
  auto hit = std::find(position_columns_.begin(), position_columns_.end(), diff);
  if (hit == position_columns_.end()) throw UncorrectableSyndrome("syndrome matches no column");
  const auto pos = static_cast<std::size_t>(hit - position_columns_.begin());
  out[pos] = static_cast<Symbol>((out[pos] + p_ - magnitude) % p_);
  return out;
}

}  // namespace labelcode
