#include "labelcode/word.hpp"

#include <limits>
#include <string>

#include "labelcode/errors.hpp"

namespace labelcode {

namespace {

constexpr std::string_view kDnaLetters = "ACGT";
constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

}  // namespace

Alphabet::Alphabet(int q) : q_(q) {
  if (q < 2) throw InvalidInput("alphabet size must be at least 2, got " + std::to_string(q));
  if (q > std::numeric_limits<Symbol>::max()) throw InvalidInput("alphabet size too large");
}

void Alphabet::validate(std::span<const Symbol> w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= q_) {
      throw InvalidInput("symbol " + std::to_string(w[i]) + " at position " + std::to_string(i + 1) +
                         " outside alphabet of size " + std::to_string(q_));
    }
  }
}

char Alphabet::render(Symbol s) const {
  if (s >= q_) throw InvalidInput("symbol outside alphabet");
  if (q_ == 4) return kDnaLetters[s];
  if (s >= kDigits.size()) throw InvalidInput("symbol has no single-character rendering");
  return kDigits[s];
}

Symbol Alphabet::parse(char c) const {
  int v = -1;
  if (q_ == 4) {
    auto pos = kDnaLetters.find(c);
    if (pos != std::string_view::npos) v = static_cast<int>(pos);
  } else {
    v = digit_value(c);
  }
  if (v < 0 || v >= q_) {
    throw InvalidInput(std::string("character '") + c + "' is not a symbol of the alphabet of size " +
                       std::to_string(q_));
  }
  return static_cast<Symbol>(v);
}

std::string Alphabet::render(std::span<const Symbol> w) const {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(render(s));
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  w.reserve(text.size());
  for (char c : text) w.push_back(parse(c));
  return w;
}

std::string render_labeling(std::span<const Symbol> u) {
  std::string out;
  out.reserve(u.size());
  for (Symbol s : u) {
    if (s >= kDigits.size()) throw InvalidInput("labeling symbol too large to render");
    out.push_back(kDigits[s]);
  }
  return out;
}

LabelingWord parse_labeling(std::string_view text) {
  LabelingWord u;
  u.reserve(text.size());
  for (char c : text) {
    if (c >= 'A' && c <= 'Z') throw InvalidInput("labeling digits are lowercase");
    int v = digit_value(c);
    if (v < 0) throw InvalidInput(std::string("invalid labeling digit '") + c + "'");
    u.push_back(static_cast<Symbol>(v));
  }
  return u;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw BudgetExceeded("enumeration size overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

}  // namespace labelcode
