#include "labelcode/vt.hpp"

#include <algorithm>
#include <string>

#include "labelcode/errors.hpp"

namespace labelcode {

namespace {

void require_binary(std::span<const Symbol> x) {
  for (Symbol s : x) {
    if (s > 1) throw InvalidInput("VT words are binary");
  }
}

std::size_t weight(std::span<const Symbol> x) {
  return static_cast<std::size_t>(std::count(x.begin(), x.end(), Symbol{1}));
}

}  // namespace

void VtParams::validate() const {
  if (a > n) throw InvalidInput("VT residue " + std::to_string(a) + " outside 0.." + std::to_string(n));
}

std::size_t vt_syndrome(std::span<const Symbol> x, std::size_t modulus) {
  if (modulus == 0) throw InvalidInput("zero modulus");
  std::size_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s = (s + (i + 1) * x[i]) % modulus;
  return s;
}

std::size_t vt_syndrome(std::span<const Symbol> x) { return vt_syndrome(x, x.size() + 1); }

bool vt_member(std::span<const Symbol> x, const VtParams& params) {
  params.validate();
  require_binary(x);
  return x.size() == params.n && vt_syndrome(x, params.n + 1) == params.a;
}

Word vt_decode_indel(std::span<const Symbol> y, const VtParams& params) {
  params.validate();
  require_binary(y);
  const std::size_t n = params.n;
  const std::size_t mod = n + 1;
  const std::size_t w = weight(y);
  const std::size_t s = vt_syndrome(y, mod);
  Word x;

  if (y.size() == n) {
    if (vt_member(y, params)) return Word(y.begin(), y.end());
    throw NoCodeword("length-n input is not a VT codeword");
  }

  if (y.size() + 1 == n) {
    // Deletion: restore the syndrome deficit.
    const std::size_t deficit = (params.a + mod - s) % mod;
    x.assign(y.begin(), y.end());
    if (deficit <= w) {
      // A 0 with exactly `deficit` ones to its right.
      std::size_t ones_right = 0;
      std::size_t pos = y.size();
      while (ones_right < deficit) {
        --pos;
        ones_right += y[pos];
      }
      x.insert(x.begin() + static_cast<std::ptrdiff_t>(pos), Symbol{0});
    } else {
      // A 1 with exactly deficit - w - 1 zeros to its left.
      const std::size_t zeros_left = deficit - w - 1;
      std::size_t seen = 0;
      std::size_t pos = 0;
      while (seen < zeros_left) {
        if (pos >= y.size()) throw NoCodeword("inconsistent VT deficit");
        seen += y[pos] == 0 ? 1 : 0;
        ++pos;
      }
      x.insert(x.begin() + static_cast<std::ptrdiff_t>(pos), Symbol{1});
    }
  } else if (y.size() == n + 1) {
    // Insertion: the syndrome excess identifies the extra symbol.
    const std::size_t excess = (s + mod - params.a) % mod;
    x.assign(y.begin(), y.end());
    std::size_t drop = y.size();
    if (excess == 0) {
      drop = y.size() - 1;
    } else if (excess < w) {
      std::size_t ones_right = 0;
      for (std::size_t i = y.size(); i > 0; --i) {
        if (y[i - 1] == 1) {
          ++ones_right;
        } else if (ones_right == excess) {
          drop = i - 1;
          break;
        }
      }
    } else if (excess == w) {
      drop = 0;
    } else {
      const std::size_t zeros_left = excess - w;
      std::size_t zeros = 0;
      for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == 0) {
          ++zeros;
        } else if (zeros == zeros_left) {
          drop = i;
          break;
        }
      }
    }
    if (drop >= y.size()) throw NoCodeword("no VT codeword within one insertion");
    x.erase(x.begin() + static_cast<std::ptrdiff_t>(drop));
  } else {
    throw NoCodeword("input length " + std::to_string(y.size()) + " is not within one indel of " +
                     std::to_string(n));
  }

  if (!vt_member(x, params)) throw NoCodeword("VT decoding did not reach a codeword");
  return x;
}

std::vector<Word> vt_codebook(const VtParams& params) {
  params.validate();
  std::vector<Word> book;
  for_each_word(2, params.n, [&](const Word& x) {
    if (vt_syndrome(x, params.n + 1) == params.a) book.push_back(x);
  });
  return book;
}

}  // namespace labelcode
