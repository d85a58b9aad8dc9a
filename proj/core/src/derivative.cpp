#include "labelcode/derivative.hpp"

#include "labelcode/errors.hpp"

namespace labelcode {

Word derivative(std::span<const Symbol> x, int q) {
  Alphabet(q).validate(x);
  Word d(x.size());
  Symbol prev = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    d[i] = static_cast<Symbol>((x[i] + q - prev) % q);
    prev = x[i];
  }
  return d;
}

Word integrate(std::span<const Symbol> d, int q) {
  Alphabet(q).validate(d);
  Word x(d.size());
  int acc = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    acc = (acc + d[i]) % q;
    x[i] = static_cast<Symbol>(acc);
  }
  return x;
}

Word signature(std::span<const Symbol> x) {
  if (x.empty()) throw InvalidInput("signature of an empty word");
  Word s(x.size() - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) s[i] = x[i + 1] >= x[i] ? 1 : 0;
  return s;
}

}  // namespace labelcode
