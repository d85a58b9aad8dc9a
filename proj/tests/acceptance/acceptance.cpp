// Acceptance runner: `acceptance` checks every criterion, `acceptance N ...`
// only the listed ones. One PASS/FAIL line per criterion; exit 1 on any FAIL.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "labelcode/all_labels_code.hpp"
#include "labelcode/bounds.hpp"
#include "labelcode/digits.hpp"
#include "labelcode/errors.hpp"
#include "labelcode/hamming.hpp"
#include "labelcode/labeling.hpp"
#include "labelcode/oracle.hpp"
#include "labelcode/search.hpp"
#include "labelcode/systematic.hpp"
#include "labelcode/tenengolts.hpp"
#include "labelcode/vt.hpp"
#include "labelcode/zero_indel.hpp"
#include "oracles.hpp"

using namespace labelcode;

namespace {

// Collects failed checks with a short reason each.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    failed_ = failed_ || !ok;
  }
  bool ok() const { return !failed_; }
  std::string reasons() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
    return out;
  }

 private:
  bool failed_ = false;
  std::vector<std::string> failures_;
};

std::string str(const Rational& r) {
  std::ostringstream s;
  s << r;
  return s.str();
}

LabelSet custom_dna(std::vector<std::string> labels) {
  std::vector<Word> words;
  for (const auto& l : labels) words.push_back(dna(l));
  return LabelSet::custom(4, std::move(words));
}

void criterion_1(Checks& c) {
  c.expect(render_labeling(label_word(dna("ACGTATAGACAC"), custom_dna({"AC"}))) == "100000001010", "label {AC}");
  c.expect(render_labeling(label_word(dna("ACGTATAGACAC"), custom_dna({"AC", "T"}))) == "100202001010",
           "label {AC,T}");
  c.expect(render_labeling(label_word(dna("TAGCCAACCCG"), custom_dna({"A", "CC"}))) == "01020112200",
           "label {A,CC}");
  c.expect(base_convert(7, 11, 4, 2).str() == "13", "7 base 11 -> 4");
  c.expect(phi(4) == 10, "phi(4)");
}

void criterion_2(Checks& c) {
  struct Case {
    int q;
    LabelSet set;
  };
  const std::vector<Case> cases{{4, LabelSet::minimal_dna()}, {2, LabelSet::all_labels(2)}, {3, LabelSet::all_labels(3)}};
  const FlankConvention flanks{0, 0};
  for (const auto& [q, set] : cases) {
    for (std::size_t n = 1; n <= 8; ++n) {
      std::uint64_t failures = 0;
      for_each_word(q, n, [&](const Word& x) {
        const auto inv = try_invert_labeling(label_framed(x, set, flanks), set, flanks);
        if (!inv.ok() || inv.word != x) ++failures;
      });
      c.expect(failures == 0, "q=" + std::to_string(q) + " n=" + std::to_string(n) + ": " +
                                  std::to_string(failures) + " reconstruction failures");
    }
  }
}

void criterion_3(Checks& c) {
  for (std::size_t k = 2; k <= 6; ++k) {
    std::size_t w = 0;
    while ((std::size_t{1} << (2 * w)) < k) ++w;
    c.expect(E1Layout::for_data_length(k).n() == k + 4 + w, "layout k=" + std::to_string(k));
    c.expect(e1_encode(Word(k, 0)).size() == k + 4 + w, "codeword length k=" + std::to_string(k));
    const auto report = exhaustive_decoder_check(DecoderScheme::E1, {k});
    c.expect(report.pass(), report.summary());
  }
}

void criterion_4(Checks& c) {
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto report = exhaustive_decoder_check(DecoderScheme::E2, {k});
    c.expect(report.pass(), report.summary());
  }
}

void criterion_5(Checks& c) {
  for (int q = 2; q <= 4; ++q) {
    for (std::size_t n = 1; n <= 7; ++n) {
      const auto code = build_all_labels_deletion_code(q, n, 0);
      const auto set = code.params.label_set();
      const std::string tag = "q=" + std::to_string(q) + " n=" + std::to_string(n);
      c.expect(is_labeling_code(code.codebook, set, code.params.flanks, {0, 0, 1}).pass(), tag + " deletion");
      c.expect(is_labeling_code(code.codebook, set, code.params.flanks, {0, 1, 0}).pass(), tag + " insertion");
      c.expect(Rational(BigInt(code.codebook.size())) >= lower_bound_size(n, q),
               tag + " size " + std::to_string(code.codebook.size()) + " below " + str(lower_bound_size(n, q)));
    }
  }
}

void criterion_6(Checks& c) {
  for (int q = 2; q <= 4; ++q) {
    for (std::size_t m = 1; m <= 10; ++m) {
      std::uint64_t failures = 0;
      for_each_word(q, m, [&](const Word& t) {
        const auto profile = zero_profile(t);
        const ZeroIndelParams p{m, profile.weight, profile.index_sum % (profile.weight + 1), q};
        Word y;
        for (std::size_t i = 0; i <= m; ++i) {
          // Insert a zero at i (skipping duplicates inside a zero run).
          if (i > 0 && t[i - 1] == 0) continue;
          y.assign(t.begin(), t.end());
          y.insert(y.begin() + static_cast<std::ptrdiff_t>(i), 0);
          try {
            if (zero_indel_decode(y, p) != t) ++failures;
          } catch (const Error&) {
            ++failures;
          }
        }
        for (std::size_t i = 0; i < m; ++i) {
          if (t[i] != 0 || (i > 0 && t[i - 1] == 0)) continue;
          y.assign(t.begin(), t.end());
          y.erase(y.begin() + static_cast<std::ptrdiff_t>(i));
          try {
            if (zero_indel_decode(y, p) != t) ++failures;
          } catch (const Error&) {
            ++failures;
          }
        }
      });
      const std::string tag = "q=" + std::to_string(q) + " m=" + std::to_string(m);
      c.expect(failures == 0, tag + ": " + std::to_string(failures) + " zero-indel failures");

      const auto u = zero_indel_union(m, q);
      BigInt binom = 1;
      for (std::size_t w = 0; w <= m; ++w) {
        if (w > 0) binom = binom * (m - w + 1) / w;
        const Rational floor(boost::multiprecision::pow(BigInt(q - 1), static_cast<unsigned>(w)) * binom,
                             BigInt(w + 1));
        c.expect(Rational(u.class_size[w]) >= floor, tag + " w=" + std::to_string(w) + " best class too small");
      }
    }
  }
}

void criterion_7(Checks& c) {
  const auto b = upper_bound_zero_deletion(10, 2);
  c.expect(b.transversal_sum == Rational(BigInt(4629), BigInt(20)), "m=10 q=2 sum is " + str(b.transversal_sum));
  c.expect(b.binary_closed_form && *b.binary_closed_form == 512 && b.transversal_sum <= 512, "closed form 512");
  for (int q = 2; q <= 4; ++q) {
    for (std::size_t m = 2; m <= 8; ++m) {
      Rational brute = 0;
      for (const auto& x : oracles::all_words(q, m - 1)) {
        const auto z = oracles::zero_runs(x);
        if (z > 0) brute += Rational(BigInt(1), BigInt(z));
      }
      c.expect(brute == upper_bound_zero_deletion(m, q).transversal_sum,
               "brute sum differs at q=" + std::to_string(q) + " m=" + std::to_string(m));
    }
  }
  for (std::size_t m = 1; m <= 8; ++m) c.expect(fractional_transversal_check(m, 2), "transversal q=2 m=" + std::to_string(m));
  for (std::size_t m = 1; m <= 6; ++m) c.expect(fractional_transversal_check(m, 3), "transversal q=3 m=" + std::to_string(m));
}

void criterion_8(Checks& c) {
  const std::vector<std::size_t> ns{20, 50, 100, 200};
  for (const auto& row : redundancy_gap_table(4, ns)) {
    std::ostringstream tag;
    tag << "n=" << row.n << " gap=" << row.gap;
    c.expect(row.lower <= row.upper && row.gap >= 0.5 && row.gap <= 1.5, tag.str());
  }
}

void criterion_9(Checks& c) {
  auto book = vt_codebook({4, 0});
  std::sort(book.begin(), book.end());
  c.expect(book == std::vector<Word>{{0, 0, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}, {1, 1, 1, 1}}, "VT_0(4)");

  std::uint64_t vt_failures = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t a = 0; a <= n; ++a) {
      for (const auto& x : vt_codebook({n, a})) {
        auto outputs = oracles::single_deletions(x);
        const auto ins = oracles::single_insertions(x, 2);
        outputs.insert(ins.begin(), ins.end());
        for (const auto& y : outputs) {
          try {
            vt_failures += vt_decode_indel(y, {n, a}) == x ? 0 : 1;
          } catch (const Error&) {
            ++vt_failures;
          }
        }
      }
    }
  }
  c.expect(vt_failures == 0, std::to_string(vt_failures) + " VT failures");

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> symbol(0, 10);
  std::uint64_t ten_failures = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 500; ++trial) {
      Word x(n);
      for (auto& s : x) s = static_cast<Symbol>(symbol(rng));
      const auto p = tenengolts_class_of(x, 11);
      auto outputs = oracles::single_deletions(x);
      const auto ins = oracles::single_insertions(x, 11);
      outputs.insert(ins.begin(), ins.end());
      for (const auto& y : outputs) {
        try {
          ten_failures += tenengolts_decode(y, p) == x ? 0 : 1;
        } catch (const Error&) {
          ++ten_failures;
        }
      }
    }
  }
  c.expect(ten_failures == 0, std::to_string(ten_failures) + " Tenengolts failures");

  std::uint64_t ham_failures = 0;
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto code = HammingCode::for_message_length(11, k);
    for (int trial = 0; trial < 300; ++trial) {
      Word m(k);
      for (auto& s : m) s = static_cast<Symbol>(symbol(rng));
      const Word cw = code.encode(m);
      for (const auto& y : oracles::single_substitutions(cw, 11)) {
        try {
          ham_failures += code.correct(y) == cw ? 0 : 1;
        } catch (const Error&) {
          ++ham_failures;
        }
      }
    }
  }
  c.expect(ham_failures == 0, std::to_string(ham_failures) + " Hamming failures");
}

void criterion_10(Checks& c) {
  const auto s = LabelSet::minimal_dna();
  for (std::size_t n = 4; n <= 6; ++n) {
    const auto found = search_tenengolts_labeling_code(n, s);
    const std::uint64_t floor_num = std::uint64_t{1} << (2 * n);
    c.expect(found.size * 11 * n >= floor_num,
             "Tenengolts n=" + std::to_string(n) + " size " + std::to_string(found.size));
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto found = search_hamming_coset(n, s);
    const auto book = hamming_coset_codebook(found, s);
    const auto report = is_labeling_code(book, s, {}, {1, 0, 0});
    c.expect(!book.empty() && report.pass(), "coset n=" + std::to_string(n) + ": " + report.summary());
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Checks&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "labeling example regressions", 1, criterion_1},
      {2, "reconstruction round trip", 60, criterion_2},
      {3, "E1 corrects every single indel, k=2..6", 300, criterion_3},
      {4, "E2 corrects every single substitution, k=2..6", 300, criterion_4},
      {5, "all-labels single-deletion code, q=2..4, n<=7", 300, criterion_5},
      {6, "zero-indel classes, m<=10, q<=4", 300, criterion_6},
      {7, "fractional-transversal upper bound", 120, criterion_7},
      {8, "redundancy gap for q=4", 1, criterion_8},
      {9, "classical primitives", 300, criterion_9},
      {10, "Tenengolts and Hamming-coset searches", 600, criterion_10},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  bool all_pass = true;
  for (const auto& criterion : criteria()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), criterion.id) == selected.end()) continue;
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(checks);
    } catch (const std::exception& e) {
      checks.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    checks.expect(seconds < criterion.limit_seconds, "time limit exceeded");
    std::cout << "criterion " << criterion.id << ": " << (checks.ok() ? "PASS" : "FAIL") << "  " << criterion.title
              << "  (" << seconds << " s)";
    if (!checks.ok()) std::cout << "  " << checks.reasons();
    std::cout << std::endl;
    all_pass = all_pass && checks.ok();
  }
  return all_pass ? 0 : 1;
}
