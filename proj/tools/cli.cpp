#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "labelcode/all_labels_code.hpp"
#include "labelcode/bounds.hpp"
#include "labelcode/digits.hpp"
#include "labelcode/errors.hpp"
#include "labelcode/oracle.hpp"
#include "labelcode/search.hpp"
#include "labelcode/systematic.hpp"

namespace labelcode::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string in_path;
  std::string out_path;
  std::string format = "text";
  std::string set = "minimal";
  std::string labels;
  std::string flank;
  int q = 4;
  bool standalone = false;
  bool strict = false;
  bool labeling_input = false;
  bool no_fallback = false;
  std::string scheme;
  std::string family;
  std::string target;
  std::string errors = "0,0,1";
  std::uint64_t seed = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t n_min = 1;
  std::size_t n_max = 1;
  std::size_t k_min = 0;
  std::size_t k_max = 0;
};

// Raised for bad flags or malformed input; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string line) {
  const auto last = line.find_last_not_of(" \t\r\n");
  if (last == std::string::npos) return {};
  const auto first = line.find_first_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

Alphabet alphabet(const Options& o) { return Alphabet(o.q); }

LabelSet label_set(const Options& o) {
  if (!o.labels.empty()) {
    std::vector<Word> words;
    std::stringstream list(o.labels);
    std::string item;
    while (std::getline(list, item, ',')) words.push_back(alphabet(o).parse(trim(item)));
    return LabelSet::custom(o.q, std::move(words));
  }
  if (o.set == "minimal") {
    if (o.q != 4) throw UsageError("--set minimal requires --q 4");
    return LabelSet::minimal_dna();
  }
  if (o.set == "all") return LabelSet::all_labels(o.q);
  throw UsageError("unknown label set '" + o.set + "'");
}

FlankConvention flanks(const Options& o) {
  if (o.flank.empty()) return {};
  if (o.flank.size() > 2) throw UsageError("--flank takes one or two symbols");
  const auto a = alphabet(o);
  return {a.parse(o.flank.front()), a.parse(o.flank.back())};
}

ErrorSpec parse_errors(const std::string& text) {
  std::stringstream list(text);
  std::vector<std::size_t> parts;
  std::string item;
  while (std::getline(list, item, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      parts.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("--errors expects e1,e2,e3 nonnegative integers");
    }
  }
  if (parts.size() != 3) throw UsageError("--errors expects three comma-separated counts");
  return {parts[0], parts[1], parts[2]};
}

std::string rational_str(const Rational& r) {
  std::ostringstream s;
  s << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) s << '/' << boost::multiprecision::denominator(r);
  return s.str();
}

std::string decimal_str(const Rational& r) {
  std::ostringstream s;
  s << std::setprecision(12) << r.convert_to<double>();
  return s.str();
}

void require_format(const Options& o) {
  if (o.format != "text" && o.format != "tsv" && o.format != "json") {
    throw UsageError("--format must be text, tsv or json");
  }
}

class Session {
 public:
  Session(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) : o_(o), err_(err) {
    if (!o.in_path.empty()) {
      file_in_.open(o.in_path);
      if (!file_in_) throw UsageError("cannot open " + o.in_path);
    }
    if (!o.out_path.empty()) {
      file_out_.open(o.out_path);
      if (!file_out_) throw UsageError("cannot open " + o.out_path);
    }
    in_ = o.in_path.empty() ? &in : &file_in_;
    out_ = o.out_path.empty() ? &out : &file_out_;
  }

  std::ostream& out() { return *out_; }

  // Feeds each nonblank line to fn. Input errors abort with exit 2; decode
  // failures print the sentinel (or stop under --strict) and yield exit 1.
  template <class Fn>
  int for_each_line(Fn&& fn) {
    std::string raw;
    std::size_t line_no = 0;
    int status = kExitOk;
    while (std::getline(*in_, raw)) {
      ++line_no;
      const std::string line = trim(raw);
      if (line.empty()) continue;
      try {
        out() << fn(line, line_no) << '\n';
      } catch (const InvalidInput& e) {
        err_ << "line " << line_no << ": " << e.what() << '\n';
        return kExitInvalid;
      } catch (const Error& e) {
        err_ << "line " << line_no << ": " << e.what() << '\n';
        if (o_.strict) return kExitDecodeFailure;
        out() << kDecodeFailSentinel << '\n';
        status = kExitDecodeFailure;
      }
    }
    return status;
  }

 private:
  const Options& o_;
  std::ostream& err_;
  std::ifstream file_in_;
  std::ofstream file_out_;
  std::istream* in_ = nullptr;
  std::ostream* out_ = nullptr;
};

int cmd_label(const Options& o, Session& s) {
  const auto labels = label_set(o);
  const auto f = flanks(o);
  const auto a = alphabet(o);
  return s.for_each_line([&](const std::string& line, std::size_t) {
    const Word x = a.parse(line);
    return render_labeling(o.standalone ? label_word(x, labels) : label_framed(x, labels, f));
  });
}

int cmd_unlabel(const Options& o, Session& s) {
  const auto labels = label_set(o);
  const auto f = flanks(o);
  const auto a = alphabet(o);
  return s.for_each_line([&](const std::string& line, std::size_t) {
    return a.render(invert_labeling(parse_labeling(line), labels, f));
  });
}

int cmd_encode(const Options& o, Session& s) {
  if (o.q != 4) throw UsageError("systematic encoders work over ACGT (--q 4)");
  const auto f = flanks(o);
  if (o.scheme != "e1" && o.scheme != "e2") throw UsageError("--scheme must be e1 or e2");
  return s.for_each_line([&](const std::string& line, std::size_t) {
    const Word x = dna(line);
    return dna_string(o.scheme == "e1" ? e1_encode(x, f) : e2_encode(x, f));
  });
}

int cmd_decode(const Options& o, Session& s) {
  const auto f = flanks(o);
  if (o.scheme == "e1" || o.scheme == "e2") {
    if (o.q != 4) throw UsageError("systematic decoders work over ACGT (--q 4)");
    if (o.k == 0) throw UsageError("--k is required for --scheme " + o.scheme);
    if (o.scheme == "e1") {
      const auto layout = E1Layout::for_data_length(o.k);
      return s.for_each_line([&](const std::string& line, std::size_t) {
        return dna_string(e1_decode(parse_labeling(line), layout, f));
      });
    }
    const auto layout = E2Layout::for_data_length(o.k);
    return s.for_each_line([&](const std::string& line, std::size_t) {
      return dna_string(e2_decode(parse_labeling(line), layout, f));
    });
  }
  if (o.scheme == "all-labels-del") {
    if (o.n == 0) throw UsageError("--n is required for --scheme all-labels-del");
    const auto code = build_all_labels_deletion_code(o.q, o.n, f.left, CodebookMode::Formula);
    const auto a = alphabet(o);
    return s.for_each_line([&](const std::string& line, std::size_t) {
      return a.render(decode_all_labels_deletion(parse_labeling(line), code.params));
    });
  }
  throw UsageError("--scheme must be e1, e2 or all-labels-del");
}

int cmd_simulate(const Options& o, Session& s) {
  const ErrorSpec e = parse_errors(o.errors);
  const auto labels = label_set(o);
  const auto f = flanks(o);
  const auto a = alphabet(o);
  const int sigma = labels.labeling_alphabet_size();
  return s.for_each_line([&](const std::string& line, std::size_t line_no) {
    const LabelingWord u = o.labeling_input ? parse_labeling(line) : label_framed(a.parse(line), labels, f);
    return render_labeling(simulate_channel(u, e, o.seed + line_no - 1, sigma));
  });
}

int cmd_bounds(const Options& o, Session& s) {
  require_format(o);
  if (o.n_min < 1 || o.n_max < o.n_min) throw UsageError("need 1 <= --n-min <= --n-max");
  std::vector<std::size_t> ns;
  for (std::size_t n = o.n_min; n <= o.n_max; ++n) ns.push_back(n);
  const auto rows = redundancy_gap_table(o.q, ns);
  auto& out = s.out();
  if (o.format == "json") {
    json records = json::array();
    for (const auto& r : rows) {
      records.push_back({{"q", r.q},
                         {"n", r.n},
                         {"lower", rational_str(r.lower)},
                         {"lower_decimal", r.lower.convert_to<double>()},
                         {"upper", rational_str(r.upper)},
                         {"upper_decimal", r.upper.convert_to<double>()},
                         {"gap", r.gap}});
    }
    out << records.dump(2) << '\n';
    return kExitOk;
  }
  const char* sep = o.format == "tsv" ? "\t" : "  ";
  out << "n" << sep << "lower" << sep << "lower_decimal" << sep << "upper" << sep << "upper_decimal" << sep
      << "gap\n";
  for (const auto& r : rows) {
    out << r.n << sep << rational_str(r.lower) << sep << decimal_str(r.lower) << sep << rational_str(r.upper) << sep
        << decimal_str(r.upper) << sep << std::setprecision(6) << r.gap << '\n';
  }
  return kExitOk;
}

int cmd_search(const Options& o, Session& s) {
  require_format(o);
  if (o.n == 0) throw UsageError("--n is required");
  const auto labels = label_set(o);
  const auto f = flanks(o);
  json record;
  if (o.family == "tenengolts") {
    const auto r = search_tenengolts_labeling_code(o.n, labels, f);
    record = {{"family", o.family}, {"n", r.n},       {"p", r.p},
              {"a", r.a},           {"b", r.b},       {"size", r.size},
              {"valid_labelings", r.valid_labelings}, {"classes", r.histogram.size()}};
  } else if (o.family == "hamming-coset") {
    const auto r = search_hamming_coset(o.n, labels, 11, f);
    DigitString syndrome{r.p, r.syndrome};
    record = {{"family", o.family}, {"n", r.n},       {"p", r.p},
              {"r", r.r},           {"syndrome", syndrome.str()},
              {"size", r.size},     {"valid_labelings", r.valid_labelings}, {"cosets", r.histogram.size()}};
  } else {
    throw UsageError("--family must be tenengolts or hamming-coset");
  }
  auto& out = s.out();
  if (o.format == "json") {
    out << record.dump(2) << '\n';
    return kExitOk;
  }
  bool first = true;
  for (const auto& [key, value] : record.items()) {
    if (o.format == "tsv") {
      out << (first ? "" : "\t") << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
    } else {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    first = false;
  }
  if (o.format == "tsv") out << '\n';
  return kExitOk;
}

json report_json(const VerificationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"first", render_labeling(v.first)},
                          {"second", render_labeling(v.second)},
                          {"output", render_labeling(v.output)},
                          {"detail", v.detail}});
  }
  return {{"target", r.target},
          {"params", r.params},
          {"pass", r.pass()},
          {"words_checked", r.words_checked},
          {"channel_outputs", r.channel_outputs},
          {"violation_count", r.violation_count},
          {"violations", violations},
          {"wall_seconds", r.wall_seconds}};
}

int cmd_verify(const Options& o, Session& s) {
  require_format(o);
  if (o.k_max == 0) throw UsageError("--k-max is required");
  std::vector<VerificationReport> reports;
  if (o.target == "transversal") {
    for (std::size_t m = std::max<std::size_t>(o.k_min, 1); m <= o.k_max; ++m) {
      const auto t = fractional_transversal_report(m, o.q);
      VerificationReport r;
      r.target = o.target;
      r.params = "m=" + std::to_string(m) + " q=" + std::to_string(o.q);
      r.words_checked = t.balls;
      r.violation_count = t.size_mismatches + t.monotonicity_violations + t.undercovered;
      reports.push_back(std::move(r));
    }
  } else {
    const auto scheme = parse_scheme(o.target);
    if (!scheme) throw UsageError("--target must be e1, e2, all-labels-del, tenengolts, coset or transversal");
    const bool systematic = *scheme == DecoderScheme::E1 || *scheme == DecoderScheme::E2;
    const bool needs_two = systematic || *scheme == DecoderScheme::Coset;
    const std::size_t lo = std::max<std::size_t>(o.k_min, needs_two ? 2 : 1);
    for (std::size_t k = lo; k <= o.k_max; ++k) {
      DecoderCheckParams p{k, o.q, flanks(o), !o.no_fallback};
      if (*scheme != DecoderScheme::AllLabelsDeletion && o.q != 4) throw UsageError("this target needs --q 4");
      auto r = exhaustive_decoder_check(*scheme, p);
      if (*scheme == DecoderScheme::AllLabelsDeletion) r.params += " q=" + std::to_string(o.q);
      reports.push_back(std::move(r));
    }
  }
  bool pass = true;
  auto& out = s.out();
  json all = json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass();
    if (o.format == "json") {
      all.push_back(report_json(r));
    } else if (o.format == "tsv") {
      out << r.target << '\t' << r.params << '\t' << (r.pass() ? "pass" : "fail") << '\t' << r.words_checked << '\t'
          << r.violation_count << '\t' << r.wall_seconds << '\n';
    } else {
      out << r.summary() << '\n';
      for (const auto& v : r.violations) {
        out << "  " << v.detail << ": " << render_labeling(v.first) << " / " << render_labeling(v.second) << " via "
            << render_labeling(v.output) << '\n';
      }
    }
  }
  if (o.format == "json") out << all.dump(2) << '\n';
  return pass ? kExitOk : kExitDecodeFailure;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Labeling-channel codes for DNA sequences", "labelcode"};
  app.require_subcommand(1);

  auto io = [&](CLI::App* sub) {
    sub->add_option("--in", o.in_path, "Read input lines from PATH");
    sub->add_option("--out", o.out_path, "Write output to PATH");
  };
  auto labeling = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "Alphabet size")->check(CLI::Range(2, 36));
    sub->add_option("--set", o.set, "Label set: minimal or all");
    sub->add_option("--labels", o.labels, "Custom comma-separated label set");
    sub->add_option("--flank", o.flank, "Flank symbols: one for both sides, or left then right");
  };
  auto format = [&](CLI::App* sub) { sub->add_option("--format", o.format, "text, tsv or json"); };

  auto* label = app.add_subcommand("label", "Label each word");
  io(label);
  labeling(label);
  label->add_flag("--standalone", o.standalone, "Unframed labeling");

  auto* unlabel = app.add_subcommand("unlabel", "Reconstruct each word from its framed labeling");
  io(unlabel);
  labeling(unlabel);
  unlabel->add_flag("--strict", o.strict, "Stop at the first failure");

  auto* encode = app.add_subcommand("encode", "Systematic encoding");
  io(encode);
  labeling(encode);
  encode->add_option("--scheme", o.scheme, "e1 or e2")->required();

  auto* decode = app.add_subcommand("decode", "Decode corrupted labelings");
  io(decode);
  labeling(decode);
  decode->add_option("--scheme", o.scheme, "e1, e2 or all-labels-del")->required();
  decode->add_option("--k", o.k, "Data length (e1, e2)");
  decode->add_option("--n", o.n, "Word length (all-labels-del)");
  decode->add_flag("--strict", o.strict, "Stop at the first failure");

  auto* bounds = app.add_subcommand("bounds", "Lower and upper bound table");
  io(bounds);
  format(bounds);
  bounds->add_option("--q", o.q, "Alphabet size")->check(CLI::Range(2, 1 << 16));
  bounds->add_option("--n-min", o.n_min)->required();
  bounds->add_option("--n-max", o.n_max)->required();

  auto* search = app.add_subcommand("search", "Best labeling class by exhaustive search");
  io(search);
  labeling(search);
  format(search);
  search->add_option("--family", o.family, "tenengolts or hamming-coset")->required();
  search->add_option("--n", o.n)->required();

  auto* verify = app.add_subcommand("verify", "Exhaustive decoder and bound checks");
  io(verify);
  labeling(verify);
  format(verify);
  verify->add_option("--target", o.target, "e1, e2, all-labels-del, tenengolts, coset, transversal")->required();
  verify->add_option("--k-min", o.k_min);
  verify->add_option("--k-max", o.k_max)->required();
  verify->add_flag("--no-fallback", o.no_fallback, "Skip fast/fallback agreement");

  auto* simulate = app.add_subcommand("simulate", "Seeded labeling channel");
  io(simulate);
  labeling(simulate);
  simulate->add_option("--errors", o.errors, "substitutions,insertions,deletions");
  simulate->add_option("--seed", o.seed);
  simulate->add_flag("--labeling-input", o.labeling_input, "Input lines are labelings, not words");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    Session session(o, in, out, err);
    if (label->parsed()) return cmd_label(o, session);
    if (unlabel->parsed()) return cmd_unlabel(o, session);
    if (encode->parsed()) return cmd_encode(o, session);
    if (decode->parsed()) return cmd_decode(o, session);
    if (bounds->parsed()) return cmd_bounds(o, session);
    if (search->parsed()) return cmd_search(o, session);
    if (verify->parsed()) return cmd_verify(o, session);
    if (simulate->parsed()) return cmd_simulate(o, session);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDecodeFailure;
  }
  return kExitInvalid;
}

}  // namespace labelcode::cli
