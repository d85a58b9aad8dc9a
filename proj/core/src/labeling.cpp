#include "labelcode/labeling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <unordered_set>

#include "labelcode/errors.hpp"

namespace labelcode {

namespace {

bool is_prefix(const Word& a, const Word& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

void require_length_two(const LabelSet& labels) {
  if (!labels.all_length_two()) {
    throw InvalidInput("framed labeling needs a set of length-two labels");
  }
}

}  // namespace

LabelSet::LabelSet(int q, LabelSetKind kind, std::vector<Word> labels)
    : q_(q), kind_(kind), labels_(std::move(labels)) {
  Alphabet alphabet(q);
  if (labels_.empty()) throw InvalidInput("label set is empty");
  for (const auto& label : labels_) {
    if (label.empty()) throw InvalidInput("empty label");
    alphabet.validate(label);
  }
  std::sort(labels_.begin(), labels_.end());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = 0; j < labels_.size(); ++j) {
      if (i != j && is_prefix(labels_[i], labels_[j])) {
        throw InvalidInput("label " + std::to_string(i + 1) + " is a prefix of label " + std::to_string(j + 1));
      }
    }
  }
  all_length_two_ = std::all_of(labels_.begin(), labels_.end(), [](const Word& w) { return w.size() == 2; });
  if (all_length_two_) {
    pair_index_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (std::size_t j = 0; j < labels_.size(); ++j) {
      pair_index_[labels_[j][0] * q_ + labels_[j][1]] = static_cast<Symbol>(j + 1);
    }
  }
}

LabelSet LabelSet::minimal_dna() {
  std::vector<Word> labels;
  for (const char* text : {"AC", "CA", "GA", "GC", "GG", "GT", "TA", "TC", "TG", "TT"}) {
    labels.push_back(dna(text));
  }
  return LabelSet(4, LabelSetKind::MinimalDna, std::move(labels));
}

LabelSet LabelSet::all_labels(int q) {
  Alphabet alphabet(q);
  std::vector<Word> labels;
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) labels.push_back({static_cast<Symbol>(a), static_cast<Symbol>(b)});
  }
  return LabelSet(q, LabelSetKind::AllLabels, std::move(labels));
}

LabelSet LabelSet::custom(int q, std::vector<Word> labels) {
  return LabelSet(q, LabelSetKind::Custom, std::move(labels));
}

int LabelSet::labeling_alphabet_size() const noexcept {
  if (kind_ == LabelSetKind::AllLabels) return q_ * q_;
  return static_cast<int>(labels_.size()) + 1;
}

Symbol LabelSet::index_of(Symbol a, Symbol b) const {
  require_length_two(*this);
  if (a >= q_ || b >= q_) throw InvalidInput("pair outside alphabet");
  return pair_index_[a * q_ + b];
}

Symbol LabelSet::pair_symbol(Symbol a, Symbol b) const {
  if (kind_ == LabelSetKind::AllLabels) {
    if (a >= q_ || b >= q_) throw InvalidInput("pair outside alphabet");
    return static_cast<Symbol>(a * q_ + b);
  }
  return index_of(a, b);
}

const Word& LabelSet::label(std::size_t index) const {
  if (index == 0 || index > labels_.size()) throw InvalidInput("label index out of range");
  return labels_[index - 1];
}

ZeroGraph::ZeroGraph(int q, std::vector<std::pair<Symbol, Symbol>> edges)
    : q_(q), edges_(std::move(edges)), adjacency_(static_cast<std::size_t>(q) * q, false) {
  Alphabet alphabet(q);
  for (auto [from, to] : edges_) {
    if (!alphabet.contains(from) || !alphabet.contains(to)) throw InvalidInput("edge outside vertex set");
    adjacency_[from * q_ + to] = true;
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

ZeroGraph ZeroGraph::of(const LabelSet& labels) {
  require_length_two(labels);
  std::vector<std::pair<Symbol, Symbol>> edges;
  const int q = labels.q();
  for (Symbol a = 0; a < q; ++a) {
    for (Symbol b = 0; b < q; ++b) {
      if (labels.index_of(a, b) == 0) edges.emplace_back(a, b);
    }
  }
  return ZeroGraph(q, std::move(edges));
}

bool ZeroGraph::has_edge(Symbol from, Symbol to) const {
  if (from >= q_ || to >= q_) return false;
  return adjacency_[from * q_ + to];
}

LabelingWord label_word(std::span<const Symbol> x, const LabelSet& labels) {
  Alphabet(labels.q()).validate(x);
  LabelingWord c(x.size(), 0);
  const auto& set = labels.labels();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < set.size(); ++j) {
      const Word& label = set[j];
      if (i + label.size() <= x.size() && std::equal(label.begin(), label.end(), x.begin() + i)) {
        c[i] = static_cast<Symbol>(j + 1);
        break;  // prefix-free: at most one label matches
      }
    }
  }
  return c;
}

LabelingWord label_framed(std::span<const Symbol> x, const LabelSet& labels, FlankConvention flanks) {
  require_length_two(labels);
  Alphabet alphabet(labels.q());
  alphabet.validate(x);
  if (!alphabet.contains(flanks.left) || !alphabet.contains(flanks.right)) {
    throw InvalidInput("flank symbol outside alphabet");
  }
  LabelingWord u;
  u.reserve(x.size() + 1);
  Symbol prev = flanks.left;
  for (Symbol s : x) {
    u.push_back(labels.pair_symbol(prev, s));
    prev = s;
  }
  u.push_back(labels.pair_symbol(prev, flanks.right));
  return u;
}

InversionResult try_invert_labeling(std::span<const Symbol> u, const LabelSet& labels, FlankConvention flanks) {
  require_length_two(labels);
  const int q = labels.q();
  if (flanks.left >= q || flanks.right >= q) throw InvalidInput("flank symbol outside alphabet");
  InversionResult result;
  if (u.empty()) return result;
  const int sigma = labels.labeling_alphabet_size();
  for (Symbol s : u) {
    if (s >= sigma) return result;
  }

  // counts[i*q + b]: completions x_0..x_i with x_i = b consistent with
  // u_1..u_i, capped at 2.
  const std::size_t steps = u.size();
  std::vector<std::uint8_t> counts((steps + 1) * q, 0);
  counts[flanks.left] = 1;
  for (std::size_t i = 1; i <= steps; ++i) {
    const Symbol want = u[i - 1];
    for (Symbol a = 0; a < q; ++a) {
      const std::uint8_t from = counts[(i - 1) * q + a];
      if (from == 0) continue;
      for (Symbol b = 0; b < q; ++b) {
        if (labels.pair_symbol(a, b) != want) continue;
        auto& to = counts[i * q + b];
        to = static_cast<std::uint8_t>(std::min(2, to + from));
      }
    }
  }
  const std::uint8_t total = counts[steps * q + flanks.right];
  if (total == 0) return result;
  if (total > 1) {
    result.status = InversionStatus::Ambiguous;
    return result;
  }

  // Walk back along the single surviving path.
  Word path(steps + 1);
  path[steps] = flanks.right;
  for (std::size_t i = steps; i > 0; --i) {
    const Symbol b = path[i];
    for (Symbol a = 0; a < q; ++a) {
      if (counts[(i - 1) * q + a] != 0 && labels.pair_symbol(a, b) == u[i - 1]) {
        path[i - 1] = a;
        break;
      }
    }
  }
  result.status = InversionStatus::Ok;
  result.word.assign(path.begin() + 1, path.end() - 1);
  return result;
}

Word invert_labeling(std::span<const Symbol> u, const LabelSet& labels, FlankConvention flanks) {
  auto result = try_invert_labeling(u, labels, flanks);
  switch (result.status) {
    case InversionStatus::Ok:
      return std::move(result.word);
    case InversionStatus::Ambiguous:
      throw AmbiguousLabeling("labeling " + render_labeling(u) + " has more than one preimage");
    case InversionStatus::Invalid:
      break;
  }
  throw InvalidLabeling("labeling " + render_labeling(u) + " has no preimage");
}

int phi(int q) {
  if (q < 2) throw InvalidInput("phi needs q >= 2");
  const int n = (q % 2 == 1) ? (q + 1) * (q + 1) / 4 : q * (q + 2) / 4;
  return q * q - n;
}

bool check_path_unique(const ZeroGraph& graph, int max_len) {
  if (max_len < 1) throw InvalidInput("max_len must be at least 1");
  const int q = graph.vertex_count();
  // paths[u*q+v]: number of length-L walks u -> v, capped at 2.
  std::vector<std::uint8_t> paths(static_cast<std::size_t>(q) * q, 0);
  for (int v = 0; v < q; ++v) paths[v * q + v] = 1;
  std::vector<std::uint8_t> next(paths.size());
  for (int len = 1; len <= max_len; ++len) {
    std::fill(next.begin(), next.end(), 0);
    for (int from = 0; from < q; ++from) {
      for (int mid = 0; mid < q; ++mid) {
        const std::uint8_t head = paths[from * q + mid];
        if (head == 0) continue;
        for (int to = 0; to < q; ++to) {
          if (!graph.has_edge(static_cast<Symbol>(mid), static_cast<Symbol>(to))) continue;
          auto& cell = next[from * q + to];
          cell = static_cast<std::uint8_t>(std::min(2, cell + head));
        }
      }
    }
    if (std::any_of(next.begin(), next.end(), [](std::uint8_t c) { return c > 1; })) return false;
    paths.swap(next);
  }
  return true;
}

double CapacityCount::rate() const {
  if (n == 0 || count == 0) return 0.0;
  return std::log2(static_cast<double>(count)) / static_cast<double>(n);
}

CapacityCount empirical_capacity(const LabelSet& labels, std::size_t n, std::optional<FlankConvention> flanks,
                                 std::uint64_t cap) {
  const std::uint64_t words = checked_pow(static_cast<std::uint64_t>(labels.q()), static_cast<unsigned>(n));
  if (words > cap) {
    throw BudgetExceeded("enumerating " + std::to_string(words) + " words exceeds cap " + std::to_string(cap));
  }
  std::unordered_set<LabelingWord, WordHash> outputs;
  outputs.reserve(words);
  for_each_word(labels.q(), n, [&](const Word& x) {
    outputs.insert(flanks ? label_framed(x, labels, *flanks) : label_word(x, labels));
  });
  return {outputs.size(), n};
}

}  // namespace labelcode
