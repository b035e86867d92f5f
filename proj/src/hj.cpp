#include "wordramsey/hj.hpp"

#include <algorithm>

#include "wordramsey/error.hpp"

namespace wordramsey {

std::size_t cube_size(int k, int length) {
  std::size_t n = 1;
  for (int i = 0; i < length; ++i) {
    n *= static_cast<std::size_t>(k);
    if (n > (std::size_t{1} << 40)) throw BoundError("cube A^N is too large");
  }
  return n;
}

Coloring::Coloring(int k, int length, int colors, std::vector<int> cells)
    : k_(k), length_(length), colors_(colors), cells_(std::move(cells)) {
  if (k_ < 1) throw DomainError("alphabet size must be >= 1");
  if (length_ < 1) throw DomainError("word length must be >= 1");
  if (colors_ < 1) throw DomainError("color count must be >= 1");
  if (cells_.size() != cube_size(k_, length_)) throw DomainError("coloring is not total on A^N");
  for (int c : cells_)
    if (c < 1 || c > colors_) throw DomainError("color out of range 1.." + std::to_string(colors_));
}

std::size_t Coloring::rank(const Word& w) const {
  if (w.size() != static_cast<std::size_t>(length_)) throw DomainError("word length does not match the coloring");
  std::size_t r = 0;
  for (Symbol s : w) {
    if (s >= static_cast<Symbol>(k_)) throw DomainError("word is not over the coloring's alphabet");
    r = r * static_cast<std::size_t>(k_) + s;
  }
  return r;
}

int Coloring::color(const Word& w) const { return cells_[rank(w)]; }

Word Coloring::word_at(std::size_t rank) const {
  std::vector<Symbol> out(static_cast<std::size_t>(length_));
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Symbol>(rank % static_cast<std::size_t>(k_));
    rank /= static_cast<std::size_t>(k_);
  }
  return Word(std::move(out));
}

Coloring cylinder_restriction(const Coloring& coloring, Symbol letter) {
  if (coloring.length() < 2) throw DomainError("cylinder restriction needs N >= 2");
  const auto k = static_cast<std::size_t>(coloring.alphabet_size());
  std::vector<int> cells(coloring.cell_count() / k);
  for (std::size_t r = 0; r < cells.size(); ++r) cells[r] = coloring.color_at(r * k + letter);
  return Coloring(coloring.alphabet_size(), coloring.length() - 1, coloring.colors(), std::move(cells));
}

namespace {

// Rank data of a root: instance rank = base + sum_i x_i * weight[i].
struct RootGeometry {
  std::size_t base = 0;
  std::vector<std::size_t> weight;
};

RootGeometry geometry(const Word& root, int k, int n) {
  RootGeometry g;
  g.weight.assign(static_cast<std::size_t>(n), 0);
  std::size_t place = 1;
  for (std::size_t p = root.size(); p-- > 0;) {
    const Symbol s = root[p];
    if (is_variable(s))
      g.weight[static_cast<std::size_t>(variable_index(s) - 1)] += place;
    else
      g.base += s * place;
    place *= static_cast<std::size_t>(k);
  }
  return g;
}

bool uses_all(const Word& root, int n) {
  std::uint64_t seen = 0;
  for (Symbol s : root)
    if (is_variable(s)) seen |= std::uint64_t{1} << (variable_index(s) - 1);
  return seen == (n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

// Visits the k^n instance ranks of a root in lexicographic order of x.
template <class Fn>
bool for_each_instance(const RootGeometry& g, int k, Fn&& fn) {
  const std::size_t n = g.weight.size();
  std::vector<int> x(n, 0);
  std::size_t rank = g.base;
  for (;;) {
    if (!fn(rank, x)) return false;
    std::size_t pos = n;
    for (;;) {
      if (pos == 0) return true;
      --pos;
      if (x[pos] + 1 < k) {
        ++x[pos];
        rank += g.weight[pos];
        break;
      }
      rank -= g.weight[pos] * static_cast<std::size_t>(x[pos]);
      x[pos] = 0;
    }
  }
}

struct ChunkHit {
  Line line;
  std::uint64_t position = 0;
};

}  // namespace

LineSearchResult find_mono_line(const Coloring& coloring, int n, const SearchOptions& options) {
  if (n < 1) throw DomainError("find_mono_line: n must be >= 1");
  const int k = coloring.alphabet_size();
  const int length = coloring.length();
  LineSearchResult result;
  if (n > length) return result;

  std::vector<Symbol> symbols;
  for (int i = 0; i < k; ++i) symbols.push_back(static_cast<Symbol>(i));
  for (int i = 1; i <= n; ++i) symbols.push_back(variable(i));

  // One chunk per leading symbol.
  std::vector<std::uint64_t> chunk_counts(symbols.size(), 0);
  auto hit = parallel_first<ChunkHit>(symbols.size(), options.threads, [&](std::size_t chunk) -> std::optional<ChunkHit> {
    std::uint64_t count = 0;
    std::optional<ChunkHit> found;
    for_each_word(symbols, static_cast<std::size_t>(length - 1), [&](const Word& tail) {
      std::vector<Symbol> buf{symbols[chunk]};
      buf.insert(buf.end(), tail.begin(), tail.end());
      Word root(std::move(buf));
      if (!uses_all(root, n)) return true;
      ++count;
      const RootGeometry g = geometry(root, k, n);
      const int first = coloring.color_at(g.base);
      const bool mono = for_each_instance(g, k, [&](std::size_t r, const std::vector<int>&) {
        return coloring.color_at(r) == first;
      });
      if (!mono) return true;
      Line line{root, {}, first};
      for_each_instance(g, k, [&](std::size_t r, const std::vector<int>&) {
        line.points.push_back(coloring.word_at(r));
        return true;
      });
      found = ChunkHit{std::move(line), count};
      return false;
    });
    chunk_counts[chunk] = count;
    return found;
  });

  const std::size_t end = hit ? hit->first : symbols.size();
  for (std::size_t c = 0; c < end; ++c) result.roots_checked += chunk_counts[c];
  if (hit) {
    result.roots_checked += hit->second.position;
    result.line = std::move(hit->second.line);
  }
  return result;
}

LineSearchResult find_mono_line(std::span<const Coloring> slices, int n, const SearchOptions& options) {
  LineSearchResult total;
  for (std::size_t i = 0; i < slices.size(); ++i) {
    if (slices[i].length() != static_cast<int>(i) + 1)
      throw DomainError("cumulative coloring slices must have lengths 1, 2, ...");
    auto r = find_mono_line(slices[i], n, options);
    total.roots_checked += r.roots_checked;
    if (r.line) {
      total.line = std::move(r.line);
      return total;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------

namespace {

struct LineIndex {
  std::size_t lines = 0;
  // closing[c]: lines whose largest cell is c, as cell lists.
  std::vector<std::vector<std::vector<std::size_t>>> closing;
};

LineIndex build_lines(int k, int length) {
  LineIndex index;
  const std::size_t cells = cube_size(k, length);
  index.closing.resize(cells);
  std::vector<Symbol> symbols;
  for (int i = 0; i < k; ++i) symbols.push_back(static_cast<Symbol>(i));
  symbols.push_back(variable(1));
  for_each_word(symbols, static_cast<std::size_t>(length), [&](const Word& root) {
    if (!uses_all(root, 1)) return true;
    const RootGeometry g = geometry(root, k, 1);
    std::vector<std::size_t> line;
    for_each_instance(g, k, [&](std::size_t r, const std::vector<int>&) {
      line.push_back(r);
      return true;
    });
    index.closing[line.back()].push_back(std::move(line));
    ++index.lines;
    return true;
  });
  return index;
}

bool closes_mono_line(const LineIndex& index, const std::vector<int>& cells, std::size_t cell) {
  for (const auto& line : index.closing[cell]) {
    const int c = cells[line.front()];
    if (std::all_of(line.begin(), line.end(), [&](std::size_t r) { return cells[r] == c; })) return true;
  }
  return false;
}

enum class SubtreeOutcome { kSolution, kBudget };

struct SubtreeHit {
  SubtreeOutcome outcome;
  std::vector<int> cells;
  std::uint64_t nodes;
};

class Backtracker {
 public:
  Backtracker(const LineIndex& index, std::size_t cells, int colors, std::uint64_t max_nodes)
      : index_(index), cells_(cells, 0), colors_(colors), max_nodes_(max_nodes) {}

  // Assigns cells [from, end) by depth-first search. Returns true when a
  // complete line-free coloring is in cells_.
  bool run(std::size_t from) {
    if (from == cells_.size()) return true;
    for (int c = 1; c <= colors_; ++c) {
      if (max_nodes_ && nodes_ >= max_nodes_) {
        budget_hit_ = true;
        return false;
      }
      ++nodes_;
      cells_[from] = c;
      if (closes_mono_line(index_, cells_, from)) continue;
      if (run(from + 1)) return true;
      if (budget_hit_) return false;
    }
    cells_[from] = 0;
    return false;
  }

  // Forces cells [1, 1+prefix.size()) to the given colors; false if that
  // already closes a monochromatic line.
  bool force(std::size_t at, int color) {
    ++nodes_;
    cells_[at] = color;
    return !closes_mono_line(index_, cells_, at);
  }

  std::vector<int>& cells() { return cells_; }
  std::uint64_t nodes() const { return nodes_; }
  bool budget_hit() const { return budget_hit_; }

 private:
  const LineIndex& index_;
  std::vector<int> cells_;
  int colors_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

}  // namespace

LineFreeResult search_line_free(int k, int colors, int length, const LineFreeOptions& options) {
  if (k < 1 || colors < 1 || length < 1) throw DomainError("search_line_free: k, c, N must be >= 1");
  const std::size_t cells = cube_size(k, length);
  const std::size_t limit =
      options.mode == LineFreeMode::kExhaustive ? kMaxExhaustiveCells : kMaxBacktrackingCells;
  if (cells > limit)
    throw BoundError("k^N = " + std::to_string(cells) + " exceeds the " +
                     (options.mode == LineFreeMode::kExhaustive ? "exhaustive" : "backtracking") +
                     " bound " + std::to_string(limit));

  const LineIndex index = build_lines(k, length);
  LineFreeResult result;
  result.lines = index.lines;

  if (options.mode == LineFreeMode::kExhaustive) {
    std::vector<int> assignment(cells, 1);
    for (;;) {
      ++result.nodes;
      bool ok = true;
      for (std::size_t c = 0; c < cells && ok; ++c) ok = !closes_mono_line(index, assignment, c);
      if (ok) {
        result.status = LineFreeStatus::kFound;
        result.coloring = Coloring(k, length, colors, assignment);
        break;
      }
      std::size_t pos = cells;
      while (pos > 0 && assignment[pos - 1] == colors) assignment[--pos] = 1;
      if (pos == 0) break;
      ++assignment[pos - 1];
    }
  } else {
    // Cell 0 is fixed to color 1 (color symmetry). The next `depth` cells
    // form the split into independent subtrees, visited in lex order.
    const std::size_t depth = std::min<std::size_t>(cells - 1, 6);
    std::size_t subtrees = 1;
    for (std::size_t i = 0; i < depth; ++i) subtrees *= static_cast<std::size_t>(colors);
    std::vector<std::uint64_t> subtree_nodes(subtrees, 0);

    auto hit = parallel_first<SubtreeHit>(subtrees, options.search.threads, [&](std::size_t s) -> std::optional<SubtreeHit> {
      Backtracker bt(index, cells, colors, options.max_nodes);
      bool alive = bt.force(0, 1);
      std::size_t code = s;
      std::vector<int> digits(depth);
      for (std::size_t i = depth; i-- > 0;) {
        digits[i] = static_cast<int>(code % static_cast<std::size_t>(colors)) + 1;
        code /= static_cast<std::size_t>(colors);
      }
      for (std::size_t i = 0; i < depth && alive; ++i) alive = bt.force(i + 1, digits[i]);
      const bool solved = alive && bt.run(depth + 1);
      subtree_nodes[s] = bt.nodes();
      if (solved) return SubtreeHit{SubtreeOutcome::kSolution, bt.cells(), bt.nodes()};
      if (bt.budget_hit()) return SubtreeHit{SubtreeOutcome::kBudget, {}, bt.nodes()};
      return std::nullopt;
    });

    const std::size_t end = hit ? hit->first : subtrees;
    for (std::size_t s = 0; s < end; ++s) result.nodes += subtree_nodes[s];
    if (hit) {
      result.nodes += hit->second.nodes;
      if (hit->second.outcome == SubtreeOutcome::kSolution) {
        result.status = LineFreeStatus::kFound;
        result.coloring = Coloring(k, length, colors, std::move(hit->second.cells));
      } else {
        result.status = LineFreeStatus::kBudgetExhausted;
      }
    }
  }

  if (result.coloring && length >= 2)
    result.cylinder_ok = !find_mono_line(cylinder_restriction(*result.coloring, 0), 1).line.has_value();
  return result;
}

HjNumberResult hj_number(int k, int colors, int max_length, const LineFreeOptions& options) {
  if (max_length < 1) throw DomainError("hj_number: max length must be >= 1");
  HjNumberResult result;
  result.max_length = max_length;
  for (int length = 1; length <= max_length; ++length) {
    result.per_length.push_back(search_line_free(k, colors, length, options));
    const LineFreeResult& r = result.per_length.back();
    if (r.status == LineFreeStatus::kNone) {
      result.number = length;
      break;
    }
    if (r.status == LineFreeStatus::kBudgetExhausted) break;
  }
  return result;
}

}  // namespace wordramsey
