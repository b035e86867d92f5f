#include "wordramsey/verify.hpp"

#include <algorithm>
#include <functional>

#include "wordramsey/error.hpp"

namespace wordramsey::verify {

namespace {

template <class T>
const T& at(const std::vector<T>& f, std::size_t t) {
  if (t < 1 || t > f.size())
    throw BoundError("witness index " + std::to_string(t) + " exceeds the sequence horizon " + std::to_string(f.size()));
  return f[t - 1];
}

template <class T>
void check_shape(const Witness<T>& w) {
  if (w.m < 1 || w.t.size() != w.m || w.a.size() != w.m + 1) throw DomainError("malformed witness");
  for (std::size_t i = 1; i < w.t.size(); ++i)
    if (w.t[i - 1] >= w.t[i]) throw DomainError("witness t is not strictly increasing");
}

}  // namespace

Word alternating_product(const std::vector<Word>& f, const Witness<Word>& w) {
  check_shape(w);
  std::vector<Symbol> out;
  for (std::size_t j = 0; j < w.m; ++j) {
    out.insert(out.end(), w.a[j].begin(), w.a[j].end());
    const Word& x = at(f, w.t[j]);
    out.insert(out.end(), x.begin(), x.end());
  }
  out.insert(out.end(), w.a[w.m].begin(), w.a[w.m].end());
  return Word(std::move(out));
}

std::int64_t alternating_product(const std::vector<std::int64_t>& f, const Witness<std::int64_t>& w,
                                 NumericSemigroup semigroup) {
  check_shape(w);
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < w.m; ++j) sum += w.a[j] + at(f, w.t[j]);
  sum += w.a[w.m];
  return semigroup.modulus ? sum % *semigroup.modulus : sum;
}

std::optional<ElementId> alternating_product(const PsgTruncation& t, const std::vector<ElementId>& f,
                                             const Witness<ElementId>& w) {
  check_shape(w);
  std::optional<ElementId> acc = w.a[0];
  for (std::size_t j = 0; j < w.m && acc; ++j) {
    acc = t.op(*acc, at(f, w.t[j]));
    if (acc) acc = t.op(*acc, w.a[j + 1]);
  }
  return acc;
}

bool verify_witness(const Predicate& target, std::span<const std::vector<Word>> family, const Witness<Word>& w) {
  bool ok = true;
  for (const auto& f : family) ok = target(alternating_product(f, w)) && ok;
  if (family.empty()) check_shape(w);
  return ok;
}

bool verify_witness(const Predicate& target, std::span<const std::vector<std::int64_t>> family,
                    const Witness<std::int64_t>& w, NumericSemigroup semigroup) {
  bool ok = true;
  for (const auto& f : family) ok = target(alternating_product(f, w, semigroup)) && ok;
  if (family.empty()) check_shape(w);
  return ok;
}

bool verify_witness_adequate(const Predicate& target, std::span<const std::vector<ElementId>> family,
                             std::span<const ElementId> constraint, const PsgTruncation& t,
                             const Witness<ElementId>& w) {
  if (family.empty()) check_shape(w);
  for (const auto& f : family) {
    const auto p = alternating_product(t, f, w);
    if (!p || !target(t.element(*p).value)) return false;
    for (ElementId l : constraint)
      if (!t.op(l, *p)) return false;
  }
  return true;
}

namespace {

template <class T, class Check>
Enumeration enumerate(std::span<const T> pool, const JBounds& bounds, bool stop_at_first, Check&& check,
                      std::optional<Witness<T>>* first = nullptr) {
  Enumeration e;
  bool done = false;
  for (std::size_t m = 1; m <= bounds.m_max && !done; ++m) {
    Witness<T> w;
    w.m = m;
    w.t.assign(m, 0);
    w.a.assign(m + 1, T{});
    std::function<void(std::size_t, std::size_t)> choose_t = [&](std::size_t j, std::size_t lo) {
      if (j == m) {
        std::function<void(std::size_t)> choose_a = [&](std::size_t i) {
          if (done) return;
          if (i == m + 1) {
            ++e.total;
            if (check(w)) {
              if (e.passing++ == 0) {
                e.first_rank = e.total;
                if (first) *first = w;
              }
              done = stop_at_first;
            }
            return;
          }
          for (const T& a : pool) {
            w.a[i] = a;
            choose_a(i + 1);
            if (done) return;
          }
        };
        choose_a(0);
        return;
      }
      for (std::size_t t = lo; t <= bounds.horizon && !done; ++t) {
        w.t[j] = t;
        choose_t(j + 1, t + 1);
      }
    };
    choose_t(0, 1);
  }
  return e;
}

template <class T>
std::vector<T> sorted_unique(std::span<const T> pool) {
  std::vector<T> v(pool.begin(), pool.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Enumeration enumerate_candidates(const Predicate& target, std::span<const std::vector<Word>> family,
                                 std::span<const Word> pool, const JBounds& bounds) {
  return enumerate<Word>(pool, bounds, false, [&](const Witness<Word>& w) {
    return verify_witness(target, family, w);
  });
}

Enumeration enumerate_candidates(const Predicate& target, std::span<const std::vector<std::int64_t>> family,
                                 std::span<const std::int64_t> pool, const JBounds& bounds,
                                 NumericSemigroup semigroup) {
  return enumerate<std::int64_t>(pool, bounds, false, [&](const Witness<std::int64_t>& w) {
    return verify_witness(target, family, w, semigroup);
  });
}

namespace {

// An empty pool stands for every element of the truncation.
std::vector<ElementId> adequate_pool(const PsgTruncation& t, std::span<const ElementId> pool) {
  if (!pool.empty()) return {pool.begin(), pool.end()};
  std::vector<ElementId> all(t.size());
  for (ElementId i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

}  // namespace

Enumeration enumerate_candidates_adequate(const Predicate& target, std::span<const std::vector<ElementId>> family,
                                          std::span<const ElementId> constraint, const PsgTruncation& t,
                                          std::span<const ElementId> pool, const JBounds& bounds) {
  const auto p = adequate_pool(t, pool);
  return enumerate<ElementId>(p, bounds, false, [&](const Witness<ElementId>& w) {
    return verify_witness_adequate(target, family, constraint, t, w);
  });
}

LeastCandidate<Word> least_candidate(const Predicate& target, std::span<const std::vector<Word>> family,
                                     std::span<const Word> pool, const JBounds& bounds) {
  LeastCandidate<Word> out;
  const auto p = sorted_unique(pool);
  const auto e = enumerate<Word>(
      p, bounds, true, [&](const Witness<Word>& w) { return verify_witness(target, family, w); }, &out.witness);
  out.rank = out.witness ? e.first_rank : e.total;
  return out;
}

LeastCandidate<std::int64_t> least_candidate(const Predicate& target,
                                             std::span<const std::vector<std::int64_t>> family,
                                             std::span<const std::int64_t> pool, const JBounds& bounds,
                                             NumericSemigroup semigroup) {
  LeastCandidate<std::int64_t> out;
  const auto p = sorted_unique(pool);
  const auto e = enumerate<std::int64_t>(
      p, bounds, true,
      [&](const Witness<std::int64_t>& w) { return verify_witness(target, family, w, semigroup); }, &out.witness);
  out.rank = out.witness ? e.first_rank : e.total;
  return out;
}

LeastCandidate<ElementId> least_candidate_adequate(const Predicate& target,
                                                   std::span<const std::vector<ElementId>> family,
                                                   std::span<const ElementId> constraint, const PsgTruncation& t,
                                                   std::span<const ElementId> pool, const JBounds& bounds) {
  LeastCandidate<ElementId> out;
  const auto all = adequate_pool(t, pool);
  const auto p = sorted_unique(std::span<const ElementId>(all));
  const auto e = enumerate<ElementId>(
      p, bounds, true,
      [&](const Witness<ElementId>& w) { return verify_witness_adequate(target, family, constraint, t, w); },
      &out.witness);
  out.rank = out.witness ? e.first_rank : e.total;
  return out;
}

// ---------------------------------------------------------------------------

Word instance(const Word& w, std::span<const Symbol> x) {
  std::vector<Symbol> out;
  out.reserve(w.size());
  for (Symbol s : w) {
    if (s < kVariableBase) {
      out.push_back(s);
      continue;
    }
    const std::size_t i = s - kVariableBase;
    if (i >= x.size()) throw DomainError("instance: variable without a replacement");
    out.push_back(x[i]);
  }
  return Word(std::move(out));
}

bool all_instances_in(const Word& w, int k, int n, const Predicate& target) {
  std::vector<Symbol> x(static_cast<std::size_t>(n), 0);
  for (;;) {
    if (!target(instance(w, x))) return false;
    int i = n - 1;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == k - 1) x[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return true;
    ++x[static_cast<std::size_t>(i)];
  }
}

bool is_n_variable_word(const Word& w, int k, int n) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Symbol s : w) {
    if (s < k) continue;
    if (s < kVariableBase || s - kVariableBase >= n) return false;
    seen[s - kVariableBase] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

LeastWord least_sn_word(int k, int n, std::size_t max_length, const std::function<bool(const Word&)>& accept,
                        std::optional<Word> stop_after) {
  // Odometer over digits 0..k+n-1; digit d < k is a letter, else v_{d-k+1}.
  LeastWord out;
  const int base = k + n;
  for (std::size_t len = static_cast<std::size_t>(n); len <= max_length; ++len) {
    std::vector<int> digits(len, 0);
    for (;;) {
      std::vector<Symbol> syms(len);
      for (std::size_t i = 0; i < len; ++i)
        syms[i] = digits[i] < k ? static_cast<Symbol>(digits[i]) : variable(digits[i] - k + 1);
      Word w(std::move(syms));
      if (is_n_variable_word(w, k, n)) {
        ++out.checked;
        if (accept(w)) {
          out.word = std::move(w);
          return out;
        }
        if (stop_after && w == *stop_after) return out;
      }
      std::size_t i = len;
      while (i > 0 && digits[i - 1] == base - 1) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
    if (stop_after && len >= stop_after->size()) return out;
  }
  return out;
}

std::vector<ElementId> sigma_naive(const PsgTruncation& t, std::span<const ElementId> hset) {
  if (hset.empty()) throw DomainError("sigma of the empty set");
  std::vector<ElementId> out;
  for (ElementId y = 0; y < t.size(); ++y) {
    bool all = true;
    for (ElementId x : hset) all = all && t.op(x, y).has_value();
    if (all) out.push_back(y);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lines. Letters are 0..k-1, variable v_i is -i.

namespace {

std::vector<int> parse_root(int k, const std::string& text) {
  std::vector<int> out;
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == '#') {
      std::size_t j = i + 1;
      int v = 0;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') v = v * 10 + (text[j++] - '0');
      if (v < 1) throw InputError("bad variable in root '" + text + "'");
      out.push_back(-v);
      i = j;
    } else {
      const int c = text[i] - 'a';
      if (c < 0 || c >= k) throw InputError("bad letter in root '" + text + "'");
      out.push_back(c);
      ++i;
    }
  }
  return out;
}

std::size_t rank_of(int k, const std::vector<int>& letters) {
  std::size_t r = 0;
  for (int c : letters) r = r * static_cast<std::size_t>(k) + static_cast<std::size_t>(c);
  return r;
}

// Instances of root under every x in [k]^n, x_1 most significant.
std::vector<std::vector<int>> instances(int k, const std::vector<int>& root, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::vector<int> w = root;
      for (int& s : w)
        if (s < 0) s = x[static_cast<std::size_t>(-s - 1)];
      out.push_back(std::move(w));
      return;
    }
    for (int c = 0; c < k; ++c) {
      x[static_cast<std::size_t>(i)] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::string root_text(const std::vector<int>& root) {
  std::string s;
  for (int c : root) s += c < 0 ? "#" + std::to_string(-c) : std::string(1, static_cast<char>('a' + c));
  return s;
}

}  // namespace

std::string format_word_text(int, const std::vector<int>& letters) { return root_text(letters); }

std::vector<std::string> line_points(int k, const std::string& root, int n) {
  const auto parsed = parse_root(k, root);
  std::vector<std::string> out;
  for (const auto& w : instances(k, parsed, n)) out.push_back(root_text(w));
  return out;
}

LineFreeCheck check_line_free(int k, int length, std::span<const int> cells, int n) {
  LineFreeCheck check;
  std::vector<int> root(static_cast<std::size_t>(length));
  std::function<bool(int)> rec = [&](int pos) -> bool {
    if (pos == length) {
      for (int v = 1; v <= n; ++v)
        if (std::find(root.begin(), root.end(), -v) == root.end()) return true;
      ++check.roots;
      const auto pts = instances(k, root, n);
      const int c = cells[rank_of(k, pts.front())];
      for (const auto& p : pts)
        if (cells[rank_of(k, p)] != c) return true;
      check.line_free = false;
      check.first_mono_root = root_text(root);
      return false;
    }
    for (int s = 0; s < k + n; ++s) {
      root[static_cast<std::size_t>(pos)] = s < k ? s : -(s - k + 1);
      if (!rec(pos + 1)) return false;
    }
    return true;
  };
  rec(0);
  return check;
}

std::optional<std::vector<int>> brute_force_line_free(int k, int colors, int length) {
  std::size_t cells = 1;
  for (int i = 0; i < length; ++i) cells *= static_cast<std::size_t>(k);
  // Cell lists of every 1-variable line, bucketed by their largest cell.
  std::vector<std::vector<std::vector<std::size_t>>> by_last(cells);
  std::vector<int> root(static_cast<std::size_t>(length));
  std::function<void(int)> roots = [&](int pos) {
    if (pos == length) {
      if (std::find(root.begin(), root.end(), -1) == root.end()) return;
      std::vector<std::size_t> line;
      for (const auto& p : instances(k, root, 1)) line.push_back(rank_of(k, p));
      const std::size_t last = *std::max_element(line.begin(), line.end());
      by_last[last].push_back(std::move(line));
      return;
    }
    for (int s = 0; s <= k; ++s) {
      root[static_cast<std::size_t>(pos)] = s < k ? s : -1;
      roots(pos + 1);
    }
  };
  roots(0);

  std::vector<int> assignment(cells, 0);
  std::function<bool(std::size_t)> fill = [&](std::size_t cell) -> bool {
    if (cell == cells) return true;
    for (int c = 1; c <= colors; ++c) {
      assignment[cell] = c;
      bool closes = false;
      for (const auto& line : by_last[cell]) {
        bool mono = true;
        for (std::size_t r : line) mono = mono && assignment[r] == c;
        closes = closes || mono;
      }
      if (!closes && fill(cell + 1)) return true;
    }
    assignment[cell] = 0;
    return false;
  };
  if (fill(0)) return assignment;
  return std::nullopt;
}

}  // namespace wordramsey::verify
