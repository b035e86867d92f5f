// Certificate replay. Claims are re-derived from the input echo with the
// routines in wordramsey/verify.hpp (and plain loops here); the search
// engines are never called.

#include <algorithm>
#include <numeric>

#include "app.hpp"
#include "common.hpp"
#include "wordramsey/hj.hpp"
#include "wordramsey/verify.hpp"

namespace wordramsey::app {

namespace {

using detail::field;

class Claims {
 public:
  explicit Claims(VerifyReport& report) : report_(report) {}

  void check(bool ok, const std::string& what) {
    report_.lines.push_back((ok ? "ok: " : "FAIL: ") + what);
    report_.ok = report_.ok && ok;
  }

 private:
  VerifyReport& report_;
};

std::string word_text(const Alphabet& alphabet, const Word& w) { return alphabet.format(w); }

// --- hj -------------------------------------------------------------------

void check_coloring_claim(Claims& c, int k, int colors, const json& entry, const std::string& label) {
  const int length = field<int>(entry, "N");
  const std::string status = field<std::string>(entry, "status");
  const std::uint64_t lines = field<std::uint64_t>(entry, "checked_lines");
  const std::size_t cells = cube_size(k, length);
  // Lines of A^N with one variable: (k+1)^N - k^N.
  std::uint64_t expected_lines = 1, cube = 1;
  for (int i = 0; i < length; ++i) {
    expected_lines *= static_cast<std::uint64_t>(k + 1);
    cube *= static_cast<std::uint64_t>(k);
  }
  c.check(lines == expected_lines - cube, label + ": line count (k+1)^N - k^N = " + std::to_string(expected_lines - cube));

  const json& coloring = entry.at("coloring");
  if (status == "found") {
    std::vector<int> assigned(cells, 0);
    bool shape_ok = coloring.is_array() && coloring.size() == cells;
    if (shape_ok) {
      const auto text = [&] {
        std::string s;
        for (const auto& e : coloring) s += field<std::string>(e, "word") + "\t" + std::to_string(field<int>(e, "color")) + "\n";
        return s;
      }();
      const auto pc = parse_coloring(k, text);
      assigned = pc.cells;
      shape_ok = pc.length == length && pc.colors <= colors;
    }
    c.check(shape_ok, label + ": coloring covers A^N with colors 1.." + std::to_string(colors));
    if (!shape_ok) return;
    const auto lf = verify::check_line_free(k, length, assigned, 1);
    c.check(lf.line_free && lf.roots == lines, label + ": no monochromatic line among " + std::to_string(lf.roots) + " roots");
    // Words ending in the first letter: a copy of A^{N-1}.
    json cylinder = nullptr;
    if (length >= 2) {
      std::vector<int> sub;
      for (std::size_t r = 0; r < cells; r += static_cast<std::size_t>(k)) sub.push_back(assigned[r]);
      cylinder = verify::check_line_free(k, length - 1, sub, 1).line_free;
    }
    c.check(entry.at("cylinder_ok") == cylinder, label + ": cylinder restriction claim");
    if (cells <= kMaxExhaustiveCells) {
      const auto least = verify::brute_force_line_free(k, colors, length);
      c.check(least && *least == assigned, label + ": coloring is the lexicographically least line-free one");
    }
  } else if (status == "none") {
    c.check(coloring.is_null() && entry.at("cylinder_ok").is_null(), label + ": no coloring recorded");
    if (cells <= kMaxExhaustiveCells)
      c.check(!verify::brute_force_line_free(k, colors, length).has_value(),
              label + ": brute force confirms every coloring has a monochromatic line");
    else
      c.check(false, label + ": negative claim too large to replay (" + std::to_string(cells) + " cells)");
  } else {
    c.check(status == "budget-exhausted" && coloring.is_null() && entry.at("cylinder_ok").is_null(), label + ": unresolved (search budget)");
  }
}

void verify_find_line(Claims& c, const json& in, const json& r) {
  const int k = field<int>(in, "k");
  const int n = in.value("n", 1);
  const auto pc = parse_coloring(k, field<std::string>(in, "colors"));
  c.check(field<int>(r, "N") == pc.length && field<int>(r, "colors") == pc.colors, "coloring dimensions");
  const auto lf = verify::check_line_free(k, pc.length, pc.cells, n);
  c.check(lf.roots == field<std::uint64_t>(r, "roots_checked"), "roots examined = " + std::to_string(lf.roots));
  const bool found = field<bool>(r, "found");
  c.check(found == !lf.line_free, found ? "a monochromatic line exists" : "no monochromatic line exists");
  if (!found || lf.line_free) return;
  const auto root = field<std::string>(r, "root");
  c.check(root == lf.first_mono_root, "root " + root + " is the least monochromatic root");
  const auto points = verify::line_points(k, root, n);
  c.check(points == field<std::vector<std::string>>(r, "points"), "points are the instances of the root");
  const Alphabet alphabet = Alphabet::first_letters(k, 0, 64);
  const Coloring col(k, pc.length, pc.colors, pc.cells);
  std::vector<int> colors;
  for (const auto& p : points) colors.push_back(col.color(alphabet.parse(p)));
  c.check(colors == field<std::vector<int>>(r, "point_colors"), "point colors match the coloring");
  const int color = field<int>(r, "color");
  c.check(std::all_of(colors.begin(), colors.end(), [&](int x) { return x == color; }),
          "every point has color " + std::to_string(color));
}

void verify_line_free(Claims& c, const json& in, const json& r) {
  check_coloring_claim(c, field<int>(in, "k"), field<int>(in, "c"), r, "N=" + std::to_string(field<int>(in, "N")));
  c.check(field<int>(r, "N") == field<int>(in, "N"), "length matches input");
}

void verify_number(Claims& c, const json& in, const json& r) {
  const int k = field<int>(in, "k"), colors = field<int>(in, "c"), max = field<int>(in, "max");
  const json& per = r.at("per_length");
  std::optional<int> number;
  bool unresolved = false;
  for (std::size_t i = 0; i < per.size(); ++i) {
    const json& e = per[i];
    c.check(field<int>(e, "N") == static_cast<int>(i + 1), "per-length entries are consecutive");
    check_coloring_claim(c, k, colors, e, "N=" + std::to_string(i + 1));
    const auto status = field<std::string>(e, "status");
    if (status == "none" && !number) number = static_cast<int>(i + 1);
    if (status == "budget-exhausted") unresolved = true;
    c.check(!number || i + 1 == static_cast<std::size_t>(*number), "search stops at the first length without a line-free coloring");
  }
  c.check(static_cast<int>(per.size()) <= max, "lengths within --max");
  c.check(field<int>(r, "max_length") == max, "max_length = " + std::to_string(max));
  const json& claimed = r.at("number");
  if (number)
    c.check(claimed.is_number_integer() && claimed.get<int>() == *number, "number = " + std::to_string(*number));
  else
    c.check(claimed.is_null() && (unresolved || static_cast<int>(per.size()) == max), "number unresolved within bounds");
}

// --- jset -----------------------------------------------------------------

void verify_jset(Claims& c, const json& in, const json& r) {
  const auto p = detail::load_jset(in);
  const bool has = !r.at("witness").is_null();
  const auto checked = field<std::uint64_t>(r, "candidates_checked");
  const json& products = r.at("products");
  if (!has) c.check(products.empty(), "no products without a witness");
  c.check(field<std::string>(r, "mode") == (p.numeric ? "numbers" : "words"), "sequence mode");
  if (p.numeric) {
    const auto least = verify::least_candidate(p.target, std::span<const std::vector<std::int64_t>>(p.numbers),
                                               std::span<const std::int64_t>(p.number_pool), p.bounds, p.semigroup);
    c.check(least.rank == checked, "candidate count " + std::to_string(least.rank));
    if (!has) {
      c.check(!least.witness, "no candidate within bounds passes");
      const auto e = verify::enumerate_candidates(p.target, std::span<const std::vector<std::int64_t>>(p.numbers),
                                                  std::span<const std::int64_t>(p.number_pool), p.bounds, p.semigroup);
      c.check(e.passing == 0 && e.total == checked, "full re-enumeration: " + std::to_string(e.total) + " candidates, none pass");
      return;
    }
    const auto w = detail::number_witness(r.at("witness"));
    c.check(verify::verify_witness(p.target, p.numbers, w, p.semigroup), "witness products lie in the target");
    c.check(least.witness && *least.witness == w, "witness is the canonical least");
    bool table_ok = products.size() == p.numbers.size();
    for (std::size_t i = 0; table_ok && i < p.numbers.size(); ++i) {
      const auto prod = verify::alternating_product(p.numbers[i], w, p.semigroup);
      table_ok = field<std::int64_t>(products[i], "product") == prod &&
                 field<bool>(products[i], "verdict") == p.target(prod);
    }
    c.check(table_ok, "per-sequence products and verdicts");
  } else {
    const auto least = verify::least_candidate(p.target, std::span<const std::vector<Word>>(p.words),
                                               std::span<const Word>(p.word_pool), p.bounds);
    c.check(least.rank == checked, "candidate count " + std::to_string(least.rank));
    if (!has) {
      c.check(!least.witness, "no candidate within bounds passes");
      const auto e = verify::enumerate_candidates(p.target, std::span<const std::vector<Word>>(p.words),
                                                  std::span<const Word>(p.word_pool), p.bounds);
      c.check(e.passing == 0 && e.total == checked, "full re-enumeration: " + std::to_string(e.total) + " candidates, none pass");
      return;
    }
    const auto w = detail::word_witness(p.alphabet, r.at("witness"));
    c.check(verify::verify_witness(p.target, p.words, w), "witness products lie in the target");
    c.check(least.witness && *least.witness == w, "witness is the canonical least");
    bool table_ok = products.size() == p.words.size();
    for (std::size_t i = 0; table_ok && i < p.words.size(); ++i) {
      const auto prod = verify::alternating_product(p.words[i], w);
      table_ok = field<std::string>(products[i], "product") == word_text(p.alphabet, prod) &&
                 field<bool>(products[i], "verdict") == p.target(prod);
    }
    c.check(table_ok, "per-sequence products and verdicts");
  }
}

// --- psg ------------------------------------------------------------------

std::vector<std::string> formatted(const PsgTruncation& t, std::span<const ElementId> ids) {
  std::vector<std::string> out;
  for (auto id : ids) out.push_back(t.format(id));
  return out;
}

void verify_adequacy(Claims& c, const json& in, const json& r) {
  const auto t = detail::load_truncation(field<json>(in, "config"));
  const int bound = field<int>(in, "bound");
  std::vector<ElementId> eligible;
  for (ElementId i = 0; i < t.size(); ++i)
    if (t.mode() == PsgMode::kTable || t.element(i).indices.size() <= static_cast<std::size_t>(bound))
      eligible.push_back(i);

  // Sets of each size in colex order: sort lexicographic combinations by
  // their reversed tuples.
  std::size_t checked = 0;
  std::optional<std::vector<ElementId>> failing;
  for (std::size_t s = 1; s <= std::min<std::size_t>(bound, eligible.size()) && !failing; ++s) {
    std::vector<std::vector<ElementId>> sets;
    std::vector<std::size_t> pick(s);
    std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t j, std::size_t lo) {
      if (j == s) {
        std::vector<ElementId> h;
        for (auto i : pick) h.push_back(eligible[i]);
        sets.push_back(std::move(h));
        return;
      }
      for (std::size_t i = lo; i < eligible.size(); ++i) {
        pick[j] = i;
        gen(j + 1, i + 1);
      }
    };
    gen(0, 0);
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
      return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    for (const auto& h : sets) {
      ++checked;
      if (verify::sigma_naive(t, h).empty()) {
        failing = h;
        break;
      }
    }
  }
  c.check(field<bool>(r, "adequate") == !failing, failing ? "sigma(H) is empty for some H" : "sigma(H) nonempty for every H within the bound");
  c.check(field<std::size_t>(r, "sets_checked") == checked, "sets examined = " + std::to_string(checked));
  const auto claimed = field<std::vector<ElementId>>(r, "failing_ids");
  c.check(claimed == failing.value_or(std::vector<ElementId>{}), "first failing set");
  c.check(field<std::vector<std::string>>(r, "failing") == formatted(t, failing.value_or(std::vector<ElementId>{})),
          "failing set rendering");
  c.check(field<bool>(r, "horizon_exhaustion") == (failing && t.mode() != PsgMode::kTable),
          "horizon-exhaustion flag");
}

void verify_sigma(Claims& c, const json& in, const json& r) {
  const auto t = detail::load_truncation(field<json>(in, "config"));
  const auto hset = detail::load_elements(t, field<json>(in, "elements"));
  const auto s = verify::sigma_naive(t, hset);
  c.check(field<std::vector<std::string>>(r, "elements") == formatted(t, hset), "element rendering");
  c.check(field<std::vector<ElementId>>(r, "sigma_ids") == s, "sigma has " + std::to_string(s.size()) + " elements");
  c.check(field<std::vector<std::string>>(r, "sigma") == formatted(t, s), "sigma rendering");
  std::vector<std::vector<std::string>> phis;
  for (auto g : hset) {
    const ElementId one[] = {g};
    phis.push_back(formatted(t, verify::sigma_naive(t, one)));
  }
  c.check(field<std::vector<std::vector<std::string>>>(r, "phi") == phis, "phi of each element");
}

// --- lift -----------------------------------------------------------------

void check_instances(Claims& c, const Alphabet& alphabet, const Predicate& target, const Word& w, int n,
                     const json& claimed) {
  const int k = alphabet.size();
  std::vector<Symbol> x(static_cast<std::size_t>(n), 0);
  json expect = json::array();
  for (;;) {
    const Word inst = verify::instance(w, x);
    expect.push_back({{"x", word_text(alphabet, Word(x))}, {"instance", word_text(alphabet, inst)}, {"verdict", target(inst)}});
    int i = n - 1;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == k - 1) x[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++x[static_cast<std::size_t>(i)];
  }
  c.check(claimed == expect, "all " + std::to_string(expect.size()) + " instances recomputed");
  c.check(std::all_of(expect.begin(), expect.end(), [](const json& e) { return e["verdict"].get<bool>(); }),
          "every instance lies in D");
}

// Canonical-leastness and the word count, by naive shortlex scan.
void check_least(Claims& c, const Alphabet& alphabet, int n, std::size_t max_len, const json& r,
                 const std::function<bool(const Word&)>& accept) {
  const json& claimed = r.at("word");
  const auto checked = field<std::uint64_t>(r, "words_checked");
  const auto least = verify::least_sn_word(alphabet.size(), n, max_len, accept);
  if (claimed.is_null()) {
    c.check(!r.contains("instances") || r.at("instances").empty(), "no instances without a word");
    c.check(!least.word, "no word of S_" + std::to_string(n) + " up to length " + std::to_string(max_len) + " qualifies");
  } else {
    const Word w = alphabet.parse(claimed.get<std::string>());
    c.check(verify::is_n_variable_word(w, alphabet.size(), n), "word is in S_" + std::to_string(n));
    c.check(least.word && *least.word == w, "word is the canonical least");
  }
  c.check(least.checked == checked, "words examined = " + std::to_string(least.checked));
}

void verify_lemma1(Claims& c, const json& in, const json& r) {
  const auto p = detail::load_lemma1(in);
  const auto& a = p.alphabet;
  std::vector<std::vector<Word>> lifted;
  for (const auto& f : p.sequences)
    for (const auto& h : p.homs) {
      std::vector<Word> g;
      for (const auto& w : f) g.push_back(apply_word_hom(a, h, w));
      lifted.push_back(std::move(g));
    }
  json lifted_json = json::array();
  for (const auto& g : lifted) {
    json row = json::array();
    for (const auto& w : g) row.push_back(word_text(a, w));
    lifted_json.push_back(row);
  }
  c.check(r.at("lifted") == lifted_json, "G = {nu o f} recomputed");
  const auto least = verify::least_candidate(p.target, std::span<const std::vector<Word>>(lifted),
                                             std::span<const Word>(p.pool), p.bounds);
  c.check(least.rank == field<std::uint64_t>(r, "candidates_checked"), "candidate count " + std::to_string(least.rank));
  if (r.at("witness").is_null()) {
    c.check(!least.witness && r.at("inner_witness").is_null(), "inner search exhausted on G");
    return;
  }
  const auto outer = detail::word_witness(a, r.at("witness"));
  const auto inner = detail::word_witness(a, r.at("inner_witness"));
  c.check(inner == outer, "inner witness equals outer witness");
  c.check(least.witness && *least.witness == inner, "inner witness is the canonical least over G");
  c.check(std::all_of(inner.a.begin(), inner.a.end(), [&](const Word& x) { return a.in_s0(x); }), "a lies in S_0");
  json table = json::array();
  bool all = true;
  for (std::size_t i = 0; i < p.sequences.size(); ++i) {
    const Word prod = verify::alternating_product(p.sequences[i], outer);
    for (const auto& h : p.homs) {
      const Word image = apply_word_hom(a, h, prod);
      all = all && p.target(image);
      table.push_back({{"sequence", i + 1}, {"hom", format_hom(a, h)}, {"product", word_text(a, prod)},
                       {"image", word_text(a, image)}, {"verdict", p.target(image)}});
    }
  }
  c.check(r.at("table") == table, "table of (f, nu) products recomputed");
  c.check(all && field<bool>(r, "verified"), "nu(product) in D for every (f, nu)");
}

void verify_thm3(Claims& c, const json& in, const json& r) {
  const Alphabet a = detail::alphabet_of(in);
  const int n = field<int>(in, "n");
  const auto target = parse_predicate(a, field<std::string>(in, "pred"));
  check_least(c, a, n, field<std::size_t>(in, "max_len"), r,
              [&](const Word& w) { return verify::all_instances_in(w, a.size(), n, target); });
  if (!r.at("word").is_null()) check_instances(c, a, target, a.parse(r.at("word").get<std::string>()), n, r.at("instances"));
}

bool subset_sum(std::span<const std::int64_t> xs, std::int64_t value, std::vector<int>* indices = nullptr) {
  const std::size_t n = xs.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s += xs[i];
    if (s != value) continue;
    if (indices)
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) indices->push_back(static_cast<int>(i + 1));
    return true;
  }
  return false;
}

std::int64_t count_variable(const Word& w, int i) {
  return std::count(w.begin(), w.end(), variable(i));
}

void verify_fs1(Claims& c, const json& in, const json& r) {
  const Alphabet a = detail::alphabet_of(in);
  const auto target = parse_predicate(a, field<std::string>(in, "pred"));
  const auto x = field<std::vector<std::int64_t>>(in, "x");
  std::vector<std::int64_t> padded{0};
  padded.insert(padded.end(), x.begin(), x.end());
  c.check(field<std::vector<std::int64_t>>(r, "padded") == padded, "padding y = (0, x_1, ..., x_T)");
  check_least(c, a, 1, field<std::size_t>(in, "max_len"), r, [&](const Word& w) {
    return subset_sum(x, count_variable(w, 1)) && verify::all_instances_in(w, a.size(), 1, target);
  });
  if (r.at("word").is_null()) return;
  const Word w = a.parse(r.at("word").get<std::string>());
  const auto tau = count_variable(w, 1);
  c.check(field<std::int64_t>(r, "tau") == tau, "tau(w) = " + std::to_string(tau));
  const auto h = field<std::vector<int>>(r, "indices");
  std::int64_t sum = 0;
  bool in_range = !h.empty() && std::is_sorted(h.begin(), h.end());
  for (int i : h) {
    in_range = in_range && i >= 1 && static_cast<std::size_t>(i) <= x.size();
    if (in_range) sum += x[static_cast<std::size_t>(i - 1)];
  }
  c.check(in_range && sum == tau, "sum of x over H equals tau(w)");
  auto ph = field<std::vector<int>>(r, "padded_indices");
  ph.erase(std::remove(ph.begin(), ph.end(), 1), ph.end());
  for (int& i : ph) --i;
  c.check(ph == h, "padded index set matches");
  check_instances(c, a, target, w, 1, r.at("instances"));
}

void verify_thm16(Claims& c, const json& in, const json& r) {
  const Alphabet a = detail::alphabet_of(in);
  const int n = field<int>(in, "n"), k = field<int>(in, "k");
  const auto target = parse_predicate(a, field<std::string>(in, "pred"));
  std::vector<Word> y;
  for (const auto& s : field<std::vector<std::string>>(in, "patterns")) y.push_back(a.parse(s));
  auto extract = [&](const Word& w) {
    std::vector<Symbol> out;
    for (Symbol s : w)
      if (s >= kVariableBase && s - kVariableBase < k) out.push_back(s);
    return Word(std::move(out));
  };
  // All finite products of y, in increasing index order.
  std::vector<Word> fp;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << y.size()); ++mask) {
    std::vector<Symbol> acc;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (mask >> i & 1) acc.insert(acc.end(), y[i].begin(), y[i].end());
    fp.emplace_back(std::move(acc));
  }
  check_least(c, a, n, field<std::size_t>(in, "max_len"), r, [&](const Word& w) {
    return std::find(fp.begin(), fp.end(), extract(w)) != fp.end() && verify::all_instances_in(w, a.size(), n, target);
  });
  if (r.at("word").is_null()) return;
  const Word w = a.parse(r.at("word").get<std::string>());
  const Word pattern = a.parse(field<std::string>(r, "pattern"));
  c.check(extract(w) == pattern, "pattern_extract(w, k) = " + a.format(pattern));
  const auto h = field<IndexSet>(r, "fp_indices");
  const auto t = PsgTruncation::word_products(a, y);
  const auto id = t.find(h);
  c.check(id && std::get<Word>(t.element(*id).value) == pattern, "FP-prefix index set re-verifies in the truncation");
  check_instances(c, a, target, w, n, r.at("instances"));
}

void verify_thm17(Claims& c, const json& in, const json& r) {
  const auto p = detail::load_thm17(in);
  const auto& a = p.alphabet;
  auto psi_of = [&](const Word& w) {
    std::vector<std::int64_t> psi;
    if (p.taus.empty())
      for (int i = 1; i <= p.n; ++i) psi.push_back(count_variable(w, i));
    else
      for (const auto& tau : p.taus) psi.push_back(static_cast<std::int64_t>(std::get<std::uint64_t>(apply_hom(a, tau, w))));
    return psi;
  };
  auto image_of = [&](const std::vector<std::int64_t>& psi) {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < p.matrix.rows; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < p.matrix.cols && j < psi.size(); ++j) s += p.matrix.at(i, j) * psi[j];
      out.push_back(s);
    }
    return out;
  };
  check_least(c, a, p.n, field<std::size_t>(in, "max_len"), r, [&](const Word& w) {
    const auto image = image_of(psi_of(w));
    for (std::size_t i = 0; i < image.size(); ++i)
      if (!subset_sum(p.fs_prefixes[i], image[i])) return false;
    return std::all_of(p.homs.begin(), p.homs.end(), [&](const HomSpec& h) { return p.target(apply_word_hom(a, h, w)); });
  });
  if (r.at("word").is_null()) return;
  const Word w = a.parse(r.at("word").get<std::string>());
  const auto psi = psi_of(w);
  const auto image = image_of(psi);
  c.check(field<std::vector<std::int64_t>>(r, "psi") == psi, "psi(w) recomputed");
  c.check(field<std::vector<std::int64_t>>(r, "image") == image, "M psi(w) recomputed");
  const auto hs = field<std::vector<std::vector<int>>>(r, "fs_indices");
  bool ok = hs.size() == image.size();
  for (std::size_t i = 0; ok && i < hs.size(); ++i) {
    std::int64_t s = 0;
    for (int j : hs[i]) {
      ok = ok && j >= 1 && static_cast<std::size_t>(j) <= p.fs_prefixes[i].size();
      if (ok) s += p.fs_prefixes[i][static_cast<std::size_t>(j - 1)];
    }
    ok = ok && !hs[i].empty() && s == image[i];
  }
  c.check(ok, "each coordinate of M psi(w) is a finite sum of its B_i");
  const json& images = r.at("hom_images");
  bool hom_ok = images.size() == p.homs.size();
  for (std::size_t i = 0; hom_ok && i < p.homs.size(); ++i) {
    const Word u = apply_word_hom(a, p.homs[i], w);
    hom_ok = field<std::string>(images[i], "image") == a.format(u) && p.target(u) &&
             field<bool>(images[i], "verdict");
  }
  c.check(hom_ok, "nu(w) in D for every nu in F");
}

void verify_cset(Claims& c, const json& in, const json& r) {
  const auto p = detail::load_cset(in);
  const auto& a = p.alphabet;
  std::vector<Word> seq;
  for (const auto& s : field<std::vector<std::string>>(r, "sequence")) seq.push_back(a.parse(s));
  const auto levels = field<std::vector<int>>(r, "levels");
  c.check(levels.size() == seq.size(), "one level per term");
  for (std::size_t t = 0; t < seq.size() && t < levels.size(); ++t) {
    const int lv = levels[t];
    const bool in_range = lv >= 1 && static_cast<std::size_t>(lv) <= p.structure.depth();
    c.check(in_range, "level of w_" + std::to_string(t + 1) + " within depth");
    if (!in_range) continue;
    const Predicate& d = p.structure.levels[static_cast<std::size_t>(lv - 1)];
    auto accept = [&](const Word& w) {
      return std::all_of(p.homs.begin(), p.homs.end(), [&](const HomSpec& h) { return d(apply_word_hom(a, h, w)); });
    };
    const auto least = verify::least_sn_word(a.size(), p.n, p.max_len, accept);
    c.check(least.word && *least.word == seq[t],
            "w_" + std::to_string(t + 1) + " is the least word with every image in D_" + std::to_string(lv));
  }
  const bool failed = !r.at("failure").is_null();
  c.check(failed || seq.size() == p.length, failed ? "construction stopped early" : "sequence has the requested length");

  // Odometer over phi: H -> F, digit 0 meaning t not in H.
  const std::uint64_t base = p.homs.size() + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) total *= base;
  json table = json::array();
  bool all = true;
  for (std::uint64_t code = 1; code < total; ++code) {
    json hs = json::array(), phi = json::array();
    Word prod;
    std::uint64_t rest = code;
    for (std::size_t t = 0; t < seq.size(); ++t, rest /= base) {
      const auto d = rest % base;
      if (d == 0) continue;
      hs.push_back(t + 1);
      phi.push_back(format_hom(a, p.homs[d - 1]));
      prod = concat(prod, apply_word_hom(a, p.homs[d - 1], seq[t]));
    }
    const bool ok = p.structure.levels[0](prod);
    all = all && ok;
    table.push_back({{"H", hs}, {"phi", phi}, {"product", a.format(prod)}, {"verdict", ok}});
  }
  c.check(field<std::uint64_t>(r, "expected_products") == total - 1, "(1+|F|)^L - 1 = " + std::to_string(total - 1) + " products");
  c.check(r.at("products") == table, "product table recomputed");
  c.check(all, "every product lies in D_1");
  c.check(field<bool>(r, "verified") == (all && !failed), "verified flag");
}

int expected_status(const std::string& sub, const json& r) {
  bool found = false;
  if (sub == "hj find-line") found = r.value("found", false);
  else if (sub == "hj line-free") found = r.value("status", "") == "found";
  else if (sub == "hj number") found = r.contains("number") && !r.at("number").is_null();
  else if (sub == "jset check") found = r.contains("witness") && !r.at("witness").is_null();
  else if (sub == "psg adequacy") found = r.value("adequate", false);
  else if (sub == "psg sigma") found = r.contains("sigma_ids") && !r.at("sigma_ids").empty();
  else if (sub == "lift lemma1" || sub == "lift cset") found = r.value("verified", false);
  else found = r.contains("word") && !r.at("word").is_null();
  return found ? kFound : kUnresolved;
}

using Verifier = std::function<void(Claims&, const json&, const json&)>;

const std::map<std::string, Verifier>& verifiers() {
  static const std::map<std::string, Verifier> table = {
      {"hj find-line", verify_find_line}, {"hj line-free", verify_line_free}, {"hj number", verify_number},
      {"jset check", verify_jset},        {"psg adequacy", verify_adequacy},  {"psg sigma", verify_sigma},
      {"lift lemma1", verify_lemma1},     {"lift thm3", verify_thm3},         {"lift fs1", verify_fs1},
      {"lift thm16", verify_thm16},       {"lift thm17", verify_thm17},       {"lift cset", verify_cset},
  };
  return table;
}

}  // namespace

VerifyReport verify(const json& certificate) {
  VerifyReport report;
  Claims c(report);
  if (!certificate.is_object() || certificate.value("schema", "") != kSchema)
    throw InputError(std::string("schema mismatch: expected '") + kSchema + "'");
  const auto sub = field<std::string>(certificate, "subcommand");
  const auto it = verifiers().find(sub);
  if (it == verifiers().end()) throw InputError("unknown subcommand '" + sub + "' in certificate");
  const json& result = field<json>(certificate, "result");
  const json& det = field<json>(certificate, "determinism");
  c.check(field<std::string>(det, "result_hash") == result_hash(result), "result hash");
  const int status = field<int>(certificate, "exit_status");
  c.check((status == kFound && certificate.value("status", "") == "found") ||
              (status == kUnresolved && certificate.value("status", "") == "exhausted"),
          "status fields agree");
  c.check(status == expected_status(sub, result), "exit status matches the result");
  it->second(c, field<json>(certificate, "input"), result);
  return report;
}

}  // namespace wordramsey::app
