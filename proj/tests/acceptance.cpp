// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Expected values come from the oracles in oracles.hpp or from the
// independent verifier, never from the search that produced them.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "app.hpp"
#include "gen.hpp"
#include "oracles.hpp"
#include "wordramsey/hj.hpp"
#include "wordramsey/jset.hpp"
#include "wordramsey/lift.hpp"
#include "wordramsey/psg.hpp"
#include "wordramsey/verify.hpp"

using namespace wordramsey;
using app::json;
using oracle::OWord;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Word> lwords(const std::vector<OWord>& ws) {
  std::vector<Word> out;
  for (const auto& w : ws) out.push_back(oracle::to_word(w));
  return out;
}

const Alphabet kAb("ab", 2);

// ---------------------------------------------------------------------------

Check criterion1() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const auto out = app::run("hj number", {{"k", 2}, {"c", 2}, {"max", 4}, {"mode", "backtracking"}, {"max_nodes", 0}});
  const double elapsed = seconds_since(start);
  c.require(out.status == app::kFound, "status is not found");
  c.require(out.certificate["result"]["number"] == 2, "number is " + out.certificate["result"]["number"].dump());

  std::vector<int> first;
  c.require(oracle::any_line_free(2, 2, 1, &first), "oracle: no line-free coloring at N=1");
  c.require(first == std::vector<int>{1, 2}, "oracle: least line-free coloring at N=1 is not {a:1, b:2}");
  std::size_t colorings = 0, with_line = 0;
  for (int m = 0; m < 16; ++m) {
    std::vector<int> cells;
    for (int i = 3; i >= 0; --i) cells.push_back((m >> i & 1) + 1);
    ++colorings;
    if (oracle::mono_root(2, 2, cells)) ++with_line;
  }
  c.require(colorings == 16 && with_line == 16, "oracle: a coloring of [2]^2 has no line");
  c.require(app::verify(out.certificate).ok, "certificate does not verify");
  c.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  if (c.ok) c.detail = "number = 2; 4 + 16 colorings brute-forced; " + std::to_string(elapsed * 1000) + " ms";
  return c;
}

Check criterion2() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  const auto lf = app::run("hj line-free", {{"k", 3}, {"c", 2}, {"N", 3}, {"mode", "backtracking"}, {"max_nodes", 0}});
  c.require(lf.status == app::kFound, "no line-free coloring found");
  if (!c.ok) return c;
  std::vector<int> cells;
  for (const auto& cell : lf.certificate["result"]["coloring"]) cells.push_back(cell["color"].get<int>());
  const std::string text = app::format_coloring(3, 3, cells);
  const auto fl = app::run("hj find-line", {{"k", 3}, {"n", 1}, {"colors", text}});
  const double elapsed = seconds_since(start);
  const auto& r = fl.certificate["result"];
  c.require(fl.status == app::kUnresolved && r["found"] == false, "find-line reports a line");
  c.require(r["roots_checked"] == 64 - 27, "roots_checked = " + r["roots_checked"].dump());
  std::size_t roots = 0;
  c.require(cells.size() == 27 && !oracle::mono_root(3, 3, cells, &roots), "oracle finds a monochromatic line");
  c.require(roots == 37, "oracle root count " + std::to_string(roots));
  c.require(app::verify(lf.certificate).ok && app::verify(fl.certificate).ok, "certificates do not verify");
  c.require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s");
  if (c.ok) c.detail = "line-free coloring found; 37 roots checked, none monochromatic; " +
                       std::to_string(elapsed * 1000) + " ms";
  return c;
}

Check criterion3() {
  Check c;
  gen::Rng rng(2024);
  int found = 0, exhausted = 0;
  const auto fs = PsgTruncation::numeric(std::vector<std::int64_t>{1, 2, 4, 8, 16, 32}, PsgMode::kFiniteSums);
  for (int trial = 0; trial < 500 && c.ok; ++trial) {
    const JBounds bounds{static_cast<std::size_t>(rng.uniform(1, 2)), static_cast<std::size_t>(rng.uniform(2, 4))};
    const std::string tag = "instance " + std::to_string(trial);
    switch (trial % 3) {
      case 0: {
        const auto p = gen::word_predicate(rng, 2, 2);
        const auto pred = parse_predicate(kAb, p.text);
        std::vector<std::vector<Word>> family;
        for (int i = rng.uniform(1, 3); i > 0; --i) {
          std::vector<OWord> f;
          for (std::size_t t = 0; t < bounds.horizon; ++t) f.push_back(rng.word(2, 0, 1, 3));
          family.push_back(lwords(f));
        }
        const auto pool = word_pool(kAb, static_cast<std::size_t>(rng.uniform(1, 2)));
        const auto r = find_witness(pred, family, pool, bounds);
        if (r.witness) {
          ++found;
          c.require(verify::verify_witness(pred, family, *r.witness), tag + ": witness rejected");
          for (const auto& f : family) {
            const auto prod = verify::alternating_product(f, *r.witness);
            c.require(p.eval(oracle::from_word(prod)), tag + ": oracle rejects product");
          }
        } else {
          ++exhausted;
          const auto e = verify::enumerate_candidates(pred, family, pool, bounds);
          c.require(e.passing == 0 && e.total == r.candidates_checked, tag + ": exhaustion not confirmed");
        }
        break;
      }
      case 1: {
        const auto p = gen::int_predicate(rng);
        const auto pred = parse_predicate(kAb, p.text);
        std::vector<std::vector<std::int64_t>> family;
        for (int i = rng.uniform(1, 3); i > 0; --i) {
          std::vector<std::int64_t> f;
          for (std::size_t t = 0; t < bounds.horizon; ++t) f.push_back(rng.uniform(0, 9));
          family.push_back(f);
        }
        const auto pool = numeric_pool(static_cast<std::size_t>(rng.uniform(1, 4)));
        const auto r = find_witness(pred, family, pool, bounds);
        if (r.witness) {
          ++found;
          c.require(verify::verify_witness(pred, family, *r.witness), tag + ": witness rejected");
          for (const auto& f : family)
            c.require(p.eval(*oracle::int_product(f, r.witness->t, r.witness->a)), tag + ": oracle rejects product");
        } else {
          ++exhausted;
          const auto e = verify::enumerate_candidates(pred, family, pool, bounds);
          c.require(e.passing == 0 && e.total == r.candidates_checked, tag + ": exhaustion not confirmed");
        }
        break;
      }
      default: {
        const auto p = gen::int_predicate(rng);
        const auto pred = parse_predicate(kAb, p.text);
        std::vector<std::vector<ElementId>> family;
        for (int i = rng.uniform(1, 2); i > 0; --i) {
          std::vector<ElementId> f;
          for (std::size_t t = 1; t <= bounds.horizon; ++t) f.push_back(fs.find({static_cast<int>(t)}).value());
          family.push_back(f);
        }
        std::vector<ElementId> L;
        if (rng.coin()) L.push_back(static_cast<ElementId>(rng.uniform(0, 62)));
        std::vector<ElementId> pool;
        for (int i = rng.uniform(1, 6); i > 0; --i) pool.push_back(static_cast<ElementId>(rng.uniform(0, 62)));
        const auto r = find_witness_adequate(pred, family, L, fs, pool, bounds);
        if (r.witness) {
          ++found;
          c.require(verify::verify_witness_adequate(pred, family, L, fs, *r.witness), tag + ": witness rejected");
        } else {
          ++exhausted;
          const auto e = verify::enumerate_candidates_adequate(pred, family, L, fs, pool, bounds);
          c.require(e.passing == 0, tag + ": exhaustion not confirmed");
        }
      }
    }
  }
  if (c.ok)
    c.detail = "500 instances: " + std::to_string(found) + " witnesses verified, " + std::to_string(exhausted) +
               " exhaustions re-enumerated";
  return c;
}

Check criterion4() {
  Check c;
  gen::Rng rng(4);
  const auto even = Predicate::length_mod(2, 0);
  const auto pool = word_pool(kAb, 2);
  std::size_t max_m = 0;
  for (int trial = 0; trial < 100 && c.ok; ++trial) {
    const int size = rng.uniform(1, 3);
    const std::size_t horizon = 2 * (std::size_t{1} << size) + 1;
    std::vector<std::vector<Word>> family;
    for (int i = 0; i < size; ++i) {
      std::vector<OWord> f;
      for (std::size_t t = 0; t < horizon; ++t) f.push_back(rng.word(2, 0, 1, 5));
      family.push_back(lwords(f));
    }
    const auto r = find_witness(even, family, pool, {2, horizon});
    c.require(r.witness.has_value(), "trial " + std::to_string(trial) + ": no witness");
    if (!r.witness) break;
    c.require(r.witness->m <= 2, "trial " + std::to_string(trial) + ": m > 2");
    for (const auto& f : family) {
      OWord prod = oracle::from_word(r.witness->a[0]);
      for (std::size_t j = 0; j < r.witness->m; ++j)
        prod = oracle::cat(oracle::cat(prod, oracle::from_word(f[r.witness->t[j] - 1])),
                           oracle::from_word(r.witness->a[j + 1]));
      c.require(prod.size() % 2 == 0, "trial " + std::to_string(trial) + ": odd product");
    }
    max_m = std::max(max_m, r.witness->m);
  }
  if (c.ok) c.detail = "100 trials, all found, largest m = " + std::to_string(max_m);
  return c;
}

Check criterion5() {
  Check c;
  gen::Rng rng(5);
  int found = 0;
  for (int trial = 0; trial < 200 && c.ok; ++trial) {
    const std::string tag = "instance " + std::to_string(trial);
    const int n = rng.uniform(1, 2);
    const Alphabet alpha("ab", n);
    const JBounds bounds{static_cast<std::size_t>(rng.uniform(1, 2)), static_cast<std::size_t>(rng.uniform(2, 4))};
    std::vector<std::vector<OWord>> E;
    for (int i = rng.uniform(1, 2); i > 0; --i) {
      std::vector<OWord> f;
      const bool powers = rng.coin();
      const OWord base = rng.sn_word(2, n, 1);
      for (std::size_t t = 1; t <= bounds.horizon; ++t) {
        if (powers) {
          OWord w;
          for (std::size_t r = 0; r < t; ++r) w = oracle::cat(w, base);
          f.push_back(w);
        } else {
          f.push_back(rng.coin() ? rng.sn_word(2, n, 2) : rng.word(2, 0, 1, 3));
        }
      }
      E.push_back(f);
    }
    std::vector<std::vector<int>> xs;
    for (const auto& x : oracle::assignments(2, n))
      if (rng.coin()) xs.push_back(x);
    if (xs.empty()) xs.push_back(oracle::assignments(2, n).front());
    std::vector<HomSpec> F;
    for (const auto& x : xs) F.push_back(SubstitutionHom{std::vector<Symbol>(x.begin(), x.end())});
    const auto p = gen::word_predicate(rng, 2, 2);
    const auto pred = parse_predicate(alpha, p.text);
    std::vector<std::vector<Word>> sequences;
    for (const auto& f : E) sequences.push_back(lwords(f));
    const auto pool = word_pool(alpha, static_cast<std::size_t>(rng.uniform(1, 2)));

    const auto r = lemma1_lift(alpha, sequences, F, pred, pool, bounds);
    // G recomputed by the oracle, index f * |F| + nu.
    std::vector<std::vector<OWord>> G;
    for (const auto& f : E)
      for (const auto& x : xs) {
        std::vector<OWord> g;
        for (const auto& w : f) g.push_back(oracle::subst(w, x));
        G.push_back(g);
      }
    c.require(r.lifted.size() == G.size(), tag + ": |G| differs");
    for (std::size_t i = 0; i < G.size() && c.ok; ++i)
      c.require(lwords(G[i]) == r.lifted[i], tag + ": G differs from the oracle");
    if (!r.outer) {
      auto opool = oracle::all_words_up_to(2, 0, pool.back().size());
      const auto o = oracle::least_witness(G, opool, bounds.m_max, bounds.horizon, oracle::word_product, p.eval);
      c.require(!o.witness, tag + ": oracle finds a witness the lift missed");
      continue;
    }
    ++found;
    c.require(r.inner.has_value() && *r.inner == *r.outer, tag + ": inner and outer witnesses differ");
    c.require(r.verified, tag + ": not post-verified");
    for (const auto& f : E)
      for (const auto& x : xs) {
        OWord prod = oracle::from_word(r.outer->a[0]);
        for (std::size_t j = 0; j < r.outer->m; ++j)
          prod = oracle::cat(oracle::cat(prod, f[r.outer->t[j] - 1]), oracle::from_word(r.outer->a[j + 1]));
        c.require(p.eval(oracle::subst(prod, x)), tag + ": nu(product) not in D");
      }
  }
  if (c.ok) c.detail = "200 instances, " + std::to_string(found) + " lifted witnesses checked on every (f, nu)";
  return c;
}

Check criterion6() {
  Check c;
  const Alphabet alpha("ab", 2);
  const auto even = Predicate::length_mod(2, 0);
  const auto start = std::chrono::steady_clock::now();
  const auto lifted = theorem3_lifting(alpha, even, 2);
  const auto direct = theorem3_direct(alpha, even, 2);
  const double elapsed = seconds_since(start);
  c.require(lifted.word.has_value(), "lifting path found nothing");
  c.require(lifted.word == direct.word, "lifting and direct paths differ");
  if (!c.ok) return c;
  const OWord w = oracle::from_word(*lifted.word);
  c.require(oracle::in_sn(w, 2), "word is not in S_2");
  int instances = 0;
  for (const auto& x : oracle::assignments(2, 2)) {
    ++instances;
    c.require(oracle::subst(w, x).size() % 2 == 0, "odd instance");
  }
  const auto o = oracle::least_sn(2, 2, 6, [](const OWord& v) { return v.size() % 2 == 0; });
  c.require(o && *o == w, "oracle least word differs");
  c.require(instances == 4 && lifted.instances.size() == 4, "instance count");
  c.require(elapsed < 5.0, "runtime " + std::to_string(elapsed) + " s");
  if (c.ok) c.detail = "w = " + alpha.format(*lifted.word) + ", 4 even instances, " + std::to_string(elapsed * 1000) + " ms";
  return c;
}

Check criterion7() {
  Check c;
  const Alphabet alpha("ab", 1);
  const std::vector<HomSpec> F{SubstitutionHom{{0}}, SubstitutionHom{{1}}};
  const std::vector<std::pair<std::string, std::function<bool(const OWord&)>>> structures{
      {"true", [](const OWord&) { return true; }},
      {"(length-mod 2 0)", [](const OWord& w) { return w.size() % 2 == 0; }}};
  std::string detail;
  for (const auto& [text, eval] : structures) {
    CSetStructure cs;
    cs.levels = {parse_predicate(alpha, text)};
    const auto r = cset_sequence(alpha, cs, F, 1, 4);
    c.require(r.sequence.size() == 4 && !r.failure, text + ": construction failed");
    if (!c.ok) return c;
    // All (H, phi): H nonempty in {1..4}, phi: H -> F.
    std::set<std::pair<std::vector<int>, OWord>> expected;
    for (int mask = 1; mask < 16; ++mask) {
      std::vector<int> H;
      for (int t = 0; t < 4; ++t)
        if (mask >> t & 1) H.push_back(t);
      for (int choice = 0; choice < (1 << H.size()); ++choice) {
        OWord prod;
        std::vector<int> key;
        for (std::size_t i = 0; i < H.size(); ++i) {
          const int letter = choice >> i & 1;
          prod = oracle::cat(prod, oracle::subst(oracle::from_word(r.sequence[static_cast<std::size_t>(H[i])]), {letter}));
          key.push_back(H[i] * 2 + letter);
        }
        c.require(eval(prod), text + ": oracle product outside D_1");
        expected.insert({key, prod});
      }
    }
    c.require(expected.size() == 80, text + ": oracle count " + std::to_string(expected.size()));
    c.require(r.table.size() == 80 && r.expected_products == 80, text + ": table size " + std::to_string(r.table.size()));
    std::set<std::pair<std::vector<int>, OWord>> got;
    for (const auto& row : r.table) {
      std::vector<int> key;
      for (std::size_t i = 0; i < row.indices.size(); ++i)
        key.push_back((row.indices[i] - 1) * 2 + static_cast<int>(row.homs[i]));
      got.insert({key, oracle::from_word(row.product)});
      c.require(row.in_first_level, text + ": product flagged outside D_1");
    }
    c.require(got == expected, text + ": product table differs from the oracle");
    c.require(r.verified, text + ": not verified");
    detail += (detail.empty() ? "" : "; ") + text + ": 80/80";
  }
  if (c.ok) c.detail = detail;
  return c;
}

Check criterion8() {
  Check c;
  const auto t16 = app::run("lift thm16", {{"alphabet", "ab"}, {"n", 2}, {"k", 1}, {"pred", "true"},
                                           {"patterns", {"#1"}}, {"max_len", 12}});
  c.require(t16.status == app::kFound, "thm16 found nothing");
  if (!c.ok) return c;
  const auto& r16 = t16.certificate["result"];
  c.require(r16["word"] == "#1#2", "thm16 word " + r16["word"].dump());
  const Alphabet two("ab", 2);
  const std::vector<Word> y{two.parse("#1")};
  const auto fp = PsgTruncation::word_products(two, y);
  const auto id = fp.find(r16["fp_indices"].get<IndexSet>());
  c.require(id.has_value(), "fp_indices not an element of FP(y)");
  if (id) c.require(std::get<Word>(fp.element(*id).value) == two.parse(r16["pattern"].get<std::string>()),
                    "FP element differs from the pattern");
  c.require(oracle::extract(oracle::from_word(two.parse(r16["word"].get<std::string>())), 1) ==
                oracle::from_word(two.parse(r16["pattern"].get<std::string>())),
            "pattern is not the extract of w");
  c.require(app::verify(t16.certificate).ok, "thm16 certificate does not verify");

  const auto t17 = app::run("lift thm17", {{"alphabet", "ab"}, {"n", 2}, {"pred", "true"}, {"homs", {"subst a a"}},
                                           {"taus", json::array()}, {"matrix", {{1, 0}, {0, 1}}},
                                           {"fs_prefixes", {{1, 3, 9}, {1, 3, 9}}}, {"max_len", 12}});
  c.require(t17.status == app::kFound, "thm17 found nothing");
  if (!c.ok) return c;
  const auto& r17 = t17.certificate["result"];
  const OWord w = oracle::from_word(two.parse(r17["word"].get<std::string>()));
  const std::vector<std::int64_t> psi{static_cast<std::int64_t>(oracle::count(w, 1)),
                                      static_cast<std::int64_t>(oracle::count(w, 2))};
  c.require(r17["psi"].get<std::vector<std::int64_t>>() == psi, "psi differs from the variable counts");
  const std::vector<std::int64_t> b{1, 3, 9};
  for (std::size_t i = 0; i < 2; ++i) {
    const auto h = r17["fs_indices"][i].get<IndexSet>();
    std::int64_t sum = 0;
    for (int j : h) sum += b.at(static_cast<std::size_t>(j - 1));
    c.require(!h.empty() && sum == psi[i], "coordinate " + std::to_string(i + 1) + " not in FS(1,3,9)");
  }
  c.require(app::verify(t17.certificate).ok, "thm17 certificate does not verify");
  if (c.ok)
    c.detail = "thm16 w = #1#2 via FP index set " + r16["fp_indices"].dump() + "; thm17 w = " +
               r17["word"].get<std::string>() + ", M psi = " + r17["image"].dump();
  return c;
}

// Naive check over all triples; counts the triples where either side is
// defined, which for FS/FP must be exactly the pairwise-disjoint ones.
bool naive_associative(const PsgTruncation& t, std::size_t& defined) {
  for (ElementId x = 0; x < t.size(); ++x)
    for (ElementId y = 0; y < t.size(); ++y)
      for (ElementId z = 0; z < t.size(); ++z) {
        const auto xy = t.op(x, y), yz = t.op(y, z);
        const auto left = xy ? t.op(*xy, z) : std::nullopt;
        const auto right = yz ? t.op(x, *yz) : std::nullopt;
        if (left != right) return false;
        if (left) ++defined;
      }
  return true;
}

// Ordered triples of nonempty pairwise-disjoint subsets of an n-set.
std::size_t disjoint_triples(int n) {
  auto p = [n](std::size_t b) {
    std::size_t r = 1;
    for (int i = 0; i < n; ++i) r *= b;
    return r;
  };
  return p(4) - 3 * p(3) + 3 * p(2) - 1;
}

Check criterion9() {
  Check c;
  gen::Rng rng(9);
  std::size_t truncations = 0, triples = 0;
  for (int gens = 1; gens <= 5; ++gens)
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<std::int64_t> x;
      std::vector<Word> y;
      for (int i = 0; i < gens; ++i) {
        x.push_back(rng.uniform(0, 12));
        y.push_back(oracle::to_word(rng.word(2, 1, 1, 3)));
      }
      const Alphabet one("ab", 1);
      for (const auto& t : {PsgTruncation::numeric(x, PsgMode::kFiniteSums),
                            PsgTruncation::numeric(x, PsgMode::kFiniteProducts),
                            PsgTruncation::word_products(one, y)}) {
        ++truncations;
        const auto report = check_partial_associativity(t);
        c.require(report.associative, "library check reports a violation");
        c.require(report.triples_checked == t.size() * t.size() * t.size(), "library skipped triples");
        std::size_t defined = 0;
        c.require(naive_associative(t, defined), "naive check finds a violation");
        c.require(defined == disjoint_triples(gens), "defined triples are not the disjoint ones");
        triples += defined;
      }
    }
  if (c.ok)
    c.detail = std::to_string(truncations) + " FS/FP truncations, " + std::to_string(triples) +
               " defined triples, no violations";
  return c;
}

Check criterion10() {
  Check c;
  const std::vector<std::pair<std::string, json>> runs{
      {"hj number", {{"k", 2}, {"c", 2}, {"max", 4}, {"mode", "backtracking"}, {"max_nodes", 0}}},
      {"hj line-free", {{"k", 3}, {"c", 2}, {"N", 3}, {"mode", "backtracking"}, {"max_nodes", 0}}},
      {"hj find-line", {{"k", 2}, {"n", 1}, {"colors", "aa\t1\nab\t1\nba\t2\nbb\t2\n"}}},
      {"jset check",
       {{"alphabet", "ab"}, {"pred", "(length-mod 2 0)"}, {"seqs", "power a\nlist b ab bab aab\n"},
        {"m_max", 2}, {"horizon", 4}, {"pool_len", 2}}},
      {"jset check",
       {{"alphabet", "ab"}, {"pred", "(value-mod 3 0)"}, {"seqs", "linear 1 0\nlinear 2 1\n"},
        {"m_max", 2}, {"horizon", 5}, {"pool_len", 4}}},
      {"psg adequacy", {{"config", {{"mode", "FS"}, {"generators", {1, 2, 3, 4, 5}}}}, {"bound", 2}}},
      {"psg sigma", {{"config", {{"mode", "FS"}, {"generators", {1, 2, 3}}}}, {"elements", {{1}, {2}}}}},
      {"lift lemma1",
       {{"alphabet", "ab"}, {"n", 1}, {"pred", "(length-mod 2 0)"}, {"seqs", "power a#1\n"},
        {"homs", json::array()}, {"m_max", 2}, {"horizon", 4}, {"pool_len", 2}}},
      {"lift thm3", {{"alphabet", "ab"}, {"n", 2}, {"pred", "(length-mod 2 0)"}, {"max_len", 8}}},
      {"lift fs1", {{"alphabet", "ab"}, {"pred", "(contains b)"}, {"x", {3, 5}}, {"max_len", 8}}},
      {"lift thm16",
       {{"alphabet", "ab"}, {"n", 2}, {"k", 1}, {"pred", "(length-mod 2 0)"}, {"patterns", {"#1#1"}}, {"max_len", 8}}},
      {"lift thm17",
       {{"alphabet", "ab"}, {"n", 2}, {"pred", "true"}, {"homs", {"subst a b"}}, {"taus", json::array()},
        {"matrix", {{1, 1}, {0, 2}}}, {"fs_prefixes", {{1, 2}, {2, 4}}}, {"max_len", 8}}},
      {"lift cset",
       {{"alphabet", "ab"}, {"n", 1}, {"structure", {{"levels", {"(length-mod 2 0)"}}}}, {"homs", json::array()},
        {"len", 3}, {"max_len", 8}, {"sample_len", 3}}},
  };
  std::size_t compared = 0;
  for (const auto& [sub, input] : runs) {
    const auto base = app::run(sub, input, 1);
    const std::string dump = base.certificate["result"].dump();
    for (unsigned threads : {2u, 8u}) {
      const auto other = app::run(sub, input, threads);
      c.require(other.certificate["result"].dump() == dump, sub + ": result differs at " + std::to_string(threads) +
                                                                " threads");
      c.require(other.certificate["determinism"]["result_hash"] == base.certificate["determinism"]["result_hash"],
                sub + ": hash differs");
      ++compared;
    }
  }

  // Permuted pools, library level.
  gen::Rng rng(10);
  std::size_t permuted = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = gen::word_predicate(rng, 2, 2);
    const auto pred = parse_predicate(kAb, p.text);
    std::vector<std::vector<Word>> family;
    for (int i = rng.uniform(1, 2); i > 0; --i) {
      std::vector<OWord> f;
      for (int t = 0; t < 4; ++t) f.push_back(rng.word(2, 0, 1, 3));
      family.push_back(lwords(f));
    }
    auto pool = word_pool(kAb, 2);
    const auto base = find_witness(pred, family, pool, {2, 4});
    for (unsigned threads : {1u, 2u, 8u}) {
      std::shuffle(pool.begin(), pool.end(), rng.engine());
      const auto r = find_witness(pred, family, pool, {2, 4}, {threads});
      c.require(r.witness == base.witness && r.candidates_checked == base.candidates_checked,
                "permuted pool changes the witness");
      ++permuted;
    }
    std::vector<std::int64_t> npool{4, 1, 3, 2};
    const std::vector<std::vector<std::int64_t>> nf{{3, 1, 4, 1}, {5, 9, 2, 6}};
    const auto pn = parse_predicate(kAb, gen::int_predicate(rng).text);
    const auto nb = find_witness(pn, nf, numeric_pool(4), {2, 4});
    for (unsigned threads : {1u, 2u, 8u}) {
      std::shuffle(npool.begin(), npool.end(), rng.engine());
      const auto r = find_witness(pn, nf, npool, {2, 4}, {threads});
      c.require(r.witness == nb.witness && r.candidates_checked == nb.candidates_checked,
                "permuted numeric pool changes the witness");
      ++permuted;
    }
  }
  if (c.ok)
    c.detail = std::to_string(compared) + " thread comparisons over " + std::to_string(runs.size()) +
               " searches, " + std::to_string(permuted) + " permuted-pool reruns; all byte-identical";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"HJ number for two letters, two colors is 2", criterion1},
      {"line-free coloring at (3, 2, 3), 37 roots", criterion2},
      {"J-set witness soundness, 500 instances", criterion3},
      {"even-length words, 100 families", criterion4},
      {"witness lifting through homomorphisms, 200 instances", criterion5},
      {"S_2 word with all instances even, lifted == direct", criterion6},
      {"C-set product sequence, 80 products", criterion7},
      {"FP-pattern and FS-matrix certificates re-verify", criterion8},
      {"partial associativity, <= 5 generators", criterion9},
      {"determinism across threads and pools", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    if (!c.ok) ++failed;
    std::printf("criterion %2zu: %s - %s (%s)\n", i + 1, c.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                c.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
