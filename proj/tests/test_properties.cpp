#include <doctest.h>

#include <numeric>

#include "gen.hpp"
#include "oracles.hpp"
#include "wordramsey/hj.hpp"
#include "wordramsey/jset.hpp"
#include "wordramsey/lift.hpp"
#include "wordramsey/psg.hpp"
#include "wordramsey/verify.hpp"

using namespace wordramsey;
using oracle::OWord;

namespace {

const Alphabet ab("ab", 3);

std::vector<OWord> owords(const std::vector<Word>& ws) {
  std::vector<OWord> out;
  for (const auto& w : ws) out.push_back(oracle::from_word(w));
  return out;
}

std::vector<Word> lwords(const std::vector<OWord>& ws) {
  std::vector<Word> out;
  for (const auto& w : ws) out.push_back(oracle::to_word(w));
  return out;
}

}  // namespace

TEST_CASE("concatenation is associative on all words up to length 4") {
  auto words = oracle::all_words_up_to(2, 0, 4);
  words.insert(words.begin(), OWord{});
  std::size_t checked = 0;
  for (const auto& x : words)
    for (const auto& y : words)
      for (const auto& z : words) {
        const Word a = oracle::to_word(x), b = oracle::to_word(y), c = oracle::to_word(z);
        const Word left = concat(concat(a, b), c);
        if (left != concat(a, concat(b, c))) FAIL("associativity fails at ", oracle::text(x), oracle::text(y));
        ++checked;
      }
  CHECK(checked == 31u * 31u * 31u);
}

TEST_CASE("substitution is a homomorphism and matches the oracle") {
  const auto words = oracle::all_words_up_to(2, 2, 3);
  std::vector<OWord> sn;
  for (const auto& w : words)
    if (oracle::in_sn(w, 2)) sn.push_back(w);
  for (const auto& x : oracle::assignments(2, 2)) {
    const std::vector<Symbol> xs(x.begin(), x.end());
    for (const auto& w1 : sn) {
      const Word s1 = substitute(ab, oracle::to_word(w1), xs);
      REQUIRE(oracle::from_word(s1) == oracle::subst(w1, x));
      CHECK_FALSE(s1.has_variables());
      CHECK(s1.size() == w1.size());
      for (const auto& w2 : sn) {
        const Word joint = substitute(ab, oracle::to_word(oracle::cat(w1, w2)), xs);
        if (joint != concat(s1, substitute(ab, oracle::to_word(w2), xs))) FAIL("hom law fails");
      }
    }
  }
}

TEST_CASE("pattern_extract is a homomorphism into v_1..v_k words") {
  std::vector<OWord> s3;
  for (const auto& w : oracle::all_words_up_to(1, 3, 4))
    if (oracle::in_sn(w, 3)) s3.push_back(w);
  for (int k = 1; k <= 2; ++k)
    for (const auto& w1 : s3) {
      const Word e1 = pattern_extract(ab, oracle::to_word(w1), 3, k);
      REQUIRE(oracle::from_word(e1) == oracle::extract(w1, k));
      CHECK(ab.in_sn(e1, k));
      for (const auto& w2 : s3) {
        const Word joint = pattern_extract(ab, oracle::to_word(oracle::cat(w1, w2)), 3, k);
        if (joint != concat(e1, pattern_extract(ab, oracle::to_word(w2), 3, k))) FAIL("extract hom law fails");
      }
    }
}

TEST_CASE("var_count is additive") {
  const auto words = oracle::all_words_up_to(2, 2, 3);
  for (const auto& w1 : words)
    for (const auto& w2 : words)
      for (int i = 1; i <= 2; ++i) {
        const auto joint = var_count(oracle::to_word(oracle::cat(w1, w2)), i);
        if (joint != var_count(oracle::to_word(w1), i) + var_count(oracle::to_word(w2), i)) FAIL("additivity fails");
        if (joint != oracle::count(oracle::cat(w1, w2), i)) FAIL("count disagrees with oracle");
      }
}

TEST_CASE("predicates agree with generated evaluators") {
  gen::Rng rng(11);
  const Alphabet abc("abc");
  const auto words = oracle::all_words_up_to(3, 0, 4);
  for (int trial = 0; trial < 150; ++trial) {
    const auto p = gen::word_predicate(rng, 3, 3);
    CAPTURE(p.text);
    const auto pred = parse_predicate(abc, p.text);
    const auto again = parse_predicate(abc, pred.to_string(abc));
    for (const auto& w : words) {
      const Word lw = oracle::to_word(w);
      if (pred(lw) != p.eval(w) || again(lw) != p.eval(w)) FAIL("predicate mismatch on ", oracle::text(w));
    }
  }
}

TEST_CASE("word-table homomorphisms fix S_0 iff every letter is fixed") {
  gen::Rng rng(5);
  const Alphabet one("ab", 1);
  for (int trial = 0; trial < 40; ++trial) {
    UserTableHom h;
    bool fixes = true;
    for (int s = 0; s < 2; ++s) {
      const auto img = rng.coin() ? OWord{s} : rng.word(2, 0, 1, 2);
      fixes = fixes && img == OWord{s};
      h.images[static_cast<Symbol>(s)] = oracle::to_word(img);
    }
    h.images[variable(1)] = oracle::to_word(rng.word(2, 0, 1, 2));
    const auto r = check_hom_properties(one, h, 3);
    CHECK(r.is_homomorphism);
    CHECK(r.fixes_s0 == fixes);
  }
}

TEST_CASE("phi, sigma and left_quotient agree with set comprehensions") {
  gen::Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int gens = rng.uniform(1, 6);
    PsgTruncation t = [&] {
      if (trial % 3 == 2) {
        std::vector<Word> y;
        for (int i = 0; i < gens; ++i) y.push_back(oracle::to_word(rng.word(2, 0, 1, 3)));
        return PsgTruncation::word_products(ab, y);
      }
      std::vector<std::int64_t> x;
      for (int i = 0; i < gens; ++i) x.push_back(rng.uniform(0, 9));
      return PsgTruncation::numeric(x, trial % 3 == 0 ? PsgMode::kFiniteSums : PsgMode::kFiniteProducts);
    }();
    REQUIRE(t.size() <= 63);
    auto defined = [&](ElementId g, ElementId h) { return t.op(g, h).has_value(); };
    for (ElementId g = 0; g < t.size(); ++g) {
      std::vector<ElementId> expect;
      for (ElementId h = 0; h < t.size(); ++h)
        if (defined(g, h)) expect.push_back(h);
      CHECK(phi(t, g) == expect);
      CHECK(expect == oracle::phi_mask(gens, static_cast<std::uint32_t>(g + 1)));

      std::vector<ElementId> target;
      for (ElementId h = 0; h < t.size(); ++h)
        if (rng.coin()) target.push_back(h);
      std::vector<ElementId> quotient;
      for (ElementId h : expect)
        if (std::find(target.begin(), target.end(), *t.op(g, h)) != target.end()) quotient.push_back(h);
      CHECK(left_quotient(t, g, target) == quotient);
    }
    for (int k = 0; k < 10; ++k) {
      std::vector<ElementId> hs;
      const int size = rng.uniform(1, 3);
      for (int i = 0; i < size; ++i) hs.push_back(static_cast<ElementId>(rng.uniform(0, static_cast<int>(t.size()) - 1)));
      std::vector<ElementId> expect;
      for (ElementId z = 0; z < t.size(); ++z)
        if (std::all_of(hs.begin(), hs.end(), [&](ElementId h) { return defined(h, z); })) expect.push_back(z);
      CHECK(sigma(t, hs) == expect);
      CHECK(verify::sigma_naive(t, hs) == expect);
    }
  }
}

TEST_CASE("FS truncations are partially associative and commutative") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::int64_t> x;
    for (int i = rng.uniform(1, 5); i > 0; --i) x.push_back(rng.uniform(1, 20));
    const auto fs = PsgTruncation::numeric(x, PsgMode::kFiniteSums);
    CHECK(check_partial_associativity(fs).associative);
    CHECK(is_commutative(fs));
    for (ElementId i = 0; i < fs.size(); ++i)
      CHECK(std::get<std::int64_t>(fs.element(i).value) == oracle::fs_value(x, static_cast<std::uint32_t>(i + 1)));
  }
}

TEST_CASE("witnesses are canonical under pool permutation and thread count") {
  gen::Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = gen::word_predicate(rng, 2, 2);
    const auto pred = parse_predicate(ab, p.text);
    std::vector<std::vector<Word>> family;
    for (int i = rng.uniform(1, 2); i > 0; --i) {
      std::vector<Word> f;
      for (int t = 0; t < 4; ++t) f.push_back(oracle::to_word(rng.word(2, 0, 1, 3)));
      family.push_back(f);
    }
    auto pool = word_pool(ab, 2);
    const auto base = find_witness(pred, family, pool, {2, 4});
    std::shuffle(pool.begin(), pool.end(), rng.engine());
    for (unsigned threads : {1u, 2u, 8u}) {
      const auto r = find_witness(pred, family, pool, {2, 4}, {threads});
      CHECK(r.witness == base.witness);
      CHECK(r.candidates_checked == base.candidates_checked);
    }
  }
}

TEST_CASE("superset monotonicity") {
  gen::Rng rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = gen::word_predicate(rng, 2, 2);
    const auto b = gen::word_predicate(rng, 2, 2);
    const auto pa = parse_predicate(ab, a.text);
    const auto wider = parse_predicate(ab, "(or " + a.text + " " + b.text + ")");
    std::vector<std::vector<Word>> family;
    for (int i = rng.uniform(1, 3); i > 0; --i) {
      std::vector<Word> f;
      for (int t = 0; t < 4; ++t) f.push_back(oracle::to_word(rng.word(2, 0, 1, 2)));
      family.push_back(f);
    }
    const auto pool = word_pool(ab, 2);
    const auto r = find_witness(pa, family, pool, {2, 4});
    const auto w = find_witness(wider, family, pool, {2, 4});
    if (r.witness) {
      CHECK(w.witness.has_value());
      // The wider set is found no later in canonical order.
      CHECK(w.candidates_checked <= r.candidates_checked);
    }
  }
}

TEST_CASE("find_witness agrees with the oracle enumeration") {
  gen::Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = gen::word_predicate(rng, 2, 2);
    CAPTURE(p.text);
    const auto pred = parse_predicate(ab, p.text);
    std::vector<std::vector<OWord>> ofam;
    for (int i = rng.uniform(0, 2); i > 0; --i) {
      std::vector<OWord> f;
      for (int t = 0; t < 3; ++t) f.push_back(rng.word(2, 0, 1, 2));
      ofam.push_back(f);
    }
    std::vector<std::vector<Word>> family;
    for (const auto& f : ofam) family.push_back(lwords(f));
    auto opool = oracle::all_words_up_to(2, 0, 2);
    const auto r = find_witness(pred, family, lwords(opool), {2, 3});
    const auto o = oracle::least_witness(ofam, opool, 2, 3, oracle::word_product, p.eval);
    CHECK(r.witness.has_value() == o.witness.has_value());
    CHECK(r.candidates_checked == o.rank);
    if (r.witness && o.witness) {
      CHECK(r.witness->t == o.witness->t);
      CHECK(owords(r.witness->a) == o.witness->a);
    }
  }
}

TEST_CASE("even-length words: a witness with m <= 2 always exists") {
  gen::Rng rng(37);
  const auto even = Predicate::length_mod(2, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const int size = rng.uniform(1, 3);
    const std::size_t horizon = 2 * (std::size_t{1} << size) + 1;
    std::vector<std::vector<Word>> family;
    for (int i = 0; i < size; ++i) {
      std::vector<Word> f;
      for (std::size_t t = 0; t < horizon; ++t) f.push_back(oracle::to_word(rng.word(2, 1, 1, 4)));
      family.push_back(f);
    }
    const auto r = find_witness(even, family, word_pool(ab, 2), {2, horizon});
    REQUIRE(r.witness);
    CHECK(r.witness->m <= 2);
    CHECK(verify::verify_witness(even, family, *r.witness));
  }
}

TEST_CASE("total-case equality of the adequate and plain searches") {
  // (Z/q, +) as a total table; an empty L leaves sigma unconstrained.
  gen::Rng rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const int q = rng.uniform(2, 5);
    std::vector<std::string> names;
    std::vector<std::vector<std::optional<ElementId>>> table(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) {
      names.push_back(std::to_string(i));
      for (int j = 0; j < q; ++j) table[static_cast<std::size_t>(i)].push_back(static_cast<ElementId>((i + j) % q));
    }
    const auto t = PsgTruncation::from_table(names, table);
    std::vector<Value> accept_names, accept_ints;
    for (int i = 0; i < q; ++i)
      if (rng.coin()) {
        accept_names.push_back(std::to_string(i));
        accept_ints.push_back(std::int64_t{i});
      }
    std::vector<std::vector<ElementId>> ids;
    std::vector<std::vector<std::int64_t>> ints;
    for (int f = rng.uniform(1, 2); f > 0; --f) {
      std::vector<ElementId> a;
      std::vector<std::int64_t> b;
      for (int k = 0; k < 4; ++k) {
        const int v = rng.uniform(0, q - 1);
        a.push_back(static_cast<ElementId>(v));
        b.push_back(v);
      }
      ids.push_back(a);
      ints.push_back(b);
    }
    std::vector<std::int64_t> pool(static_cast<std::size_t>(q));
    std::iota(pool.begin(), pool.end(), std::int64_t{0});
    const auto adequate = find_witness_adequate(Predicate::member_of(accept_names), ids, {}, t, {}, {2, 4});
    const auto plain = find_witness(Predicate::member_of(accept_ints), ints, pool, {2, 4}, {}, NumericSemigroup{q});
    CHECK(adequate.candidates_checked == plain.candidates_checked);
    REQUIRE(adequate.witness.has_value() == plain.witness.has_value());
    if (plain.witness) {
      CHECK(adequate.witness->t == plain.witness->t);
      for (std::size_t i = 0; i < plain.witness->a.size(); ++i)
        CHECK(static_cast<std::int64_t>(adequate.witness->a[i]) == plain.witness->a[i]);
    }
  }
}

TEST_CASE("theorem3: lifting and direct enumeration agree") {
  gen::Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = gen::word_predicate(rng, 2, 2);
    CAPTURE(p.text);
    const auto pred = parse_predicate(ab, p.text);
    const int n = rng.uniform(1, 2);
    const auto d = theorem3_direct(ab, pred, n, 5);
    const auto l = theorem3_lifting(ab, pred, n, 5);
    CHECK(d.word == l.word);
    CHECK(d.words_checked == l.words_checked);
    const auto o = oracle::least_sn(2, n, 5, [&](const OWord& w) {
      for (const auto& x : oracle::assignments(2, n))
        if (!p.eval(oracle::subst(w, x))) return false;
      return true;
    });
    CHECK(d.word.has_value() == o.has_value());
    if (d.word && o) CHECK(oracle::from_word(*d.word) == *o);
  }
}

TEST_CASE("line search agrees with the oracle on random colorings") {
  gen::Rng rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = rng.uniform(2, 3), len = rng.uniform(1, 3), c = rng.uniform(2, 3);
    std::vector<int> cells(cube_size(k, len));
    for (auto& x : cells) x = rng.uniform(1, c);
    std::size_t roots = 0;
    const auto o = oracle::mono_root(k, len, cells, &roots);
    for (unsigned threads : {1u, 3u}) {
      const auto r = find_mono_line(Coloring(k, len, c, cells), 1, {threads});
      CHECK(r.line.has_value() == o.has_value());
      CHECK(r.roots_checked == roots);
      if (r.line && o) CHECK(oracle::from_word(r.line->root) == *o);
    }
  }
}
