#include <doctest.h>

#include "oracles.hpp"
#include "wordramsey/error.hpp"
#include "wordramsey/hj.hpp"
#include "wordramsey/verify.hpp"

using namespace wordramsey;

namespace {

const Alphabet ab = Alphabet::first_letters(2, 2);

Coloring starts_with_a() {
  // aa ab ba bb
  return Coloring(2, 2, 2, {1, 1, 2, 2});
}

}  // namespace

TEST_CASE("find_mono_line examples") {
  SUBCASE("first letter coloring") {
    const auto r = find_mono_line(starts_with_a(), 1);
    REQUIRE(r.line);
    CHECK(ab.format(r.line->root) == "a#1");
    CHECK(r.line->points == std::vector<Word>{ab.parse("aa"), ab.parse("ab")});
    CHECK(r.line->color == 1);
    CHECK(r.roots_checked == 1);
  }
  SUBCASE("constant coloring at N = 1") {
    const auto r = find_mono_line(Coloring(2, 1, 1, {1, 1}), 1);
    REQUIRE(r.line);
    CHECK(ab.format(r.line->root) == "#1");
  }
  SUBCASE("line-free coloring at N = 3") {
    const auto lf = search_line_free(3, 2, 3);
    REQUIRE(lf.coloring);
    const auto r = find_mono_line(*lf.coloring, 1);
    CHECK_FALSE(r.line);
    CHECK(r.roots_checked == 37);
  }
}

TEST_CASE("two-variable lines") {
  // Constant coloring of A^2: the only 2-variable roots are #1#2 and #2#1.
  const auto r = find_mono_line(Coloring(2, 2, 1, {1, 1, 1, 1}), 2);
  REQUIRE(r.line);
  CHECK(ab.format(r.line->root) == "#1#2");
  CHECK(r.line->points.size() == 4);
  const auto none = find_mono_line(Coloring(2, 2, 2, {1, 2, 2, 2}), 2);
  CHECK_FALSE(none.line);
  CHECK(none.roots_checked == 2);
}

TEST_CASE("cumulative domain returns the shortest root") {
  const std::vector<Coloring> slices{Coloring(2, 1, 2, {1, 2}), starts_with_a()};
  const auto r = find_mono_line(slices, 1);
  REQUIRE(r.line);
  CHECK(ab.format(r.line->root) == "a#1");
}

TEST_CASE("search_line_free examples") {
  const auto one = search_line_free(2, 2, 1);
  CHECK(one.status == LineFreeStatus::kFound);
  REQUIRE(one.coloring);
  CHECK(std::vector<int>(one.coloring->cells().begin(), one.coloring->cells().end()) == std::vector<int>{1, 2});

  const auto two = search_line_free(2, 2, 2);
  CHECK(two.status == LineFreeStatus::kNone);
  CHECK_FALSE(two.coloring);

  const auto three = search_line_free(3, 2, 3);
  CHECK(three.status == LineFreeStatus::kFound);
  REQUIRE(three.coloring);
  CHECK(three.lines == 37);
  CHECK(three.cylinder_ok == true);
  const std::vector<int> cells(three.coloring->cells().begin(), three.coloring->cells().end());
  CHECK_FALSE(oracle::mono_root(3, 3, cells));

  CHECK_THROWS_AS(search_line_free(3, 2, 5), BoundError);
  LineFreeOptions ex;
  ex.mode = LineFreeMode::kExhaustive;
  CHECK_THROWS_AS(search_line_free(3, 2, 4, ex), BoundError);
}

TEST_CASE("exhaustive and backtracking agree with brute force on the least coloring") {
  LineFreeOptions ex;
  ex.mode = LineFreeMode::kExhaustive;
  for (auto [k, c, n] : {std::tuple{2, 2, 1}, {2, 2, 2}, {2, 3, 2}, {3, 2, 2}, {2, 2, 3}}) {
    CAPTURE(k);
    CAPTURE(c);
    CAPTURE(n);
    std::vector<int> first;
    const bool exists = oracle::any_line_free(k, c, n, &first);
    const auto e = search_line_free(k, c, n, ex);
    const auto b = search_line_free(k, c, n);
    CHECK((e.status == LineFreeStatus::kFound) == exists);
    CHECK((b.status == LineFreeStatus::kFound) == exists);
    if (exists && e.coloring && b.coloring) {
      CHECK(std::vector<int>(e.coloring->cells().begin(), e.coloring->cells().end()) == first);
      CHECK(*e.coloring == *b.coloring);
    }
  }
}

TEST_CASE("node budget reports exhaustion") {
  LineFreeOptions o;
  o.max_nodes = 3;
  const auto r = search_line_free(3, 2, 3, o);
  CHECK(r.status == LineFreeStatus::kBudgetExhausted);
}

TEST_CASE("hj_number") {
  const auto k1 = hj_number(1, 3, 2);
  CHECK(k1.number == 1);
  const auto k2 = hj_number(2, 2, 4);
  CHECK(k2.number == 2);
  CHECK(k2.per_length.size() == 2);
  const auto k3 = hj_number(3, 2, 3);
  CHECK_FALSE(k3.number);
  CHECK(k3.max_length == 3);
}

TEST_CASE("cylinder restriction") {
  // c(w) = first letter on A^2; appending b keeps the first letter.
  const auto r = cylinder_restriction(starts_with_a(), 1);
  CHECK(r.length() == 1);
  CHECK(std::vector<int>(r.cells().begin(), r.cells().end()) == std::vector<int>{1, 2});
}

TEST_CASE("coloring rank matches the base-k oracle") {
  const Coloring c(3, 3, 1, std::vector<int>(27, 1));
  for (std::size_t r = 0; r < 27; ++r) {
    const auto w = c.word_at(r);
    CHECK(c.rank(w) == r);
    CHECK(oracle::rank_of(3, oracle::from_word(w)) == r);
  }
  CHECK_THROWS(Coloring(2, 2, 2, {1, 2, 3, 1}));
  CHECK_THROWS(Coloring(2, 2, 2, {1, 2}));
}

TEST_CASE("independent line checker agrees with the oracle") {
  const auto lf = search_line_free(3, 2, 3);
  REQUIRE(lf.coloring);
  const std::vector<int> cells(lf.coloring->cells().begin(), lf.coloring->cells().end());
  const auto check = verify::check_line_free(3, 3, cells);
  CHECK(check.line_free);
  CHECK(check.roots == 37);
  std::size_t roots = 0;
  CHECK_FALSE(oracle::mono_root(3, 3, cells, &roots));
  CHECK(roots == 37);
  CHECK(verify::line_points(2, "a#1", 1) == std::vector<std::string>{"aa", "ab"});
}
