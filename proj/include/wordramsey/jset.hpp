#pragma once

// Bounded J-set witness search.
//
// For a finite family F of sequences, a witness is (m, a, t) with
// t_1 < ... < t_m and a in S^{m+1} such that every product
// a_1 f(t_1) a_2 f(t_2) ... a_m f(t_m) a_{m+1} lies in the target set.
// Searches return the least witness in (m, t, a) lexicographic order, with
// the a-pool sorted canonically first. An exhausted search is only a bounded
// negative: it never shows that a set is not a J-set.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordramsey/parallel.hpp"
#include "wordramsey/predicate.hpp"
#include "wordramsey/psg.hpp"
#include "wordramsey/words.hpp"

namespace wordramsey {

struct JBounds {
  std::size_t m_max = 2;
  std::size_t horizon = 8;
};

template <class T>
struct Witness {
  std::size_t m = 0;
  std::vector<T> a;            // m + 1 entries
  std::vector<std::size_t> t;  // m strictly increasing 1-based indices

  friend bool operator==(const Witness&, const Witness&) = default;
};

template <class T>
struct WitnessSearch {
  std::optional<Witness<T>> witness;
  // Candidates in canonical order up to and including the witness, or all
  // candidates when exhausted.
  std::uint64_t candidates_checked = 0;

  bool exhausted() const noexcept { return !witness.has_value(); }
};

// (omega, +), optionally reduced modulo `modulus`.
struct NumericSemigroup {
  std::optional<std::int64_t> modulus;

  std::int64_t op(std::int64_t a, std::int64_t b) const { return modulus ? (a + b) % *modulus : a + b; }
};

WitnessSearch<Word> find_witness(const Predicate& target, std::span<const std::vector<Word>> family,
                                 std::vector<Word> pool, const JBounds& bounds,
                                 const SearchOptions& options = {});

WitnessSearch<std::int64_t> find_witness(const Predicate& target,
                                         std::span<const std::vector<std::int64_t>> family,
                                         std::vector<std::int64_t> pool, const JBounds& bounds,
                                         const SearchOptions& options = {}, NumericSemigroup semigroup = {});

// Target A cap sigma(L); candidates with an undefined partial product are
// skipped. An empty L leaves sigma unconstrained. An empty pool means every
// element of the truncation.
WitnessSearch<ElementId> find_witness_adequate(const Predicate& target,
                                               std::span<const std::vector<ElementId>> family,
                                               std::span<const ElementId> constraint, const PsgTruncation& t,
                                               std::vector<ElementId> pool, const JBounds& bounds,
                                               const SearchOptions& options = {});

// All words of T = S_n cup S_0 with length 1..max_length, shortlex. With
// n = 0 this is the S_0 pool.
std::vector<Word> word_pool(const Alphabet& alphabet, std::size_t max_length, int n = 0);
std::vector<std::int64_t> numeric_pool(std::size_t horizon);

struct Refutation {
  int n = 1;
  Word base;  // f(t) = base^t, base = v_1 ... v_n
  std::uint64_t candidates_checked = 0;
  std::uint64_t passing = 0;
  std::string argument;
};

// Bounded obstruction to S_0 being a J-set in S_n cup S_0: for f(t) = base^t
// no candidate product avoids the variables.
Refutation refute_s0_jset(const Alphabet& alphabet, int n, const JBounds& bounds, std::size_t pool_length,
                          const SearchOptions& options = {});

}  // namespace wordramsey
