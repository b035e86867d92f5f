#pragma once

// Independent re-checkers. Nothing here calls into the search engines: each
// routine recomputes products, instances and lines with its own loops so a
// certificate can be replayed without trusting the code that produced it.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordramsey/jset.hpp"
#include "wordramsey/predicate.hpp"
#include "wordramsey/psg.hpp"
#include "wordramsey/words.hpp"

namespace wordramsey::verify {

// a_1 f(t_1) ... a_m f(t_m) a_{m+1} for one sequence; throws BoundError when
// an index exceeds the prefix.
Word alternating_product(const std::vector<Word>& f, const Witness<Word>& w);
std::int64_t alternating_product(const std::vector<std::int64_t>& f, const Witness<std::int64_t>& w,
                                 NumericSemigroup semigroup = {});
std::optional<ElementId> alternating_product(const PsgTruncation& t, const std::vector<ElementId>& f,
                                             const Witness<ElementId>& w);

bool verify_witness(const Predicate& target, std::span<const std::vector<Word>> family, const Witness<Word>& w);
bool verify_witness(const Predicate& target, std::span<const std::vector<std::int64_t>> family,
                    const Witness<std::int64_t>& w, NumericSemigroup semigroup = {});
bool verify_witness_adequate(const Predicate& target, std::span<const std::vector<ElementId>> family,
                             std::span<const ElementId> constraint, const PsgTruncation& t,
                             const Witness<ElementId>& w);

struct Enumeration {
  std::uint64_t total = 0;
  std::uint64_t passing = 0;
  std::uint64_t first_rank = 0;  // 1-based rank of the first passing candidate
};

// Plain nested enumeration of every (m, t, a) candidate within the bounds.
// For the adequate forms an empty pool means every element of t.
Enumeration enumerate_candidates(const Predicate& target, std::span<const std::vector<Word>> family,
                                 std::span<const Word> pool, const JBounds& bounds);
Enumeration enumerate_candidates(const Predicate& target, std::span<const std::vector<std::int64_t>> family,
                                 std::span<const std::int64_t> pool, const JBounds& bounds,
                                 NumericSemigroup semigroup = {});
Enumeration enumerate_candidates_adequate(const Predicate& target, std::span<const std::vector<ElementId>> family,
                                          std::span<const ElementId> constraint, const PsgTruncation& t,
                                          std::span<const ElementId> pool, const JBounds& bounds);

template <class T>
struct LeastCandidate {
  std::optional<Witness<T>> witness;
  std::uint64_t rank = 0;  // rank of the witness, or the candidate total
};

// First passing candidate over the sorted, deduplicated pool.
LeastCandidate<Word> least_candidate(const Predicate& target, std::span<const std::vector<Word>> family,
                                     std::span<const Word> pool, const JBounds& bounds);
LeastCandidate<std::int64_t> least_candidate(const Predicate& target,
                                             std::span<const std::vector<std::int64_t>> family,
                                             std::span<const std::int64_t> pool, const JBounds& bounds,
                                             NumericSemigroup semigroup = {});
LeastCandidate<ElementId> least_candidate_adequate(const Predicate& target,
                                                   std::span<const std::vector<ElementId>> family,
                                                   std::span<const ElementId> constraint, const PsgTruncation& t,
                                                   std::span<const ElementId> pool, const JBounds& bounds);

// Words over letters 0..k-1 and v_1..v_n (symbol codes as in words.hpp).
Word instance(const Word& w, std::span<const Symbol> x);
bool all_instances_in(const Word& w, int k, int n, const Predicate& target);
bool is_n_variable_word(const Word& w, int k, int n);

struct LeastWord {
  std::optional<Word> word;
  std::uint64_t checked = 0;
};

// Least n-variable word (shortlex) accepted, scanning lengths n..max_length.
// With stop_after, the scan ends once that word has been rejected.
LeastWord least_sn_word(int k, int n, std::size_t max_length, const std::function<bool(const Word&)>& accept,
                        std::optional<Word> stop_after = std::nullopt);

std::vector<ElementId> sigma_naive(const PsgTruncation& t, std::span<const ElementId> hset);

// Lines over the first k letters, roots in the textual form ("a#1b").
std::vector<std::string> line_points(int k, const std::string& root, int n);

struct LineFreeCheck {
  bool line_free = true;
  std::uint64_t roots = 0;
  std::string first_mono_root;
};

// cells[rank] with rank the base-k value of the word. Checks every n-variable
// root of length N.
LineFreeCheck check_line_free(int k, int length, std::span<const int> cells, int n = 1);

// Brute force over all colorings with colors 1..c: does any avoid
// monochromatic 1-variable lines? Returns the lexicographically least one.
std::optional<std::vector<int>> brute_force_line_free(int k, int colors, int length);

std::string format_word_text(int k, const std::vector<int>& letters);

}  // namespace wordramsey::verify
