#pragma once

// Witness-producing forms of the lifting results: J-set witnesses pulled
// back through homomorphisms that fix S_0, and the constrained existence of
// n-variable words whose instances all land in a target set D.
//
// Every search scans S_n in shortlex order (variables after letters) up to a
// word-length budget and returns the least word meeting all constraints.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wordramsey/jset.hpp"
#include "wordramsey/parallel.hpp"
#include "wordramsey/predicate.hpp"
#include "wordramsey/psg.hpp"
#include "wordramsey/words.hpp"

namespace wordramsey {

inline constexpr std::size_t kDefaultWordBudget = 12;
inline constexpr std::size_t kDefaultHomCheckBound = 3;

struct SnSearch {
  std::optional<Word> word;
  std::uint64_t words_checked = 0;  // S_n words up to and including the answer
};

SnSearch first_in_sn(const Alphabet& alphabet, int n, std::size_t max_length,
                     const std::function<bool(const Word&)>& accept, const SearchOptions& options = {});

// Every x in A^n, lexicographic.
std::vector<std::vector<Symbol>> all_assignments(const Alphabet& alphabet, int n);

struct InstanceRow {
  std::vector<Symbol> x;
  Word instance;
  bool in_target = false;
};

std::vector<InstanceRow> instance_table(const Alphabet& alphabet, const Word& w, int n, const Predicate& target);

// ---------------------------------------------------------------------------

struct LiftRow {
  std::size_t sequence = 0;
  std::size_t hom = 0;
  Word product;  // a_1 f(t_1) ... a_{m+1} in T
  Word image;    // nu(product) in S_0
  bool in_target = false;
};

struct Lemma1Result {
  std::vector<std::vector<Word>> lifted;  // G: index sequence * |F| + hom
  std::optional<Witness<Word>> inner;     // witness for D against G in S_0
  std::optional<Witness<Word>> outer;     // the same tuple read in T
  std::uint64_t candidates_checked = 0;
  std::vector<LiftRow> table;
  bool verified = false;
};

// Homomorphisms are checked (homomorphism, identity on S_0) on all words up
// to hom_check_bound; 0 skips the check.
Lemma1Result lemma1_lift(const Alphabet& alphabet, std::span<const std::vector<Word>> sequences,
                         std::span<const HomSpec> homs, const Predicate& target, std::vector<Word> pool,
                         const JBounds& bounds, const SearchOptions& options = {},
                         std::size_t hom_check_bound = kDefaultHomCheckBound);

struct Theorem3Result {
  std::optional<Word> word;
  std::uint64_t words_checked = 0;
  std::vector<InstanceRow> instances;
};

Theorem3Result theorem3_direct(const Alphabet& alphabet, const Predicate& target, int n,
                               std::size_t max_length = kDefaultWordBudget, const SearchOptions& options = {});
// lemma1_lift against {h_x : x in A^n} on the sequence enumerating S_n, with the
// monoid identity as the only a-entry, followed by the S_0 exclusion.
Theorem3Result theorem3_lifting(const Alphabet& alphabet, const Predicate& target, int n,
                                std::size_t max_length = kDefaultWordBudget, const SearchOptions& options = {});
// Lifting path, switching to direct enumeration once a length slice is too
// large to materialize.
Theorem3Result theorem3_find(const Alphabet& alphabet, const Predicate& target, int n,
                             std::size_t max_length = kDefaultWordBudget, const SearchOptions& options = {});

inline constexpr std::size_t kLiftSliceLimit = std::size_t{1} << 16;

struct FsConstrainedResult {
  std::optional<Word> word;
  std::uint64_t words_checked = 0;
  std::vector<std::int64_t> padded;  // y = (0, x_1, ..., x_T)
  std::uint64_t tau = 0;             // |w|_{v_1}
  IndexSet padded_indices;           // H over y with sum tau
  IndexSet indices;                  // H over x with sum tau
  std::vector<InstanceRow> instances;
};

FsConstrainedResult fs_constrained_find(const Alphabet& alphabet, const Predicate& target,
                                        std::span<const std::int64_t> generators,
                                        std::size_t max_length = kDefaultWordBudget,
                                        const SearchOptions& options = {});

struct Theorem16Result {
  std::optional<Word> word;
  std::uint64_t words_checked = 0;
  Word pattern;          // pattern_extract(w, k)
  IndexSet fp_indices;   // H with y_H = pattern
  std::vector<InstanceRow> instances;
};

Theorem16Result theorem16_find(const Alphabet& alphabet, const Predicate& target, int n, int k,
                               std::span<const Word> patterns, std::size_t max_length = kDefaultWordBudget,
                               const SearchOptions& options = {});

// k x m matrix with entries from omega.
struct MatrixSpec {
  std::size_t rows = 0, cols = 0;
  std::vector<std::int64_t> entries;  // row-major

  std::int64_t at(std::size_t r, std::size_t c) const { return entries.at(r * cols + c); }
  static MatrixSpec identity(std::size_t n);
};

struct Theorem17Result {
  std::optional<Word> word;
  std::uint64_t words_checked = 0;
  std::vector<std::int64_t> psi;
  std::vector<std::int64_t> image;   // M psi(w)
  std::vector<IndexSet> fs_indices;  // per row of M
  std::vector<Word> hom_images;      // nu(w) per nu in F
};

// M psi(w) is evaluated by two independent routes (a dense matrix-vector
// product and per-row dot products) that must agree. An empty tau list means
// the variable counters |w|_{v_1} .. |w|_{v_n}.
Theorem17Result theorem17_find(const Alphabet& alphabet, const Predicate& target, std::span<const HomSpec> homs,
                               const MatrixSpec& matrix, std::span<const HomSpec> taus,
                               std::span<const std::vector<std::int64_t>> fs_prefixes, int n,
                               std::size_t max_length = kDefaultWordBudget, const SearchOptions& options = {},
                               std::size_t hom_check_bound = kDefaultHomCheckBound);

std::vector<std::int64_t> matrix_vector_dense(const MatrixSpec& m, std::span<const std::int64_t> v);
std::vector<std::int64_t> matrix_vector_rows(const MatrixSpec& m, std::span<const std::int64_t> v);

// ---------------------------------------------------------------------------

// A decreasing chain D_1 >= D_2 >= ... >= D_depth of subsets of S_0 with a
// shift map (level, x) -> m such that D_m is inside x^{-1} D_level.
struct CSetStructure {
  enum class DefaultShift { kNone, kSame, kConstant };

  std::vector<Predicate> levels;
  std::map<std::pair<int, Word>, int> shift_entries;
  DefaultShift default_shift = DefaultShift::kSame;
  int default_level = 1;

  std::size_t depth() const noexcept { return levels.size(); }
  std::optional<int> shift(int level, const Word& x) const;
};

struct CSetRow {
  IndexSet indices;                // H
  std::vector<std::size_t> homs;   // phi(t) for t in H, as indices into F
  Word product;
  bool in_first_level = false;
};

struct CSetResult {
  std::vector<Word> sequence;
  std::vector<int> levels;  // level whose preimage w_t was drawn from
  std::optional<std::string> failure;
  std::vector<CSetRow> table;
  std::uint64_t expected_products = 0;
  bool verified = false;
};

CSetResult cset_sequence(const Alphabet& alphabet, const CSetStructure& structure, std::span<const HomSpec> homs,
                         int n, std::size_t length, std::size_t max_length = kDefaultWordBudget,
                         std::size_t sample_length = 3, const SearchOptions& options = {},
                         std::size_t hom_check_bound = kDefaultHomCheckBound);

}  // namespace wordramsey
