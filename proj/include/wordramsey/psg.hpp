#pragma once

// Finite truncations of partial semigroups.
//
// FS/FP truncations hold every nonempty index set H of the first T
// generators; the product of two elements is defined exactly when their
// index sets are disjoint. Elements are keyed by H, never by value, so
// distinct index sets with equal sums stay distinct. FP products are
// evaluated in increasing index order.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordramsey/predicate.hpp"
#include "wordramsey/words.hpp"

namespace wordramsey {

enum class PsgMode { kFiniteSums, kFiniteProducts, kTable };

inline constexpr int kMaxGenerators = 20;

using IndexSet = std::vector<int>;  // sorted, 1-based generator indices
using ElementId = std::size_t;

struct PsgElement {
  IndexSet indices;  // empty for table elements
  Value value;
};

class PsgTruncation {
 public:
  // FS over (omega, +) or FP over (omega, *).
  static PsgTruncation numeric(std::span<const std::int64_t> generators, PsgMode mode);
  // FP over words: concatenation in increasing index order.
  static PsgTruncation word_products(const Alphabet& alphabet, std::span<const Word> generators);
  // Explicit partial Cayley table; std::nullopt marks an undefined product.
  static PsgTruncation from_table(std::vector<std::string> names,
                                  std::vector<std::vector<std::optional<ElementId>>> table);

  PsgMode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return elements_.size(); }
  // Number of generators (0 for tables).
  int horizon() const noexcept { return horizon_; }
  const PsgElement& element(ElementId id) const { return elements_.at(id); }
  const std::optional<Alphabet>& alphabet() const noexcept { return alphabet_; }

  std::optional<ElementId> op(ElementId lhs, ElementId rhs) const;
  std::optional<ElementId> find(const IndexSet& indices) const;
  std::optional<ElementId> find_name(const std::string& name) const;
  // Least element (by id) carrying this value.
  std::optional<ElementId> find_value(const Value& value) const;

  std::string format(ElementId id) const;  // "H=[1,3]; value=5"

 private:
  PsgMode mode_ = PsgMode::kTable;
  int horizon_ = 0;
  std::vector<PsgElement> elements_;
  std::vector<std::vector<std::optional<ElementId>>> table_;
  std::optional<Alphabet> alphabet_;
};

// FS/FP truncations use id = bitmask(H) - 1.
std::uint32_t index_mask(const IndexSet& indices);
IndexSet mask_indices(std::uint32_t mask);

std::vector<ElementId> phi(const PsgTruncation& t, ElementId g);
std::vector<ElementId> sigma(const PsgTruncation& t, std::span<const ElementId> hset);
std::vector<ElementId> left_quotient(const PsgTruncation& t, ElementId g, std::span<const ElementId> target);

struct AdequacyReport {
  bool adequate = true;
  std::vector<ElementId> failing;  // first H with sigma(H) empty
  bool horizon_exhaustion = false;
  std::size_t sets_checked = 0;
};

// Checks sigma(H) != {} for every H of at most subset_bound elements. For
// FS/FP truncations H is drawn from elements whose index sets have at most
// subset_bound indices; such probes are the ones a longer prefix could
// satisfy. Sets are visited by size, then in colex order of element ids.
AdequacyReport is_adequate_truncated(const PsgTruncation& t, int subset_bound);

struct AdequateSequenceReport {
  bool products_defined = true;
  IndexSet undefined_at;        // first H (positions in f) whose product is undefined
  std::optional<int> least_m;  // least m with FP(f(m..)) inside sigma(F)
};

AdequateSequenceReport is_adequate_sequence_truncated(const PsgTruncation& t,
                                                      std::span<const ElementId> f,
                                                      std::span<const ElementId> family);

// Product f(H) computed left to right in increasing position order.
std::optional<ElementId> ordered_product(const PsgTruncation& t, std::span<const ElementId> f,
                                         const IndexSet& positions);

struct AssociativityReport {
  bool associative = true;
  std::optional<std::array<ElementId, 3>> violation;
  std::size_t triples_checked = 0;
};

AssociativityReport check_partial_associativity(const PsgTruncation& t);
bool is_commutative(const PsgTruncation& t);

// Least index set H over the generators with sum (FS) equal to value.
std::optional<IndexSet> fs_membership(std::span<const std::int64_t> generators, std::int64_t value);

}  // namespace wordramsey
