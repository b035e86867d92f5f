#pragma once

// Finite Hales-Jewett engines over the cube A^N, A = {a, b, ...} of size k.
//
// A line is the set of instances {w(x) : x in A^n} of a root w of length N
// in which every v_1..v_n occurs. Roots are enumerated in lexicographic
// order with variables sorting after letters; every search returns the
// canonically least answer regardless of the thread count.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wordramsey/parallel.hpp"
#include "wordramsey/words.hpp"

namespace wordramsey {

// A total coloring of A^N with colors 1..c. Cells are indexed by the rank of
// the word read as a base-k numeral (first letter most significant).
class Coloring {
 public:
  Coloring(int k, int length, int colors, std::vector<int> cells);

  int alphabet_size() const noexcept { return k_; }
  int length() const noexcept { return length_; }
  int colors() const noexcept { return colors_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }
  std::span<const int> cells() const noexcept { return cells_; }

  int color(const Word& w) const;
  int color_at(std::size_t rank) const { return cells_.at(rank); }
  std::size_t rank(const Word& w) const;
  Word word_at(std::size_t rank) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int k_;
  int length_;
  int colors_;
  std::vector<int> cells_;
};

std::size_t cube_size(int k, int length);

struct Line {
  Word root;
  std::vector<Word> points;  // in lexicographic order of the substituted x
  int color = 0;
};

struct LineSearchResult {
  std::optional<Line> line;
  // Roots examined in canonical order up to and including the answer
  // (all roots when none is monochromatic).
  std::uint64_t roots_checked = 0;
};

LineSearchResult find_mono_line(const Coloring& coloring, int n, const SearchOptions& options = {});
// Cumulative domain: slices[i] colors the words of length i+1. The least
// root over all slices (shortlex) is returned.
LineSearchResult find_mono_line(std::span<const Coloring> slices, int n, const SearchOptions& options = {});

// c'(w) = c(w . letter) on A^{N-1}.
Coloring cylinder_restriction(const Coloring& coloring, Symbol letter);

enum class LineFreeMode { kBacktracking, kExhaustive };
enum class LineFreeStatus { kFound, kNone, kBudgetExhausted };

struct LineFreeOptions {
  SearchOptions search;
  LineFreeMode mode = LineFreeMode::kBacktracking;
  // Node cap per root subtree of the backtracking split; 0 = unlimited.
  std::uint64_t max_nodes = 0;
};

struct LineFreeResult {
  LineFreeStatus status = LineFreeStatus::kNone;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;          // search nodes in canonical order
  std::uint64_t lines = 0;          // number of 1-variable lines in A^N
  std::optional<bool> cylinder_ok;  // restriction to A^{N-1} is line-free (N >= 2)
};

inline constexpr std::size_t kMaxExhaustiveCells = 32;
inline constexpr std::size_t kMaxBacktrackingCells = 100;

LineFreeResult search_line_free(int k, int colors, int length, const LineFreeOptions& options = {});

struct HjNumberResult {
  std::optional<int> number;  // least N with no line-free coloring
  int max_length = 0;
  std::vector<LineFreeResult> per_length;  // index N-1
};

HjNumberResult hj_number(int k, int colors, int max_length, const LineFreeOptions& options = {});

}  // namespace wordramsey
