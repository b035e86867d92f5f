#pragma once

// Sequences f in ^N S, given as a finite prefix or a closed-form generator.
//
// Text form, one sequence per line (';' starts a comment):
//
//   list a ab a#1      explicit word prefix
//   ints 1 2 3         explicit numeric prefix
//   power a#1          f(t) = (a#1)^t
//   linear 2 0         f(t) = 2t + 0
//   blocks 2           f(t) = H = {2t-1, 2t} in an FS/FP truncation
//   sets 1 2,3 4       explicit index sets H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordramsey/predicate.hpp"
#include "wordramsey/psg.hpp"
#include "wordramsey/words.hpp"

namespace wordramsey {

class Sequence {
 public:
  enum class Kind { kList, kPower, kLinear, kBlocks, kSets };

  static Sequence list(std::vector<Value> prefix);
  static Sequence power(Word base);
  static Sequence linear(std::int64_t slope, std::int64_t offset);
  static Sequence blocks(int width);
  static Sequence sets(std::vector<IndexSet> prefix);

  Kind kind() const noexcept { return kind_; }
  // Length of the explicit prefix; empty for closed forms.
  std::optional<std::size_t> horizon() const;
  bool is_index_sequence() const noexcept { return kind_ == Kind::kBlocks || kind_ == Kind::kSets; }

  // 1-based. Throws BoundError past the horizon.
  Value value_at(std::size_t t) const;
  IndexSet indices_at(std::size_t t) const;

  std::string to_string(const Alphabet& alphabet) const;

 private:
  Kind kind_ = Kind::kList;
  std::vector<Value> values_;
  std::vector<IndexSet> sets_;
  Word base_;
  std::int64_t slope_ = 0, offset_ = 0;
  int width_ = 1;
};

std::vector<Sequence> parse_sequences(const Alphabet& alphabet, std::string_view text);

std::vector<Word> materialize_words(const Sequence& f, std::size_t horizon);
std::vector<std::int64_t> materialize_numbers(const Sequence& f, std::size_t horizon);
std::vector<ElementId> materialize_elements(const Sequence& f, const PsgTruncation& t, std::size_t horizon);

}  // namespace wordramsey
