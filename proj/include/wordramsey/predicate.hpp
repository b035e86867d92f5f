#pragma once

// Decidable membership descriptions for target sets D.
//
// Text form is an s-expression:
//
//   ; even-length words not starting with b
//   (and (length-mod 2 0) (not (starts-with b)))
//
// Atoms: true, false, (length-mod q r), (letter-count-mod x q r),
// (starts-with u), (ends-with u), (contains u), (member-of e...),
// (value-mod q r), (value-in-fs x1 x2 ...). Connectives: and, or, not.
// Word atoms are false on numbers and vice versa.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wordramsey/words.hpp"

namespace wordramsey {

// An element of one of the ambient structures: a number of (omega, +), a
// word, or a named element of an explicit partial Cayley table.
using Value = std::variant<std::int64_t, Word, std::string>;

class Predicate {
 public:
  struct Node;

  static Predicate always(bool verdict);
  static Predicate length_mod(std::int64_t q, std::int64_t r);
  static Predicate letter_count_mod(Symbol letter, std::int64_t q, std::int64_t r);
  static Predicate starts_with(Word u);
  static Predicate ends_with(Word u);
  static Predicate contains(Word u);
  static Predicate member_of(std::vector<Value> elements);
  static Predicate value_mod(std::int64_t q, std::int64_t r);
  static Predicate value_in_fs(std::vector<std::int64_t> generators);
  static Predicate all_of(std::vector<Predicate> parts);
  static Predicate any_of(std::vector<Predicate> parts);
  static Predicate negate(Predicate p);

  bool operator()(const Word& w) const;
  bool operator()(std::int64_t v) const;
  bool operator()(const Value& v) const;

  // Round-trips through parse_predicate.
  std::string to_string(const Alphabet& alphabet) const;

 private:
  explicit Predicate(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  friend Predicate parse_predicate(const Alphabet&, std::string_view);
  std::shared_ptr<const Node> root_;
};

// Throws InputError carrying the 1-based line of the offending token.
Predicate parse_predicate(const Alphabet& alphabet, std::string_view text);

std::string format_value(const Alphabet& alphabet, const Value& v);

}  // namespace wordramsey
