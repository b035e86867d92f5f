#pragma once

// Input decoding shared by run and verify. Both sides rebuild the problem
// from the certificate's input echo through these loaders; only the checking
// differs.

#include <string>
#include <vector>

#include <json.hpp>

#include "wordramsey/error.hpp"
#include "wordramsey/jset.hpp"
#include "wordramsey/lift.hpp"
#include "wordramsey/psg.hpp"

namespace wordramsey::app::detail {

using nlohmann::json;

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("field '") + key + "' has the wrong type");
  }
}

Alphabet alphabet_of(const json& in);
// The "homs" array, or every h_x with x in A^n when absent or empty.
std::vector<HomSpec> hom_list(const Alphabet& alphabet, const json& in, int n);

json witness_json(const Alphabet& alphabet, const Witness<Word>& w);
json witness_json(const Witness<std::int64_t>& w);
Witness<Word> word_witness(const Alphabet& alphabet, const json& j);
Witness<std::int64_t> number_witness(const json& j);

struct JsetProblem {
  Alphabet alphabet;
  Predicate target;
  bool numeric = false;
  std::vector<std::vector<Word>> words;
  std::vector<std::vector<std::int64_t>> numbers;
  std::vector<Word> word_pool;
  std::vector<std::int64_t> number_pool;
  NumericSemigroup semigroup;
  JBounds bounds;
};
JsetProblem load_jset(const json& in);

PsgTruncation load_truncation(const json& config);
// Index lists for FS/FP truncations, names for tables.
std::vector<ElementId> load_elements(const PsgTruncation& t, const json& elements);

struct Lemma1Problem {
  Alphabet alphabet;
  Predicate target;
  std::vector<std::vector<Word>> sequences;
  std::vector<HomSpec> homs;
  std::vector<Word> pool;
  JBounds bounds;
};
Lemma1Problem load_lemma1(const json& in);

struct Thm17Problem {
  Alphabet alphabet;
  Predicate target;
  int n = 1;
  std::vector<HomSpec> homs;
  MatrixSpec matrix;
  std::vector<HomSpec> taus;
  std::vector<std::vector<std::int64_t>> fs_prefixes;
};
Thm17Problem load_thm17(const json& in);
MatrixSpec load_matrix(const json& doc);

struct CsetProblem {
  Alphabet alphabet;
  CSetStructure structure;
  std::vector<HomSpec> homs;
  int n = 1;
  std::size_t length = 1, max_len = kDefaultWordBudget, sample_len = 3;
};
CsetProblem load_cset(const json& in);

}  // namespace wordramsey::app::detail
