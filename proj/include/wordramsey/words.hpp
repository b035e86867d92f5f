#pragma once

// Words over a finite alphabet with distinguished variables v_1..v_n.
//
// Letters are encoded as symbols 0..k-1 and variable v_i as kVariableBase+i-1,
// so the natural symbol order puts every variable after every letter. Word
// comparison is shortlex (length first, then lexicographic by symbol code).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace wordramsey {

using Symbol = std::uint16_t;

inline constexpr Symbol kVariableBase = 256;
inline constexpr int kMaxVariables = 64;
inline constexpr std::size_t kDefaultMaxLength = 16;

constexpr Symbol variable(int index) { return static_cast<Symbol>(kVariableBase + index - 1); }
constexpr bool is_variable(Symbol s) { return s >= kVariableBase; }
constexpr int variable_index(Symbol s) { return static_cast<int>(s) - kVariableBase + 1; }

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  bool has_variables() const noexcept;
  // Largest variable index occurring, 0 if none.
  int max_variable() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs);

 private:
  std::vector<Symbol> symbols_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

Word concat(const Word& lhs, const Word& rhs);
Word power(const Word& base, std::size_t exponent);

// Number of occurrences of v_index in w.
std::size_t var_count(const Word& w, int index);
std::size_t letter_count(const Word& w, Symbol letter);

class Alphabet {
 public:
  // letters: distinct printable characters, none of them '#', a digit,
  // whitespace, parentheses or a double quote.
  explicit Alphabet(std::string letters, int nvars = 0,
                    std::size_t max_length = kDefaultMaxLength);

  // The first k lowercase letters a, b, c, ...
  static Alphabet first_letters(int k, int nvars = 0,
                                std::size_t max_length = kDefaultMaxLength);

  int size() const noexcept { return static_cast<int>(letters_.size()); }
  int nvars() const noexcept { return nvars_; }
  std::size_t max_length() const noexcept { return max_length_; }
  const std::string& letters() const noexcept { return letters_; }

  Alphabet with_nvars(int nvars) const { return Alphabet(letters_, nvars, max_length_); }
  Alphabet with_max_length(std::size_t len) const { return Alphabet(letters_, nvars_, len); }

  bool is_letter(Symbol s) const noexcept { return s < letters_.size(); }
  Symbol letter(char c) const;
  std::vector<Symbol> letter_symbols() const;
  // Letters followed by v_1..v_n, ascending.
  std::vector<Symbol> symbols_with_variables(int n) const;

  // Parses the textual form (letters plus #1, #2, ...). Enforces the
  // variable count and the maximum length.
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;
  std::string format_symbol(Symbol s) const;

  void check_length(const Word& w) const;

  // S_0: nonempty, no variables, letters only.
  bool in_s0(const Word& w) const noexcept;
  // S_n: symbols from letters and v_1..v_n, each v_i occurring at least once.
  bool in_sn(const Word& w, int n) const noexcept;

 private:
  std::string letters_;
  int nvars_;
  std::size_t max_length_;
};

// Replaces each v_i by x[i-1]. Requires w in S_n with n = x.size().
Word substitute(const Alphabet& alphabet, const Word& w, std::span<const Symbol> x);
// Same, with the replacement letters given as a length-n word of S_0.
Word substitute_by_word(const Alphabet& alphabet, const Word& w, const Word& u);
// Subsequence of occurrences of v_1..v_k. Requires w in S_n and 1 <= k < n.
Word pattern_extract(const Alphabet& alphabet, const Word& w, int n, int k);

// Calls fn on every word of exactly `length` symbols drawn from
// sorted_symbols, in lexicographic order. Stops early if fn returns false.
void for_each_word(std::span<const Symbol> sorted_symbols, std::size_t length,
                   const std::function<bool(const Word&)>& fn);
std::vector<Word> words_up_to(std::span<const Symbol> sorted_symbols, std::size_t min_length,
                              std::size_t max_length);

// ---------------------------------------------------------------------------
// Homomorphisms on words.

using HomValue = std::variant<Word, std::uint64_t>;

struct IdentityHom {};
// h_x: v_i -> x_i on S_n, identity on S_0.
struct SubstitutionHom {
  std::vector<Symbol> letters;
};
// w -> w(u) for a length-n word u, identity on S_0.
struct SubstitutionByWordHom {
  Word u;
};
// w -> |w|_{v_index}, into (omega, +).
struct VariableCountHom {
  int index = 1;
};
// w -> pattern_extract(w, n, k) on S_n, theta on S_0.
struct PatternExtractHom {
  int n = 2;
  int k = 1;
};
// Per-symbol images extended multiplicatively; all images share one kind.
struct UserTableHom {
  std::map<Symbol, HomValue> images;
};

using HomSpec = std::variant<IdentityHom, SubstitutionHom, SubstitutionByWordHom,
                             VariableCountHom, PatternExtractHom, UserTableHom>;

bool in_domain(const Alphabet& alphabet, const HomSpec& h, const Word& w);
HomValue apply_hom(const Alphabet& alphabet, const HomSpec& h, const Word& w);
// Convenience for word-valued homomorphisms; throws DomainError otherwise.
Word apply_word_hom(const Alphabet& alphabet, const HomSpec& h, const Word& w);
bool is_word_valued(const HomSpec& h);

// Text forms: "identity", "subst a b", "subst-word ab", "count 1",
// "extract 3 1", "table a=ab b=b" or "table #1=1 a=0".
HomSpec parse_hom(const Alphabet& alphabet, std::string_view text);
std::string format_hom(const Alphabet& alphabet, const HomSpec& h);

struct HomCounterexample {
  std::string property;
  Word left;
  Word right;
};

struct HomReport {
  bool is_homomorphism = true;
  std::optional<bool> s0_preserving;  // empty when the codomain is numeric
  bool s0_independent = true;
  bool fixes_s0 = true;
  std::size_t words_checked = 0;
  std::vector<HomCounterexample> counterexamples;  // first failure per property
};

// Exhaustive check over all domain words of length 1..sample_bound.
HomReport check_hom_properties(const Alphabet& alphabet, const HomSpec& h,
                               std::size_t sample_bound);

}  // namespace wordramsey
