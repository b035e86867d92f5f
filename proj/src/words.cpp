#include "wordramsey/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "wordramsey/error.hpp"

namespace wordramsey {

bool Word::has_variables() const noexcept {
  return std::any_of(symbols_.begin(), symbols_.end(), is_variable);
}

int Word::max_variable() const noexcept {
  int best = 0;
  for (Symbol s : symbols_)
    if (is_variable(s)) best = std::max(best, variable_index(s));
  return best;
}

std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
  if (auto c = lhs.size() <=> rhs.size(); c != 0) return c;
  return lhs.symbols_ <=> rhs.symbols_;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Symbol s : w) h = (h ^ s) * 1099511628211ULL;
  return h;
}

Word concat(const Word& lhs, const Word& rhs) {
  std::vector<Symbol> out;
  out.reserve(lhs.size() + rhs.size());
  out.insert(out.end(), lhs.begin(), lhs.end());
  out.insert(out.end(), rhs.begin(), rhs.end());
  return Word(std::move(out));
}

Word power(const Word& base, std::size_t exponent) {
  std::vector<Symbol> out;
  out.reserve(base.size() * exponent);
  for (std::size_t i = 0; i < exponent; ++i) out.insert(out.end(), base.begin(), base.end());
  return Word(std::move(out));
}

std::size_t var_count(const Word& w, int index) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), variable(index)));
}

std::size_t letter_count(const Word& w, Symbol letter) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), letter));
}

// ---------------------------------------------------------------------------

Alphabet::Alphabet(std::string letters, int nvars, std::size_t max_length)
    : letters_(std::move(letters)), nvars_(nvars), max_length_(max_length) {
  if (letters_.empty()) throw DomainError("alphabet must be nonempty");
  if (letters_.size() > 255) throw DomainError("alphabet exceeds 255 letters");
  if (nvars_ < 0 || nvars_ > kMaxVariables) throw DomainError("variable count out of range");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const char c = letters_[i];
    if (!std::isgraph(static_cast<unsigned char>(c)) || c == '#' || c == '"' || c == '(' ||
        c == ')' || c == ';' || std::isdigit(static_cast<unsigned char>(c)))
      throw DomainError(std::string("letter not allowed in alphabet: '") + c + "'");
    if (letters_.find(c, i + 1) != std::string::npos)
      throw DomainError(std::string("duplicate letter: '") + c + "'");
  }
}

Alphabet Alphabet::first_letters(int k, int nvars, std::size_t max_length) {
  if (k < 1 || k > 26) throw DomainError("alphabet size must be in 1..26");
  std::string letters;
  for (int i = 0; i < k; ++i) letters.push_back(static_cast<char>('a' + i));
  return Alphabet(std::move(letters), nvars, max_length);
}

Symbol Alphabet::letter(char c) const {
  const auto pos = letters_.find(c);
  if (pos == std::string::npos) throw DomainError(std::string("not a letter: '") + c + "'");
  return static_cast<Symbol>(pos);
}

std::vector<Symbol> Alphabet::letter_symbols() const { return symbols_with_variables(0); }

std::vector<Symbol> Alphabet::symbols_with_variables(int n) const {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < letters_.size(); ++i) out.push_back(static_cast<Symbol>(i));
  for (int i = 1; i <= n; ++i) out.push_back(variable(i));
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (c == '#') {
      std::size_t j = i + 1;
      int index = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && index <= kMaxVariables)
        index = index * 10 + (text[j++] - '0');
      if (j == i + 1 || index < 1) throw InputError("bad variable in word '" + std::string(text) + "'");
      if (index > nvars_)
        throw InputError("variable #" + std::to_string(index) + " exceeds the " +
                         std::to_string(nvars_) + " admissible variables");
      out.push_back(variable(index));
      i = j;
    } else {
      const auto pos = letters_.find(c);
      if (pos == std::string::npos)
        throw InputError(std::string("unknown letter '") + c + "' in word '" + std::string(text) + "'");
      out.push_back(static_cast<Symbol>(pos));
      ++i;
    }
  }
  Word w(std::move(out));
  check_length(w);
  return w;
}

std::string Alphabet::format_symbol(Symbol s) const {
  if (is_variable(s)) return "#" + std::to_string(variable_index(s));
  if (s < letters_.size()) return std::string(1, letters_[s]);
  return "?";
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (Symbol s : w) out += format_symbol(s);
  return out;
}

void Alphabet::check_length(const Word& w) const {
  if (w.size() > max_length_)
    throw BoundError("word of length " + std::to_string(w.size()) + " exceeds maximum length " +
                     std::to_string(max_length_));
}

bool Alphabet::in_s0(const Word& w) const noexcept {
  if (w.empty()) return false;
  return std::all_of(w.begin(), w.end(), [&](Symbol s) { return is_letter(s); });
}

bool Alphabet::in_sn(const Word& w, int n) const noexcept {
  if (n < 1 || w.empty()) return false;
  std::uint64_t seen = 0;
  for (Symbol s : w) {
    if (is_letter(s)) continue;
    if (!is_variable(s)) return false;
    const int i = variable_index(s);
    if (i > n) return false;
    seen |= std::uint64_t{1} << (i - 1);
  }
  const std::uint64_t all = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return seen == all;
}

Word substitute(const Alphabet& alphabet, const Word& w, std::span<const Symbol> x) {
  const int n = static_cast<int>(x.size());
  if (!alphabet.in_sn(w, n))
    throw DomainError("substitute: '" + alphabet.format(w) + "' is not an " + std::to_string(n) +
                      "-variable word");
  for (Symbol s : x)
    if (!alphabet.is_letter(s)) throw DomainError("substitute: replacement is not a letter");
  std::vector<Symbol> out(w.begin(), w.end());
  for (Symbol& s : out)
    if (is_variable(s)) s = x[variable_index(s) - 1];
  return Word(std::move(out));
}

Word substitute_by_word(const Alphabet& alphabet, const Word& w, const Word& u) {
  if (!alphabet.in_s0(u)) throw DomainError("substitute_by_word: u must be a word of S_0");
  return substitute(alphabet, w, u.symbols());
}

Word pattern_extract(const Alphabet& alphabet, const Word& w, int n, int k) {
  if (k < 1 || k >= n) throw DomainError("pattern_extract: requires 1 <= k < n");
  if (!alphabet.in_sn(w, n))
    throw DomainError("pattern_extract: '" + alphabet.format(w) + "' is not in S_" + std::to_string(n));
  std::vector<Symbol> out;
  for (Symbol s : w)
    if (is_variable(s) && variable_index(s) <= k) out.push_back(s);
  return Word(std::move(out));
}

void for_each_word(std::span<const Symbol> sorted_symbols, std::size_t length,
                   const std::function<bool(const Word&)>& fn) {
  if (sorted_symbols.empty()) {
    if (length == 0) fn(Word{});
    return;
  }
  std::vector<std::size_t> digits(length, 0);
  std::vector<Symbol> buf(length, sorted_symbols[0]);
  const std::size_t base = sorted_symbols.size();
  while (true) {
    if (!fn(Word(buf))) return;
    std::size_t pos = length;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < base) {
        buf[pos] = sorted_symbols[digits[pos]];
        break;
      }
      digits[pos] = 0;
      buf[pos] = sorted_symbols[0];
      if (pos == 0) return;
    }
    if (length == 0) return;
  }
}

std::vector<Word> words_up_to(std::span<const Symbol> sorted_symbols, std::size_t min_length,
                              std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t len = min_length; len <= max_length; ++len)
    for_each_word(sorted_symbols, len, [&](const Word& w) {
      out.push_back(w);
      return true;
    });
  return out;
}

// ---------------------------------------------------------------------------

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Words whose variables all lie in v_1..v_n and which contain either all of
// them or none (S_n union S_0 union {theta}).
bool in_sn_or_s0(const Alphabet& alphabet, const Word& w, int n) {
  if (!w.has_variables())
    return std::all_of(w.begin(), w.end(), [&](Symbol s) { return alphabet.is_letter(s); });
  return alphabet.in_sn(w, n);
}

int hom_arity(const Alphabet& alphabet, const HomSpec& h) {
  return std::visit(Overloaded{
                        [&](const IdentityHom&) { return alphabet.nvars(); },
                        [](const SubstitutionHom& s) { return static_cast<int>(s.letters.size()); },
                        [](const SubstitutionByWordHom& s) { return static_cast<int>(s.u.size()); },
                        [&](const VariableCountHom& c) { return std::max(c.index, alphabet.nvars()); },
                        [](const PatternExtractHom& p) { return p.n; },
                        [](const UserTableHom& t) {
                          int n = 0;
                          for (const auto& [s, img] : t.images)
                            if (is_variable(s)) n = std::max(n, variable_index(s));
                          return n;
                        },
                    },
                    h);
}

std::vector<Symbol> hom_symbols(const Alphabet& alphabet, const HomSpec& h) {
  if (const auto* t = std::get_if<UserTableHom>(&h)) {
    std::vector<Symbol> out;
    for (const auto& [s, img] : t->images) out.push_back(s);
    return out;
  }
  return alphabet.symbols_with_variables(hom_arity(alphabet, h));
}

HomValue combine(const HomValue& lhs, const HomValue& rhs) {
  if (const auto* l = std::get_if<Word>(&lhs)) return concat(*l, std::get<Word>(rhs));
  return std::get<std::uint64_t>(lhs) + std::get<std::uint64_t>(rhs);
}

HomValue unit_of(const HomSpec& h) {
  if (std::holds_alternative<VariableCountHom>(h)) return std::uint64_t{0};
  if (const auto* t = std::get_if<UserTableHom>(&h))
    if (!t->images.empty() && std::holds_alternative<std::uint64_t>(t->images.begin()->second))
      return std::uint64_t{0};
  return Word{};
}

}  // namespace

bool is_word_valued(const HomSpec& h) { return std::holds_alternative<Word>(unit_of(h)); }

bool in_domain(const Alphabet& alphabet, const HomSpec& h, const Word& w) {
  return std::visit(
      Overloaded{
          [&](const IdentityHom&) { return true; },
          [&](const SubstitutionHom& s) { return in_sn_or_s0(alphabet, w, static_cast<int>(s.letters.size())); },
          [&](const SubstitutionByWordHom& s) { return in_sn_or_s0(alphabet, w, static_cast<int>(s.u.size())); },
          [&](const VariableCountHom&) { return true; },
          [&](const PatternExtractHom& p) { return in_sn_or_s0(alphabet, w, p.n); },
          [&](const UserTableHom& t) {
            return std::all_of(w.begin(), w.end(), [&](Symbol s) { return t.images.count(s) > 0; });
          },
      },
      h);
}

HomValue apply_hom(const Alphabet& alphabet, const HomSpec& h, const Word& w) {
  if (!in_domain(alphabet, h, w))
    throw DomainError("homomorphism '" + format_hom(alphabet, h) + "' is undefined on '" +
                      alphabet.format(w) + "'");
  return std::visit(
      Overloaded{
          [&](const IdentityHom&) -> HomValue { return w; },
          [&](const SubstitutionHom& s) -> HomValue {
            if (!w.has_variables()) return w;
            return substitute(alphabet, w, s.letters);
          },
          [&](const SubstitutionByWordHom& s) -> HomValue {
            if (!w.has_variables()) return w;
            return substitute_by_word(alphabet, w, s.u);
          },
          [&](const VariableCountHom& c) -> HomValue {
            return static_cast<std::uint64_t>(var_count(w, c.index));
          },
          [&](const PatternExtractHom& p) -> HomValue {
            if (!w.has_variables()) return Word{};
            return pattern_extract(alphabet, w, p.n, p.k);
          },
          [&](const UserTableHom& t) -> HomValue {
            HomValue acc = unit_of(h);
            for (Symbol s : w) acc = combine(acc, t.images.at(s));
            return acc;
          },
      },
      h);
}

Word apply_word_hom(const Alphabet& alphabet, const HomSpec& h, const Word& w) {
  auto v = apply_hom(alphabet, h, w);
  if (auto* out = std::get_if<Word>(&v)) return std::move(*out);
  throw DomainError("homomorphism '" + format_hom(alphabet, h) + "' is not word-valued");
}

HomSpec parse_hom(const Alphabet& alphabet, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind;
  in >> kind;
  std::vector<std::string> args;
  for (std::string tok; in >> tok;) args.push_back(tok);
  auto need = [&](std::size_t count) {
    if (args.size() != count)
      throw InputError("homomorphism '" + kind + "' expects " + std::to_string(count) + " argument(s)");
  };
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw InputError("not an integer: " + s);
      return v;
    } catch (const std::logic_error&) {
      throw InputError("not an integer: " + s);
    }
  };
  if (kind == "identity") {
    need(0);
    return IdentityHom{};
  }
  if (kind == "subst") {
    if (args.empty()) throw InputError("subst expects at least one letter");
    SubstitutionHom s;
    for (const auto& a : args) {
      if (a.size() != 1) throw InputError("subst expects single letters, got '" + a + "'");
      s.letters.push_back(alphabet.letter(a[0]));
    }
    return s;
  }
  if (kind == "subst-word") {
    need(1);
    const Word u = alphabet.parse(args[0]);
    if (!alphabet.in_s0(u)) throw InputError("subst-word expects a word of letters");
    return SubstitutionByWordHom{u};
  }
  if (kind == "count") {
    need(1);
    const int i = to_int(args[0]);
    if (i < 1) throw InputError("count expects a variable index >= 1");
    return VariableCountHom{i};
  }
  if (kind == "extract") {
    need(2);
    const int n = to_int(args[0]), k = to_int(args[1]);
    if (k < 1 || k >= n) throw InputError("extract expects 1 <= k < n");
    return PatternExtractHom{n, k};
  }
  if (kind == "table") {
    if (args.empty()) throw InputError("table expects at least one entry");
    UserTableHom t;
    std::optional<bool> numeric;
    for (const auto& a : args) {
      const auto eq = a.find('=');
      if (eq == std::string::npos) throw InputError("table entry must look like x=image: " + a);
      const Word key = alphabet.parse(a.substr(0, eq));
      if (key.size() != 1) throw InputError("table key must be a single symbol: " + a);
      const std::string image = a.substr(eq + 1);
      const bool is_num = !image.empty() && std::all_of(image.begin(), image.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      });
      if (numeric && *numeric != is_num) throw InputError("table mixes numeric and word images");
      numeric = is_num;
      if (is_num)
        t.images[key[0]] = static_cast<std::uint64_t>(std::stoull(image));
      else
        t.images[key[0]] = alphabet.parse(image);
    }
    return t;
  }
  throw InputError("unknown homomorphism kind '" + kind + "'");
}

std::string format_hom(const Alphabet& alphabet, const HomSpec& h) {
  return std::visit(
      Overloaded{
          [](const IdentityHom&) { return std::string("identity"); },
          [&](const SubstitutionHom& s) {
            std::string out = "subst";
            for (Symbol l : s.letters) out += " " + alphabet.format_symbol(l);
            return out;
          },
          [&](const SubstitutionByWordHom& s) { return "subst-word " + alphabet.format(s.u); },
          [](const VariableCountHom& c) { return "count " + std::to_string(c.index); },
          [](const PatternExtractHom& p) {
            return "extract " + std::to_string(p.n) + " " + std::to_string(p.k);
          },
          [&](const UserTableHom& t) {
            std::string out = "table";
            for (const auto& [s, img] : t.images) {
              out += " " + alphabet.format_symbol(s) + "=";
              if (const auto* w = std::get_if<Word>(&img))
                out += alphabet.format(*w);
              else
                out += std::to_string(std::get<std::uint64_t>(img));
            }
            return out;
          },
      },
      h);
}

HomReport check_hom_properties(const Alphabet& alphabet, const HomSpec& h, std::size_t sample_bound) {
  if (sample_bound < 2) throw DomainError("check_hom_properties: sample_bound must be >= 2");
  const Alphabet wide = alphabet.with_nvars(std::max(alphabet.nvars(), hom_arity(alphabet, h)))
                            .with_max_length(std::max(alphabet.max_length(), 2 * sample_bound));
  auto symbols = hom_symbols(wide, h);
  std::sort(symbols.begin(), symbols.end());

  std::vector<Word> domain;
  for (auto& w : words_up_to(symbols, 1, sample_bound))
    if (in_domain(wide, h, w)) domain.push_back(std::move(w));

  HomReport report;
  report.words_checked = domain.size();
  const bool word_valued = is_word_valued(h);
  if (word_valued) report.s0_preserving = true;

  auto fail = [&](bool& flag, const char* property, const Word& l, const Word& r) {
    if (flag) report.counterexamples.push_back({property, l, r});
    flag = false;
  };

  std::vector<HomValue> images;
  images.reserve(domain.size());
  for (const auto& w : domain) images.push_back(apply_hom(wide, h, w));

  bool preserving = true;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const Word& u = domain[i];
    const bool u_in_s0 = wide.in_s0(u);
    if (u_in_s0 && images[i] != HomValue{u}) fail(report.fixes_s0, "fixes S0", u, u);
    for (std::size_t j = 0; j < domain.size(); ++j) {
      const Word& w = domain[j];
      const Word uw = concat(u, w);
      if (!in_domain(wide, h, uw)) continue;
      const HomValue image_uw = apply_hom(wide, h, uw);
      if (image_uw != combine(images[i], images[j])) fail(report.is_homomorphism, "homomorphism", u, w);
      if (!u_in_s0) continue;
      // u in S_0, so u*w and w*u probe the two-sided laws.
      const Word wu = concat(w, u);
      const bool wu_ok = in_domain(wide, h, wu);
      const HomValue image_wu = wu_ok ? apply_hom(wide, h, wu) : HomValue{};
      if (word_valued) {
        if (image_uw != HomValue{concat(u, std::get<Word>(images[j]))})
          fail(preserving, "S0-preserving", u, w);
        if (wu_ok && image_wu != HomValue{concat(std::get<Word>(images[j]), u)})
          fail(preserving, "S0-preserving", w, u);
      }
      if (image_uw != images[j]) fail(report.s0_independent, "S0-independent", u, w);
      if (wu_ok && image_wu != images[j]) fail(report.s0_independent, "S0-independent", w, u);
    }
  }
  if (word_valued) report.s0_preserving = preserving;
  return report;
}

}  // namespace wordramsey
