#include "wordramsey/predicate.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "wordramsey/error.hpp"

namespace wordramsey {

namespace {

std::int64_t floor_mod(std::int64_t v, std::int64_t q) {
  const std::int64_t r = v % q;
  return r < 0 ? r + q : r;
}

bool has_prefix(const Word& w, const Word& u) {
  return u.size() <= w.size() && std::equal(u.begin(), u.end(), w.begin());
}

bool has_suffix(const Word& w, const Word& u) {
  return u.size() <= w.size() && std::equal(u.begin(), u.end(), w.end() - static_cast<long>(u.size()));
}

bool has_factor(const Word& w, const Word& u) {
  return std::search(w.begin(), w.end(), u.begin(), u.end()) != w.end();
}

}  // namespace

struct Predicate::Node {
  enum class Kind {
    kConst,
    kLengthMod,
    kLetterCountMod,
    kStartsWith,
    kEndsWith,
    kContains,
    kMemberOf,
    kValueMod,
    kValueInFs,
    kAnd,
    kOr,
    kNot,
  };
  Kind kind = Kind::kConst;
  bool verdict = false;
  std::int64_t q = 1, r = 0;
  Symbol letter = 0;
  Word word;
  std::vector<Value> members;
  std::vector<std::int64_t> generators;
  std::set<std::int64_t> fs_values;
  std::vector<Predicate> children;
};

namespace {

using Node = Predicate::Node;
using Kind = Predicate::Node::Kind;

bool eval_word(const Node& n, const Word& w);
bool eval_number(const Node& n, std::int64_t v);

template <class T, class Eval>
bool eval_connective(const Node& n, const T& v, Eval eval) {
  switch (n.kind) {
    case Kind::kAnd:
      return std::all_of(n.children.begin(), n.children.end(), [&](const Predicate& c) { return c(v); });
    case Kind::kOr:
      return std::any_of(n.children.begin(), n.children.end(), [&](const Predicate& c) { return c(v); });
    case Kind::kNot:
      return !n.children.front()(v);
    default:
      return eval(n, v);
  }
}

bool eval_word(const Node& n, const Word& w) {
  switch (n.kind) {
    case Kind::kConst:
      return n.verdict;
    case Kind::kLengthMod:
      return floor_mod(static_cast<std::int64_t>(w.size()), n.q) == n.r;
    case Kind::kLetterCountMod:
      return floor_mod(static_cast<std::int64_t>(letter_count(w, n.letter)), n.q) == n.r;
    case Kind::kStartsWith:
      return has_prefix(w, n.word);
    case Kind::kEndsWith:
      return has_suffix(w, n.word);
    case Kind::kContains:
      return has_factor(w, n.word);
    case Kind::kMemberOf:
      return std::any_of(n.members.begin(), n.members.end(), [&](const Value& m) {
        const auto* mw = std::get_if<Word>(&m);
        return mw && *mw == w;
      });
    default:
      return false;
  }
}

bool eval_number(const Node& n, std::int64_t v) {
  switch (n.kind) {
    case Kind::kConst:
      return n.verdict;
    case Kind::kMemberOf:
      return std::any_of(n.members.begin(), n.members.end(), [&](const Value& m) {
        const auto* mv = std::get_if<std::int64_t>(&m);
        return mv && *mv == v;
      });
    case Kind::kValueMod:
      return floor_mod(v, n.q) == n.r;
    case Kind::kValueInFs:
      return n.fs_values.count(v) > 0;
    default:
      return false;
  }
}

bool eval_name(const Node& n, const std::string& name) {
  switch (n.kind) {
    case Kind::kConst:
      return n.verdict;
    case Kind::kMemberOf:
      return std::any_of(n.members.begin(), n.members.end(), [&](const Value& m) {
        const auto* ms = std::get_if<std::string>(&m);
        return ms && *ms == name;
      });
    default:
      return false;
  }
}

void check_modulus(std::int64_t q, std::int64_t r) {
  if (q < 1) throw InputError("modulus must be >= 1");
  if (r < 0 || r >= q) throw InputError("residue must lie in [0, q)");
}

std::set<std::int64_t> subset_sums(const std::vector<std::int64_t>& gens) {
  if (gens.empty() || gens.size() > 20) throw InputError("value-in-fs expects 1..20 generators");
  std::set<std::int64_t> out;
  for (std::uint32_t mask = 1; mask < (1u << gens.size()); ++mask) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (mask & (1u << i)) s += gens[i];
    out.insert(s);
  }
  return out;
}

}  // namespace

Predicate Predicate::always(bool verdict) {
  auto n = std::make_shared<Node>();
  n->verdict = verdict;
  return Predicate(std::move(n));
}

Predicate Predicate::length_mod(std::int64_t q, std::int64_t r) {
  check_modulus(q, r);
  auto n = std::make_shared<Node>();
  n->kind = Kind::kLengthMod;
  n->q = q;
  n->r = r;
  return Predicate(std::move(n));
}

Predicate Predicate::letter_count_mod(Symbol letter, std::int64_t q, std::int64_t r) {
  check_modulus(q, r);
  auto n = std::make_shared<Node>();
  n->kind = Kind::kLetterCountMod;
  n->letter = letter;
  n->q = q;
  n->r = r;
  return Predicate(std::move(n));
}

Predicate Predicate::starts_with(Word u) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kStartsWith;
  n->word = std::move(u);
  return Predicate(std::move(n));
}

Predicate Predicate::ends_with(Word u) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kEndsWith;
  n->word = std::move(u);
  return Predicate(std::move(n));
}

Predicate Predicate::contains(Word u) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kContains;
  n->word = std::move(u);
  return Predicate(std::move(n));
}

Predicate Predicate::member_of(std::vector<Value> elements) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kMemberOf;
  n->members = std::move(elements);
  return Predicate(std::move(n));
}

Predicate Predicate::value_mod(std::int64_t q, std::int64_t r) {
  check_modulus(q, r);
  auto n = std::make_shared<Node>();
  n->kind = Kind::kValueMod;
  n->q = q;
  n->r = r;
  return Predicate(std::move(n));
}

Predicate Predicate::value_in_fs(std::vector<std::int64_t> generators) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kValueInFs;
  n->fs_values = subset_sums(generators);
  n->generators = std::move(generators);
  return Predicate(std::move(n));
}

Predicate Predicate::all_of(std::vector<Predicate> parts) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kAnd;
  n->children = std::move(parts);
  return Predicate(std::move(n));
}

Predicate Predicate::any_of(std::vector<Predicate> parts) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kOr;
  n->children = std::move(parts);
  return Predicate(std::move(n));
}

Predicate Predicate::negate(Predicate p) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kNot;
  n->children.push_back(std::move(p));
  return Predicate(std::move(n));
}

bool Predicate::operator()(const Word& w) const { return eval_connective(*root_, w, eval_word); }
bool Predicate::operator()(std::int64_t v) const { return eval_connective(*root_, v, eval_number); }

bool Predicate::operator()(const Value& v) const {
  if (const auto* w = std::get_if<Word>(&v)) return (*this)(*w);
  if (const auto* i = std::get_if<std::int64_t>(&v)) return (*this)(*i);
  return eval_connective(*root_, std::get<std::string>(v), eval_name);
}

std::string format_value(const Alphabet& alphabet, const Value& v) {
  if (const auto* w = std::get_if<Word>(&v)) return w->empty() ? "\"\"" : alphabet.format(*w);
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return std::get<std::string>(v);
}

std::string Predicate::to_string(const Alphabet& alphabet) const {
  const Node& n = *root_;
  auto word = [&](const Word& w) { return w.empty() ? std::string("\"\"") : alphabet.format(w); };
  auto mod = [&](const char* name) {
    return std::string("(") + name + " " + std::to_string(n.q) + " " + std::to_string(n.r) + ")";
  };
  switch (n.kind) {
    case Kind::kConst:
      return n.verdict ? "true" : "false";
    case Kind::kLengthMod:
      return mod("length-mod");
    case Kind::kLetterCountMod:
      return "(letter-count-mod " + alphabet.format_symbol(n.letter) + " " + std::to_string(n.q) + " " +
             std::to_string(n.r) + ")";
    case Kind::kStartsWith:
      return "(starts-with " + word(n.word) + ")";
    case Kind::kEndsWith:
      return "(ends-with " + word(n.word) + ")";
    case Kind::kContains:
      return "(contains " + word(n.word) + ")";
    case Kind::kMemberOf: {
      std::string out = "(member-of";
      for (const auto& m : n.members) {
        // Table names are quoted so they never re-parse as words or numbers.
        if (const auto* s = std::get_if<std::string>(&m))
          out += " \"" + *s + "\"";
        else
          out += " " + format_value(alphabet, m);
      }
      return out + ")";
    }
    case Kind::kValueMod:
      return mod("value-mod");
    case Kind::kValueInFs: {
      std::string out = "(value-in-fs";
      for (auto g : n.generators) out += " " + std::to_string(g);
      return out + ")";
    }
    case Kind::kAnd:
    case Kind::kOr: {
      std::string out = n.kind == Kind::kAnd ? "(and" : "(or";
      for (const auto& c : n.children) out += " " + c.to_string(alphabet);
      return out + ")";
    }
    case Kind::kNot:
      return "(not " + n.children.front().to_string(alphabet) + ")";
  }
  return "false";
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
  enum class Type { kOpen, kClose, kAtom, kQuoted, kEnd } type;
  std::string text;
  int line;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == ';') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '(') {
      out.push_back({Token::Type::kOpen, "(", line});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::Type::kClose, ")", line});
      ++i;
    } else if (c == '"') {
      const std::size_t end = text.find('"', i + 1);
      if (end == std::string_view::npos) throw InputError("unterminated string", line);
      out.push_back({Token::Type::kQuoted, std::string(text.substr(i + 1, end - i - 1)), line});
      i = end + 1;
    } else {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '(' &&
             text[j] != ')' && text[j] != ';' && text[j] != '"')
        ++j;
      out.push_back({Token::Type::kAtom, std::string(text.substr(i, j - i)), line});
      i = j;
    }
  }
  out.push_back({Token::Type::kEnd, "", line});
  return out;
}

class Parser {
 public:
  Parser(const Alphabet& alphabet, std::vector<Token> tokens)
      : alphabet_(alphabet), tokens_(std::move(tokens)) {}

  Predicate parse_all() {
    if (peek().type == Token::Type::kEnd) throw InputError("empty predicate", peek().line);
    Predicate p = parse_expr();
    if (peek().type != Token::Type::kEnd) throw InputError("trailing input after predicate", peek().line);
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

  std::int64_t integer(const Token& t) {
    if (t.type != Token::Type::kAtom) throw InputError("expected an integer", t.line);
    try {
      std::size_t used = 0;
      const long long v = std::stoll(t.text, &used);
      if (used != t.text.size()) throw InputError("expected an integer, got '" + t.text + "'", t.line);
      return v;
    } catch (const std::logic_error&) {
      throw InputError("expected an integer, got '" + t.text + "'", t.line);
    }
  }

  Word word(const Token& t) {
    if (t.type != Token::Type::kAtom && t.type != Token::Type::kQuoted)
      throw InputError("expected a word", t.line);
    try {
      return alphabet_.parse(t.text);
    } catch (const std::exception& e) {
      throw InputError(e.what(), t.line);
    }
  }

  void close(const std::string& head) {
    const Token& t = next();
    if (t.type != Token::Type::kClose) throw InputError("expected ')' to close '" + head + "'", t.line);
  }

  template <class F>
  Predicate wrap(int line, F&& make) {
    try {
      return make();
    } catch (const InputError& e) {
      if (e.line() > 0) throw;
      throw InputError(e.what(), line);
    }
  }

  Predicate parse_expr() {
    const Token& t = next();
    if (t.type == Token::Type::kAtom) {
      if (t.text == "true") return Predicate::always(true);
      if (t.text == "false") return Predicate::always(false);
      throw InputError("unknown bare atom '" + t.text + "'", t.line);
    }
    if (t.type != Token::Type::kOpen) throw InputError("expected '(' or an atom", t.line);
    const Token head = next();
    if (head.type != Token::Type::kAtom) throw InputError("expected an operator name", head.line);
    const std::string& h = head.text;
    const int line = head.line;

    if (h == "and" || h == "or") {
      std::vector<Predicate> parts;
      while (peek().type != Token::Type::kClose && peek().type != Token::Type::kEnd)
        parts.push_back(parse_expr());
      close(h);
      if (parts.empty()) throw InputError("'" + h + "' needs at least one operand", line);
      return h == "and" ? Predicate::all_of(std::move(parts)) : Predicate::any_of(std::move(parts));
    }
    if (h == "not") {
      Predicate p = parse_expr();
      close(h);
      return Predicate::negate(std::move(p));
    }
    if (h == "length-mod" || h == "value-mod") {
      const auto q = integer(next());
      const auto r = integer(next());
      close(h);
      return wrap(line, [&] { return h == "length-mod" ? Predicate::length_mod(q, r) : Predicate::value_mod(q, r); });
    }
    if (h == "letter-count-mod") {
      const Token& lt = next();
      if (lt.type != Token::Type::kAtom || lt.text.size() != 1) throw InputError("expected a letter", lt.line);
      Symbol letter;
      try {
        letter = alphabet_.letter(lt.text[0]);
      } catch (const std::exception& e) {
        throw InputError(e.what(), lt.line);
      }
      const auto q = integer(next());
      const auto r = integer(next());
      close(h);
      return wrap(line, [&] { return Predicate::letter_count_mod(letter, q, r); });
    }
    if (h == "starts-with" || h == "ends-with" || h == "contains") {
      Word u = word(next());
      close(h);
      if (h == "starts-with") return Predicate::starts_with(std::move(u));
      if (h == "ends-with") return Predicate::ends_with(std::move(u));
      return Predicate::contains(std::move(u));
    }
    if (h == "member-of") {
      std::vector<Value> members;
      while (peek().type == Token::Type::kAtom || peek().type == Token::Type::kQuoted) {
        const Token& m = next();
        if (m.type == Token::Type::kQuoted && !m.text.empty()) {
          members.emplace_back(m.text);
          continue;
        }
        if (m.type == Token::Type::kAtom && (std::isdigit(static_cast<unsigned char>(m.text[0])) || m.text[0] == '-')) {
          members.emplace_back(integer(m));
          continue;
        }
        members.emplace_back(word(m));
      }
      close(h);
      return Predicate::member_of(std::move(members));
    }
    if (h == "value-in-fs") {
      std::vector<std::int64_t> gens;
      while (peek().type == Token::Type::kAtom) gens.push_back(integer(next()));
      close(h);
      return wrap(line, [&] { return Predicate::value_in_fs(gens); });
    }
    throw InputError("unknown predicate '" + h + "'", line);
  }

  const Alphabet& alphabet_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Predicate parse_predicate(const Alphabet& alphabet, std::string_view text) {
  return Parser(alphabet, tokenize(text)).parse_all();
}

}  // namespace wordramsey
