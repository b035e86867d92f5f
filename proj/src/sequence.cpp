#include "wordramsey/sequence.hpp"

#include <algorithm>
#include <sstream>

#include "wordramsey/error.hpp"

namespace wordramsey {

Sequence Sequence::list(std::vector<Value> prefix) {
  Sequence s;
  s.kind_ = Kind::kList;
  s.values_ = std::move(prefix);
  return s;
}

Sequence Sequence::power(Word base) {
  if (base.empty()) throw DomainError("power sequence needs a nonempty base word");
  Sequence s;
  s.kind_ = Kind::kPower;
  s.base_ = std::move(base);
  return s;
}

Sequence Sequence::linear(std::int64_t slope, std::int64_t offset) {
  Sequence s;
  s.kind_ = Kind::kLinear;
  s.slope_ = slope;
  s.offset_ = offset;
  return s;
}

Sequence Sequence::blocks(int width) {
  if (width < 1) throw DomainError("block width must be >= 1");
  Sequence s;
  s.kind_ = Kind::kBlocks;
  s.width_ = width;
  return s;
}

Sequence Sequence::sets(std::vector<IndexSet> prefix) {
  Sequence s;
  s.kind_ = Kind::kSets;
  s.sets_ = std::move(prefix);
  return s;
}

std::optional<std::size_t> Sequence::horizon() const {
  switch (kind_) {
    case Kind::kList:
      return values_.size();
    case Kind::kSets:
      return sets_.size();
    default:
      return std::nullopt;
  }
}

namespace {

void check_index(std::size_t t, std::optional<std::size_t> horizon) {
  if (t < 1) throw DomainError("sequence indices start at 1");
  if (horizon && t > *horizon)
    throw BoundError("index " + std::to_string(t) + " exceeds the sequence horizon " + std::to_string(*horizon));
}

}  // namespace

Value Sequence::value_at(std::size_t t) const {
  check_index(t, horizon());
  switch (kind_) {
    case Kind::kList:
      return values_[t - 1];
    case Kind::kPower:
      return wordramsey::power(base_, t);
    case Kind::kLinear:
      return slope_ * static_cast<std::int64_t>(t) + offset_;
    default:
      throw DomainError("index-set sequence has no direct value");
  }
}

IndexSet Sequence::indices_at(std::size_t t) const {
  check_index(t, horizon());
  if (kind_ == Kind::kSets) return sets_[t - 1];
  if (kind_ != Kind::kBlocks) throw DomainError("not an index-set sequence");
  IndexSet out;
  for (int i = 1; i <= width_; ++i) out.push_back(static_cast<int>(t - 1) * width_ + i);
  return out;
}

std::string Sequence::to_string(const Alphabet& alphabet) const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::kList: {
      const bool numeric = !values_.empty() && std::holds_alternative<std::int64_t>(values_.front());
      out << (numeric ? "ints" : "list");
      for (const auto& v : values_) out << ' ' << format_value(alphabet, v);
      break;
    }
    case Kind::kPower:
      out << "power " << alphabet.format(base_);
      break;
    case Kind::kLinear:
      out << "linear " << slope_ << ' ' << offset_;
      break;
    case Kind::kBlocks:
      out << "blocks " << width_;
      break;
    case Kind::kSets:
      out << "sets";
      for (const auto& h : sets_) {
        out << ' ';
        for (std::size_t i = 0; i < h.size(); ++i) out << (i ? "," : "") << h[i];
      }
      break;
  }
  return out.str();
}

namespace {

std::int64_t to_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw InputError("expected an integer, got '" + s + "'", line);
    return v;
  } catch (const std::logic_error&) {
    throw InputError("expected an integer, got '" + s + "'", line);
  }
}

}  // namespace

std::vector<Sequence> parse_sequences(const Alphabet& alphabet, std::string_view text) {
  std::vector<Sequence> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto c = line.find(';'); c != std::string::npos) line.erase(c);
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind)) continue;
    std::vector<std::string> args;
    for (std::string a; fields >> a;) args.push_back(a);
    auto need = [&](std::size_t n) {
      if (args.size() != n)
        throw InputError("'" + kind + "' expects " + std::to_string(n) + " argument(s)", lineno);
    };
    try {
      if (kind == "list") {
        std::vector<Value> prefix;
        for (const auto& a : args) prefix.emplace_back(alphabet.parse(a == "\"\"" ? "" : a));
        out.push_back(Sequence::list(std::move(prefix)));
      } else if (kind == "ints") {
        std::vector<Value> prefix;
        for (const auto& a : args) prefix.emplace_back(to_int(a, lineno));
        out.push_back(Sequence::list(std::move(prefix)));
      } else if (kind == "power") {
        need(1);
        out.push_back(Sequence::power(alphabet.parse(args[0])));
      } else if (kind == "linear") {
        need(2);
        out.push_back(Sequence::linear(to_int(args[0], lineno), to_int(args[1], lineno)));
      } else if (kind == "blocks") {
        need(1);
        out.push_back(Sequence::blocks(static_cast<int>(to_int(args[0], lineno))));
      } else if (kind == "sets") {
        std::vector<IndexSet> prefix;
        for (const auto& a : args) {
          IndexSet h;
          std::istringstream parts(a);
          for (std::string p; std::getline(parts, p, ',');) h.push_back(static_cast<int>(to_int(p, lineno)));
          std::sort(h.begin(), h.end());
          if (h.empty() || std::adjacent_find(h.begin(), h.end()) != h.end())
            throw InputError("index set must be nonempty with distinct entries: " + a, lineno);
          prefix.push_back(std::move(h));
        }
        out.push_back(Sequence::sets(std::move(prefix)));
      } else {
        throw InputError("unknown sequence kind '" + kind + "'", lineno);
      }
    } catch (const InputError& e) {
      if (e.line() > 0) throw;
      throw InputError(e.what(), lineno);
    } catch (const std::exception& e) {
      throw InputError(e.what(), lineno);
    }
  }
  return out;
}

std::vector<Word> materialize_words(const Sequence& f, std::size_t horizon) {
  std::vector<Word> out;
  out.reserve(horizon);
  for (std::size_t t = 1; t <= horizon; ++t) {
    Value v = f.value_at(t);
    auto* w = std::get_if<Word>(&v);
    if (!w) throw DomainError("sequence does not take word values");
    out.push_back(std::move(*w));
  }
  return out;
}

std::vector<std::int64_t> materialize_numbers(const Sequence& f, std::size_t horizon) {
  std::vector<std::int64_t> out;
  out.reserve(horizon);
  for (std::size_t t = 1; t <= horizon; ++t) {
    const Value v = f.value_at(t);
    const auto* i = std::get_if<std::int64_t>(&v);
    if (!i) throw DomainError("sequence does not take numeric values");
    out.push_back(*i);
  }
  return out;
}

std::vector<ElementId> materialize_elements(const Sequence& f, const PsgTruncation& t, std::size_t horizon) {
  std::vector<ElementId> out;
  out.reserve(horizon);
  for (std::size_t i = 1; i <= horizon; ++i) {
    if (f.is_index_sequence()) {
      const IndexSet h = f.indices_at(i);
      const auto id = t.find(h);
      if (!id)
        throw BoundError("f(" + std::to_string(i) + ") uses generator indices beyond the truncation horizon " +
                         std::to_string(t.horizon()));
      out.push_back(*id);
    } else {
      const auto id = t.find_value(f.value_at(i));
      if (!id) throw DomainError("f(" + std::to_string(i) + ") is not an element of the truncation");
      out.push_back(*id);
    }
  }
  return out;
}

}  // namespace wordramsey
