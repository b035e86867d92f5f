#include "wordramsey/jset.hpp"

#include "witness_engine.hpp"
#include "wordramsey/error.hpp"

namespace wordramsey {

WitnessSearch<Word> find_witness(const Predicate& target, std::span<const std::vector<Word>> family,
                                 std::vector<Word> pool, const JBounds& bounds, const SearchOptions& options) {
  detail::canonicalize_pool(pool);
  return detail::search_witness<Word>(
      family, pool, bounds, options,
      [](const Word& x, const Word& y) { return std::optional<Word>(concat(x, y)); },
      [&](const Word& w) { return target(w); });
}

WitnessSearch<std::int64_t> find_witness(const Predicate& target,
                                         std::span<const std::vector<std::int64_t>> family,
                                         std::vector<std::int64_t> pool, const JBounds& bounds,
                                         const SearchOptions& options, NumericSemigroup semigroup) {
  if (semigroup.modulus && *semigroup.modulus < 1) throw DomainError("modulus must be >= 1");
  detail::canonicalize_pool(pool);
  return detail::search_witness<std::int64_t>(
      family, pool, bounds, options,
      [&](std::int64_t x, std::int64_t y) { return std::optional<std::int64_t>(semigroup.op(x, y)); },
      [&](std::int64_t v) { return target(v); });
}

WitnessSearch<ElementId> find_witness_adequate(const Predicate& target,
                                               std::span<const std::vector<ElementId>> family,
                                               std::span<const ElementId> constraint, const PsgTruncation& t,
                                               std::vector<ElementId> pool, const JBounds& bounds,
                                               const SearchOptions& options) {
  for (const auto& f : family)
    for (ElementId e : f)
      if (e >= t.size()) throw DomainError("sequence element not in truncation");
  for (ElementId e : constraint)
    if (e >= t.size()) throw DomainError("L element not in truncation");
  if (pool.empty())
    for (ElementId e = 0; e < t.size(); ++e) pool.push_back(e);
  for (ElementId e : pool)
    if (e >= t.size()) throw DomainError("pool element not in truncation");
  detail::canonicalize_pool(pool);

  std::vector<bool> allowed(t.size(), true);
  if (!constraint.empty()) {
    std::fill(allowed.begin(), allowed.end(), false);
    for (ElementId e : sigma(t, constraint)) allowed[e] = true;
  }
  return detail::search_witness<ElementId>(
      family, pool, bounds, options, [&](ElementId x, ElementId y) { return t.op(x, y); },
      [&](ElementId e) { return allowed[e] && target(t.element(e).value); });
}

std::vector<Word> word_pool(const Alphabet& alphabet, std::size_t max_length, int n) {
  const auto symbols = alphabet.symbols_with_variables(n);
  std::vector<Word> out;
  for (auto& w : words_up_to(symbols, 1, max_length))
    if (!w.has_variables() || alphabet.in_sn(w, n)) out.push_back(std::move(w));
  return out;
}

std::vector<std::int64_t> numeric_pool(std::size_t horizon) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 1; i <= horizon; ++i) out.push_back(static_cast<std::int64_t>(i));
  return out;
}

Refutation refute_s0_jset(const Alphabet& alphabet, int n, const JBounds& bounds, std::size_t pool_length,
                          const SearchOptions& options) {
  if (n < 1) throw DomainError("refute_s0_jset: n must be >= 1");
  const Alphabet wide = alphabet.with_nvars(std::max(n, alphabet.nvars()));
  Refutation r;
  r.n = n;
  std::vector<Symbol> base;
  for (int i = 1; i <= n; ++i) base.push_back(variable(i));
  r.base = Word(std::move(base));
  r.argument =
      "variable-occurrence is concatenation-monotone: f(t) contains every variable, so every product "
      "a_1 f(t_1) ... a_{m+1} does too and lies outside S_0";

  std::vector<std::vector<Word>> family(1);
  for (std::size_t t = 1; t <= bounds.horizon; ++t) family[0].push_back(power(r.base, t));
  std::vector<Word> pool = pool_length == 0 ? std::vector<Word>{} : word_pool(wide, pool_length, n);
  detail::canonicalize_pool(pool);
  const auto search = detail::search_witness<Word>(
      family, pool, bounds, options,
      [](const Word& x, const Word& y) { return std::optional<Word>(concat(x, y)); },
      [&](const Word& w) { return wide.in_s0(w); });
  r.candidates_checked = search.candidates_checked;
  r.passing = search.witness ? 1 : 0;
  return r;
}

}  // namespace wordramsey
