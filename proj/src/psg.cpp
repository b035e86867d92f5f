#include "wordramsey/psg.hpp"

#include <algorithm>
#include <bit>

#include "wordramsey/error.hpp"

namespace wordramsey {

std::uint32_t index_mask(const IndexSet& indices) {
  std::uint32_t mask = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxGenerators) throw DomainError("generator index out of range: " + std::to_string(i));
    mask |= 1u << (i - 1);
  }
  return mask;
}

IndexSet mask_indices(std::uint32_t mask) {
  IndexSet out;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) out.push_back(i + 1);
  return out;
}

namespace {

void check_generator_count(std::size_t count) {
  if (count < 1) throw DomainError("a truncation needs at least one generator");
  if (count > kMaxGenerators)
    throw BoundError("at most " + std::to_string(kMaxGenerators) + " generators are supported, got " +
                     std::to_string(count));
}

}  // namespace

PsgTruncation PsgTruncation::numeric(std::span<const std::int64_t> generators, PsgMode mode) {
  if (mode == PsgMode::kTable) throw DomainError("numeric truncations are FS or FP");
  check_generator_count(generators.size());
  PsgTruncation t;
  t.mode_ = mode;
  t.horizon_ = static_cast<int>(generators.size());
  const std::uint32_t full = 1u << generators.size();
  t.elements_.reserve(full - 1);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::int64_t acc = mode == PsgMode::kFiniteSums ? 0 : 1;
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (mask & (1u << i)) acc = mode == PsgMode::kFiniteSums ? acc + generators[i] : acc * generators[i];
    t.elements_.push_back({mask_indices(mask), Value{acc}});
  }
  return t;
}

PsgTruncation PsgTruncation::word_products(const Alphabet& alphabet, std::span<const Word> generators) {
  check_generator_count(generators.size());
  PsgTruncation t;
  t.mode_ = PsgMode::kFiniteProducts;
  t.horizon_ = static_cast<int>(generators.size());
  t.alphabet_ = alphabet;
  const std::uint32_t full = 1u << generators.size();
  t.elements_.reserve(full - 1);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    Word acc;
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (mask & (1u << i)) acc = concat(acc, generators[i]);
    t.elements_.push_back({mask_indices(mask), Value{std::move(acc)}});
  }
  return t;
}

PsgTruncation PsgTruncation::from_table(std::vector<std::string> names,
                                        std::vector<std::vector<std::optional<ElementId>>> table) {
  if (names.empty()) throw DomainError("a table needs at least one element");
  if (table.size() != names.size()) throw DomainError("table must have one row per element");
  for (const auto& row : table) {
    if (row.size() != names.size()) throw DomainError("table rows must have one entry per element");
    for (const auto& e : row)
      if (e && *e >= names.size()) throw DomainError("table entry out of range");
  }
  PsgTruncation t;
  t.mode_ = PsgMode::kTable;
  for (auto& n : names) t.elements_.push_back({{}, Value{std::move(n)}});
  t.table_ = std::move(table);
  return t;
}

std::optional<ElementId> PsgTruncation::op(ElementId lhs, ElementId rhs) const {
  if (lhs >= elements_.size() || rhs >= elements_.size()) throw DomainError("element not in truncation");
  if (mode_ == PsgMode::kTable) return table_[lhs][rhs];
  const auto a = static_cast<std::uint32_t>(lhs + 1), b = static_cast<std::uint32_t>(rhs + 1);
  if (a & b) return std::nullopt;
  return ElementId{(a | b) - 1};
}

std::optional<ElementId> PsgTruncation::find(const IndexSet& indices) const {
  if (mode_ == PsgMode::kTable || indices.empty()) return std::nullopt;
  for (int i : indices)
    if (i < 1 || i > horizon_) return std::nullopt;
  return ElementId{index_mask(indices) - 1};
}

std::optional<ElementId> PsgTruncation::find_name(const std::string& name) const {
  for (ElementId i = 0; i < elements_.size(); ++i)
    if (const auto* s = std::get_if<std::string>(&elements_[i].value); s && *s == name) return i;
  return std::nullopt;
}

std::optional<ElementId> PsgTruncation::find_value(const Value& value) const {
  for (ElementId i = 0; i < elements_.size(); ++i)
    if (elements_[i].value == value) return i;
  return std::nullopt;
}

std::string PsgTruncation::format(ElementId id) const {
  const PsgElement& e = element(id);
  if (mode_ == PsgMode::kTable) return std::get<std::string>(e.value);
  std::string out = "H=[";
  for (std::size_t i = 0; i < e.indices.size(); ++i) out += (i ? "," : "") + std::to_string(e.indices[i]);
  out += "]; value=";
  if (const auto* w = std::get_if<Word>(&e.value))
    out += alphabet_ ? alphabet_->format(*w) : "?";
  else
    out += std::to_string(std::get<std::int64_t>(e.value));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<ElementId> phi(const PsgTruncation& t, ElementId g) {
  std::vector<ElementId> out;
  for (ElementId h = 0; h < t.size(); ++h)
    if (t.op(g, h)) out.push_back(h);
  return out;
}

std::vector<ElementId> sigma(const PsgTruncation& t, std::span<const ElementId> hset) {
  if (hset.empty()) throw DomainError("sigma needs a nonempty set");
  std::vector<ElementId> out;
  for (ElementId h = 0; h < t.size(); ++h)
    if (std::all_of(hset.begin(), hset.end(), [&](ElementId g) { return t.op(g, h).has_value(); }))
      out.push_back(h);
  return out;
}

std::vector<ElementId> left_quotient(const PsgTruncation& t, ElementId g, std::span<const ElementId> target) {
  std::vector<ElementId> sorted(target.begin(), target.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<ElementId> out;
  for (ElementId h = 0; h < t.size(); ++h)
    if (auto p = t.op(g, h); p && std::binary_search(sorted.begin(), sorted.end(), *p)) out.push_back(h);
  return out;
}

namespace {

// Colex successor of a combination drawn from {0..n-1}.
bool next_colex(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t s = c.size();
  for (std::size_t i = 0; i < s; ++i) {
    const std::size_t limit = i + 1 < s ? c[i + 1] : n;
    if (c[i] + 1 < limit) {
      ++c[i];
      for (std::size_t j = 0; j < i; ++j) c[j] = j;
      return true;
    }
  }
  return false;
}

}  // namespace

AdequacyReport is_adequate_truncated(const PsgTruncation& t, int subset_bound) {
  if (subset_bound < 1) throw DomainError("subset_bound must be >= 1");
  std::vector<ElementId> candidates;
  for (ElementId i = 0; i < t.size(); ++i)
    if (t.mode() == PsgMode::kTable || t.element(i).indices.size() <= static_cast<std::size_t>(subset_bound))
      candidates.push_back(i);

  AdequacyReport report;
  const std::size_t max_size = std::min<std::size_t>(subset_bound, candidates.size());
  std::vector<ElementId> hset;
  for (std::size_t s = 1; s <= max_size; ++s) {
    std::vector<std::size_t> comb(s);
    for (std::size_t i = 0; i < s; ++i) comb[i] = i;
    do {
      hset.clear();
      for (auto i : comb) hset.push_back(candidates[i]);
      ++report.sets_checked;
      if (sigma(t, hset).empty()) {
        report.adequate = false;
        report.failing = hset;
        // A longer FS/FP prefix always adds an index disjoint from H.
        report.horizon_exhaustion = t.mode() != PsgMode::kTable;
        return report;
      }
    } while (next_colex(comb, candidates.size()));
  }
  return report;
}

std::optional<ElementId> ordered_product(const PsgTruncation& t, std::span<const ElementId> f,
                                         const IndexSet& positions) {
  if (positions.empty()) throw DomainError("empty product");
  std::optional<ElementId> acc = f[positions.front() - 1];
  for (std::size_t i = 1; i < positions.size() && acc; ++i) acc = t.op(*acc, f[positions[i] - 1]);
  return acc;
}

AdequateSequenceReport is_adequate_sequence_truncated(const PsgTruncation& t, std::span<const ElementId> f,
                                                      std::span<const ElementId> family) {
  if (f.size() < 2) throw DomainError("adequate-sequence check needs a prefix of length >= 2");
  if (f.size() > kMaxGenerators) throw BoundError("sequence prefix longer than 20");
  for (ElementId e : f)
    if (e >= t.size()) throw DomainError("sequence element not in truncation");
  const auto len = static_cast<std::uint32_t>(f.size());
  const std::uint32_t full = 1u << len;

  AdequateSequenceReport report;
  std::vector<std::optional<ElementId>> products(full);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    products[mask] = ordered_product(t, f, mask_indices(mask));
    if (!products[mask] && report.products_defined) {
      report.products_defined = false;
      report.undefined_at = mask_indices(mask);
    }
  }

  std::vector<ElementId> target;
  if (family.empty()) {
    target.resize(t.size());
    for (ElementId i = 0; i < t.size(); ++i) target[i] = i;
  } else {
    target = sigma(t, family);
  }
  std::vector<bool> in_target(t.size(), false);
  for (auto e : target) in_target[e] = true;

  for (std::uint32_t m = 1; m <= len; ++m) {
    const std::uint32_t tail = (full - 1) & ~((1u << (m - 1)) - 1);
    bool ok = true;
    for (std::uint32_t mask = tail; mask && ok; mask = (mask - 1) & tail)
      if (products[mask] && !in_target[*products[mask]]) ok = false;
    if (ok) {
      report.least_m = static_cast<int>(m);
      break;
    }
  }
  return report;
}

AssociativityReport check_partial_associativity(const PsgTruncation& t) {
  AssociativityReport report;
  const std::size_t n = t.size();
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      const auto xy = t.op(x, y);
      for (ElementId z = 0; z < n; ++z) {
        ++report.triples_checked;
        const auto yz = t.op(y, z);
        const auto lhs = xy ? t.op(*xy, z) : std::nullopt;
        const auto rhs = yz ? t.op(x, *yz) : std::nullopt;
        if (lhs != rhs && report.associative) {
          report.associative = false;
          report.violation = std::array<ElementId, 3>{x, y, z};
        }
      }
    }
  return report;
}

bool is_commutative(const PsgTruncation& t) {
  for (ElementId x = 0; x < t.size(); ++x)
    for (ElementId y = x + 1; y < t.size(); ++y)
      if (t.op(x, y) != t.op(y, x)) return false;
  return true;
}

std::optional<IndexSet> fs_membership(std::span<const std::int64_t> generators, std::int64_t value) {
  check_generator_count(generators.size());
  const std::uint32_t full = 1u << generators.size();
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (mask & (1u << i)) s += generators[i];
    if (s == value) return mask_indices(mask);
  }
  return std::nullopt;
}

}  // namespace wordramsey
