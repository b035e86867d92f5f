#pragma once

// Shared backtracking engine for the witness searches in jset.cpp.

#include <algorithm>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "wordramsey/error.hpp"
#include "wordramsey/jset.hpp"
#include "wordramsey/parallel.hpp"

namespace wordramsey::detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

// All strictly increasing m-tuples from {1..horizon}, lexicographic.
inline std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t m, std::size_t horizon) {
  std::vector<std::vector<std::size_t>> out;
  if (m == 0 || m > horizon) return out;
  std::vector<std::size_t> t(m);
  for (std::size_t i = 0; i < m; ++i) t[i] = i + 1;
  for (;;) {
    out.push_back(t);
    std::size_t i = m;
    while (i > 0 && t[i - 1] == horizon - (m - i)) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < m; ++j) t[j] = t[j - 1] + 1;
    if (out.size() > 5'000'000) throw BoundError("too many index tuples; lower the horizon or m_max");
  }
  return out;
}

template <class T>
void canonicalize_pool(std::vector<T>& pool) {
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
}

// op(x, y) -> std::optional<T>; accept(x) -> bool.
template <class T, class Op, class Accept>
WitnessSearch<T> search_witness(std::span<const std::vector<T>> family, const std::vector<T>& pool,
                                const JBounds& bounds, const SearchOptions& options, Op op, Accept accept) {
  if (bounds.m_max < 1) throw DomainError("m_max must be >= 1");
  if (bounds.horizon < 1) throw DomainError("horizon must be >= 1");
  for (const auto& f : family)
    if (f.size() < bounds.horizon)
      throw BoundError("sequence prefix of length " + std::to_string(f.size()) + " is shorter than the horizon " +
                       std::to_string(bounds.horizon));

  struct Job {
    std::size_t m;
    std::vector<std::size_t> t;
    std::uint64_t offset;  // candidates preceding this (m, t)
  };
  const std::uint64_t p = pool.size();
  std::vector<Job> jobs;
  std::uint64_t offset = 0;
  for (std::size_t m = 1; m <= bounds.m_max; ++m) {
    const std::uint64_t per_t = saturating_pow(p, m + 1);
    for (auto& t : increasing_tuples(m, bounds.horizon)) {
      jobs.push_back({m, std::move(t), offset});
      offset = saturating_add(offset, per_t);
    }
  }

  WitnessSearch<T> result;
  auto hit = parallel_first<std::vector<std::size_t>>(
      jobs.size(), options.threads, [&](std::size_t j) -> std::optional<std::vector<std::size_t>> {
        const Job& job = jobs[j];
        if (pool.empty()) return std::nullopt;
        std::vector<std::size_t> digits(job.m + 1, 0);
        // prefix[level][f]: product a_1 f(t_1) ... a_level f(t_level).
        std::vector<std::vector<T>> prefix(job.m + 1);
        auto dfs = [&](auto&& self, std::size_t level) -> bool {
          const auto& current = prefix[level];
          for (std::size_t d = 0; d < pool.size(); ++d) {
            digits[level] = d;
            const T& a = pool[d];
            if (level == job.m) {
              bool ok = true;
              for (std::size_t f = 0; f < family.size() && ok; ++f) {
                const std::optional<T> v = level == 0 ? std::optional<T>(a) : op(current[f], a);
                ok = v && accept(*v);
              }
              if (ok) return true;
              continue;
            }
            auto& next = prefix[level + 1];
            next.clear();
            bool defined = true;
            for (std::size_t f = 0; f < family.size() && defined; ++f) {
              std::optional<T> v = level == 0 ? std::optional<T>(a) : op(current[f], a);
              if (v) v = op(*v, family[f][job.t[level] - 1]);
              if (v)
                next.push_back(std::move(*v));
              else
                defined = false;
            }
            if (!defined) continue;
            if (self(self, level + 1)) return true;
          }
          return false;
        };
        if (dfs(dfs, 0)) return digits;
        return std::nullopt;
      });

  if (!hit) {
    result.candidates_checked = offset;
    return result;
  }
  const Job& job = jobs[hit->first];
  std::uint64_t rank = 0;
  for (std::size_t d : hit->second) rank = saturating_add(saturating_mul(rank, p), d);
  result.candidates_checked = saturating_add(saturating_add(job.offset, rank), 1);
  Witness<T> w;
  w.m = job.m;
  w.t = job.t;
  for (std::size_t d : hit->second) w.a.push_back(pool[d]);
  result.witness = std::move(w);
  return result;
}

}  // namespace wordramsey::detail
