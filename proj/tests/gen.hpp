#pragma once

// Hand-rolled generators for property tests. Each random predicate comes
// with its own evaluator over oracle words so the library's predicate code
// is checked rather than trusted.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"

namespace gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return uniform(0, 1) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }
  std::mt19937_64& engine() { return engine_; }

  // Random word over k letters and n variables, length in [lo, hi].
  oracle::OWord word(int k, int n, int lo, int hi) {
    oracle::OWord w;
    const int len = uniform(lo, hi);
    for (int i = 0; i < len; ++i) {
      const int s = uniform(0, k + n - 1);
      w.push_back(s < k ? s : -(s - k + 1));
    }
    return w;
  }

  // Random word in S_n: every variable forced in, then shuffled.
  oracle::OWord sn_word(int k, int n, int extra) {
    oracle::OWord w;
    for (int i = 1; i <= n; ++i) w.push_back(-i);
    auto rest = word(k, n, 0, extra);
    w.insert(w.end(), rest.begin(), rest.end());
    std::shuffle(w.begin(), w.end(), engine_);
    return w;
  }

 private:
  std::mt19937_64 engine_;
};

struct WordPred {
  std::string text;
  std::function<bool(const oracle::OWord&)> eval;
};

inline std::string letter_text(const oracle::OWord& w) { return oracle::text(w); }

inline WordPred atom(Rng& rng, int k) {
  switch (rng.uniform(0, 5)) {
    case 0: {
      const int q = rng.uniform(1, 3), r = rng.uniform(0, q - 1);
      return {"(length-mod " + std::to_string(q) + " " + std::to_string(r) + ")",
              [q, r](const oracle::OWord& w) { return static_cast<int>(w.size()) % q == r; }};
    }
    case 1: {
      const int x = rng.uniform(0, k - 1), q = rng.uniform(1, 3), r = rng.uniform(0, q - 1);
      return {"(letter-count-mod " + std::string(1, static_cast<char>('a' + x)) + " " + std::to_string(q) + " " +
                  std::to_string(r) + ")",
              [x, q, r](const oracle::OWord& w) {
                return static_cast<int>(std::count(w.begin(), w.end(), x)) % q == r;
              }};
    }
    case 2: {
      const auto u = rng.word(k, 0, 1, 2);
      return {"(starts-with " + letter_text(u) + ")", [u](const oracle::OWord& w) {
                return w.size() >= u.size() && std::equal(u.begin(), u.end(), w.begin());
              }};
    }
    case 3: {
      const auto u = rng.word(k, 0, 1, 2);
      return {"(ends-with " + letter_text(u) + ")", [u](const oracle::OWord& w) {
                return w.size() >= u.size() && std::equal(u.rbegin(), u.rend(), w.rbegin());
              }};
    }
    case 4: {
      const auto u = rng.word(k, 0, 1, 2);
      return {"(contains " + letter_text(u) + ")", [u](const oracle::OWord& w) {
                return std::search(w.begin(), w.end(), u.begin(), u.end()) != w.end();
              }};
    }
    default: {
      const bool v = rng.coin();
      return {v ? "true" : "false", [v](const oracle::OWord&) { return v; }};
    }
  }
}

inline WordPred word_predicate(Rng& rng, int k, int depth = 2) {
  if (depth == 0 || rng.uniform(0, 2) == 0) return atom(rng, k);
  switch (rng.uniform(0, 2)) {
    case 0: {
      auto a = word_predicate(rng, k, depth - 1), b = word_predicate(rng, k, depth - 1);
      return {"(and " + a.text + " " + b.text + ")",
              [a, b](const oracle::OWord& w) { return a.eval(w) && b.eval(w); }};
    }
    case 1: {
      auto a = word_predicate(rng, k, depth - 1), b = word_predicate(rng, k, depth - 1);
      return {"(or " + a.text + " " + b.text + ")", [a, b](const oracle::OWord& w) { return a.eval(w) || b.eval(w); }};
    }
    default: {
      auto a = word_predicate(rng, k, depth - 1);
      return {"(not " + a.text + ")", [a](const oracle::OWord& w) { return !a.eval(w); }};
    }
  }
}

struct IntPred {
  std::string text;
  std::function<bool(std::int64_t)> eval;
};

inline IntPred int_predicate(Rng& rng) {
  const int q = rng.uniform(1, 4), r = rng.uniform(0, q - 1);
  IntPred base{"(value-mod " + std::to_string(q) + " " + std::to_string(r) + ")",
               [q, r](std::int64_t v) { return v % q == r; }};
  if (rng.uniform(0, 3) == 0) return {"(not " + base.text + ")", [base](std::int64_t v) { return !base.eval(v); }};
  return base;
}

}  // namespace gen
