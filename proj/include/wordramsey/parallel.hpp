#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace wordramsey {

struct SearchOptions {
  unsigned threads = 1;
};

// Evaluates fn(i) over [0, count) and returns the value for the least i that
// produced one. Workers claim indices in increasing order and skip any index
// above the current best, so every index below the final answer is fully
// evaluated and the answer does not depend on the thread count.
template <class R, class Fn>
std::optional<std::pair<std::size_t, R>> parallel_first(std::size_t count, unsigned threads, Fn&& fn) {
  if (count == 0) return std::nullopt;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::mutex mutex;
  std::optional<std::pair<std::size_t, R>> result;
  std::exception_ptr error;

  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || i > best.load()) return;
        std::optional<R> r = fn(i);
        if (!r) continue;
        std::lock_guard lock(mutex);
        if (i < best.load()) {
          best.store(i);
          result.emplace(i, std::move(*r));
        }
      }
    } catch (...) {
      std::lock_guard lock(mutex);
      if (!error) error = std::current_exception();
      best.store(0);
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return result;
}

}  // namespace wordramsey
