#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace knotvar {

/// Runs body(i, acc) for i in [0, count) on up to `threads` workers, each with
/// its own accumulator, then folds the accumulators in worker order with
/// merge(into, from). Callers supply an associative, commutative merge, so the
/// result does not depend on the thread count or schedule.
template <typename Acc, typename Body, typename Merge>
Acc parallel_reduce(std::size_t count, unsigned threads, const Acc& init, Body body, Merge merge) {
  if (threads <= 1 || count < 2) {
    Acc acc = init;
    for (std::size_t i = 0; i < count; ++i) body(i, acc);
    return acc;
  }
  if (threads > count) threads = static_cast<unsigned>(count);
  std::vector<Acc> partial(threads, init);
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i; (i = next.fetch_add(1, std::memory_order_relaxed)) < count;) body(i, partial[t]);
      });
    }
  }
  Acc acc = init;
  for (auto& p : partial) merge(acc, p);
  return acc;
}

}  // namespace knotvar
