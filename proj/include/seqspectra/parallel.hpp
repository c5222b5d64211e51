#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace seqspectra {

inline unsigned default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, count) into `threads` contiguous ranges and runs
// fn(begin, end, worker) for each. Callers keep per-worker partial state
// indexed by `worker` and merge it in worker order, so the result does not
// depend on scheduling.
template <class Fn>
void parallel_ranges(std::uint64_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, threads);
  if (count < threads) threads = static_cast<unsigned>(std::max<std::uint64_t>(1, count));
  if (threads == 1) {
    fn(std::uint64_t{0}, count, 0u);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::uint64_t chunk = (count + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t begin = std::min<std::uint64_t>(count, w * chunk);
    const std::uint64_t end = std::min<std::uint64_t>(count, begin + chunk);
    pool.emplace_back([&, begin, end, w] {
      try {
        fn(begin, end, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Number of workers parallel_ranges will actually use.
inline unsigned effective_workers(std::uint64_t count, unsigned threads) {
  threads = std::max(1u, threads);
  if (count < threads) return static_cast<unsigned>(std::max<std::uint64_t>(1, count));
  return threads;
}

}  // namespace seqspectra
