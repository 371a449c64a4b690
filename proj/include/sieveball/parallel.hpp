#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sieveball {

inline unsigned default_thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Static contiguous partition of [0, n) over `threads` workers. Each worker
// owns exactly one range, so results never depend on scheduling. fn is
// invoked as fn(begin, end, worker_index).
template <typename Fn>
void parallel_ranges(uint64_t n, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = 1;
  threads = static_cast<unsigned>(std::min<uint64_t>(threads, std::max<uint64_t>(n, 1)));
  if (threads <= 1 || n == 0) {
    fn(uint64_t{0}, n, 0u);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::exception_ptr error;
  std::mutex error_mu;
  const uint64_t chunk = (n + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const uint64_t begin = std::min<uint64_t>(n, uint64_t{w} * chunk);
    const uint64_t end = std::min<uint64_t>(n, begin + chunk);
    pool.emplace_back([&, begin, end, w] {
      try {
        fn(begin, end, w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace sieveball
