#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace edsum {

/// Worker count from EDSUM_WORKERS, falling back to 1.
int default_worker_count();

/// Calls fn(i) for i in [0, count) on `workers` threads, handing out indices
/// dynamically. The first exception thrown by any call is rethrown here.
template <class Fn>
void parallel_for(std::int64_t count, int workers, Fn&& fn) {
  workers = std::max(1, workers);
  if (workers == 1 || count <= 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  const auto n = static_cast<std::int64_t>(workers) < count ? workers : static_cast<int>(count);
  pool.reserve(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w) pool.emplace_back(body);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace edsum
