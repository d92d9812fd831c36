#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace surfchem {

/// Worker count: SURFCHEM_WORKERS when set (values < 1 mean 1), otherwise
/// the hardware concurrency, at least 1.
inline int worker_count() {
  if (const char* env = std::getenv("SURFCHEM_WORKERS")) {
    const int n = std::atoi(env);
    return n < 1 ? 1 : n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for every i in [0, count). Each index must write only to
/// its own output slot, so results are identical for any worker count or
/// schedule. The first exception thrown by any task is rethrown after all
/// workers finish.
inline void parallel_for(std::size_t count,
                         const std::function<void(std::size_t)>& fn) {
  const int workers = worker_count();
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t spawn =
      std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  pool.reserve(spawn);
  for (std::size_t w = 0; w < spawn; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace surfchem
