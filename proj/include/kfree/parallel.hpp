#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kfree {

inline int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs task(worker, item) for item in [0, items) on `jobs` threads, items
/// handed out in increasing order. The first exception is rethrown after all
/// workers stop.
template <class Task>
void parallel_for(std::uint64_t items, int jobs, Task&& task) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::min<std::uint64_t>(items, 1024))));
  if (jobs <= 1) {
    for (std::uint64_t i = 0; i < items; ++i) task(0, i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t i = next++; i < items && !failed; i = next++) task(w, i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Splits [0, total) into `chunks` near-equal contiguous ranges.
struct RangeSplit {
  std::uint64_t total;
  std::uint64_t chunks;

  std::uint64_t begin(std::uint64_t i) const {
    const std::uint64_t base = total / chunks, extra = total % chunks;
    return i * base + std::min(i, extra);
  }
  std::uint64_t end(std::uint64_t i) const { return begin(i + 1); }
};

}  // namespace kfree
