#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hgc {

/// Worker count: HGC_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned default_parallelism();

/// Calls body(i) for every i in [0, count) on up to `width` threads.
/// Results must be written to per-index slots; the first exception by index
/// is rethrown after all workers stop.
template <class Body>
void parallel_for(std::size_t count, unsigned width, Body&& body) {
  if (width <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::size_t failed_index = count;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (i < failed_index) {
          failed_index = i;
          failure = std::current_exception();
        }
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(width, count);
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace hgc
