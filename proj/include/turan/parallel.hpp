#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace turan {

/// Worker count used by the module-internal parallel loops; defaults to the
/// hardware concurrency.
int worker_count();
void set_worker_count(int workers);

/// Runs fn(i) for i in [0, count). Indices are claimed dynamically; fn must
/// only write to per-index state. The first exception is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, worker_count())), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t w = 1; w < workers; ++w) threads.emplace_back(body);
  body();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace turan
