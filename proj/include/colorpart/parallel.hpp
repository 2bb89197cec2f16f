#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace colorpart {

inline unsigned default_jobs() {
  const unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : h;
}

// Runs f(0..count-1) on up to `jobs` threads. Each index runs exactly once;
// the first exception is rethrown after all workers stop.
template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& f) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t x = 0; x < count; ++x) f(x);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex mu;
  {
    std::vector<std::jthread> pool;
    const std::size_t workers = std::min<std::size_t>(jobs, count);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t x = next.fetch_add(1);
          if (x >= count || stop.load()) return;
          try {
            f(x);
          } catch (...) {
            std::lock_guard lock(mu);
            if (!error) error = std::current_exception();
            stop = true;
          }
        }
      });
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace colorpart
