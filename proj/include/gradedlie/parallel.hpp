#pragma once
// Minimal parallel loop over an index range. WORKBENCH_THREADS caps the
// worker count; unset, the hardware concurrency is used.

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "gradedlie/errors.hpp"

namespace gradedlie {

inline unsigned worker_count() {
  if (const char* env = std::getenv("WORKBENCH_THREADS")) {
    const std::string value(env);
    if (value.empty() || value.size() > 6 ||
        value.find_first_not_of("0123456789") != std::string::npos || value == "0" ||
        (value.size() > 1 && value[0] == '0'))
      throw DomainError("WORKBENCH_THREADS must be a positive integer");
    return static_cast<unsigned>(std::stoul(value));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs body(i) for i in [0, count), unordered across up to worker_count()
// threads. The first exception wins, stops the remaining work, and is
// rethrown on the calling thread.
template <typename Body>
inline void parallel_for_index(std::size_t count, Body&& body) {
  if (count == 0) return;
  const std::size_t workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_lock;
  const auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        const std::lock_guard<std::mutex> hold(error_lock);
        if (!first_error) first_error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace gradedlie
