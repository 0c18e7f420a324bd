#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace signrank {

/// SIGNRANK_THREADS if set to a positive integer, otherwise hardware concurrency.
inline std::size_t worker_count() {
  if (const char* env = std::getenv("SIGNRANK_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Calls fn(i) for i in [0, count) on up to `workers` threads. Results go to slot
/// i (bool results come back as char), so the output never depends on scheduling. The first exception is rethrown.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn, std::size_t workers = worker_count()) {
  using R = decltype(fn(std::size_t{}));
  // vector<bool> packs bits, so concurrent writes to distinct slots would race.
  using Slot = std::conditional_t<std::is_same_v<R, bool>, char, R>;
  std::vector<Slot> out(count);
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace signrank
