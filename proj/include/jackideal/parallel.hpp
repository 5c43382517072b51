#ifndef JACKIDEAL_PARALLEL_HPP
#define JACKIDEAL_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace jackideal {

/// Runs body(i) for i in [0, count) on up to `workers` threads. Indices are
/// claimed dynamically; the first exception thrown is rethrown after all
/// threads join.
template <class F>
void parallel_for(std::size_t count, int workers, F&& body) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(run);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace jackideal

#endif  // JACKIDEAL_PARALLEL_HPP
