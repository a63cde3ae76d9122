#pragma once

#include <algorithm>
#include <barrier>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wcn::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs `rounds` synchronized rounds. In round r the index range
// [0, round_size(r)) is split into contiguous stripes, one per worker, and
// body(r, index) is called for every index. No worker starts round r + 1
// before every worker finished round r.
template <typename SizeFn, typename Body>
void run_rounds(unsigned threads, std::size_t rounds, SizeFn round_size, Body body) {
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (std::size_t r = 0; r < rounds; ++r) {
      const std::size_t n = round_size(r);
      for (std::size_t i = 0; i < n; ++i) body(r, i);
    }
    return;
  }

  std::barrier sync(static_cast<std::ptrdiff_t>(threads));
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&](unsigned id) {
    for (std::size_t r = 0; r < rounds; ++r) {
      const std::size_t n = round_size(r);
      const std::size_t lo = n * id / threads;
      const std::size_t hi = n * (id + 1) / threads;
      try {
        for (std::size_t i = lo; i < hi; ++i) body(r, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
      sync.arrive_and_wait();
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(threads - 1);
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

template <typename Body>
void parallel_for(unsigned threads, std::size_t n, Body body) {
  run_rounds(threads, 1, [n](std::size_t) { return n; },
             [&](std::size_t, std::size_t i) { body(i); });
}

}  // namespace wcn::detail
