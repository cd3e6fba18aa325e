#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace sna {

inline unsigned default_thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Runs fn(index, worker) for every index in [begin, end). Work is handed out
// in fixed-size chunks through an atomic cursor, so the assignment of indices
// to workers is arbitrary; callers must make each fn(index, ·) independent of
// worker identity (per-worker state may only be used as scratch).
template <typename Fn>
void parallel_for(uint32_t begin, uint32_t end, unsigned threads, uint32_t chunk, Fn&& fn) {
  if (end <= begin) return;
  const uint32_t count = end - begin;
  if (threads <= 1 || count == 1) {
    for (uint32_t i = begin; i < end; ++i) fn(i, 0u);
    return;
  }
  if (chunk == 0) chunk = 1;
  const uint32_t n_chunks = (count + chunk - 1) / chunk;
  if (threads > n_chunks) threads = n_chunks;

  std::atomic<uint32_t> cursor{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto work = [&](unsigned worker) {
    try {
      for (;;) {
        const uint32_t c = cursor.fetch_add(1, std::memory_order_relaxed);
        if (c >= n_chunks || failed.load(std::memory_order_relaxed)) break;
        const uint32_t lo = begin + c * chunk;
        const uint32_t hi = std::min<uint64_t>(static_cast<uint64_t>(lo) + chunk, end);
        for (uint32_t i = lo; i < hi; ++i) fn(i, worker);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!failed.exchange(true)) first_error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace sna
