// Copyright Contributors to the nerfkit Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace nerfkit {

// Default worker count: NERFKIT_THREADS env var, else hardware concurrency.
inline int default_thread_count() {
  if (const char* env = std::getenv("NERFKIT_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? int(hc) : 1;
}

// Runs fn(chunk_index, begin, end) over [0, n) split into fixed-size chunks.
// Chunk boundaries depend only on n and chunk_size, never on the worker
// count, so any reduction keyed by chunk_index is reproducible for every
// value of n_threads.
template <class Fn>
void parallel_for_chunks(std::size_t n, std::size_t chunk_size, int n_threads,
                         Fn&& fn) {
  if (n == 0) return;
  if (chunk_size == 0) chunk_size = 1;
  const std::size_t n_chunks = (n + chunk_size - 1) / chunk_size;
  if (n_threads <= 1 || n_chunks == 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) {
      const std::size_t b = c * chunk_size;
      fn(c, b, std::min(n, b + chunk_size));
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      const std::size_t b = c * chunk_size;
      fn(c, b, std::min(n, b + chunk_size));
    }
  };
  std::vector<std::thread> pool;
  const int workers = int(std::min<std::size_t>(std::size_t(n_threads), n_chunks));
  pool.reserve(std::size_t(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

inline std::size_t chunk_count(std::size_t n, std::size_t chunk_size) {
  if (n == 0) return 0;
  if (chunk_size == 0) chunk_size = 1;
  return (n + chunk_size - 1) / chunk_size;
}

}  // namespace nerfkit
