#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace lvelab {

/* Worker count resolution: explicit argument wins, then LVELAB_WORKERS, then 1.
   A deterministic merge order is the caller's job: work is split into a fixed
   number of chunks independent of the worker count. */
inline int resolve_workers(int requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LVELAB_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 1;
}

/* Runs fn(chunk) for chunk = 0..n_chunks-1 on up to `workers` threads.
   Chunk indices are handed out atomically; each chunk writes only its own
   slot, so results are independent of scheduling. */
inline void run_chunks(int n_chunks, int workers, const std::function<void(int)>& fn) {
  workers = std::min(std::max(workers, 1), n_chunks);
  if (workers <= 1) {
    for (int c = 0; c < n_chunks; ++c) fn(c);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        int c = next.fetch_add(1);
        if (c >= n_chunks) break;
        fn(c);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace lvelab
