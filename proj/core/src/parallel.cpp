#include "gadm/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <thread>
#include <vector>

namespace gadm {

namespace {

int env_threads() {
  if (const char* s = std::getenv("GADM_THREADS")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

std::atomic<int> g_threads{0};  // 0 = uninitialized

// Chunk size depends only on `total` so that reduction partials are
// independent of the thread count.
constexpr std::size_t kChunk = 4096;

}  // namespace

int thread_count() {
  int t = g_threads.load(std::memory_order_relaxed);
  if (t == 0) {
    t = env_threads();
    g_threads.store(t, std::memory_order_relaxed);
  }
  return t;
}

void set_threads(int n) {
  g_threads.store(n >= 1 ? n : env_threads(), std::memory_order_relaxed);
}

void parallel_for(std::size_t total,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
  if (total == 0) return;
  const std::size_t nchunks = (total + kChunk - 1) / kChunk;
  const int nthreads = std::min<std::size_t>(thread_count(), nchunks);
  if (nthreads <= 1) {
    // same chunk walk as the pool: reduction partials must not depend on
    // the thread count
    for (std::size_t c = 0; c < nchunks; ++c) {
      const std::size_t b = c * kChunk;
      fn(b, std::min(total, b + kChunk));
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= nchunks) return;
      std::size_t b = c * kChunk;
      std::size_t e = std::min(total, b + kChunk);
      fn(b, e);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(nthreads - 1);
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

double parallel_sum(std::size_t total,
                    const std::function<double(std::size_t)>& fn) {
  if (total == 0) return 0.0;
  const std::size_t nchunks = (total + kChunk - 1) / kChunk;
  std::vector<double> partial(nchunks, 0.0);
  parallel_for(total, [&](std::size_t b, std::size_t e) {
    // [b, e) is exactly one fixed chunk.
    double acc = 0.0;
    for (std::size_t i = b; i < e; ++i) acc += fn(i);
    partial[b / kChunk] = acc;
  });
  double acc = 0.0;
  for (double p : partial) acc += p;
  return acc;
}

double parallel_max(std::size_t total,
                    const std::function<double(std::size_t)>& fn) {
  const double ninf = -std::numeric_limits<double>::infinity();
  if (total == 0) return ninf;
  const std::size_t nchunks = (total + kChunk - 1) / kChunk;
  std::vector<double> partial(nchunks, ninf);
  parallel_for(total, [&](std::size_t b, std::size_t e) {
    double m = ninf;
    for (std::size_t i = b; i < e; ++i) m = std::max(m, fn(i));
    partial[b / kChunk] = m;
  });
  double m = ninf;
  for (double p : partial) m = std::max(m, p);
  return m;
}

}  // namespace gadm
