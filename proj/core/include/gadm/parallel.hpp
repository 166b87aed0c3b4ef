#ifndef GADM_PARALLEL_HPP_
#define GADM_PARALLEL_HPP_

// Deterministic shared-memory parallelism.
//
// Work is split into chunks whose boundaries depend only on the problem
// size, never on the thread count. Reductions accumulate one partial per
// chunk and combine the partials serially in chunk order, so results are
// bit-identical for any number of threads. Thread count comes from
// set_threads() or the GADM_THREADS environment variable.

#include <cstddef>
#include <functional>

namespace gadm {

int thread_count();
void set_threads(int n);  // n < 1 resets to the environment/default

// Runs fn(chunk_begin, chunk_end) over [0, total) split into fixed-size
// chunks. fn must only write to disjoint state per index range.
void parallel_for(std::size_t total,
                  const std::function<void(std::size_t, std::size_t)>& fn);

// Deterministic sum of fn(i) over [0, total): fixed chunking, serial
// combination of per-chunk partials in chunk order.
double parallel_sum(std::size_t total,
                    const std::function<double(std::size_t)>& fn);

// Deterministic max of fn(i) over [0, total); returns -inf for empty range.
double parallel_max(std::size_t total,
                    const std::function<double(std::size_t)>& fn);

}  // namespace gadm

#endif
