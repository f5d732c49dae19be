#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace czoo {

// Worker count for parallel sections: min(CZOO_THREADS, hardware), at least 1.
// Read per call so tests can flip the environment variable between runs.
std::size_t worker_count();

// Runs fn(i) for i in [0, count) across workers. Items must write disjoint
// state. Exceptions propagate (first one wins).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

// Deterministic parallel sum of per-item contributions into a dense vector.
// Items are grouped into fixed-size chunks independent of the worker count;
// each chunk accumulates sequentially into its own partial vector and the
// partials are added in chunk order, so the floating-point result is
// identical for any number of threads.
std::vector<double> parallel_accumulate(
    std::size_t items, std::size_t dim,
    const std::function<void(std::size_t, std::vector<double>&)>& fn);

}  // namespace czoo
