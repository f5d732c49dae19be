#include "czoo/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace czoo {

std::size_t worker_count() {
    std::size_t hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("CZOO_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && static_cast<std::size_t>(v) < hw)
            hw = static_cast<std::size_t>(v);
    }
    return hw;
}

namespace {

// Work-stealing-free chunked dispatch: workers pull chunk indices from an
// atomic counter.
void run_chunks(std::size_t n_chunks, const std::function<void(std::size_t)>& chunk_fn) {
    std::size_t workers = std::min(worker_count(), n_chunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < n_chunks; ++c) chunk_fn(c);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        for (;;) {
            std::size_t c = next.fetch_add(1);
            if (c >= n_chunks) return;
            try {
                chunk_fn(c);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

constexpr std::size_t kChunk = 16;

}  // namespace

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    std::size_t n_chunks = (count + kChunk - 1) / kChunk;
    run_chunks(n_chunks, [&](std::size_t c) {
        std::size_t lo = c * kChunk;
        std::size_t hi = std::min(lo + kChunk, count);
        for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
}

std::vector<double> parallel_accumulate(
    std::size_t items, std::size_t dim,
    const std::function<void(std::size_t, std::vector<double>&)>& fn) {
    std::vector<double> total(dim, 0.0);
    if (items == 0) return total;
    std::size_t n_chunks = (items + kChunk - 1) / kChunk;
    std::vector<std::vector<double>> partials(n_chunks);
    run_chunks(n_chunks, [&](std::size_t c) {
        auto& acc = partials[c];
        acc.assign(dim, 0.0);
        std::size_t lo = c * kChunk;
        std::size_t hi = std::min(lo + kChunk, items);
        for (std::size_t i = lo; i < hi; ++i) fn(i, acc);
    });
    // Fixed reduction order keeps results byte-identical across thread counts.
    for (const auto& acc : partials)
        for (std::size_t d = 0; d < dim; ++d) total[d] += acc[d];
    return total;
}

}  // namespace czoo
