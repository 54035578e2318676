#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cnslab::detail {

/// Worker count for data-parallel sweeps. `requested > 0` wins, then the
/// CNSLAB_THREADS environment variable, then hardware concurrency.
int resolve_threads(int requested);

/// Runs fn(chunk, begin, end) over a contiguous partition of [0, n) with
/// one chunk per worker. Chunk boundaries depend only on (n, workers), so
/// any chunk-indexed output is reproducible. The first exception thrown by
/// a worker is rethrown on the calling thread.
template <class Fn>
void parallel_chunks(std::size_t n, int threads, Fn&& fn) {
    const int workers = resolve_threads(threads);
    if (n == 0) return;
    if (workers <= 1 || n < 2048) {
        fn(std::size_t{0}, std::size_t{0}, n);
        return;
    }

    const std::size_t chunks = static_cast<std::size_t>(workers);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(chunks);
    pool.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t begin = n * c / chunks;
        const std::size_t end = n * (c + 1) / chunks;
        pool.emplace_back([&, c, begin, end] {
            try {
                fn(c, begin, end);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace cnslab::detail
