#pragma once
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

// Deterministic chunked reduction: the index range is cut into fixed-size
// chunks, workers claim chunks dynamically, and per-chunk results are merged
// in chunk order afterwards. The chunk layout (not the worker count or the
// scheduling) fixes the floating-point merge tree, so a run with 1 worker and
// a run with 16 produce bit-identical results.
namespace mlrisk {

inline constexpr std::size_t default_chunk = 4096;

template <class Acc, class ChunkFn, class MergeFn>
Acc parallel_reduce(std::size_t n, Acc init, ChunkFn chunk_fn, MergeFn merge_fn,
                    unsigned workers = 0, std::size_t chunk = default_chunk) {
    if (workers == 0) {
        workers = std::thread::hardware_concurrency();
        if (workers == 0)
            workers = 1;
    }
    const std::size_t n_chunks = n == 0 ? 0 : (n + chunk - 1) / chunk;
    if (n_chunks <= 1 || workers == 1) {
        Acc acc = init;
        for (std::size_t c = 0; c < n_chunks; ++c)
            merge_fn(acc, chunk_fn(c * chunk, std::min(n, (c + 1) * chunk)));
        return acc;
    }

    std::vector<Acc> results(n_chunks, init);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= n_chunks)
                return;
            results[c] = chunk_fn(c * chunk, std::min(n, (c + 1) * chunk));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(work);
    for (auto& t : pool)
        t.join();

    Acc acc = init;
    for (std::size_t c = 0; c < n_chunks; ++c)
        merge_fn(acc, std::move(results[c]));
    return acc;
}

} // namespace mlrisk
