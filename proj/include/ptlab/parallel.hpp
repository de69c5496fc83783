#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace ptlab {

// Worker cap from PONTRYAGIN_THREADS; defaults to 1 (sequential).
// Results are combined per fixed-size chunk in chunk-index order, so the
// reduction is bitwise identical for any thread count.
int max_threads();

// Evaluates body(chunk_begin, chunk_end) over [0, n) in chunks and returns
// the per-chunk results in chunk order.
template <typename T>
std::vector<T> chunked_map(std::size_t n, std::size_t chunk,
                           const std::function<T(std::size_t, std::size_t)>& body) {
    std::size_t nchunks = (n + chunk - 1) / chunk;
    std::vector<T> results(nchunks);
    int workers = max_threads();
    if (workers <= 1 || nchunks <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c)
            results[c] = body(c * chunk, std::min(n, (c + 1) * chunk));
        return results;
    }
    std::vector<std::thread> pool;
    std::size_t stride = static_cast<std::size_t>(workers);
    for (std::size_t w = 0; w < stride; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t c = w; c < nchunks; c += stride)
                results[c] = body(c * chunk, std::min(n, (c + 1) * chunk));
        });
    }
    for (auto& t : pool) t.join();
    return results;
}

inline double chunked_sum(std::size_t n, std::size_t chunk,
                          const std::function<double(std::size_t, std::size_t)>& body) {
    double total = 0.0;
    for (double part : chunked_map<double>(n, chunk, body)) total += part;
    return total;
}

} // namespace ptlab
