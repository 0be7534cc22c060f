#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <thread>
#include <vector>

namespace z4lat {

using std::uint64_t;

inline int popcount(uint64_t x) { return std::popcount(x); }
inline int parity64(uint64_t x) { return std::popcount(x) & 1; }
inline int ctz(uint64_t x) { return std::countr_zero(x); }

inline uint64_t mask_n(int n) { return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }

// Next integer with the same popcount (Gosper's hack); 0 when exhausted.
inline uint64_t next_same_weight(uint64_t x) {
    uint64_t u = x & -x;
    uint64_t v = u + x;
    if (v == 0) return 0;
    return v + (((v ^ x) / u) >> 2);
}

// Deterministic chunked map-reduce: fn(begin,end) -> R computed per fixed
// chunk, results merged in chunk order regardless of how many workers ran.
template <class R, class ChunkFn, class MergeFn>
R run_chunked(uint64_t total, uint64_t chunk, int jobs, R init, ChunkFn&& fn, MergeFn&& merge) {
    if (total == 0) return init;
    if (chunk == 0) chunk = total;
    const uint64_t nchunks = (total + chunk - 1) / chunk;
    if (jobs <= 1 || nchunks == 1) {
        R acc = std::move(init);
        for (uint64_t c = 0; c < nchunks; ++c) {
            uint64_t b = c * chunk, e = std::min(total, b + chunk);
            acc = merge(std::move(acc), fn(b, e));
        }
        return acc;
    }
    std::vector<R> results(nchunks, init);
    std::atomic<uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            uint64_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            uint64_t b = c * chunk, e = std::min(total, b + chunk);
            results[c] = fn(b, e);
        }
    };
    std::vector<std::thread> pool;
    int nt = std::min<uint64_t>(jobs, nchunks);
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    R acc = std::move(init);
    for (auto& r : results) acc = merge(std::move(acc), std::move(r));
    return acc;
}

inline int hardware_jobs(int cap = 8) {
    unsigned hc = std::thread::hardware_concurrency();
    if (hc == 0) hc = 1;
    return static_cast<int>(hc > static_cast<unsigned>(cap) ? cap : hc);
}

}  // namespace z4lat
