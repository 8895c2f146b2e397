#include "ogc/subset_search.hpp"

#include <atomic>
#include <cassert>

#include "ogc/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ogc {

uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<int> unrank_combination(uint64_t rank, int n, int k) {
    std::vector<int> combo;
    combo.reserve(k);
    int x = 0;
    for (int pos = 0; pos < k; ++pos) {
        while (true) {
            uint64_t block = binomial(n - 1 - x, k - 1 - pos);
            if (rank < block) break;
            rank -= block;
            ++x;
        }
        combo.push_back(x);
        ++x;
    }
    return combo;
}

namespace {

/// Advance to the successor in lexicographic order; false past the last one.
bool next_combination(std::vector<int>& combo, int n) {
    const int k = static_cast<int>(combo.size());
    for (int i = k - 1; i >= 0; --i) {
        if (combo[i] < n - k + i) {
            ++combo[i];
            for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    return false;
}

VertexSet assemble(const VertexSet& forced, const std::vector<int>& candidates,
                   const std::vector<int>& combo) {
    VertexSet s = forced;
    for (int idx : combo) s.add(candidates[idx]);
    return s;
}

struct ScanOutcome {
    bool found = false;
    uint64_t rank = 0;
};

ScanOutcome scan_serial(const VertexSet& forced, const std::vector<int>& candidates, int extra,
                        const std::function<bool(const VertexSet&)>& accept) {
    const int c = static_cast<int>(candidates.size());
    std::vector<int> combo(extra);
    for (int i = 0; i < extra; ++i) combo[i] = i;
    uint64_t rank = 0;
    while (true) {
        if (accept(assemble(forced, candidates, combo))) return {true, rank};
        if (!next_combination(combo, c)) return {false, rank + 1};
        ++rank;
    }
}

ScanOutcome scan_parallel(const VertexSet& forced, const std::vector<int>& candidates, int extra,
                          const std::function<bool(const VertexSet&)>& accept) {
    const int c = static_cast<int>(candidates.size());
    const uint64_t total = binomial(c, extra);
    std::atomic<uint64_t> best{UINT64_MAX};
#pragma omp parallel
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
        const int nthreads = omp_get_num_threads();
#else
        const int tid = 0;
        const int nthreads = 1;
#endif
        const uint64_t chunk = (total + nthreads - 1) / nthreads;
        const uint64_t lo = std::min<uint64_t>(total, chunk * tid);
        const uint64_t hi = std::min<uint64_t>(total, lo + chunk);
        if (lo < hi) {
            std::vector<int> combo = unrank_combination(lo, c, extra);
            for (uint64_t rank = lo; rank < hi; ++rank) {
                if (rank >= best.load(std::memory_order_relaxed)) break;
                if (accept(assemble(forced, candidates, combo))) {
                    uint64_t prev = best.load(std::memory_order_relaxed);
                    while (rank < prev &&
                           !best.compare_exchange_weak(prev, rank, std::memory_order_relaxed)) {
                    }
                    break;
                }
                if (rank + 1 < hi) next_combination(combo, c);
            }
        }
    }
    if (best.load() != UINT64_MAX) return {true, best.load()};
    return {false, total};
}

}  // namespace

MinSupersetResult find_min_superset(const VertexSet& forced, const std::vector<int>& candidates,
                                    const std::function<bool(const VertexSet&)>& accept,
                                    const SolveOptions& opts) {
    const int c = static_cast<int>(candidates.size());
    if (c > opts.max_free)
        raise(ErrorCode::InstanceTooLarge,
              std::to_string(c) + " free vertices exceed the guard of " + std::to_string(opts.max_free));

    uint64_t explored = 0;
    for (int extra = 0; extra <= c; ++extra) {
        const uint64_t total = binomial(c, extra);
        // Small levels are not worth a parallel region.
        const bool parallel = opts.execution == Execution::Parallel && total >= 512;
        ScanOutcome outcome = parallel ? scan_parallel(forced, candidates, extra, accept)
                                       : scan_serial(forced, candidates, extra, accept);
        if (outcome.found) {
            MinSupersetResult r;
            r.witness = assemble(forced, candidates, unrank_combination(outcome.rank, c, extra));
            r.nodes_explored = explored + outcome.rank + 1;
            return r;
        }
        explored += total;
    }
    raise(ErrorCode::ConstructionFailed, "no feasible superset exists");
}

}  // namespace ogc
