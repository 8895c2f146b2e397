#ifndef OGC_SUBSET_SEARCH_HPP
#define OGC_SUBSET_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "ogc/distance.hpp"
#include "ogc/vertex_set.hpp"

namespace ogc {

/// Guard and execution knobs for the exact solvers.
struct SolveOptions {
    /// Maximum number of non-forced vertices; beyond this the search raises
    /// InstanceTooLarge instead of running for hours.
    int max_free = 24;
    Execution execution = Execution::Parallel;
};

struct MinSupersetResult {
    VertexSet witness;
    /// Candidate sets the sequential lexicographic search evaluates up to
    /// and including the winner. Identical for both execution modes.
    uint64_t nodes_explored = 0;
};

/// Smallest superset of `forced` (extending it with vertices from
/// `candidates`) satisfying `accept`. Ties broken by lexicographic order of
/// the added combination, so the result is deterministic: the parallel scan
/// returns exactly what the serial scan returns. `accept` must be pure and
/// thread-safe. A feasible set must exist (forced ∪ candidates at the latest).
MinSupersetResult find_min_superset(const VertexSet& forced, const std::vector<int>& candidates,
                                    const std::function<bool(const VertexSet&)>& accept,
                                    const SolveOptions& opts = {});

/// C(n, k) without overflow for the sizes the guard admits.
uint64_t binomial(int n, int k);

/// k-combination of {0..n-1} with lexicographic rank `rank`.
std::vector<int> unrank_combination(uint64_t rank, int n, int k);

}  // namespace ogc

#endif
