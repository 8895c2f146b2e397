#ifndef OGC_CONVEXITY_HPP
#define OGC_CONVEXITY_HPP

#include <cstdint>
#include <vector>

#include "ogc/digraph.hpp"
#include "ogc/distance.hpp"
#include "ogc/subset_search.hpp"
#include "ogc/vertex_set.hpp"

namespace ogc {

enum class ExtremeKind { Source, Sink, Transitive, NotExtreme };

const char* extreme_kind_name(ExtremeKind k);

/// Per-vertex classification. A vertex with in- and out-degree zero reports
/// Source; it is extreme either way.
std::vector<ExtremeKind> classify_extreme(const OrientedGraph& g);

/// ext(D): sources, sinks and transitive vertices. They belong to every
/// hull set, hence to every geodetic set.
VertexSet extreme_vertices(const OrientedGraph& g);

/// Geodesic-membership machinery shared by everything that iterates the
/// interval function. Precomputes, per ordered reachable pair, the set of
/// vertices on some geodesic between them. Read-only after construction,
/// safe to share across threads.
class ConvexityContext {
public:
    explicit ConvexityContext(const OrientedGraph& g, Execution exec = Execution::Parallel);
    explicit ConvexityContext(const UndirectedGraph& g, Execution exec = Execution::Parallel);

    int vertex_count() const { return n_; }
    const DistanceMatrix& distances() const { return dist_; }

    /// I(S): S plus every vertex on a geodesic between members of S.
    /// Equals S whenever |S| < 2.
    VertexSet interval(const VertexSet& s) const;

    /// Least fixpoint of the interval function containing S; the interval is
    /// recomputed over the full current set each round.
    VertexSet hull(const VertexSet& s) const;

    bool is_convex(const VertexSet& s) const { return interval(s) == s; }
    bool is_coconvex(const VertexSet& s) const { return is_convex(s.complement()); }

    bool is_hull_set(const VertexSet& s) const { return hull(s) == VertexSet::full(n_); }
    bool is_geodetic_set(const VertexSet& s) const { return interval(s) == VertexSet::full(n_); }

private:
    void build(Execution exec);

    int n_;
    DistanceMatrix dist_;
    std::vector<VertexSet> pair_geodesics_;  // indexed u*n+v; empty set if unreachable
};

// One-shot conveniences over a fresh context.
VertexSet interval(const OrientedGraph& g, const VertexSet& s);
VertexSet hull(const OrientedGraph& g, const VertexSet& s);
bool is_convex(const OrientedGraph& g, const VertexSet& s);
bool is_coconvex(const OrientedGraph& g, const VertexSet& s);

struct SolveResult {
    int optimum = 0;
    VertexSet witness;
    uint64_t nodes_explored = 0;
};

/// Exact minimum hull set. Extreme vertices are forced; the remainder is
/// searched by increasing cardinality, lexicographic within a cardinality.
SolveResult min_hull_set(const OrientedGraph& g, const SolveOptions& opts = {});

/// Exact minimum geodetic set, same search discipline.
SolveResult min_geodetic_set(const OrientedGraph& g, const SolveOptions& opts = {});

// Undirected counterparts (symmetric shortest paths; simplicial vertices
// play the role of extreme ones).
VertexSet simplicial_vertices(const UndirectedGraph& g);
VertexSet undirected_interval(const UndirectedGraph& g, const VertexSet& s);
VertexSet undirected_hull(const UndirectedGraph& g, const VertexSet& s);
SolveResult undirected_min_hull_set(const UndirectedGraph& g, const SolveOptions& opts = {});

}  // namespace ogc

#endif
