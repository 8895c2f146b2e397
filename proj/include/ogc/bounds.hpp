#ifndef OGC_BOUNDS_HPP
#define OGC_BOUNDS_HPP

#include <vector>

#include "ogc/convexity.hpp"
#include "ogc/digraph.hpp"
#include "ogc/vertex_set.hpp"

namespace ogc {

/// A verified hull set together with the bound it was built against and the
/// step-by-step construction trace.
struct BoundCertificate {
    VertexSet hull_set;
    int ext_count = 0;
    /// |ext| + floor(2(n-|ext|)/3).
    int bound_value = 0;

    struct Step {
        std::vector<int> added;
        int hull_size_after = 0;
    };
    std::vector<Step> trace;
};

/// Iterative hull-set construction for arbitrary oriented graphs: grow from
/// ext(D), each round absorbing the smallest uncovered vertex through a
/// length-two geodesic whose endpoints cost at most two new vertices. The
/// result is a verified hull set of size at most the certificate bound.
BoundCertificate greedy_hull_set(const OrientedGraph& g);

/// Triangle interval for tournaments: S plus every vertex completing a
/// directed triangle with two members of S. Identity when |S| < 2.
VertexSet c3_interval(const OrientedGraph& g, const VertexSet& s);

/// Fixpoint of c3_interval. Always contained in hull(S): a length-two
/// triangle path between non-adjacent endpoints is a geodesic.
VertexSet c3_closure(const OrientedGraph& g, const VertexSet& s);

/// Tournament construction: ext(D) plus pairs of vertices seeded and grown
/// through directed triangles until the triangle closure covers all
/// non-extreme vertices. Raises ConstructionFailed if no qualifying triangle
/// exists at some step (would contradict the pairing argument).
BoundCertificate tournament_hull_set(const OrientedGraph& g);

/// Split-graph construction: extreme stable vertices, extreme vertices of
/// the clique tournament, and a tournament-built remainder inside the
/// clique. Requires the stable side maximal and |clique| >= 2.
BoundCertificate split_hull_set(const OrientedGraph& g, const VertexSet& stable,
                                const VertexSet& clique);

}  // namespace ogc

#endif
