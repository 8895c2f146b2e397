#ifndef OGC_REDUCTIONS_HPP
#define OGC_REDUCTIONS_HPP

#include <string>
#include <vector>

#include "ogc/digraph.hpp"
#include "ogc/subset_search.hpp"
#include "ogc/vertex_set.hpp"

namespace ogc {

/// A Set Cover instance: universe {1..n}, family of subsets, budget k.
/// The family must cover the universe.
struct SetCoverInstance {
    int universe_size = 0;
    std::vector<std::vector<int>> family;  // 1-based elements, each sorted
    int budget = 0;
};

/// Throws InvalidInstance unless every set is within range, the family is
/// nonempty and its union is the whole universe.
void validate_instance(const SetCoverInstance& inst);

// Set-cover text format: line 1 "n m k"; then m lines "s e1 ... es".
SetCoverInstance parse_set_cover(const std::string& text);
std::string format_set_cover(const SetCoverInstance& inst);

/// Who a gadget vertex is. Vertex numbering is fixed: set vertices
/// 0..m-1, element vertices m..m+n-1, then apexes in documented order
/// (u,v,w for the bipartite and cobipartite gadgets; u,w,x,y for split).
struct GadgetMapping {
    int m = 0;  // family size
    int n = 0;  // universe size
    std::vector<std::string> apex_names;

    int set_vertex(int i) const { return i; }
    int element_vertex(int j) const { return m + j - 1; }  // j is 1-based
    int apex(const std::string& name) const;

    bool is_set_vertex(int v) const { return v < m; }
    bool is_element_vertex(int v) const { return v >= m && v < m + n; }
    /// 1-based element for an element vertex.
    int element_of(int v) const { return v - m + 1; }
    std::string role_of(int v) const;
};

struct Gadget {
    OrientedGraph graph;
    GadgetMapping mapping;
    int threshold = 0;  // k + 3
};

/// The membership digraph D(I) alone: arcs (f_i, u_j) whenever j is in F_i.
std::pair<OrientedGraph, GadgetMapping> core_gadget(const SetCoverInstance& inst);

/// DAG with bipartite underlying graph; apexes u, v, w.
Gadget to_bipartite_dag(const SetCoverInstance& inst);

/// Underlying split graph (clique on the set vertices plus u, x); apexes
/// u, w, x, y. Contains directed cycles in general.
Gadget to_split(const SetCoverInstance& inst);

/// DAG with cobipartite underlying graph (both sides completed to
/// transitively-oriented cliques); apexes u, v, w.
Gadget to_cobipartite(const SetCoverInstance& inst);

/// From a geodetic set of a gadget, recover a cover of the universe:
/// element vertices are replaced by their smallest in-neighbor set vertex
/// and the split gadget's x is dropped. Returns 0-based family indices.
/// Throws NotGeodetic when S is not geodetic in the gadget.
std::vector<int> decode_cover(const Gadget& gadget, const SetCoverInstance& inst,
                              const VertexSet& s);

/// Exhaustive minimum cover by increasing family-subset cardinality.
struct CoverOptimum {
    int size = 0;
    std::vector<int> indices;  // 0-based, lexicographically smallest optimum
};
CoverOptimum min_set_cover(const SetCoverInstance& inst);

/// Desk-scale check of the reduction biconditional: exact ogn of all three
/// gadgets must equal the exhaustive cover optimum plus three.
struct EquivalenceReport {
    int optimal_cover = 0;
    int ogn_bipartite = 0;
    int ogn_split = 0;
    int ogn_cobipartite = 0;
    bool consistent = false;
};
EquivalenceReport verify_equivalence(const SetCoverInstance& inst, const SolveOptions& opts = {});

}  // namespace ogc

#endif
