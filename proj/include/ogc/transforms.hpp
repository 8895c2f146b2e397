#ifndef OGC_TRANSFORMS_HPP
#define OGC_TRANSFORMS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ogc/digraph.hpp"
#include "ogc/vertex_set.hpp"

namespace ogc {

/// Index bookkeeping for the edge-to-directed-C4 replacement. Base vertices
/// keep their indices; each original edge {i,j} (i<j) contributes the two
/// subdivision vertices (i,j) and (j,i), in edge order.
struct C4Mapping {
    int original_n = 0;
    /// sub_origin[t] = (i,j) for the new vertex original_n + t.
    std::vector<std::pair<int, int>> sub_origin;

    bool is_base(int index) const { return index < original_n; }

    std::pair<int, int> sub_pair(int index) const { return sub_origin[index - original_n]; }

    /// Index of the subdivision vertex v_{i,j}; -1 when {i,j} was no edge.
    int subdivision(int i, int j) const {
        auto it = sub_index.find({i, j});
        return it == sub_index.end() ? -1 : it->second;
    }

    std::map<std::pair<int, int>, int> sub_index;
};

/// Replace every edge of G by a directed C4 through two new vertices.
/// Doubles all base-to-base distances in both directions when G is
/// connected. Does not require bipartiteness.
std::pair<OrientedGraph, C4Mapping> orient_c4(const UndirectedGraph& g);

/// Lexicographic product: copies of `inner` per vertex of `outer`, complete
/// one-way arc bundles along arcs of `outer`. Vertex (u,v) gets index
/// u * n(inner) + v.
OrientedGraph lex_product(const OrientedGraph& outer, const OrientedGraph& inner);

/// Arcs (i,j) for all i < j.
OrientedGraph transitive_tournament(int k);

/// Arcs (i, i+1 mod k); requires k >= 3.
OrientedGraph directed_cycle(int k);

/// Transitive K_k composed with a directed triangle: 3k vertices, no
/// extreme vertex, minimum hull set of size exactly 2k.
OrientedGraph tight_example(int k);

/// Per-vertex bit labels in a hypercube of dimension `dim`. Bit t of a
/// label is coordinate t; rendered as a 0/1 string with coordinate 0 first.
struct HypercubeLabeling {
    int dim = 0;
    std::vector<uint64_t> labels;

    std::string label_string(int v) const;
};

/// True iff labels are pairwise distinct, adjacency coincides with Hamming
/// distance one, and every graph distance equals the Hamming distance.
bool verify_isometric_labeling(const UndirectedGraph& g, const HypercubeLabeling& l);

/// The doubling construction: from an isometric labeling of bipartite G in
/// Q_k, produce G_C4 with a verified isometric labeling in Q_2k.
struct DoubledCube {
    OrientedGraph graph;
    C4Mapping mapping;
    HypercubeLabeling labeling;
};
DoubledCube doubling_labels(const UndirectedGraph& g, const HypercubeLabeling& l);

// Labeling file format: line 1 "n k", then n lines of k-character 0/1
// strings, vertex order 0..n-1.
HypercubeLabeling parse_labeling(const std::string& text);
std::string format_labeling(const HypercubeLabeling& l);

// Seeded generators. Determinism contract: same parameters and seed give
// byte-identical graphs.
OrientedGraph random_orientation(const UndirectedGraph& g, uint64_t seed);
OrientedGraph random_tournament(int n, uint64_t seed);
OrientedGraph random_cactus(int n, uint64_t seed);
OrientedGraph random_bipartite(int n1, int n2, double p, uint64_t seed);
OrientedGraph random_oriented_tree(int n, uint64_t seed);

struct RandomSplit {
    OrientedGraph graph;
    VertexSet stable;
    VertexSet clique;
};
/// Stable side is maximal by construction and the emitted partition always
/// passes is_split_underlying.
RandomSplit random_split(int ns, int nc, double p, uint64_t seed);

}  // namespace ogc

#endif
