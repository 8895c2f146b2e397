#ifndef OGC_DIGRAPH_HPP
#define OGC_DIGRAPH_HPP

#include <utility>
#include <vector>

#include "ogc/vertex_set.hpp"

namespace ogc {

class UndirectedGraph;

/// An orientation of a simple graph: no loops and no symmetric arc pair.
/// Vertices are dense integers 0..n-1. Immutable after construction.
class OrientedGraph {
public:
    /// Validates and builds. Throws Error with code Loop, SymmetricArcPair,
    /// DuplicateArc or VertexOutOfRange.
    static OrientedGraph build(int n, std::vector<std::pair<int, int>> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    /// Arcs sorted ascending by (tail, head).
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }

    bool has_arc(int u, int v) const {
        return (arc_bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
                (v & 63)) &
               1ULL;
    }

    bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

    UndirectedGraph underlying() const;

    /// Induced subdigraph on `keep`; `back_map[new] = old`, ascending.
    OrientedGraph induced(const VertexSet& keep, std::vector<int>* back_map = nullptr) const;

private:
    OrientedGraph() = default;

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<uint64_t> arc_bits_;
};

/// Simple undirected graph; edges stored with u < v.
class UndirectedGraph {
public:
    static UndirectedGraph build(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const {
        return (edge_bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
                (v & 63)) &
               1ULL;
    }

private:
    UndirectedGraph() = default;

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<uint64_t> edge_bits_;
};

}  // namespace ogc

#endif
