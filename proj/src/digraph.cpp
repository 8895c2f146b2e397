#include "ogc/digraph.hpp"

#include <algorithm>
#include <string>

#include "ogc/errors.hpp"

namespace ogc {

namespace {

std::string arc_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

OrientedGraph OrientedGraph::build(int n, std::vector<std::pair<int, int>> arcs) {
    if (n < 0) raise(ErrorCode::BadParameter, "negative vertex count");
    OrientedGraph g;
    g.n_ = n;
    g.words_ = static_cast<std::size_t>((n + 63) / 64);
    g.arc_bits_.assign(g.words_ * static_cast<std::size_t>(n), 0);
    g.out_.resize(n);
    g.in_.resize(n);

    std::sort(arcs.begin(), arcs.end());
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            raise(ErrorCode::VertexOutOfRange, "arc " + arc_str(u, v) + " with n=" + std::to_string(n));
        if (u == v) raise(ErrorCode::Loop, "arc " + arc_str(u, v));
    }
    for (std::size_t i = 0; i + 1 < arcs.size(); ++i) {
        if (arcs[i] == arcs[i + 1])
            raise(ErrorCode::DuplicateArc, "arc " + arc_str(arcs[i].first, arcs[i].second));
    }
    auto set_bit = [&](int u, int v) {
        g.arc_bits_[static_cast<std::size_t>(u) * g.words_ + (v >> 6)] |= 1ULL << (v & 63);
    };
    for (auto [u, v] : arcs) {
        set_bit(u, v);
    }
    for (auto [u, v] : arcs) {
        if (g.has_arc(v, u))
            raise(ErrorCode::SymmetricArcPair, "arcs " + arc_str(u, v) + " and " + arc_str(v, u));
        g.out_[u].push_back(v);
        g.in_[v].push_back(u);
    }
    for (auto& vec : g.in_) std::sort(vec.begin(), vec.end());
    g.arcs_ = std::move(arcs);
    return g;
}

UndirectedGraph OrientedGraph::underlying() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(arcs_.size());
    for (auto [u, v] : arcs_) edges.emplace_back(std::min(u, v), std::max(u, v));
    return UndirectedGraph::build(n_, std::move(edges));
}

OrientedGraph OrientedGraph::induced(const VertexSet& keep, std::vector<int>* back_map) const {
    std::vector<int> old_ids = keep.to_vector();
    std::vector<int> new_id(n_, -1);
    for (std::size_t i = 0; i < old_ids.size(); ++i) new_id[old_ids[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : arcs_) {
        if (new_id[u] >= 0 && new_id[v] >= 0) arcs.emplace_back(new_id[u], new_id[v]);
    }
    if (back_map) *back_map = old_ids;
    return build(static_cast<int>(old_ids.size()), std::move(arcs));
}

UndirectedGraph UndirectedGraph::build(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) raise(ErrorCode::BadParameter, "negative vertex count");
    UndirectedGraph g;
    g.n_ = n;
    g.words_ = static_cast<std::size_t>((n + 63) / 64);
    g.edge_bits_.assign(g.words_ * static_cast<std::size_t>(n), 0);
    g.adj_.resize(n);

    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            raise(ErrorCode::VertexOutOfRange, "edge " + arc_str(u, v) + " with n=" + std::to_string(n));
        if (u == v) raise(ErrorCode::Loop, "edge " + arc_str(u, v));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (edges[i] == edges[i + 1])
            raise(ErrorCode::DuplicateArc, "edge " + arc_str(edges[i].first, edges[i].second));
    }
    auto set_bit = [&](int u, int v) {
        g.edge_bits_[static_cast<std::size_t>(u) * g.words_ + (v >> 6)] |= 1ULL << (v & 63);
    };
    for (auto [u, v] : edges) {
        set_bit(u, v);
        set_bit(v, u);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& vec : g.adj_) std::sort(vec.begin(), vec.end());
    g.edges_ = std::move(edges);
    return g;
}

}  // namespace ogc
