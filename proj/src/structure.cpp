#include "ogc/structure.hpp"

#include <vector>

#include "ogc/blocks.hpp"

namespace ogc {

bool is_connected(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<int> queue{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        for (int w : g.neighbors(queue[h])) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return static_cast<int>(queue.size()) == n;
}

bool is_tree(const UndirectedGraph& g) {
    return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

bool is_tournament(const OrientedGraph& g) {
    const int n = g.vertex_count();
    if (static_cast<long long>(g.arc_count()) != static_cast<long long>(n) * (n - 1) / 2)
        return false;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) return false;
        }
    }
    return true;
}

bool is_dag(const OrientedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> indeg(n, 0);
    for (auto [u, v] : g.arcs()) ++indeg[v];
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        if (indeg[v] == 0) queue.push_back(v);
    }
    int removed = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        ++removed;
        for (int w : g.out_neighbors(queue[h])) {
            if (--indeg[w] == 0) queue.push_back(w);
        }
    }
    return removed == n;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    VertexSet a(n), b(n);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            for (int w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) (color[v] == 0 ? a : b).add(v);
    return std::make_pair(a, b);
}

bool is_bipartite_underlying(const OrientedGraph& g) {
    return bipartition(g.underlying()).has_value();
}

namespace {

bool is_clique(const OrientedGraph& g, const VertexSet& c) {
    auto verts = c.to_vector();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (!g.adjacent(verts[i], verts[j])) return false;
        }
    }
    return true;
}

bool is_stable(const OrientedGraph& g, const VertexSet& s) {
    auto verts = s.to_vector();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (g.adjacent(verts[i], verts[j])) return false;
        }
    }
    return true;
}

bool is_partition(const OrientedGraph& g, const VertexSet& a, const VertexSet& b) {
    if (a.universe_size() != g.vertex_count() || b.universe_size() != g.vertex_count())
        return false;
    return !a.intersects(b) && (a | b) == VertexSet::full(g.vertex_count());
}

}  // namespace

bool is_split_underlying(const OrientedGraph& g, const VertexSet& stable, const VertexSet& clique) {
    return is_partition(g, stable, clique) && is_stable(g, stable) && is_clique(g, clique);
}

bool is_cobipartite_underlying(const OrientedGraph& g, const VertexSet& c1, const VertexSet& c2) {
    return is_partition(g, c1, c2) && is_clique(g, c1) && is_clique(g, c2);
}

bool is_cactus(const UndirectedGraph& g) {
    auto dec = block_decomposition(g);
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
        int nv = dec.blocks[i].count();
        int ne = static_cast<int>(dec.block_edges[i].size());
        if (nv == 2 && ne == 1) continue;
        // A 2-connected block is a cycle exactly when #edges == #vertices.
        if (nv >= 3 && ne == nv) continue;
        return false;
    }
    return true;
}

bool is_cactus(const OrientedGraph& g) { return is_cactus(g.underlying()); }

bool is_maximal_stable(const UndirectedGraph& g, const VertexSet& stable) {
    if (!stable.is_subset_of(VertexSet::full(g.vertex_count()))) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (stable.contains(v)) continue;
        bool touches = false;
        for (int w : g.neighbors(v)) {
            if (stable.contains(w)) {
                touches = true;
                break;
            }
        }
        if (!touches) return false;
    }
    return true;
}

}  // namespace ogc
