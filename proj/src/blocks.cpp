#include "ogc/blocks.hpp"

#include <algorithm>

namespace ogc {

namespace {

// Iterative Hopcroft-Tarjan: lowpoints plus an edge stack popped at
// articulation points.
struct BlockFinder {
    explicit BlockFinder(const UndirectedGraph& g)
        : g(g),
          n(g.vertex_count()),
          num(n, -1),
          low(n, 0),
          parent(n, -1),
          child_count(n, 0),
          is_cut(n, false) {}

    void run() {
        for (int root = 0; root < n; ++root) {
            if (num[root] == -1) dfs(root);
        }
    }

    void dfs(int root) {
        struct Frame {
            int v;
            std::size_t next_idx;
        };
        std::vector<Frame> stack;
        num[root] = low[root] = timer++;
        stack.push_back({root, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            int v = f.v;
            const auto& adj = g.neighbors(v);
            if (f.next_idx < adj.size()) {
                int w = adj[f.next_idx++];
                if (num[w] == -1) {
                    edge_stack.emplace_back(v, w);
                    parent[w] = v;
                    ++child_count[v];
                    num[w] = low[w] = timer++;
                    stack.push_back({w, 0});
                } else if (w != parent[v] && num[w] < num[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= num[p]) {
                        // p closes a block; pop edges down to (p, v).
                        pop_block(p, v);
                        if (parent[p] != -1 || child_count[p] >= 2) is_cut[p] = true;
                    }
                }
            }
        }
    }

    void pop_block(int p, int v) {
        std::vector<std::pair<int, int>> edges;
        while (!edge_stack.empty()) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            edges.push_back(e);
            if (e.first == p && e.second == v) break;
        }
        blocks.push_back(std::move(edges));
    }

    const UndirectedGraph& g;
    int n;
    int timer = 0;
    std::vector<int> num, low, parent, child_count;
    std::vector<bool> is_cut;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
};

}  // namespace

BlockDecomposition block_decomposition(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    BlockFinder finder(g);
    finder.run();

    BlockDecomposition out;
    out.cut_vertices = VertexSet(n);
    out.blocks_of_vertex.resize(n);
    for (auto& edges : finder.blocks) {
        VertexSet verts(n);
        for (auto [u, v] : edges) {
            verts.add(u);
            verts.add(v);
        }
        int idx = static_cast<int>(out.blocks.size());
        verts.for_each([&](int v) { out.blocks_of_vertex[v].push_back(idx); });
        for (auto& [u, v] : edges) {
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        out.block_edges.push_back(std::move(edges));
        out.blocks.push_back(std::move(verts));
    }
    for (int v = 0; v < n; ++v) {
        if (finder.is_cut[v]) out.cut_vertices.add(v);
    }
    return out;
}

}  // namespace ogc
