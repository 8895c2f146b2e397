#include "ogc/distance.hpp"

namespace ogc {

namespace {

template <typename Adj>
void bfs_into(int n, int source, Adj&& neighbors_of, int* out) {
    for (int i = 0; i < n; ++i) out[i] = DistanceMatrix::kUnreachable;
    std::vector<int> queue;
    queue.reserve(n);
    queue.push_back(source);
    out[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : neighbors_of(u)) {
            if (out[w] == DistanceMatrix::kUnreachable) {
                out[w] = out[u] + 1;
                queue.push_back(w);
            }
        }
    }
}

template <typename Adj>
DistanceMatrix all_pairs(int n, Adj&& neighbors_of, Execution exec) {
    DistanceMatrix d(n, DistanceMatrix::kUnreachable);
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int s = 0; s < n; ++s) bfs_into(n, s, neighbors_of, &d.at(s, 0));
    } else {
        for (int s = 0; s < n; ++s) bfs_into(n, s, neighbors_of, &d.at(s, 0));
    }
    return d;
}

}  // namespace

DistanceMatrix all_pairs_distances(const OrientedGraph& g, Execution exec) {
    return all_pairs(g.vertex_count(), [&](int u) -> const std::vector<int>& { return g.out_neighbors(u); },
                     exec);
}

DistanceMatrix all_pairs_distances(const UndirectedGraph& g, Execution exec) {
    return all_pairs(g.vertex_count(), [&](int u) -> const std::vector<int>& { return g.neighbors(u); },
                     exec);
}

std::vector<int> bfs_distances(const OrientedGraph& g, int source) {
    std::vector<int> d(g.vertex_count());
    bfs_into(g.vertex_count(), source, [&](int u) -> const std::vector<int>& { return g.out_neighbors(u); },
             d.data());
    return d;
}

std::vector<int> bfs_distances(const UndirectedGraph& g, int source) {
    std::vector<int> d(g.vertex_count());
    bfs_into(g.vertex_count(), source, [&](int u) -> const std::vector<int>& { return g.neighbors(u); },
             d.data());
    return d;
}

VertexSet geodesic_vertices(const OrientedGraph& g, int u, int v, const DistanceMatrix& dist) {
    const int n = g.vertex_count();
    VertexSet on(n);
    const int duv = dist.at(u, v);
    if (duv == DistanceMatrix::kUnreachable) return on;
    for (int x = 0; x < n; ++x) {
        int a = dist.at(u, x);
        int b = dist.at(x, v);
        if (a != DistanceMatrix::kUnreachable && b != DistanceMatrix::kUnreachable && a + b == duv)
            on.add(x);
    }
    return on;
}

}  // namespace ogc
