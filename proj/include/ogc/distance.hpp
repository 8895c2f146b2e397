#ifndef OGC_DISTANCE_HPP
#define OGC_DISTANCE_HPP

#include <cstdint>
#include <vector>

#include "ogc/digraph.hpp"
#include "ogc/vertex_set.hpp"

namespace ogc {

/// How batch kernels run. Serial is the reference; the OpenMP path must
/// produce bit-identical results.
enum class Execution { Serial, Parallel };

/// All-pairs directed distances. Unreachable pairs hold an explicit
/// sentinel, never a large finite value.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    DistanceMatrix() = default;
    DistanceMatrix(int n, int fill) : n_(n), d_(static_cast<std::size_t>(n) * n, fill) {}

    int size() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    int& at(int u, int v) { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }

private:
    int n_ = 0;
    std::vector<int> d_;
};

DistanceMatrix all_pairs_distances(const OrientedGraph& g, Execution exec = Execution::Parallel);
DistanceMatrix all_pairs_distances(const UndirectedGraph& g, Execution exec = Execution::Parallel);

/// Single-source directed distances (kUnreachable where no path).
std::vector<int> bfs_distances(const OrientedGraph& g, int source);
std::vector<int> bfs_distances(const UndirectedGraph& g, int source);

/// Vertices on some (u,v)-geodesic: {x : d(u,x)+d(x,v) = d(u,v)}.
/// Empty when v is unreachable from u.
VertexSet geodesic_vertices(const OrientedGraph& g, int u, int v, const DistanceMatrix& dist);

}  // namespace ogc

#endif
