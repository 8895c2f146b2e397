#include "ogc/convexity.hpp"

#include "ogc/errors.hpp"
#include "ogc/structure.hpp"

namespace ogc {

const char* extreme_kind_name(ExtremeKind k) {
    switch (k) {
        case ExtremeKind::Source: return "source";
        case ExtremeKind::Sink: return "sink";
        case ExtremeKind::Transitive: return "transitive";
        case ExtremeKind::NotExtreme: return "not-extreme";
    }
    return "?";
}

std::vector<ExtremeKind> classify_extreme(const OrientedGraph& g) {
    const int n = g.vertex_count();
    std::vector<ExtremeKind> kinds(n, ExtremeKind::NotExtreme);
    for (int v = 0; v < n; ++v) {
        if (g.in_degree(v) == 0) {
            kinds[v] = ExtremeKind::Source;
            continue;
        }
        if (g.out_degree(v) == 0) {
            kinds[v] = ExtremeKind::Sink;
            continue;
        }
        bool transitive = true;
        for (int u : g.in_neighbors(v)) {
            for (int w : g.out_neighbors(v)) {
                if (!g.has_arc(u, w)) {
                    transitive = false;
                    break;
                }
            }
            if (!transitive) break;
        }
        if (transitive) kinds[v] = ExtremeKind::Transitive;
    }
    return kinds;
}

VertexSet extreme_vertices(const OrientedGraph& g) {
    auto kinds = classify_extreme(g);
    VertexSet ext(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (kinds[v] != ExtremeKind::NotExtreme) ext.add(v);
    }
    return ext;
}

ConvexityContext::ConvexityContext(const OrientedGraph& g, Execution exec)
    : n_(g.vertex_count()), dist_(all_pairs_distances(g, exec)) {
    build(exec);
}

ConvexityContext::ConvexityContext(const UndirectedGraph& g, Execution exec)
    : n_(g.vertex_count()), dist_(all_pairs_distances(g, exec)) {
    build(exec);
}

void ConvexityContext::build(Execution exec) {
    pair_geodesics_.assign(static_cast<std::size_t>(n_) * n_, VertexSet());
    auto fill_row = [&](int u) {
        for (int v = 0; v < n_; ++v) {
            const int duv = dist_.at(u, v);
            if (duv == DistanceMatrix::kUnreachable) continue;
            VertexSet on(n_);
            for (int x = 0; x < n_; ++x) {
                int a = dist_.at(u, x);
                int b = dist_.at(x, v);
                if (a != DistanceMatrix::kUnreachable && b != DistanceMatrix::kUnreachable &&
                    a + b == duv)
                    on.add(x);
            }
            pair_geodesics_[static_cast<std::size_t>(u) * n_ + v] = std::move(on);
        }
    };
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int u = 0; u < n_; ++u) fill_row(u);
    } else {
        for (int u = 0; u < n_; ++u) fill_row(u);
    }
}

VertexSet ConvexityContext::interval(const VertexSet& s) const {
    if (s.count() < 2) return s;
    VertexSet result = s;
    auto members = s.to_vector();
    for (int u : members) {
        for (int v : members) {
            if (u == v) continue;
            const VertexSet& on = pair_geodesics_[static_cast<std::size_t>(u) * n_ + v];
            if (on.universe_size() == n_) result |= on;
        }
    }
    return result;
}

VertexSet ConvexityContext::hull(const VertexSet& s) const {
    VertexSet cur = s;
    while (true) {
        VertexSet next = interval(cur);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

VertexSet interval(const OrientedGraph& g, const VertexSet& s) {
    return ConvexityContext(g).interval(s);
}

VertexSet hull(const OrientedGraph& g, const VertexSet& s) { return ConvexityContext(g).hull(s); }

bool is_convex(const OrientedGraph& g, const VertexSet& s) {
    return ConvexityContext(g).is_convex(s);
}

bool is_coconvex(const OrientedGraph& g, const VertexSet& s) {
    return ConvexityContext(g).is_coconvex(s);
}

namespace {

SolveResult solve_min_set(const ConvexityContext& ctx, const VertexSet& forced, bool geodetic,
                          const SolveOptions& opts) {
    const int n = ctx.vertex_count();
    std::vector<int> candidates;
    for (int v = 0; v < n; ++v) {
        if (!forced.contains(v)) candidates.push_back(v);
    }
    auto accept = [&ctx, geodetic, n](const VertexSet& s) {
        return geodetic ? ctx.interval(s) == VertexSet::full(n) : ctx.hull(s) == VertexSet::full(n);
    };
    MinSupersetResult r = find_min_superset(forced, candidates, accept, opts);
    return SolveResult{r.witness.count(), r.witness, r.nodes_explored};
}

}  // namespace

SolveResult min_hull_set(const OrientedGraph& g, const SolveOptions& opts) {
    ConvexityContext ctx(g, opts.execution);
    return solve_min_set(ctx, extreme_vertices(g), /*geodetic=*/false, opts);
}

SolveResult min_geodetic_set(const OrientedGraph& g, const SolveOptions& opts) {
    ConvexityContext ctx(g, opts.execution);
    return solve_min_set(ctx, extreme_vertices(g), /*geodetic=*/true, opts);
}

VertexSet simplicial_vertices(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    VertexSet simp(n);
    for (int v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        bool clique = true;
        for (std::size_t i = 0; i < nb.size() && clique; ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (!g.has_edge(nb[i], nb[j])) {
                    clique = false;
                    break;
                }
            }
        }
        if (clique) simp.add(v);
    }
    return simp;
}

VertexSet undirected_interval(const UndirectedGraph& g, const VertexSet& s) {
    return ConvexityContext(g).interval(s);
}

VertexSet undirected_hull(const UndirectedGraph& g, const VertexSet& s) {
    return ConvexityContext(g).hull(s);
}

SolveResult undirected_min_hull_set(const UndirectedGraph& g, const SolveOptions& opts) {
    if (!is_connected(g)) raise(ErrorCode::Disconnected, "solver requires a connected graph");
    ConvexityContext ctx(g, opts.execution);
    return solve_min_set(ctx, simplicial_vertices(g), /*geodetic=*/false, opts);
}

}  // namespace ogc
