#include <random>

#include "doctest.h"
#include "ogc/convexity.hpp"
#include "ogc/digraph.hpp"
#include "ogc/errors.hpp"
#include "ogc/structure.hpp"
#include "oracles.hpp"

using namespace ogc;

namespace {

OrientedGraph directed_cycle3() { return OrientedGraph::build(3, {{0, 1}, {1, 2}, {2, 0}}); }

OrientedGraph transitive_tournament(int k) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) arcs.emplace_back(i, j);
    }
    return OrientedGraph::build(k, std::move(arcs));
}

OrientedGraph random_digraph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution edge(p);
    std::bernoulli_distribution flip(0.5);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (edge(rng)) arcs.emplace_back(flip(rng) ? std::pair{u, v} : std::pair{v, u});
        }
    }
    return OrientedGraph::build(n, std::move(arcs));
}

VertexSet random_subset(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution pick(p);
    VertexSet s(n);
    for (int v = 0; v < n; ++v) {
        if (pick(rng)) s.add(v);
    }
    return s;
}

}  // namespace

TEST_CASE("interval examples") {
    auto c3 = directed_cycle3();
    CHECK(interval(c3, VertexSet(3)) == VertexSet(3));
    CHECK(interval(c3, VertexSet(3, {1})) == VertexSet(3, {1}));
    CHECK(interval(c3, VertexSet(3, {0, 2})) == VertexSet::full(3));

    auto t3 = transitive_tournament(3);
    CHECK(interval(t3, VertexSet(3, {0, 2})) == VertexSet(3, {0, 2}));
}

TEST_CASE("interval matches the path-enumeration oracle") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_digraph(8, 0.35, rng);
        auto s = random_subset(8, 0.35, rng);
        ConvexityContext ctx(g);
        CHECK(ctx.interval(s) == oracle::interval_by_paths(g, s));
        CHECK(ctx.hull(s) == oracle::hull_by_paths(g, s));
    }
}

TEST_CASE("hull examples") {
    auto c4 = OrientedGraph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(hull(c4, VertexSet(4, {0, 2})) == VertexSet::full(4));
    CHECK(hull(c4, VertexSet(4, {1})) == VertexSet(4, {1}));
}

TEST_CASE("convexity predicates") {
    auto c3 = directed_cycle3();
    CHECK(is_convex(c3, VertexSet::full(3)));
    CHECK(is_convex(c3, VertexSet(3, {0})));
    // Singleton is convex but its complement is not: the interval of the
    // complement regains the third vertex.
    CHECK_FALSE(is_coconvex(c3, VertexSet(3, {0})));
}

TEST_CASE("extreme vertex classification") {
    SUBCASE("transitive tournament: all extreme") {
        auto kinds = classify_extreme(transitive_tournament(4));
        CHECK(kinds[0] == ExtremeKind::Source);
        CHECK(kinds[1] == ExtremeKind::Transitive);
        CHECK(kinds[2] == ExtremeKind::Transitive);
        CHECK(kinds[3] == ExtremeKind::Sink);
        CHECK(extreme_vertices(transitive_tournament(4)) == VertexSet::full(4));
    }
    SUBCASE("directed cycle: none extreme") {
        CHECK(extreme_vertices(directed_cycle3()).empty());
    }
    SUBCASE("directed path") {
        auto p = OrientedGraph::build(3, {{0, 1}, {1, 2}});
        auto kinds = classify_extreme(p);
        CHECK(kinds[0] == ExtremeKind::Source);
        CHECK(kinds[1] == ExtremeKind::NotExtreme);
        CHECK(kinds[2] == ExtremeKind::Sink);
    }
    SUBCASE("isolated vertex reports source") {
        auto g = OrientedGraph::build(2, {});
        CHECK(classify_extreme(g)[0] == ExtremeKind::Source);
    }
}

TEST_CASE("exact minimum hull and geodetic sets") {
    SUBCASE("directed C3") {
        auto r = min_hull_set(directed_cycle3());
        CHECK(r.optimum == 2);
        CHECK(min_geodetic_set(directed_cycle3()).optimum == 2);
    }
    SUBCASE("transitive K4: every vertex forced") {
        auto r = min_hull_set(transitive_tournament(4));
        CHECK(r.optimum == 4);
        CHECK(r.witness == VertexSet::full(4));
    }
    SUBCASE("in-star: every vertex is extreme, so the whole set is forced") {
        // k leaves all pointing at the center: leaves are sources, the
        // center is a sink. Nothing generates anything, so the unique
        // geodetic set is V.
        const int k = 4;
        std::vector<std::pair<int, int>> arcs;
        for (int i = 1; i <= k; ++i) arcs.emplace_back(i, 0);
        auto g = OrientedGraph::build(k + 1, std::move(arcs));
        auto r = min_geodetic_set(g);
        CHECK(r.optimum == k + 1);
        CHECK(r.witness == VertexSet::full(k + 1));
    }
    SUBCASE("matches brute force on random digraphs") {
        std::mt19937_64 rng(43);
        for (int trial = 0; trial < 25; ++trial) {
            auto g = random_digraph(8, 0.3, rng);
            auto h = min_hull_set(g);
            auto bh = oracle::brute_min_hull_set(g);
            CHECK(h.optimum == bh.optimum);
            CHECK(oracle::hull_by_paths(g, h.witness) == VertexSet::full(8));
            auto gd = min_geodetic_set(g);
            auto bg = oracle::brute_min_geodetic_set(g);
            CHECK(gd.optimum == bg.optimum);
            CHECK(oracle::interval_by_paths(g, gd.witness) == VertexSet::full(8));
            CHECK(gd.optimum >= h.optimum);
            CHECK(extreme_vertices(g).is_subset_of(h.witness));
            CHECK(extreme_vertices(g).is_subset_of(gd.witness));
        }
    }
    SUBCASE("instance-too-large guard") {
        std::mt19937_64 rng(1);
        auto g = random_digraph(30, 0.3, rng);
        SolveOptions opts;
        opts.max_free = 8;
        CHECK_THROWS_AS(min_hull_set(g, opts), Error);
    }
}

TEST_CASE("solver results are identical across execution modes") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 12; ++trial) {
        auto g = random_digraph(10, 0.25, rng);
        SolveOptions ser{24, Execution::Serial};
        SolveOptions par{24, Execution::Parallel};
        auto a = min_hull_set(g, ser);
        auto b = min_hull_set(g, par);
        CHECK(a.optimum == b.optimum);
        CHECK(a.witness == b.witness);
        CHECK(a.nodes_explored == b.nodes_explored);
        auto ga = min_geodetic_set(g, ser);
        auto gb = min_geodetic_set(g, par);
        CHECK(ga.witness == gb.witness);
        CHECK(ga.nodes_explored == gb.nodes_explored);
    }
}

TEST_CASE("convexity algebra properties") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_digraph(9, 0.3, rng);
        ConvexityContext ctx(g);
        auto s = random_subset(9, 0.3, rng);
        auto t = s | random_subset(9, 0.3, rng);
        CHECK(s.is_subset_of(ctx.interval(s)));
        CHECK(ctx.interval(s).is_subset_of(ctx.interval(t)));
        CHECK(ctx.hull(s).is_subset_of(ctx.hull(t)));
        auto h = ctx.hull(s);
        CHECK(ctx.interval(h) == h);
        CHECK(ctx.hull(h) == h);
    }
}

TEST_CASE("hull sets intersect every co-convex set") {
    std::mt19937_64 rng(211);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_digraph(8, 0.3, rng);
        ConvexityContext ctx(g);
        // Complements of hulls are co-convex; a set avoiding one can never
        // be a hull set, and minimum witnesses always intersect it.
        auto k = ctx.hull(random_subset(8, 0.3, rng)).complement();
        if (k.empty()) continue;
        CHECK(ctx.is_coconvex(k));
        auto inside = k.complement();
        CHECK(ctx.hull(inside) != VertexSet::full(8));
        CHECK(min_hull_set(g).witness.intersects(k));
    }
}

TEST_CASE("undirected convexity") {
    SUBCASE("triangle: all simplicial, hn = 3") {
        auto c3 = UndirectedGraph::build(3, {{0, 1}, {1, 2}, {2, 0}});
        CHECK(simplicial_vertices(c3) == VertexSet::full(3));
        CHECK(undirected_min_hull_set(c3).optimum == 3);
    }
    SUBCASE("P3: two leaves") {
        auto p3 = UndirectedGraph::build(3, {{0, 1}, {1, 2}});
        CHECK(undirected_min_hull_set(p3).optimum == 2);
        CHECK(undirected_hull(p3, VertexSet(3, {0, 2})) == VertexSet::full(3));
    }
    SUBCASE("C4: two antipodal vertices suffice") {
        auto c4 = UndirectedGraph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        CHECK(simplicial_vertices(c4).empty());
        CHECK(undirected_min_hull_set(c4).optimum == 2);
    }
    SUBCASE("disconnected input is rejected") {
        auto g = UndirectedGraph::build(4, {{0, 1}, {2, 3}});
        CHECK_THROWS_AS(undirected_min_hull_set(g), Error);
    }
    SUBCASE("matches brute force on random underlying graphs") {
        std::mt19937_64 rng(59);
        int done = 0;
        while (done < 15) {
            auto g = random_digraph(7, 0.45, rng).underlying();
            if (!is_connected(g)) continue;
            ++done;
            CHECK(undirected_min_hull_set(g).optimum == oracle::brute_min_hull_set(g).optimum);
        }
    }
}
