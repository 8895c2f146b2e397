#include <functional>
#include <random>

#include "doctest.h"
#include "ogc/blocks.hpp"
#include "ogc/digraph.hpp"
#include "ogc/distance.hpp"
#include "ogc/errors.hpp"
#include "ogc/graph_io.hpp"
#include "ogc/structure.hpp"
#include "oracles.hpp"

using namespace ogc;

namespace {

OrientedGraph directed_cycle3() { return OrientedGraph::build(3, {{0, 1}, {1, 2}, {2, 0}}); }

OrientedGraph transitive3() { return OrientedGraph::build(3, {{0, 1}, {0, 2}, {1, 2}}); }

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

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::UsageError;
}

}  // namespace

TEST_CASE("build validates oriented-graph invariants") {
    auto c3 = directed_cycle3();
    CHECK(c3.vertex_count() == 3);
    CHECK(c3.arc_count() == 3);
    CHECK(c3.has_arc(2, 0));
    CHECK_FALSE(c3.has_arc(0, 2));

    CHECK(code_of([] { OrientedGraph::build(2, {{0, 1}, {1, 0}}); }) == ErrorCode::SymmetricArcPair);
    CHECK(code_of([] { OrientedGraph::build(2, {{1, 1}}); }) == ErrorCode::Loop);
    CHECK(code_of([] { OrientedGraph::build(2, {{0, 1}, {0, 1}}); }) == ErrorCode::DuplicateArc);
    CHECK(code_of([] { OrientedGraph::build(2, {{0, 2}}); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("adjacency mirrors the arc set") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = random_digraph(10, 0.4, rng);
        int total_out = 0, total_in = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            total_out += g.out_degree(v);
            total_in += g.in_degree(v);
            for (int w : g.out_neighbors(v)) CHECK(g.has_arc(v, w));
            for (int w : g.in_neighbors(v)) CHECK(g.has_arc(w, v));
        }
        CHECK(total_out == g.arc_count());
        CHECK(total_in == g.arc_count());
    }
}

TEST_CASE("underlying graph of directed cycles") {
    auto u3 = directed_cycle3().underlying();
    CHECK(u3.edge_count() == 3);
    auto c4 = OrientedGraph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto u4 = c4.underlying();
    CHECK(u4.edge_count() == 4);
    CHECK(u4.has_edge(3, 0));
    CHECK_FALSE(u4.has_edge(0, 2));
}

TEST_CASE("text format round-trip and strictness") {
    auto g = transitive3();
    std::string text = format_digraph(g);
    CHECK(text == "3 3\n0 1\n0 2\n1 2\n");
    auto parsed = parse_digraph(text);
    CHECK(parsed.arcs() == g.arcs());

    CHECK(code_of([] { parse_digraph("2 1\n0 1\nleftover\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_digraph("2 2\n0 1\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_digraph("2 1\n0 1 5\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_digraph("nonsense\n"); }) == ErrorCode::ParseError);
    // Orientation violations surface with their own codes, not ParseError.
    CHECK(code_of([] { parse_digraph("2 2\n0 1\n1 0\n"); }) == ErrorCode::SymmetricArcPair);
}

TEST_CASE("instance hash is stable and sensitive") {
    auto a = directed_cycle3();
    auto b = OrientedGraph::build(3, {{1, 0}, {2, 1}, {0, 2}});
    CHECK(instance_hash(a) == instance_hash(directed_cycle3()));
    CHECK(instance_hash(a) != instance_hash(b));
}

TEST_CASE("all-pairs distances match Floyd-Warshall on random digraphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_digraph(9, 0.35, rng);
        auto d = all_pairs_distances(g);
        auto ref = oracle::fw_distances(g);
        for (int u = 0; u < 9; ++u) {
            for (int v = 0; v < 9; ++v) {
                int expect = ref[u][v] >= oracle::kInf ? DistanceMatrix::kUnreachable : ref[u][v];
                CHECK(d.at(u, v) == expect);
            }
        }
    }
}

TEST_CASE("distance examples") {
    auto d3 = all_pairs_distances(directed_cycle3());
    CHECK(d3.at(0, 2) == 2);

    auto dt = all_pairs_distances(transitive3());
    CHECK(dt.at(0, 2) == 1);
    CHECK(dt.at(2, 0) == DistanceMatrix::kUnreachable);

    auto iso = all_pairs_distances(OrientedGraph::build(2, {}));
    CHECK(iso.at(0, 1) == DistanceMatrix::kUnreachable);
    CHECK(iso.at(0, 0) == 0);
}

TEST_CASE("distance matrix invariants on random digraphs") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = random_digraph(10, 0.3, rng);
        auto d = all_pairs_distances(g);
        for (int u = 0; u < 10; ++u) {
            CHECK(d.at(u, u) == 0);
            for (int v = 0; v < 10; ++v) {
                if (u != v) CHECK((d.at(u, v) == 1) == g.has_arc(u, v));
                for (int w = 0; w < 10; ++w) {
                    if (d.reachable(u, v) && d.reachable(v, w))
                        CHECK(d.at(u, w) <= d.at(u, v) + d.at(v, w));
                    if (d.reachable(u, w)) continue;
                    CHECK((!d.reachable(u, v) || !d.reachable(v, w)));
                }
            }
        }
    }
}

TEST_CASE("geodesic vertices against path enumeration") {
    auto c3 = directed_cycle3();
    auto d3 = all_pairs_distances(c3);
    CHECK(geodesic_vertices(c3, 0, 2, d3) == VertexSet(3, {0, 1, 2}));

    auto t3 = transitive3();
    auto dt = all_pairs_distances(t3);
    CHECK(geodesic_vertices(t3, 0, 2, dt) == VertexSet(3, {0, 2}));

    auto iso = OrientedGraph::build(2, {});
    auto di = all_pairs_distances(iso);
    CHECK(geodesic_vertices(iso, 0, 1, di).empty());

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = random_digraph(8, 0.3, rng);
        auto d = all_pairs_distances(g);
        for (int u = 0; u < 8; ++u) {
            for (int v = 0; v < 8; ++v) {
                auto got = geodesic_vertices(g, u, v, d);
                CHECK(got == oracle::geodesic_vertices_by_paths(g, u, v));
                if (d.reachable(u, v)) {
                    CHECK(got.contains(u));
                    CHECK(got.contains(v));
                    if (d.at(u, v) <= 1) CHECK(got == VertexSet::of(8, {u, v}));
                }
            }
        }
    }
}

TEST_CASE("block decomposition") {
    SUBCASE("triangle with a pendant edge") {
        auto g = UndirectedGraph::build(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
        auto dec = block_decomposition(g);
        CHECK(dec.blocks.size() == 2);
        CHECK(dec.cut_vertices == VertexSet(4, {2}));
    }
    SUBCASE("a tree: every edge a block, internal vertices cut") {
        auto g = UndirectedGraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
        auto dec = block_decomposition(g);
        CHECK(dec.blocks.size() == 4);
        CHECK(dec.cut_vertices == VertexSet(5, {1, 2}));
    }
    SUBCASE("single cycle: one block, no cut vertices") {
        auto g = UndirectedGraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
        auto dec = block_decomposition(g);
        CHECK(dec.blocks.size() == 1);
        CHECK(dec.cut_vertices.empty());
    }
    SUBCASE("edges partition and cut vertices match the removal oracle") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 30; ++trial) {
            auto d = random_digraph(9, 0.3, rng);
            auto g = d.underlying();
            auto dec = block_decomposition(g);
            std::size_t total_edges = 0;
            for (auto& be : dec.block_edges) total_edges += be.size();
            CHECK(total_edges == static_cast<std::size_t>(g.edge_count()));
            CHECK(dec.cut_vertices == oracle::cut_vertices_by_removal(g));
            for (int v = 0; v < g.vertex_count(); ++v)
                CHECK((dec.blocks_of_vertex[v].size() >= 2) == dec.cut_vertices.contains(v));
        }
    }
}

TEST_CASE("structural queries") {
    CHECK(is_dag(transitive3()));
    CHECK_FALSE(is_dag(directed_cycle3()));
    CHECK(is_tournament(transitive3()));
    CHECK(is_tournament(directed_cycle3()));
    auto c4 = OrientedGraph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_FALSE(is_tournament(c4));
    CHECK(is_bipartite_underlying(c4));
    CHECK_FALSE(is_bipartite_underlying(directed_cycle3()));
    CHECK(is_cactus(c4));

    auto k4 = OrientedGraph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(is_cactus(k4));

    auto split = OrientedGraph::build(4, {{0, 1}, {1, 2}, {0, 2}, {3, 0}});
    CHECK(is_split_underlying(split, VertexSet(4, {3}), VertexSet(4, {0, 1, 2})));
    CHECK_FALSE(is_split_underlying(split, VertexSet(4, {0, 3}), VertexSet(4, {1, 2})));

    CHECK(is_cobipartite_underlying(k4, VertexSet(4, {0, 1}), VertexSet(4, {2, 3})));

    auto path = UndirectedGraph::build(3, {{0, 1}, {1, 2}});
    CHECK(is_tree(path));
    CHECK(is_connected(path));
    CHECK_FALSE(is_tree(UndirectedGraph::build(3, {{0, 1}})));
    CHECK(is_maximal_stable(path, VertexSet(3, {0, 2})));
    CHECK_FALSE(is_maximal_stable(path, VertexSet(3, {0})));
}

TEST_CASE("serial and parallel all-pairs distances agree") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = random_digraph(40, 0.15, rng);
        auto a = all_pairs_distances(g, Execution::Serial);
        auto b = all_pairs_distances(g, Execution::Parallel);
        for (int u = 0; u < 40; ++u) {
            for (int v = 0; v < 40; ++v) CHECK(a.at(u, v) == b.at(u, v));
        }
    }
}
