#include "doctest.h"
#include "ogc/convexity.hpp"
#include "ogc/errors.hpp"
#include "ogc/reductions.hpp"
#include "ogc/structure.hpp"
#include "oracles.hpp"

using namespace ogc;

namespace {

/// The running example: U = {1..5}, F1 = {1,2,3,4}, F2 = {1,4}, F3 = {2,3,5}.
SetCoverInstance figure_instance() {
    return SetCoverInstance{5, {{1, 2, 3, 4}, {1, 4}, {2, 3, 5}}, 2};
}

}  // namespace

TEST_CASE("instance validation and text format") {
    auto inst = figure_instance();
    validate_instance(inst);
    auto text = format_set_cover(inst);
    CHECK(text == "5 3 2\n4 1 2 3 4\n2 1 4\n3 2 3 5\n");
    auto back = parse_set_cover(text);
    CHECK(back.family == inst.family);
    CHECK(back.budget == 2);

    SetCoverInstance bad{5, {{1, 2}, {3}}, 1};
    CHECK_THROWS_WITH_AS(validate_instance(bad), doctest::Contains("InvalidInstance"), Error);
    CHECK_THROWS_AS(parse_set_cover("2 1 1\n1 7\n"), Error);
}

TEST_CASE("core gadget arcs follow membership") {
    auto [g, map] = core_gadget(figure_instance());
    CHECK(g.vertex_count() == 8);
    CHECK(g.arc_count() == 9);
    CHECK(g.out_neighbors(map.set_vertex(0)) ==
          std::vector<int>{map.element_vertex(1), map.element_vertex(2), map.element_vertex(3),
                           map.element_vertex(4)});

    SetCoverInstance star{3, {{1, 2, 3}}, 1};
    auto [sg, smap] = core_gadget(star);
    CHECK(sg.out_degree(smap.set_vertex(0)) == 3);
    CHECK(sg.in_degree(smap.set_vertex(0)) == 0);
}

TEST_CASE("bipartite DAG gadget") {
    auto gadget = to_bipartite_dag(figure_instance());
    const auto& g = gadget.graph;
    const auto& map = gadget.mapping;
    CHECK(g.vertex_count() == 11);
    CHECK(g.arc_count() == 21);
    CHECK(gadget.threshold == 5);
    CHECK(is_dag(g));
    CHECK(is_bipartite_underlying(g));
    // u is a source; v and w are sinks.
    auto kinds = classify_extreme(g);
    CHECK(kinds[map.apex("u")] == ExtremeKind::Source);
    CHECK(kinds[map.apex("v")] == ExtremeKind::Sink);
    CHECK(kinds[map.apex("w")] == ExtremeKind::Sink);
    CHECK(min_geodetic_set(g).optimum == 5);
}

TEST_CASE("split gadget") {
    auto gadget = to_split(figure_instance());
    const auto& g = gadget.graph;
    const auto& map = gadget.mapping;
    CHECK(g.vertex_count() == 12);
    VertexSet clique(12), stable(12);
    for (int i = 0; i < map.m; ++i) clique.add(map.set_vertex(i));
    clique.add(map.apex("u"));
    clique.add(map.apex("x"));
    stable = clique.complement();
    CHECK(is_split_underlying(g, stable, clique));
    CHECK_FALSE(is_dag(g));
    // Directed cycle f_i -> u_j -> x -> f_i for any j in F_i.
    CHECK(g.has_arc(map.set_vertex(0), map.element_vertex(1)));
    CHECK(g.has_arc(map.element_vertex(1), map.apex("x")));
    CHECK(g.has_arc(map.apex("x"), map.set_vertex(0)));
    CHECK(min_geodetic_set(g).optimum == 5);
}

TEST_CASE("cobipartite gadget") {
    auto gadget = to_cobipartite(figure_instance());
    const auto& g = gadget.graph;
    const auto& map = gadget.mapping;
    CHECK(g.vertex_count() == 11);
    CHECK(is_dag(g));
    VertexSet c1(11), c2(11);
    for (int i = 0; i < map.m; ++i) c1.add(map.set_vertex(i));
    c1.add(map.apex("w"));
    c2 = c1.complement();
    CHECK(is_cobipartite_underlying(g, c1, c2));
    CHECK(min_geodetic_set(g).optimum == 5);
}

TEST_CASE("forward direction: a cover plus apexes is geodetic") {
    auto inst = figure_instance();
    // {F1, F3} covers U.
    for (int which = 0; which < 3; ++which) {
        Gadget gadget = which == 0   ? to_bipartite_dag(inst)
                        : which == 1 ? to_split(inst)
                                     : to_cobipartite(inst);
        const auto& map = gadget.mapping;
        VertexSet s(gadget.graph.vertex_count());
        s.add(map.set_vertex(0));
        s.add(map.set_vertex(2));
        if (which == 1) {
            s.add(map.apex("u"));
            s.add(map.apex("w"));
            s.add(map.apex("y"));
        } else {
            s.add(map.apex("u"));
            s.add(map.apex("v"));
            s.add(map.apex("w"));
        }
        CAPTURE(which);
        CHECK(ConvexityContext(gadget.graph).is_geodetic_set(s));
        auto cover = decode_cover(gadget, inst, s);
        CHECK(cover == std::vector<int>{0, 2});
    }
}

TEST_CASE("apexes are forced into every geodetic set") {
    auto inst = figure_instance();
    for (int which = 0; which < 3; ++which) {
        Gadget gadget = which == 0   ? to_bipartite_dag(inst)
                        : which == 1 ? to_split(inst)
                                     : to_cobipartite(inst);
        auto ext = extreme_vertices(gadget.graph);
        const auto& map = gadget.mapping;
        CHECK(ext.contains(map.apex("u")));
        CHECK(ext.contains(map.apex("w")));
        CHECK(ext.contains(which == 1 ? map.apex("y") : map.apex("v")));
    }
}

TEST_CASE("decode_cover replaces element vertices") {
    auto inst = figure_instance();
    auto gadget = to_bipartite_dag(inst);
    const auto& map = gadget.mapping;
    // Element 5 only belongs to F3; a geodetic set through u_5 decodes to F3.
    VertexSet s(gadget.graph.vertex_count());
    s.add(map.set_vertex(0));
    s.add(map.element_vertex(5));
    s.add(map.apex("u"));
    s.add(map.apex("v"));
    s.add(map.apex("w"));
    auto cover = decode_cover(gadget, inst, s);
    CHECK(cover == std::vector<int>{0, 2});

    VertexSet not_geodetic(gadget.graph.vertex_count());
    not_geodetic.add(map.apex("u"));
    CHECK_THROWS_WITH_AS(decode_cover(gadget, inst, not_geodetic),
                         doctest::Contains("NotGeodetic"), Error);
}

TEST_CASE("split gadget: geodetic set containing x decodes cleanly") {
    auto inst = figure_instance();
    auto gadget = to_split(inst);
    const auto& map = gadget.mapping;
    VertexSet s(gadget.graph.vertex_count());
    s.add(map.set_vertex(0));
    s.add(map.set_vertex(2));
    s.add(map.apex("u"));
    s.add(map.apex("w"));
    s.add(map.apex("y"));
    s.add(map.apex("x"));
    auto cover = decode_cover(gadget, inst, s);
    CHECK(cover == std::vector<int>{0, 2});
    CHECK(static_cast<int>(cover.size()) <= s.count() - 4);
}

TEST_CASE("exhaustive minimum cover") {
    CHECK(min_set_cover(figure_instance()).size == 2);
    CHECK(min_set_cover({3, {{1, 2, 3}}, 1}).size == 1);
    CHECK(min_set_cover({3, {{1}, {2}, {3}}, 3}).size == 3);
}

TEST_CASE("equivalence reports") {
    auto rep = verify_equivalence(figure_instance());
    CHECK(rep.optimal_cover == 2);
    CHECK(rep.ogn_bipartite == 5);
    CHECK(rep.ogn_split == 5);
    CHECK(rep.ogn_cobipartite == 5);
    CHECK(rep.consistent);

    auto whole = verify_equivalence({4, {{1, 2, 3, 4}}, 1});
    CHECK(whole.optimal_cover == 1);
    CHECK(whole.ogn_bipartite == 4);
    CHECK(whole.consistent);

    auto singletons = verify_equivalence({4, {{1}, {2}, {3}, {4}}, 4});
    CHECK(singletons.optimal_cover == 4);
    CHECK(singletons.ogn_split == 7);
    CHECK(singletons.consistent);
}

TEST_CASE("gadget sizes are linear in n + m") {
    for (int n = 1; n <= 3; ++n) {
        for (int m = 1; m <= 3; ++m) {
            SetCoverInstance inst;
            inst.universe_size = n;
            inst.budget = 1;
            std::vector<int> all;
            for (int e = 1; e <= n; ++e) all.push_back(e);
            inst.family.push_back(all);
            for (int i = 1; i < m; ++i) inst.family.push_back({1});
            CHECK(to_bipartite_dag(inst).graph.vertex_count() == n + m + 3);
            CHECK(to_split(inst).graph.vertex_count() == n + m + 4);
            CHECK(to_cobipartite(inst).graph.vertex_count() == n + m + 3);
        }
    }
}
