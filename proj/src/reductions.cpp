#include "ogc/reductions.hpp"

#include <algorithm>
#include <sstream>

#include "ogc/convexity.hpp"
#include "ogc/errors.hpp"

namespace ogc {

void validate_instance(const SetCoverInstance& inst) {
    if (inst.universe_size < 1) raise(ErrorCode::InvalidInstance, "empty universe");
    if (inst.family.empty()) raise(ErrorCode::InvalidInstance, "empty family");
    std::vector<bool> hit(inst.universe_size + 1, false);
    for (const auto& f : inst.family) {
        for (int e : f) {
            if (e < 1 || e > inst.universe_size)
                raise(ErrorCode::InvalidInstance, "element " + std::to_string(e) + " out of range");
            hit[e] = true;
        }
    }
    for (int e = 1; e <= inst.universe_size; ++e) {
        if (!hit[e])
            raise(ErrorCode::InvalidInstance,
                  "family does not cover element " + std::to_string(e));
    }
}

SetCoverInstance parse_set_cover(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    auto next_line = [&]() {
        if (!std::getline(in, line))
            raise(ErrorCode::ParseError, "line " + std::to_string(line_no + 1) + ": unexpected end");
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
    };
    next_line();
    std::istringstream header(line);
    SetCoverInstance inst;
    int m = 0;
    if (!(header >> inst.universe_size >> m >> inst.budget) || m < 0)
        raise(ErrorCode::ParseError, "line 1: expected 'n m k'");
    for (int i = 0; i < m; ++i) {
        next_line();
        std::istringstream ls(line);
        int s = 0;
        if (!(ls >> s) || s < 0)
            raise(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected set size");
        std::vector<int> f(s);
        for (int& e : f) {
            if (!(ls >> e))
                raise(ErrorCode::ParseError,
                      "line " + std::to_string(line_no) + ": expected " + std::to_string(s) + " elements");
        }
        std::string rest;
        if (ls >> rest)
            raise(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": trailing garbage");
        std::sort(f.begin(), f.end());
        inst.family.push_back(std::move(f));
    }
    validate_instance(inst);
    return inst;
}

std::string format_set_cover(const SetCoverInstance& inst) {
    std::string out = std::to_string(inst.universe_size) + " " + std::to_string(inst.family.size()) +
                      " " + std::to_string(inst.budget) + "\n";
    for (const auto& f : inst.family) {
        out += std::to_string(f.size());
        for (int e : f) out += " " + std::to_string(e);
        out += "\n";
    }
    return out;
}

int GadgetMapping::apex(const std::string& name) const {
    for (std::size_t i = 0; i < apex_names.size(); ++i) {
        if (apex_names[i] == name) return m + n + static_cast<int>(i);
    }
    raise(ErrorCode::BadParameter, "no apex named '" + name + "'");
}

std::string GadgetMapping::role_of(int v) const {
    if (is_set_vertex(v)) return "set " + std::to_string(v + 1);
    if (is_element_vertex(v)) return "element " + std::to_string(element_of(v));
    return "apex " + apex_names[v - m - n];
}

namespace {

std::vector<std::pair<int, int>> core_arcs(const SetCoverInstance& inst, const GadgetMapping& map) {
    std::vector<std::pair<int, int>> arcs;
    for (std::size_t i = 0; i < inst.family.size(); ++i) {
        for (int e : inst.family[i])
            arcs.emplace_back(map.set_vertex(static_cast<int>(i)), map.element_vertex(e));
    }
    return arcs;
}

GadgetMapping make_mapping(const SetCoverInstance& inst, std::vector<std::string> apexes) {
    GadgetMapping map;
    map.m = static_cast<int>(inst.family.size());
    map.n = inst.universe_size;
    map.apex_names = std::move(apexes);
    return map;
}

}  // namespace

std::pair<OrientedGraph, GadgetMapping> core_gadget(const SetCoverInstance& inst) {
    validate_instance(inst);
    GadgetMapping map = make_mapping(inst, {});
    auto arcs = core_arcs(inst, map);
    return {OrientedGraph::build(map.m + map.n, std::move(arcs)), std::move(map)};
}

Gadget to_bipartite_dag(const SetCoverInstance& inst) {
    validate_instance(inst);
    GadgetMapping map = make_mapping(inst, {"u", "v", "w"});
    auto arcs = core_arcs(inst, map);
    const int u = map.apex("u"), v = map.apex("v"), w = map.apex("w");
    for (int i = 0; i < map.m; ++i) {
        arcs.emplace_back(u, map.set_vertex(i));
        arcs.emplace_back(map.set_vertex(i), w);
    }
    for (int j = 1; j <= map.n; ++j) arcs.emplace_back(map.element_vertex(j), v);
    arcs.emplace_back(u, v);
    return {OrientedGraph::build(map.m + map.n + 3, std::move(arcs)), std::move(map),
            inst.budget + 3};
}

Gadget to_split(const SetCoverInstance& inst) {
    validate_instance(inst);
    GadgetMapping map = make_mapping(inst, {"u", "w", "x", "y"});
    auto arcs = core_arcs(inst, map);
    const int u = map.apex("u"), w = map.apex("w"), x = map.apex("x"), y = map.apex("y");
    for (int i = 0; i < map.m; ++i) {
        for (int j = i + 1; j < map.m; ++j) arcs.emplace_back(map.set_vertex(i), map.set_vertex(j));
    }
    for (int i = 0; i < map.m; ++i) {
        arcs.emplace_back(u, map.set_vertex(i));
        arcs.emplace_back(x, map.set_vertex(i));
        arcs.emplace_back(map.set_vertex(i), w);
    }
    for (int j = 1; j <= map.n; ++j) arcs.emplace_back(map.element_vertex(j), x);
    arcs.emplace_back(u, x);
    arcs.emplace_back(x, y);
    return {OrientedGraph::build(map.m + map.n + 4, std::move(arcs)), std::move(map),
            inst.budget + 3};
}

Gadget to_cobipartite(const SetCoverInstance& inst) {
    validate_instance(inst);
    GadgetMapping map = make_mapping(inst, {"u", "v", "w"});
    auto arcs = core_arcs(inst, map);
    const int u = map.apex("u"), v = map.apex("v"), w = map.apex("w");
    for (int i = 0; i < map.m; ++i) {
        for (int j = i + 1; j < map.m; ++j) arcs.emplace_back(map.set_vertex(i), map.set_vertex(j));
    }
    for (int a = 1; a <= map.n; ++a) {
        for (int b = a + 1; b <= map.n; ++b)
            arcs.emplace_back(map.element_vertex(a), map.element_vertex(b));
    }
    for (int i = 0; i < map.m; ++i) {
        arcs.emplace_back(u, map.set_vertex(i));
        arcs.emplace_back(map.set_vertex(i), w);
    }
    for (int j = 1; j <= map.n; ++j) {
        arcs.emplace_back(u, map.element_vertex(j));
        arcs.emplace_back(map.element_vertex(j), v);
    }
    arcs.emplace_back(u, v);
    return {OrientedGraph::build(map.m + map.n + 3, std::move(arcs)), std::move(map),
            inst.budget + 3};
}

std::vector<int> decode_cover(const Gadget& gadget, const SetCoverInstance& inst,
                              const VertexSet& s) {
    ConvexityContext ctx(gadget.graph);
    if (!ctx.is_geodetic_set(s)) raise(ErrorCode::NotGeodetic, "input set is not geodetic");
    const auto& map = gadget.mapping;
    VertexSet normalized = s;
    // The split gadget's x is redundant: any geodesic into x extends to y.
    const bool split = map.apex_names.size() == 4;
    if (split && normalized.contains(map.apex("x"))) normalized.remove(map.apex("x"));
    std::vector<int> cover;
    normalized.for_each([&](int vtx) {
        if (map.is_set_vertex(vtx)) {
            cover.push_back(vtx);
        } else if (map.is_element_vertex(vtx)) {
            // Smallest-index set containing this element.
            const int j = map.element_of(vtx);
            for (std::size_t i = 0; i < inst.family.size(); ++i) {
                if (std::binary_search(inst.family[i].begin(), inst.family[i].end(), j)) {
                    cover.push_back(static_cast<int>(i));
                    break;
                }
            }
        }
    });
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    // The decoded sets must cover the universe.
    std::vector<bool> hit(inst.universe_size + 1, false);
    for (int i : cover) {
        for (int e : inst.family[i]) hit[e] = true;
    }
    for (int e = 1; e <= inst.universe_size; ++e) {
        if (!hit[e])
            raise(ErrorCode::ConstructionFailed,
                  "decoded family misses element " + std::to_string(e));
    }
    return cover;
}

CoverOptimum min_set_cover(const SetCoverInstance& inst) {
    validate_instance(inst);
    const int m = static_cast<int>(inst.family.size());
    VertexSet universe = VertexSet::full(inst.universe_size + 1);
    universe.remove(0);
    auto covers = [&](const std::vector<int>& pick) {
        VertexSet hit(inst.universe_size + 1);
        for (int i : pick) {
            for (int e : inst.family[i]) hit.add(e);
        }
        return universe.is_subset_of(hit);
    };
    for (int k = 1; k <= m; ++k) {
        std::vector<int> combo(k);
        for (int i = 0; i < k; ++i) combo[i] = i;
        while (true) {
            if (covers(combo)) return {k, combo};
            int i = k - 1;
            while (i >= 0 && combo[i] == m - k + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    raise(ErrorCode::InvalidInstance, "family cannot cover the universe");
}

EquivalenceReport verify_equivalence(const SetCoverInstance& inst, const SolveOptions& opts) {
    validate_instance(inst);
    if (inst.universe_size > 6 || static_cast<int>(inst.family.size()) > 6)
        raise(ErrorCode::InstanceTooLarge, "equivalence check is desk-scale (n,m <= 6)");
    EquivalenceReport rep;
    rep.optimal_cover = min_set_cover(inst).size;
    rep.ogn_bipartite = min_geodetic_set(to_bipartite_dag(inst).graph, opts).optimum;
    rep.ogn_split = min_geodetic_set(to_split(inst).graph, opts).optimum;
    rep.ogn_cobipartite = min_geodetic_set(to_cobipartite(inst).graph, opts).optimum;
    const int expect = rep.optimal_cover + 3;
    rep.consistent = rep.ogn_bipartite == expect && rep.ogn_split == expect &&
                     rep.ogn_cobipartite == expect;
    return rep;
}

}  // namespace ogc
