#include "ogc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <concepts>
#include <sstream>

#include "CLI11.hpp"
#include "ogc/blocks.hpp"
#include "ogc/bounds.hpp"
#include "ogc/cactus.hpp"
#include "ogc/convexity.hpp"
#include "ogc/errors.hpp"
#include "ogc/graph_io.hpp"
#include "ogc/reductions.hpp"
#include "ogc/structure.hpp"
#include "ogc/transforms.hpp"

namespace ogc {

namespace {

using Clock = std::chrono::steady_clock;

struct Report {
    std::vector<std::pair<std::string, std::string>> rows;

    void add(const std::string& key, const std::string& value) { rows.emplace_back(key, value); }
    void add(const std::string& key, const char* value) { rows.emplace_back(key, value); }
    template <typename T>
        requires std::integral<T> && (!std::same_as<T, bool>)
    void add(const std::string& key, T value) { add(key, std::to_string(value)); }
    void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }
    void add(const std::string& key, const VertexSet& value) { add(key, value.to_string()); }

    void print(std::ostream& out) const {
        for (const auto& [k, v] : rows) out << k << ": " << v << "\n";
    }
};

std::string hex_hash(uint64_t h) {
    std::ostringstream ss;
    ss << "0x" << std::hex << h;
    return ss.str();
}

VertexSet parse_vertex_list(const std::string& csv, int n) {
    VertexSet s(n);
    if (csv.empty()) return s;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            raise(ErrorCode::UsageError, "bad vertex '" + tok + "' in list");
        }
        if (pos != tok.size()) raise(ErrorCode::UsageError, "bad vertex '" + tok + "' in list");
        if (v < 0 || v >= n)
            raise(ErrorCode::VertexOutOfRange, "vertex " + tok + " with n=" + std::to_string(n));
        s.add(v);
    }
    return s;
}

/// Partition file for the split strategy: one line "stable v...", one line
/// "clique v...".
std::pair<VertexSet, VertexSet> load_partition(const std::string& path, int n) {
    std::istringstream in(read_text_file(path));
    VertexSet stable(n), clique(n);
    std::string line;
    bool saw_stable = false, saw_clique = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string label;
        ls >> label;
        VertexSet* target = nullptr;
        if (label == "stable") {
            target = &stable;
            saw_stable = true;
        } else if (label == "clique") {
            target = &clique;
            saw_clique = true;
        } else {
            raise(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected 'stable' or 'clique'");
        }
        int v;
        while (ls >> v) {
            if (v < 0 || v >= n)
                raise(ErrorCode::ParseError,
                      "line " + std::to_string(line_no) + ": vertex out of range");
            target->add(v);
        }
    }
    if (!saw_stable || !saw_clique)
        raise(ErrorCode::ParseError, "partition file needs a 'stable' and a 'clique' line");
    return {stable, clique};
}

std::string dot_text(const OrientedGraph& g) {
    std::string s = "digraph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) s += "  " + std::to_string(v) + ";\n";
    for (auto [u, v] : g.arcs()) s += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
    s += "}\n";
    return s;
}

void add_instance_stats(Report& rep, const OrientedGraph& g) {
    rep.add("n", g.vertex_count());
    rep.add("m", g.arc_count());
    rep.add("instance_hash", hex_hash(instance_hash(g)));
}

long long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

int cmd_analyze(const std::string& path, std::ostream& out) {
    const auto start = Clock::now();
    auto g = load_digraph(path);
    Report rep;
    rep.add("command", "analyze");
    rep.add("input", path);
    rep.add("seed", 0);
    add_instance_stats(rep, g);

    auto kinds = classify_extreme(g);
    rep.add("ext", extreme_vertices(g));
    std::string kind_list;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (kinds[v] == ExtremeKind::NotExtreme) continue;
        if (!kind_list.empty()) kind_list += " ";
        kind_list += std::to_string(v) + ":" + extreme_kind_name(kinds[v]);
    }
    rep.add("ext_kinds", kind_list.empty() ? "-" : kind_list);

    const auto und = g.underlying();
    rep.add("tournament", is_tournament(g));
    rep.add("dag", is_dag(g));
    rep.add("bipartite_underlying", is_bipartite_underlying(g));
    rep.add("cactus", is_cactus(und));
    rep.add("tree", is_tree(und));
    rep.add("connected_underlying", is_connected(und));

    auto dist = all_pairs_distances(g);
    int finite = 0, diameter = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (u != v && dist.reachable(u, v)) {
                ++finite;
                diameter = std::max(diameter, dist.at(u, v));
            }
        }
    }
    rep.add("reachable_pairs", finite);
    rep.add("directed_diameter", diameter);
    rep.add("time_ms", elapsed_ms(start));
    rep.add("status", "ok");
    rep.print(out);
    return 0;
}

int cmd_solve(const std::string& path, bool hull_objective, const std::string& strategy,
              const std::string& partition_path, int max_free, std::ostream& out) {
    const auto start = Clock::now();
    auto g = load_digraph(path);
    Report rep;
    rep.add("command", "solve");
    rep.add("input", path);
    rep.add("seed", 0);
    add_instance_stats(rep, g);
    rep.add("objective", hull_objective ? "hull" : "geodetic");
    rep.add("strategy", strategy);

    SolveOptions opts;
    opts.max_free = max_free;

    if (strategy == "exact") {
        auto r = hull_objective ? min_hull_set(g, opts) : min_geodetic_set(g, opts);
        rep.add("optimum", r.optimum);
        rep.add("witness", r.witness);
        rep.add("nodes_explored", static_cast<long long>(r.nodes_explored));
    } else if (strategy == "greedy") {
        if (!hull_objective)
            raise(ErrorCode::UsageError, "the greedy constructor targets the hull number only");
        auto cert = greedy_hull_set(g);
        rep.add("set_size", cert.hull_set.count());
        rep.add("witness", cert.hull_set);
        rep.add("ext_count", cert.ext_count);
        rep.add("bound_value", cert.bound_value);
        rep.add("greedy_steps", static_cast<long long>(cert.trace.size()));
    } else if (strategy == "tournament") {
        if (!hull_objective)
            raise(ErrorCode::UsageError, "the tournament constructor targets the hull number only");
        auto cert = tournament_hull_set(g);
        rep.add("set_size", cert.hull_set.count());
        rep.add("witness", cert.hull_set);
        rep.add("ext_count", cert.ext_count);
        rep.add("bound_value", cert.bound_value);
        rep.add("pairs_added", static_cast<long long>(cert.trace.size()));
    } else if (strategy == "split") {
        if (!hull_objective)
            raise(ErrorCode::UsageError, "the split constructor targets the hull number only");
        if (partition_path.empty())
            raise(ErrorCode::UsageError, "--split needs a partition file");
        auto [stable, clique] = load_partition(partition_path, g.vertex_count());
        auto cert = split_hull_set(g, stable, clique);
        rep.add("set_size", cert.hull_set.count());
        rep.add("witness", cert.hull_set);
        rep.add("bound_value", cert.bound_value);
    } else if (strategy == "cactus") {
        auto sol = hull_objective ? min_hull_set_cactus(g, opts) : min_geodetic_set_cactus(g, opts);
        rep.add("optimum", sol.set.count());
        rep.add("witness", sol.set);
        rep.add("degenerate_single_cycle", sol.degenerate_single_cycle);
        rep.add("construction_fallback", sol.construction_fallback);
        std::string classes;
        for (const auto& c : sol.cycles) {
            if (!classes.empty()) classes += " ";
            classes += cycle_class_name(c.cls);
        }
        rep.add("cycle_classes", classes.empty() ? "-" : classes);
        for (const auto& [idx, cert] : sol.certificates) {
            rep.add("coconvex_certificate", cert);
        }
    } else {
        raise(ErrorCode::UsageError, "unknown strategy '" + strategy + "'");
    }
    rep.add("time_ms", elapsed_ms(start));
    rep.add("status", "ok");
    rep.print(out);
    return 0;
}

struct GenerateParams {
    std::string kind;
    int k = 3;
    int n = 5;
    int n1 = 2, n2 = 2;
    int ns = 2, nc = 3;
    double p = 0.5;
    uint64_t seed = 0;
    std::string input;
    std::string output;
    std::string partition_out;
    bool dot = false;
};

int cmd_generate(const GenerateParams& prm, std::ostream& out) {
    Report rep;
    rep.add("command", "generate");
    rep.add("kind", prm.kind);
    rep.add("seed", static_cast<long long>(prm.seed));

    std::optional<OrientedGraph> g;
    std::string partition_text;
    if (prm.kind == "transitive-tournament") {
        g = transitive_tournament(prm.k);
    } else if (prm.kind == "directed-cycle") {
        g = directed_cycle(prm.k);
    } else if (prm.kind == "tight-example") {
        g = tight_example(prm.k);
    } else if (prm.kind == "random-orientation") {
        if (prm.input.empty()) raise(ErrorCode::UsageError, "random-orientation needs --input");
        g = random_orientation(load_undirected(prm.input), prm.seed);
    } else if (prm.kind == "random-tournament") {
        g = random_tournament(prm.n, prm.seed);
    } else if (prm.kind == "random-cactus") {
        g = random_cactus(prm.n, prm.seed);
    } else if (prm.kind == "random-bipartite") {
        g = random_bipartite(prm.n1, prm.n2, prm.p, prm.seed);
    } else if (prm.kind == "random-split") {
        auto rs = random_split(prm.ns, prm.nc, prm.p, prm.seed);
        g = rs.graph;
        partition_text = "stable";
        for (int v : rs.stable.to_vector()) partition_text += " " + std::to_string(v);
        partition_text += "\nclique";
        for (int v : rs.clique.to_vector()) partition_text += " " + std::to_string(v);
        partition_text += "\n";
    } else if (prm.kind == "random-tree") {
        g = random_oriented_tree(prm.n, prm.seed);
    } else {
        raise(ErrorCode::UsageError, "unknown kind '" + prm.kind + "'");
    }

    add_instance_stats(rep, *g);
    if (prm.output.empty()) raise(ErrorCode::UsageError, "generate needs -o/--output");
    write_text_file(prm.output, format_digraph(*g));
    rep.add("output", prm.output);
    if (!partition_text.empty()) {
        const std::string ppath = prm.partition_out.empty() ? prm.output + ".partition" : prm.partition_out;
        write_text_file(ppath, partition_text);
        rep.add("partition_output", ppath);
    }
    if (prm.dot) {
        write_text_file(prm.output + ".dot", dot_text(*g));
        rep.add("dot_output", prm.output + ".dot");
    }
    rep.add("status", "ok");
    rep.print(out);
    return 0;
}

int cmd_transform(const std::string& path, bool c4, const std::string& lexprod_path,
                  const std::string& labels_path, const std::string& output,
                  const std::string& map_out, const std::string& labels_out, bool dot,
                  std::ostream& out) {
    Report rep;
    rep.add("command", "transform");
    rep.add("input", path);
    if (output.empty()) raise(ErrorCode::UsageError, "transform needs -o/--output");

    const int selected = (c4 ? 1 : 0) + (!lexprod_path.empty() ? 1 : 0) +
                         (!labels_path.empty() ? 1 : 0);
    if (selected != 1)
        raise(ErrorCode::UsageError, "pick exactly one of --c4, --lexprod, --double");

    OrientedGraph result = OrientedGraph::build(0, {});
    std::string map_text;
    std::string labels_text;
    if (c4) {
        auto [g, map] = orient_c4(load_undirected(path));
        result = std::move(g);
        rep.add("transform", "c4");
        for (int v = 0; v < map.original_n; ++v)
            map_text += std::to_string(v) + " base " + std::to_string(v) + "\n";
        for (int v = map.original_n; v < result.vertex_count(); ++v) {
            auto [i, j] = map.sub_pair(v);
            map_text += std::to_string(v) + " sub " + std::to_string(i) + " " + std::to_string(j) + "\n";
        }
    } else if (!lexprod_path.empty()) {
        auto outer = load_digraph(path);
        auto inner = load_digraph(lexprod_path);
        result = lex_product(outer, inner);
        rep.add("transform", "lexprod");
        rep.add("other", lexprod_path);
        const int n2 = inner.vertex_count();
        for (int v = 0; v < result.vertex_count(); ++v)
            map_text += std::to_string(v) + " pair " + std::to_string(n2 == 0 ? 0 : v / n2) + " " +
                        std::to_string(n2 == 0 ? 0 : v % n2) + "\n";
    } else {
        auto g = load_undirected(path);
        auto labeling = parse_labeling(read_text_file(labels_path));
        auto doubled = doubling_labels(g, labeling);
        result = std::move(doubled.graph);
        rep.add("transform", "double");
        rep.add("labels", labels_path);
        rep.add("doubled_dimension", doubled.labeling.dim);
        labels_text = format_labeling(doubled.labeling);
        for (int v = 0; v < doubled.mapping.original_n; ++v)
            map_text += std::to_string(v) + " base " + std::to_string(v) + "\n";
        for (int v = doubled.mapping.original_n; v < result.vertex_count(); ++v) {
            auto [i, j] = doubled.mapping.sub_pair(v);
            map_text += std::to_string(v) + " sub " + std::to_string(i) + " " + std::to_string(j) + "\n";
        }
    }

    add_instance_stats(rep, result);
    write_text_file(output, format_digraph(result));
    rep.add("output", output);
    const std::string mpath = map_out.empty() ? output + ".map" : map_out;
    write_text_file(mpath, map_text);
    rep.add("map_output", mpath);
    if (!labels_text.empty()) {
        const std::string lpath = labels_out.empty() ? output + ".labels" : labels_out;
        write_text_file(lpath, labels_text);
        rep.add("labels_output", lpath);
    }
    if (dot) {
        write_text_file(output + ".dot", dot_text(result));
        rep.add("dot_output", output + ".dot");
    }
    rep.add("status", "ok");
    rep.print(out);
    return 0;
}

int cmd_reduce(const std::string& path, const std::string& target, bool verify,
               const std::string& output, const std::string& roles_out, bool dot,
               std::ostream& out) {
    const auto start = Clock::now();
    auto inst = parse_set_cover(read_text_file(path));
    Report rep;
    rep.add("command", "reduce");
    rep.add("input", path);
    rep.add("seed", 0);
    rep.add("target", target);
    rep.add("universe", inst.universe_size);
    rep.add("family", static_cast<long long>(inst.family.size()));
    rep.add("budget", inst.budget);

    Gadget gadget = target == "bipartite" ? to_bipartite_dag(inst)
                    : target == "split"   ? to_split(inst)
                    : target == "cobipartite"
                        ? to_cobipartite(inst)
                        : (raise(ErrorCode::UsageError, "unknown target '" + target + "'"),
                           Gadget{OrientedGraph::build(0, {}), {}, 0});
    add_instance_stats(rep, gadget.graph);
    rep.add("threshold", gadget.threshold);

    if (!output.empty()) {
        write_text_file(output, format_digraph(gadget.graph));
        rep.add("output", output);
        std::string roles;
        for (int v = 0; v < gadget.graph.vertex_count(); ++v)
            roles += std::to_string(v) + " " + gadget.mapping.role_of(v) + "\n";
        const std::string rpath = roles_out.empty() ? output + ".roles" : roles_out;
        write_text_file(rpath, roles);
        rep.add("roles_output", rpath);
        if (dot) {
            write_text_file(output + ".dot", dot_text(gadget.graph));
            rep.add("dot_output", output + ".dot");
        }
    }
    if (verify) {
        auto eq = verify_equivalence(inst);
        rep.add("optcover", eq.optimal_cover);
        rep.add("ogn_bipartite", eq.ogn_bipartite);
        rep.add("ogn_split", eq.ogn_split);
        rep.add("ogn_cobipartite", eq.ogn_cobipartite);
        rep.add("equivalence", eq.consistent);
        if (!eq.consistent) {
            rep.add("time_ms", elapsed_ms(start));
            rep.add("status", "fail");
            rep.print(out);
            return 1;
        }
    }
    rep.add("time_ms", elapsed_ms(start));
    rep.add("status", "ok");
    rep.print(out);
    return 0;
}

int cmd_verify(const std::string& path, const std::string& hullset, const std::string& geodeticset,
               const std::string& coconvex, const std::string& labeling_path, std::ostream& out) {
    const auto start = Clock::now();
    Report rep;
    rep.add("command", "verify");
    rep.add("input", path);
    rep.add("seed", 0);

    const int selected = (!hullset.empty() ? 1 : 0) + (!geodeticset.empty() ? 1 : 0) +
                         (!coconvex.empty() ? 1 : 0) + (!labeling_path.empty() ? 1 : 0);
    if (selected != 1)
        raise(ErrorCode::UsageError,
              "pick exactly one of --hullset, --geodeticset, --coconvex, --labeling");

    bool pass = false;
    std::string reason;
    if (!labeling_path.empty()) {
        auto g = load_undirected(path);
        auto l = parse_labeling(read_text_file(labeling_path));
        rep.add("check", "labeling");
        pass = verify_isometric_labeling(g, l);
        reason = pass ? "isometric labeling" : "labeling is not isometric";
    } else {
        auto g = load_digraph(path);
        add_instance_stats(rep, g);
        ConvexityContext ctx(g);
        if (!hullset.empty()) {
            rep.add("check", "hullset");
            auto s = parse_vertex_list(hullset, g.vertex_count());
            rep.add("set", s);
            pass = ctx.is_hull_set(s);
            reason = pass ? "hull reaches every vertex" : "hull misses " +
                     (VertexSet::full(g.vertex_count()) - ctx.hull(s)).to_string();
        } else if (!geodeticset.empty()) {
            rep.add("check", "geodeticset");
            auto s = parse_vertex_list(geodeticset, g.vertex_count());
            rep.add("set", s);
            pass = ctx.is_geodetic_set(s);
            reason = pass ? "interval reaches every vertex" : "interval misses " +
                     (VertexSet::full(g.vertex_count()) - ctx.interval(s)).to_string();
        } else {
            rep.add("check", "coconvex");
            auto s = parse_vertex_list(coconvex, g.vertex_count());
            rep.add("set", s);
            pass = ctx.is_coconvex(s);
            reason = pass ? "complement is convex" : "complement is not convex";
        }
    }
    rep.add("result", pass ? "pass" : "fail");
    rep.add("reason", reason);
    rep.add("time_ms", elapsed_ms(start));
    rep.add("status", pass ? "ok" : "fail");
    rep.print(out);
    return pass ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"geodesic convexity toolkit for oriented graphs", "ogc"};
    app.require_subcommand(1);

    // analyze
    std::string an_path;
    auto* analyze = app.add_subcommand("analyze", "extreme vertices, class flags, distances");
    analyze->add_option("path", an_path, "digraph file")->required();

    // solve
    std::string so_path, so_partition;
    bool so_hull = false, so_geodetic = false;
    bool so_exact = false, so_greedy = false, so_cactus = false, so_tournament = false;
    int so_max_free = 24;
    auto* solve = app.add_subcommand("solve", "hull / geodetic solvers and constructors");
    solve->add_option("path", so_path, "digraph file")->required();
    solve->add_flag("--hull", so_hull, "minimum hull set objective");
    solve->add_flag("--geodetic", so_geodetic, "minimum geodetic set objective");
    solve->add_flag("--exact", so_exact, "exact search");
    solve->add_flag("--greedy", so_greedy, "two-thirds greedy constructor");
    solve->add_flag("--cactus", so_cactus, "cactus polynomial solver");
    solve->add_flag("--tournament", so_tournament, "tournament constructor");
    solve->add_option("--split", so_partition, "split constructor with this partition file");
    solve->add_option("--max-free", so_max_free, "exact-search guard on non-forced vertices");

    // generate
    GenerateParams gen;
    auto* generate = app.add_subcommand("generate", "canonical and seeded random instances");
    generate->add_option("kind", gen.kind, "instance kind")->required();
    generate->add_option("-k", gen.k, "order parameter");
    generate->add_option("-n", gen.n, "vertex count");
    generate->add_option("--n1", gen.n1, "first side size");
    generate->add_option("--n2", gen.n2, "second side size");
    generate->add_option("--ns", gen.ns, "stable side size");
    generate->add_option("--nc", gen.nc, "clique side size");
    generate->add_option("-p", gen.p, "edge probability");
    generate->add_option("--seed", gen.seed, "RNG seed");
    generate->add_option("--input", gen.input, "input graph for random-orientation");
    generate->add_option("-o,--output", gen.output, "output digraph file");
    generate->add_option("--partition-out", gen.partition_out, "partition sidecar path");
    generate->add_flag("--dot", gen.dot, "also emit a Graphviz description");

    // transform
    std::string tr_path, tr_lexprod, tr_labels, tr_out, tr_map_out, tr_labels_out;
    bool tr_c4 = false, tr_dot = false;
    auto* transform = app.add_subcommand("transform", "C4 replacement, products, label doubling");
    transform->add_option("path", tr_path, "input graph file")->required();
    transform->add_flag("--c4", tr_c4, "replace each edge by a directed C4");
    transform->add_option("--lexprod", tr_lexprod, "lexicographic product with this digraph");
    transform->add_option("--double", tr_labels, "doubling construction with this labeling file");
    transform->add_option("-o,--output", tr_out, "output digraph file");
    transform->add_option("--map-out", tr_map_out, "mapping sidecar path");
    transform->add_option("--labels-out", tr_labels_out, "doubled labeling path");
    transform->add_flag("--dot", tr_dot, "also emit a Graphviz description");

    // reduce
    std::string re_path, re_target, re_out, re_roles;
    bool re_verify = false, re_dot = false;
    auto* reduce = app.add_subcommand("reduce", "Set Cover to oriented geodetic number gadgets");
    reduce->add_option("path", re_path, "set-cover instance file")->required();
    reduce->add_option("--target", re_target, "bipartite | split | cobipartite")->required();
    reduce->add_flag("--verify", re_verify, "exhaustively check the biconditional");
    reduce->add_option("-o,--output", re_out, "output gadget file");
    reduce->add_option("--roles-out", re_roles, "role map sidecar path");
    reduce->add_flag("--dot", re_dot, "also emit a Graphviz description");

    // verify
    std::string ve_path, ve_hullset, ve_geodeticset, ve_coconvex, ve_labeling;
    auto* verify = app.add_subcommand("verify", "check certificates against a graph");
    verify->add_option("path", ve_path, "graph file")->required();
    verify->add_option("--hullset", ve_hullset, "comma-separated vertex list");
    verify->add_option("--geodeticset", ve_geodeticset, "comma-separated vertex list");
    verify->add_option("--coconvex", ve_coconvex, "comma-separated vertex list");
    verify->add_option("--labeling", ve_labeling, "labeling file");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(an_path, out);
        if (solve->parsed()) {
            if (so_hull == so_geodetic)
                raise(ErrorCode::UsageError, "pick exactly one of --hull, --geodetic");
            const int strategies = (so_exact ? 1 : 0) + (so_greedy ? 1 : 0) + (so_cactus ? 1 : 0) +
                                   (so_tournament ? 1 : 0) + (!so_partition.empty() ? 1 : 0);
            if (strategies != 1)
                raise(ErrorCode::UsageError,
                      "pick exactly one of --exact, --greedy, --cactus, --tournament, --split");
            const std::string strategy = so_exact        ? "exact"
                                         : so_greedy     ? "greedy"
                                         : so_cactus     ? "cactus"
                                         : so_tournament ? "tournament"
                                                         : "split";
            return cmd_solve(so_path, so_hull, strategy, so_partition, so_max_free, out);
        }
        if (generate->parsed()) return cmd_generate(gen, out);
        if (transform->parsed())
            return cmd_transform(tr_path, tr_c4, tr_lexprod, tr_labels, tr_out, tr_map_out,
                                 tr_labels_out, tr_dot, out);
        if (reduce->parsed())
            return cmd_reduce(re_path, re_target, re_verify, re_out, re_roles, re_dot, out);
        if (verify->parsed())
            return cmd_verify(ve_path, ve_hullset, ve_geodeticset, ve_coconvex, ve_labeling, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace ogc
