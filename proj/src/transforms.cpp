#include "ogc/transforms.hpp"

#include <random>
#include <sstream>

#include "ogc/distance.hpp"
#include "ogc/errors.hpp"
#include "ogc/structure.hpp"

namespace ogc {

std::pair<OrientedGraph, C4Mapping> orient_c4(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    C4Mapping map;
    map.original_n = n;
    std::vector<std::pair<int, int>> arcs;
    int next = n;
    for (auto [i, j] : g.edges()) {
        const int vij = next++;
        const int vji = next++;
        map.sub_origin.emplace_back(i, j);
        map.sub_origin.emplace_back(j, i);
        map.sub_index[{i, j}] = vij;
        map.sub_index[{j, i}] = vji;
        arcs.emplace_back(i, vij);
        arcs.emplace_back(vij, j);
        arcs.emplace_back(j, vji);
        arcs.emplace_back(vji, i);
    }
    return {OrientedGraph::build(next, std::move(arcs)), std::move(map)};
}

OrientedGraph lex_product(const OrientedGraph& outer, const OrientedGraph& inner) {
    const int n1 = outer.vertex_count();
    const int n2 = inner.vertex_count();
    std::vector<std::pair<int, int>> arcs;
    for (auto [u1, u2] : outer.arcs()) {
        for (int v1 = 0; v1 < n2; ++v1) {
            for (int v2 = 0; v2 < n2; ++v2) arcs.emplace_back(u1 * n2 + v1, u2 * n2 + v2);
        }
    }
    for (int u = 0; u < n1; ++u) {
        for (auto [v1, v2] : inner.arcs()) arcs.emplace_back(u * n2 + v1, u * n2 + v2);
    }
    return OrientedGraph::build(n1 * n2, std::move(arcs));
}

OrientedGraph transitive_tournament(int k) {
    if (k < 1) raise(ErrorCode::BadParameter, "transitive tournament needs k >= 1");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) arcs.emplace_back(i, j);
    }
    return OrientedGraph::build(k, std::move(arcs));
}

OrientedGraph directed_cycle(int k) {
    if (k < 3) raise(ErrorCode::BadParameter, "directed cycle needs k >= 3");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < k; ++i) arcs.emplace_back(i, (i + 1) % k);
    return OrientedGraph::build(k, std::move(arcs));
}

OrientedGraph tight_example(int k) {
    if (k < 1) raise(ErrorCode::BadParameter, "tight example needs k >= 1");
    return lex_product(transitive_tournament(k), directed_cycle(3));
}

std::string HypercubeLabeling::label_string(int v) const {
    std::string s(dim, '0');
    for (int t = 0; t < dim; ++t) {
        if ((labels[v] >> t) & 1) s[t] = '1';
    }
    return s;
}

bool verify_isometric_labeling(const UndirectedGraph& g, const HypercubeLabeling& l) {
    const int n = g.vertex_count();
    if (static_cast<int>(l.labels.size()) != n) return false;
    if (l.dim < 0 || l.dim > 64) return false;
    const uint64_t mask = l.dim == 64 ? ~0ULL : (1ULL << l.dim) - 1;
    for (int v = 0; v < n; ++v) {
        if (l.labels[v] & ~mask) return false;
        for (int u = v + 1; u < n; ++u) {
            if (l.labels[u] == l.labels[v]) return false;
        }
    }
    for (int u = 0; u < n; ++u) {
        auto d = bfs_distances(g, u);
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            const int ham = __builtin_popcountll(l.labels[u] ^ l.labels[v]);
            if (g.has_edge(u, v) != (ham == 1)) return false;
            if (d[v] != ham) return false;
        }
    }
    return true;
}

DoubledCube doubling_labels(const UndirectedGraph& g, const HypercubeLabeling& l) {
    if (!bipartition(g)) raise(ErrorCode::NotBipartite, "doubling requires a bipartite graph");
    if (!verify_isometric_labeling(g, l))
        raise(ErrorCode::LabelingNotIsometric, "input labeling is not isometric");
    if (2 * l.dim > 64) raise(ErrorCode::BadParameter, "doubled dimension exceeds 64 bits");

    auto [gc4, map] = orient_c4(g);
    HypercubeLabeling out;
    out.dim = 2 * l.dim;
    out.labels.resize(gc4.vertex_count());

    auto doubled = [&](uint64_t label) {
        uint64_t r = 0;
        for (int t = 0; t < l.dim; ++t) {
            const uint64_t bit = (label >> t) & 1;
            r |= bit << (2 * t);
            r |= bit << (2 * t + 1);
        }
        return r;
    };
    for (int v = 0; v < g.vertex_count(); ++v) out.labels[v] = doubled(l.labels[v]);
    for (int idx = g.vertex_count(); idx < gc4.vertex_count(); ++idx) {
        auto [i, j] = map.sub_pair(idx);
        const uint64_t diff = l.labels[i] ^ l.labels[j];
        const int t = __builtin_ctzll(diff);
        // v_{i,j} copies u_i except that the second bit of the doubled
        // coordinate takes u_j's value.
        uint64_t label = out.labels[i];
        label ^= 1ULL << (2 * t + 1);
        out.labels[idx] = label;
    }
    if (!verify_isometric_labeling(gc4.underlying(), out))
        raise(ErrorCode::ConstructionFailed, "doubled labeling failed isometry verification");
    return {std::move(gc4), std::move(map), std::move(out)};
}

HypercubeLabeling parse_labeling(const std::string& text) {
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
    int n, k;
    if (!(header >> n >> k) || n < 0 || k < 0 || k > 64)
        raise(ErrorCode::ParseError, "line 1: expected 'n k'");
    HypercubeLabeling l;
    l.dim = k;
    for (int v = 0; v < n; ++v) {
        next_line();
        if (static_cast<int>(line.size()) != k)
            raise(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected " + std::to_string(k) + " bits");
        uint64_t label = 0;
        for (int t = 0; t < k; ++t) {
            if (line[t] == '1')
                label |= 1ULL << t;
            else if (line[t] != '0')
                raise(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad bit character");
        }
        l.labels.push_back(label);
    }
    if (std::getline(in, line) && !line.empty())
        raise(ErrorCode::ParseError, "line " + std::to_string(line_no + 1) + ": trailing garbage");
    return l;
}

std::string format_labeling(const HypercubeLabeling& l) {
    std::string out = std::to_string(l.labels.size()) + " " + std::to_string(l.dim) + "\n";
    for (std::size_t v = 0; v < l.labels.size(); ++v)
        out += l.label_string(static_cast<int>(v)) + "\n";
    return out;
}

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) raise(ErrorCode::BadParameter, "probability outside [0,1]");
}

}  // namespace

OrientedGraph random_orientation(const UndirectedGraph& g, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution flip(0.5);
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) arcs.emplace_back(flip(rng) ? std::pair{u, v} : std::pair{v, u});
    return OrientedGraph::build(g.vertex_count(), std::move(arcs));
}

OrientedGraph random_tournament(int n, uint64_t seed) {
    if (n < 1) raise(ErrorCode::BadParameter, "tournament needs n >= 1");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution flip(0.5);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v)
            arcs.emplace_back(flip(rng) ? std::pair{u, v} : std::pair{v, u});
    }
    return OrientedGraph::build(n, std::move(arcs));
}

OrientedGraph random_cactus(int n, uint64_t seed) {
    if (n < 1) raise(ErrorCode::BadParameter, "cactus needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> arcs;
    int built = 1;
    while (built < n) {
        std::uniform_int_distribution<int> pick_attach(0, built - 1);
        const int attach = pick_attach(rng);
        const int remaining = n - built;
        std::bernoulli_distribution make_cycle(0.55);
        if (remaining >= 2 && make_cycle(rng)) {
            std::uniform_int_distribution<int> pick_len(3, 6);
            const int len = std::min(pick_len(rng), remaining + 1);
            // Cycle through `attach` and len-1 fresh vertices.
            std::vector<int> cyc{attach};
            for (int i = 0; i < len - 1; ++i) cyc.push_back(built++);
            std::bernoulli_distribution directed(0.5), flip(0.5);
            if (directed(rng)) {
                const bool clockwise = flip(rng);
                for (int i = 0; i < len; ++i) {
                    int a = cyc[i], b = cyc[(i + 1) % len];
                    arcs.emplace_back(clockwise ? std::pair{a, b} : std::pair{b, a});
                }
            } else {
                for (int i = 0; i < len; ++i) {
                    int a = cyc[i], b = cyc[(i + 1) % len];
                    arcs.emplace_back(flip(rng) ? std::pair{a, b} : std::pair{b, a});
                }
            }
        } else {
            const int leaf = built++;
            std::bernoulli_distribution flip(0.5);
            arcs.emplace_back(flip(rng) ? std::pair{attach, leaf} : std::pair{leaf, attach});
        }
    }
    return OrientedGraph::build(n, std::move(arcs));
}

OrientedGraph random_bipartite(int n1, int n2, double p, uint64_t seed) {
    if (n1 < 0 || n2 < 0) raise(ErrorCode::BadParameter, "negative side size");
    check_probability(p);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution edge(p), flip(0.5);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n1; ++u) {
        for (int v = n1; v < n1 + n2; ++v) {
            if (edge(rng)) arcs.emplace_back(flip(rng) ? std::pair{u, v} : std::pair{v, u});
        }
    }
    return OrientedGraph::build(n1 + n2, std::move(arcs));
}

OrientedGraph random_oriented_tree(int n, uint64_t seed) {
    if (n < 1) raise(ErrorCode::BadParameter, "tree needs n >= 1");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution flip(0.5);
    std::vector<std::pair<int, int>> arcs;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        const int parent = pick(rng);
        arcs.emplace_back(flip(rng) ? std::pair{parent, v} : std::pair{v, parent});
    }
    return OrientedGraph::build(n, std::move(arcs));
}

RandomSplit random_split(int ns, int nc, double p, uint64_t seed) {
    if (ns < 0 || nc < 0) raise(ErrorCode::BadParameter, "negative side size");
    check_probability(p);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution edge(p), flip(0.5);
    const int n = ns + nc;
    // Stable vertices first, then the clique.
    std::vector<std::pair<int, int>> arcs;
    for (int u = ns; u < n; ++u) {
        for (int v = u + 1; v < n; ++v)
            arcs.emplace_back(flip(rng) ? std::pair{u, v} : std::pair{v, u});
    }
    std::vector<std::vector<bool>> cross(ns, std::vector<bool>(nc, false));
    for (int s = 0; s < ns; ++s) {
        for (int c = 0; c < nc; ++c) cross[s][c] = edge(rng);
    }
    // Keep the stable side maximal: every clique vertex needs a stable
    // neighbor (when there is any stable vertex to attach to).
    if (ns > 0) {
        for (int c = 0; c < nc; ++c) {
            bool any = false;
            for (int s = 0; s < ns; ++s) any = any || cross[s][c];
            if (!any) {
                std::uniform_int_distribution<int> pick(0, ns - 1);
                cross[pick(rng)][c] = true;
            }
        }
    }
    for (int s = 0; s < ns; ++s) {
        for (int c = 0; c < nc; ++c) {
            if (cross[s][c])
                arcs.emplace_back(flip(rng) ? std::pair{s, ns + c} : std::pair{ns + c, s});
        }
    }
    RandomSplit out{OrientedGraph::build(n, std::move(arcs)), VertexSet(n), VertexSet(n)};
    for (int s = 0; s < ns; ++s) out.stable.add(s);
    for (int c = ns; c < n; ++c) out.clique.add(c);
    return out;
}

}  // namespace ogc
