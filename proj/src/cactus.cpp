#include "ogc/cactus.hpp"

#include <algorithm>

#include "ogc/blocks.hpp"
#include "ogc/errors.hpp"
#include "ogc/structure.hpp"

namespace ogc {

const char* cycle_class_name(CycleClass c) {
    switch (c) {
        case CycleClass::TrapReceiver: return "trap-receiver";
        case CycleClass::TrapTransmitter: return "trap-transmitter";
        case CycleClass::UC2: return "UC2";
        case CycleClass::UC3: return "UC3";
        case CycleClass::FSC1: return "FSC1";
        case CycleClass::FSC2: return "FSC2";
        case CycleClass::TSC: return "TSC";
    }
    return "?";
}

namespace {

/// Cyclic order of a chordless cycle block: start at the smallest vertex,
/// move to its smaller block-neighbor; directed cycles are then normalized
/// to follow their arcs.
std::vector<int> cycle_order(const OrientedGraph& g, const VertexSet& block) {
    auto in_block = [&](int v) { return block.contains(v); };
    auto block_neighbors = [&](int v) {
        std::vector<int> nb;
        for (int w : g.out_neighbors(v)) {
            if (in_block(w)) nb.push_back(w);
        }
        for (int w : g.in_neighbors(v)) {
            if (in_block(w)) nb.push_back(w);
        }
        std::sort(nb.begin(), nb.end());
        return nb;
    };
    const int start = block.first();
    std::vector<int> order{start};
    int prev = start;
    int cur = block_neighbors(start)[0];
    while (cur != start) {
        order.push_back(cur);
        auto nb = block_neighbors(cur);
        const int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    return order;
}

struct PathView {
    std::vector<int> vertices;  // from the source to the sink, inclusive
};

int in_degree_within(const CycleInfo& c, int t) {
    const int len = c.length();
    const int before = (t + len - 1) % len;
    return (c.forward[before] ? 1 : 0) + (!c.forward[t] ? 1 : 0);
}

/// FSC1 test for a cycle already known to have exactly one source, one
/// sink, distinct path lengths, and an internal cut vertex on the longer
/// path. Positions index long_path.
bool passes_fsc1_conditions(const CycleInfo& c) {
    const int q = static_cast<int>(c.long_path.size()) - 1;
    if (q < 3) return false;
    std::vector<int> rcv_pos, tcv_pos;
    for (int t = 1; t < q; ++t) {
        const int v = c.long_path[t];
        if (c.rcv.contains(v)) rcv_pos.push_back(t);
        if (c.tcv.contains(v)) tcv_pos.push_back(t);
    }
    // Receivers must sit at distance >= 2 from the source, transmitters at
    // distance >= 2 from the sink, and every transmitter must precede every
    // receiver with a gap of at least two.
    for (int t : rcv_pos) {
        if (t < 2) return false;
    }
    for (int t : tcv_pos) {
        if (q - t < 2) return false;
    }
    if (!rcv_pos.empty() && !tcv_pos.empty()) {
        const int last_tcv = *std::max_element(tcv_pos.begin(), tcv_pos.end());
        const int first_rcv = *std::min_element(rcv_pos.begin(), rcv_pos.end());
        if (first_rcv - last_tcv < 2) return false;
    }
    return true;
}

/// FSC2 test on a directed non-trap non-leaf cycle: a receiver r and
/// transmitter t such that every cut vertex lies on the (r,t)-path, the
/// receivers precede the transmitters along it, and the way back from t to
/// r is at least two arcs long.
bool detect_fsc2(CycleInfo& c) {
    const int len = c.length();
    std::vector<int> pos_of(c.cut_vertices.universe_size(), -1);
    for (int t = 0; t < len; ++t) pos_of[c.vertices[t]] = t;
    auto cuts = c.cut_vertices.to_vector();

    int best_k = -1;
    std::pair<int, int> best_pair{-1, -1};
    for (int r : cuts) {
        if (!c.rcv.contains(r)) continue;
        for (int t : cuts) {
            if (t == r || !c.tcv.contains(t)) continue;
            const int k = (pos_of[t] - pos_of[r] + len) % len;
            if (len - k < 2) continue;  // d_C(t, r) >= 2
            bool ok = true;
            int max_rcv_off = 0, min_tcv_off = k;
            for (int cvert : cuts) {
                const int off = (pos_of[cvert] - pos_of[r] + len) % len;
                if (cvert != r && cvert != t && (off < 1 || off > k - 1)) {
                    ok = false;
                    break;
                }
                if (c.rcv.contains(cvert)) max_rcv_off = std::max(max_rcv_off, off);
                if (c.tcv.contains(cvert)) min_tcv_off = std::min(min_tcv_off, off);
            }
            if (!ok || max_rcv_off > min_tcv_off) continue;
            if (k > best_k) {
                best_k = k;
                best_pair = {r, t};
            }
        }
    }
    if (best_k < 0) return false;
    c.fsc2_receiver = best_pair.first;
    c.fsc2_transmitter = best_pair.second;
    const int from = pos_of[best_pair.second];
    const int gap = (pos_of[best_pair.first] - from + len) % len;
    for (int step = 1; step < gap; ++step) c.fsc2_window.push_back(c.vertices[(from + step) % len]);
    return true;
}

void classify_one(CycleInfo& c) {
    const int len = c.length();
    if (c.is_directed) {
        const bool has_rcv = !c.rcv.empty();
        const bool has_tcv = !c.tcv.empty();
        const bool mixed_vertex = c.rcv.intersects(c.tcv);
        if (!mixed_vertex && !(has_rcv && has_tcv)) {
            // All off-cycle arcs point the same way (or there are none);
            // a cut-free directed cycle counts as a receiver trap.
            c.cls = has_tcv ? CycleClass::TrapTransmitter : CycleClass::TrapReceiver;
            return;
        }
        if (c.cut_vertices.count() == 1) {
            c.cls = CycleClass::UC2;
            return;
        }
        c.cls = detect_fsc2(c) ? CycleClass::FSC2 : CycleClass::TSC;
        return;
    }

    // Non-directed cycle: extremes within the cycle decide everything.
    // Length >= 4 has no transitive vertex, so ext(C) = sources + sinks;
    // a non-directed triangle always has all three vertices extreme.
    std::vector<int> sources, sinks;
    for (int t = 0; t < len; ++t) {
        const int d = in_degree_within(c, t);
        if (d == 0) sources.push_back(t);
        if (d == 2) sinks.push_back(t);
    }
    const int ext_in_c =
        static_cast<int>(sources.size() + sinks.size()) + (len == 3 ? 1 : 0);
    if (ext_in_c != 2) {
        c.cls = CycleClass::TSC;
        return;
    }
    const int s = sources[0], k = sinks[0];
    c.source_in_cycle = c.vertices[s];
    c.sink_in_cycle = c.vertices[k];
    PathView fwd, bwd;
    for (int t = s;; t = (t + 1) % len) {
        fwd.vertices.push_back(c.vertices[t]);
        if (t == k) break;
    }
    for (int t = s;; t = (t + len - 1) % len) {
        bwd.vertices.push_back(c.vertices[t]);
        if (t == k) break;
    }
    if (fwd.vertices.size() == bwd.vertices.size()) {
        c.cls = CycleClass::TSC;
        return;
    }
    c.long_path = fwd.vertices.size() > bwd.vertices.size() ? fwd.vertices : bwd.vertices;
    bool internal_cut = false;
    for (std::size_t t = 1; t + 1 < c.long_path.size(); ++t)
        internal_cut = internal_cut || c.cut_vertices.contains(c.long_path[t]);
    if (!internal_cut) {
        c.cls = CycleClass::UC3;
        return;
    }
    c.cls = passes_fsc1_conditions(c) ? CycleClass::FSC1 : CycleClass::TSC;
}

int cycle_position(const CycleInfo& c, int v) {
    for (int t = 0; t < c.length(); ++t) {
        if (c.vertices[t] == v) return t;
    }
    return -1;
}

int smallest(const std::vector<int>& xs) { return *std::min_element(xs.begin(), xs.end()); }

void push_unique(std::vector<int>& xs, int v) {
    if (std::find(xs.begin(), xs.end(), v) == xs.end()) xs.push_back(v);
}

/// Candidate vertices an unsatisfactory cycle may contribute, best-first.
/// The head of the list is the proof's choice; the alternatives keep the
/// cardinality argument intact because all of them hit the cycle's
/// co-convex certificate. Alternatives matter when two directed cycles
/// share a cut vertex and feed each other: a geodesic then has to sweep
/// through both, which only particular start vertices allow.
std::vector<int> hull_candidates(const CycleInfo& c) {
    const int len = c.length();
    std::vector<int> out;
    switch (c.cls) {
        case CycleClass::TrapReceiver:
        case CycleClass::TrapTransmitter: {
            const bool receiver = c.cls == CycleClass::TrapReceiver;
            for (int cut : c.cut_vertices.to_vector()) {
                const int pos = cycle_position(c, cut);
                push_unique(out, c.vertices[(pos + (receiver ? len - 1 : 1)) % len]);
            }
            for (int t = 0; t < len; ++t) push_unique(out, c.vertices[t]);
            std::sort(out.begin() + 1, out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        }
        case CycleClass::UC2: {
            VertexSet non_cut = VertexSet::of(c.cut_vertices.universe_size(), c.vertices);
            non_cut -= c.cut_vertices;
            out.push_back(non_cut.first());
            const int pos = cycle_position(c, c.cut_vertices.first());
            push_unique(out, c.vertices[(pos + 1) % len]);
            push_unique(out, c.vertices[(pos + len - 1) % len]);
            non_cut.for_each([&](int v) { push_unique(out, v); });
            return out;
        }
        case CycleClass::UC3: {
            out.push_back(smallest({c.long_path.begin() + 1, c.long_path.end() - 1}));
            for (std::size_t t = 1; t + 1 < c.long_path.size(); ++t)
                push_unique(out, c.long_path[t]);
            return out;
        }
        default:
            raise(ErrorCode::ConstructionFailed, "no hull choice for a satisfactory cycle");
    }
}

/// Candidates for the extra vertex a falsely satisfactory cycle adds to a
/// geodetic set: the proof's choice, then the rest of the deficient window,
/// then any other non-extreme cycle vertex.
std::vector<int> fsc_candidates(const OrientedGraph& g, const CycleInfo& c, const VertexSet& ext) {
    std::vector<int> out;
    if (c.cls == CycleClass::FSC2) {
        const int pos = cycle_position(c, c.fsc2_transmitter);
        out.push_back(c.vertices[(pos + 1) % c.length()]);
    } else {
        const int q = static_cast<int>(c.long_path.size()) - 1;
        std::vector<int> rcv_pos, tcv_pos;
        for (int t = 1; t < q; ++t) {
            if (c.rcv.contains(c.long_path[t])) rcv_pos.push_back(t);
            if (c.tcv.contains(c.long_path[t])) tcv_pos.push_back(t);
        }
        if (tcv_pos.empty()) {
            out.push_back(c.long_path[1]);
        } else if (rcv_pos.empty()) {
            out.push_back(c.long_path[q - 1]);
        } else {
            const int last_tcv = *std::max_element(tcv_pos.begin(), tcv_pos.end());
            const int first_rcv = *std::min_element(rcv_pos.begin(), rcv_pos.end());
            out.push_back(
                smallest({c.long_path.begin() + last_tcv + 1, c.long_path.begin() + first_rcv}));
        }
    }
    fsc_window(g, c).for_each([&](int v) { push_unique(out, v); });
    for (int v : c.vertices) {
        if (!ext.contains(v)) push_unique(out, v);
    }
    return out;
}

bool single_directed_cycle(const OrientedGraph& g, const std::vector<CycleInfo>& cycles) {
    return cycles.size() == 1 && cycles.front().is_directed &&
           cycles.front().length() == g.vertex_count();
}

CactusSolution fallback_exact(const OrientedGraph& g, ObjectiveKind kind,
                              std::vector<CycleInfo> cycles, const SolveOptions& opts) {
    CactusSolution sol;
    sol.kind = kind;
    sol.cycles = std::move(cycles);
    sol.degenerate_single_cycle = true;
    sol.set =
        (kind == ObjectiveKind::Hull ? min_hull_set(g, opts) : min_geodetic_set(g, opts)).witness;
    return sol;
}

struct Slot {
    int cycle_idx;
    bool is_fsc;
    std::vector<int> candidates;
    std::size_t pick = 0;
};

CactusSolution solve_cactus(const OrientedGraph& g, ObjectiveKind kind, const SolveOptions& opts) {
    if (!is_cactus(g)) raise(ErrorCode::NotACactus, "solver requires an oriented cactus");
    if (!is_connected(g.underlying())) raise(ErrorCode::Disconnected, "solver requires connectivity");

    std::vector<CycleInfo> cycles = classify_cycles(g);
    // A graph that is one directed cycle has no extreme vertex and no cut
    // vertex; the per-cycle accounting does not apply, so the exact solver
    // answers instead.
    if (single_directed_cycle(g, cycles)) return fallback_exact(g, kind, std::move(cycles), opts);

    const int n = g.vertex_count();
    const VertexSet full = VertexSet::full(n);
    const VertexSet ext = extreme_vertices(g);
    ConvexityContext ctx(g, opts.execution);

    CactusSolution sol;
    sol.kind = kind;
    sol.cycles = std::move(cycles);

    std::vector<Slot> slots;
    for (std::size_t i = 0; i < sol.cycles.size(); ++i) {
        const CycleInfo& c = sol.cycles[i];
        const bool unsatisfactory = c.cls == CycleClass::TrapReceiver ||
                                    c.cls == CycleClass::TrapTransmitter ||
                                    c.cls == CycleClass::UC2 || c.cls == CycleClass::UC3;
        if (unsatisfactory) {
            slots.push_back({static_cast<int>(i), false, hull_candidates(c)});
            VertexSet cert = coconvex_certificate(g, c);
            if (!ctx.is_coconvex(cert))
                raise(ErrorCode::ConstructionFailed, "certificate is not co-convex");
            if (cert.intersects(ext))
                raise(ErrorCode::ConstructionFailed, "certificate touches extreme vertices");
            for (const auto& [idx, other] : sol.certificates) {
                if (cert.intersects(other))
                    raise(ErrorCode::ConstructionFailed, "certificates of two cycles intersect");
            }
            sol.certificates.emplace_back(static_cast<int>(i), std::move(cert));
        } else if (kind == ObjectiveKind::Geodetic &&
                   (c.cls == CycleClass::FSC1 || c.cls == CycleClass::FSC2)) {
            // Necessity: even with every vertex outside the cycle (plus the
            // cycle's extremes) available, one interval application misses
            // the window, so a geodetic set needs a non-extreme cycle vertex.
            VertexSet cycle_non_ext = VertexSet::of(n, c.vertices) - ext;
            VertexSet window = fsc_window(g, c);
            if (window.empty())
                raise(ErrorCode::ConstructionFailed, "falsely satisfactory cycle has no window");
            if (window.is_subset_of(ctx.interval(full - cycle_non_ext)))
                raise(ErrorCode::ConstructionFailed, "window is coverable from outside the cycle");
            slots.push_back({static_cast<int>(i), true, fsc_candidates(g, c, ext)});
        }
    }

    auto assemble = [&](VertexSet& out) {
        out = ext;
        for (const Slot& s : slots) {
            const int v = s.candidates[s.pick];
            if (out.contains(v)) return false;  // collision; assignment invalid
            out.add(v);
        }
        return true;
    };
    auto coverage = [&](const VertexSet& s) {
        return kind == ObjectiveKind::Geodetic ? ctx.interval(s) : ctx.interval(ctx.interval(s));
    };

    VertexSet current(n);
    if (!assemble(current))
        raise(ErrorCode::ConstructionFailed, "per-cycle choices collide");
    int covered = coverage(current).count();

    // The head candidates are the proof's choices and almost always cover
    // everything at once. When directed cycles sharing cut vertices feed
    // each other, some slots need a different representative; coordinate
    // ascent over per-slot candidates restores coverage while keeping one
    // vertex per cycle, so the certificate counting still proves optimality.
    while (covered < n) {
        bool improved = false;
        for (Slot& s : slots) {
            const std::size_t original = s.pick;
            std::size_t best_pick = original;
            int best_cov = covered;
            for (std::size_t cand = 0; cand < s.candidates.size(); ++cand) {
                s.pick = cand;
                VertexSet trial(n);
                if (!assemble(trial)) continue;
                const int cov = coverage(trial).count();
                if (cov > best_cov) {
                    best_cov = cov;
                    best_pick = cand;
                }
            }
            s.pick = best_pick;
            if (best_cov > covered) {
                covered = best_cov;
                improved = true;
            }
        }
        if (!improved) break;
    }
    assemble(current);

    // Interlocked satisfactory directed cycles can starve the per-cycle
    // construction of anchors entirely (two directed cycles sharing a cut
    // vertex and feeding each other leave hull(ext) = ext). Each leftover
    // region then needs a seed of its own: the uncovered remainder of a
    // hull is co-convex by definition, so every hull set meets it. Seeds
    // are added greedily and the result is cross-checked against the exact
    // solver, which also guards the optimality claim for geodetic sets.
    std::vector<int> seeds;
    while (true) {
        const VertexSet reached = coverage(current);
        if (reached == full) break;
        const VertexSet residual = full - reached;
        int best_vertex = -1;
        int best_cov = -1;
        residual.for_each([&](int v) {
            VertexSet trial = current;
            trial.add(v);
            const int cov = coverage(trial).count();
            if (cov > best_cov) {
                best_cov = cov;
                best_vertex = v;
            }
        });
        current.add(best_vertex);
        seeds.push_back(best_vertex);
    }

    sol.set = current;
    for (const Slot& s : slots) {
        (s.is_fsc ? sol.fsc_extra : sol.chosen)
            .emplace_back(s.cycle_idx, s.candidates[s.pick]);
    }
    for (int v : seeds) (kind == ObjectiveKind::Geodetic ? sol.fsc_extra : sol.chosen).emplace_back(-1, v);

    if (!seeds.empty()) {
        sol.construction_fallback = true;
        const auto exact =
            kind == ObjectiveKind::Hull ? min_hull_set(g, opts) : min_geodetic_set(g, opts);
        if (exact.optimum < sol.set.count()) {
            // The per-cycle accounting over-counted on this instance; trust
            // the exact answer and surface the event through the flag.
            sol.set = exact.witness;
            sol.chosen.clear();
            sol.fsc_extra.clear();
        }
    }

    if (kind == ObjectiveKind::Geodetic) {
        if (ctx.interval(sol.set) != full)
            raise(ErrorCode::ConstructionFailed, "constructed set is not geodetic");
    } else {
        if (ctx.hull(sol.set) != full)
            raise(ErrorCode::ConstructionFailed, "constructed set is not a hull set");
    }
    return sol;
}

}  // namespace

std::vector<CycleInfo> classify_cycles(const OrientedGraph& g) {
    const auto und = g.underlying();
    if (!is_cactus(und)) raise(ErrorCode::NotACactus, "underlying graph is not a cactus");
    auto dec = block_decomposition(und);

    const int n = g.vertex_count();
    std::vector<CycleInfo> cycles;
    for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
        if (dec.blocks[b].count() < 3) continue;
        CycleInfo c;
        c.vertices = cycle_order(g, dec.blocks[b]);
        const int len = c.length();
        c.forward.resize(len);
        for (int t = 0; t < len; ++t) c.forward[t] = g.has_arc(c.vertices[t], c.vertices[(t + 1) % len]);
        const bool all_fwd = std::all_of(c.forward.begin(), c.forward.end(), [](bool f) { return f; });
        const bool all_bwd =
            std::none_of(c.forward.begin(), c.forward.end(), [](bool f) { return f; });
        if (all_bwd) {
            std::reverse(c.vertices.begin() + 1, c.vertices.end());
            for (int t = 0; t < len; ++t)
                c.forward[t] = g.has_arc(c.vertices[t], c.vertices[(t + 1) % len]);
        }
        c.is_directed = all_fwd || all_bwd;

        c.cut_vertices = VertexSet(n);
        c.tcv = VertexSet(n);
        c.rcv = VertexSet(n);
        for (int v : c.vertices) {
            for (int w : g.out_neighbors(v)) {
                if (!dec.blocks[b].contains(w)) c.tcv.add(v);
            }
            for (int w : g.in_neighbors(v)) {
                if (!dec.blocks[b].contains(w)) c.rcv.add(v);
            }
        }
        c.cut_vertices = c.tcv | c.rcv;
        classify_one(c);
        cycles.push_back(std::move(c));
    }
    return cycles;
}

VertexSet coconvex_certificate(const OrientedGraph& g, const CycleInfo& cycle) {
    const int n = g.vertex_count();
    switch (cycle.cls) {
        case CycleClass::TrapReceiver:
        case CycleClass::TrapTransmitter:
            return VertexSet::of(n, cycle.vertices);
        case CycleClass::UC2: {
            VertexSet s = VertexSet::of(n, cycle.vertices);
            s -= cycle.cut_vertices;
            return s;
        }
        case CycleClass::UC3: {
            VertexSet s(n);
            for (std::size_t t = 1; t + 1 < cycle.long_path.size(); ++t) s.add(cycle.long_path[t]);
            return s;
        }
        default:
            raise(ErrorCode::CycleIsTSC, "cycle is satisfactory; no co-convex certificate");
    }
}

VertexSet fsc_window(const OrientedGraph& g, const CycleInfo& cycle) {
    const int n = g.vertex_count();
    if (cycle.cls == CycleClass::FSC2) return VertexSet::of(n, cycle.fsc2_window);
    if (cycle.cls != CycleClass::FSC1)
        raise(ErrorCode::CycleIsTSC, "cycle is not falsely satisfactory");
    const int q = static_cast<int>(cycle.long_path.size()) - 1;
    std::vector<int> rcv_pos, tcv_pos;
    for (int t = 1; t < q; ++t) {
        if (cycle.rcv.contains(cycle.long_path[t])) rcv_pos.push_back(t);
        if (cycle.tcv.contains(cycle.long_path[t])) tcv_pos.push_back(t);
    }
    const int lo = tcv_pos.empty() ? 0 : *std::max_element(tcv_pos.begin(), tcv_pos.end());
    const int hi = rcv_pos.empty() ? q : *std::min_element(rcv_pos.begin(), rcv_pos.end());
    VertexSet s(n);
    for (int t = lo + 1; t < hi; ++t) s.add(cycle.long_path[t]);
    return s;
}

CactusSolution min_hull_set_cactus(const OrientedGraph& g, const SolveOptions& opts) {
    return solve_cactus(g, ObjectiveKind::Hull, opts);
}

CactusSolution min_geodetic_set_cactus(const OrientedGraph& g, const SolveOptions& opts) {
    return solve_cactus(g, ObjectiveKind::Geodetic, opts);
}

CactusSolution tree_solution(const OrientedGraph& g) {
    if (!is_tree(g.underlying())) raise(ErrorCode::NotATree, "underlying graph is not a tree");
    CactusSolution sol;
    sol.kind = ObjectiveKind::Geodetic;
    sol.set = extreme_vertices(g);
    ConvexityContext ctx(g);
    if (ctx.interval(sol.set) != VertexSet::full(g.vertex_count()))
        raise(ErrorCode::ConstructionFailed, "extreme vertices are not geodetic on this tree");
    return sol;
}

}  // namespace ogc
