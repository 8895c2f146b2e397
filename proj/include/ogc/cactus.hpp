#ifndef OGC_CACTUS_HPP
#define OGC_CACTUS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ogc/convexity.hpp"
#include "ogc/digraph.hpp"
#include "ogc/subset_search.hpp"
#include "ogc/vertex_set.hpp"

namespace ogc {

/// Verdict for one cycle block of an oriented cactus.
///
/// TrapReceiver / TrapTransmitter: directed cycle whose off-cycle arcs all
/// point in / all point out (unsatisfactory type 1).
/// UC2: directed leaf cycle that is not a trap.
/// UC3: exactly two extreme-in-cycle vertices, path lengths differ and the
/// longer path has no internal cut vertex.
/// FSC1 / FSC2: satisfactory cycles that still need one extra geodetic-set
/// vertex; TSC: truly satisfactory.
enum class CycleClass { TrapReceiver, TrapTransmitter, UC2, UC3, FSC1, FSC2, TSC };

const char* cycle_class_name(CycleClass c);

struct CycleInfo {
    std::vector<int> vertices;  // cyclic order; directed cycles follow the arcs
    std::vector<bool> forward;  // forward[t]: arc vertices[t] -> vertices[t+1 mod L]
    bool is_directed = false;
    VertexSet cut_vertices;     // cut vertices of D lying on this cycle
    VertexSet tcv, rcv;         // cut vertices with an outgoing / incoming off-cycle arc
    CycleClass cls = CycleClass::TSC;

    // UC3 / FSC1 witnesses: the source and sink within the cycle and the
    // longer source-to-sink path (endpoints included).
    int source_in_cycle = -1;
    int sink_in_cycle = -1;
    std::vector<int> long_path;

    // FSC2 witnesses: the receiver/transmitter pair and the vertices one
    // interval application cannot reach (interior of the transmitter-to-
    // receiver path).
    int fsc2_receiver = -1;
    int fsc2_transmitter = -1;
    std::vector<int> fsc2_window;

    int length() const { return static_cast<int>(vertices.size()); }
};

/// Classify every cycle block. Throws NotACactus.
std::vector<CycleInfo> classify_cycles(const OrientedGraph& g);

/// The co-convex set an unsatisfactory cycle contributes: the whole cycle
/// for traps, the cycle minus its cut vertex for UC2, the interior of the
/// longer path for UC3. Throws CycleIsTSC for satisfactory cycles,
/// including falsely satisfactory ones whose deficient window is not
/// co-convex in general.
VertexSet coconvex_certificate(const OrientedGraph& g, const CycleInfo& cycle);

/// For an FSC cycle: the vertices a single interval application cannot
/// produce from outside the cycle. Not a co-convex set; it certifies that
/// every geodetic set needs a vertex of this cycle.
VertexSet fsc_window(const OrientedGraph& g, const CycleInfo& cycle);

enum class ObjectiveKind { Hull, Geodetic };

struct CactusSolution {
    ObjectiveKind kind = ObjectiveKind::Hull;
    VertexSet set;
    std::vector<CycleInfo> cycles;
    /// One entry per unsatisfactory cycle: (cycle index, chosen vertex).
    /// Seed vertices added during fallback repair carry cycle index -1.
    std::vector<std::pair<int, int>> chosen;
    /// Geodetic solutions add one entry per falsely satisfactory cycle.
    std::vector<std::pair<int, int>> fsc_extra;
    /// One verified co-convex certificate per unsatisfactory cycle.
    std::vector<std::pair<int, VertexSet>> certificates;
    /// Whole graph was a single directed cycle; the exact solver answered.
    bool degenerate_single_cycle = false;
    /// The per-cycle construction could not anchor every satisfactory cycle
    /// (interlocked directed cycles sharing cut vertices); extra seed
    /// vertices were added and the result was cross-checked exactly.
    bool construction_fallback = false;
};

/// Minimum hull set of a connected oriented cactus: ext(D) plus one chosen
/// non-extreme vertex per unsatisfactory cycle, post-verified with
/// I^2(set) = V and certificate-based optimality.
CactusSolution min_hull_set_cactus(const OrientedGraph& g, const SolveOptions& opts = {});

/// Minimum geodetic set: the hull solution plus one vertex per falsely
/// satisfactory cycle, post-verified with I(set) = V.
CactusSolution min_geodetic_set_cactus(const OrientedGraph& g, const SolveOptions& opts = {});

/// Oriented trees: ext(D) is the unique minimum hull and geodetic set.
CactusSolution tree_solution(const OrientedGraph& g);

}  // namespace ogc

#endif
