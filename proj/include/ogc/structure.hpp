#ifndef OGC_STRUCTURE_HPP
#define OGC_STRUCTURE_HPP

#include <optional>
#include <utility>

#include "ogc/digraph.hpp"
#include "ogc/vertex_set.hpp"

namespace ogc {

bool is_connected(const UndirectedGraph& g);
bool is_tree(const UndirectedGraph& g);

/// Every pair of distinct vertices joined by exactly one arc.
bool is_tournament(const OrientedGraph& g);

bool is_dag(const OrientedGraph& g);

/// A 2-coloring of the underlying graph, or nullopt when an odd cycle exists.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const UndirectedGraph& g);

bool is_bipartite_underlying(const OrientedGraph& g);

/// Checks the supplied partition: stable ∪ clique = V, disjoint, stable
/// pairwise non-adjacent, clique pairwise adjacent (in the underlying graph).
bool is_split_underlying(const OrientedGraph& g, const VertexSet& stable, const VertexSet& clique);

bool is_cobipartite_underlying(const OrientedGraph& g, const VertexSet& c1, const VertexSet& c2);

/// Every block is an edge or a (chordless) cycle.
bool is_cactus(const UndirectedGraph& g);
bool is_cactus(const OrientedGraph& g);

/// Stable set with no vertex of the complement addable.
bool is_maximal_stable(const UndirectedGraph& g, const VertexSet& stable);

}  // namespace ogc

#endif
