#ifndef OGC_BLOCKS_HPP
#define OGC_BLOCKS_HPP

#include <utility>
#include <vector>

#include "ogc/digraph.hpp"
#include "ogc/vertex_set.hpp"

namespace ogc {

/// Biconnected-component decomposition. Every edge lies in exactly one
/// block; cut vertices are exactly the vertices in two or more blocks.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    std::vector<std::vector<std::pair<int, int>>> block_edges;
    VertexSet cut_vertices;
    /// blocks_of_vertex[v] lists block indices containing v.
    std::vector<std::vector<int>> blocks_of_vertex;
};

BlockDecomposition block_decomposition(const UndirectedGraph& g);

}  // namespace ogc

#endif
