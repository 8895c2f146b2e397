#ifndef OGC_GRAPH_IO_HPP
#define OGC_GRAPH_IO_HPP

#include <string>

#include "ogc/digraph.hpp"

namespace ogc {

// Text graph format: line 1 "n m", then m lines "u v" (0-based, ASCII, LF).
// Parsing is strict: no extra tokens, no extra lines, no trailing garbage.
// Errors carry ParseError with the offending line number.

OrientedGraph parse_digraph(const std::string& text);
UndirectedGraph parse_undirected(const std::string& text);

std::string format_digraph(const OrientedGraph& g);
std::string format_undirected(const UndirectedGraph& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

OrientedGraph load_digraph(const std::string& path);
UndirectedGraph load_undirected(const std::string& path);

/// FNV-1a over the canonical serialization; stable across runs and platforms.
uint64_t instance_hash(const OrientedGraph& g);

}  // namespace ogc

#endif
