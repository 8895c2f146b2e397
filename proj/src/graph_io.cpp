#include "ogc/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "ogc/errors.hpp"

namespace ogc {

namespace {

struct LineScanner {
    explicit LineScanner(const std::string& text) : in(text) {}

    /// Next non-empty payload line; empty+whitespace-only lines are rejected
    /// except a single trailing newline at EOF.
    bool next_line(std::string& out) {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            out = line;
            return true;
        }
        return false;
    }

    std::istringstream in;
    std::string line;
    int line_no = 0;
};

std::pair<int, int> parse_int_pair(const std::string& line, int line_no) {
    std::istringstream ls(line);
    long long a, b;
    if (!(ls >> a >> b))
        raise(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected two integers");
    std::string rest;
    if (ls >> rest)
        raise(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": trailing garbage '" + rest + "'");
    return {static_cast<int>(a), static_cast<int>(b)};
}

std::vector<std::pair<int, int>> parse_pair_lines(const std::string& text, int& n_out) {
    LineScanner sc(text);
    std::string line;
    if (!sc.next_line(line)) raise(ErrorCode::ParseError, "line 1: missing header 'n m'");
    auto [n, m] = parse_int_pair(line, sc.line_no);
    if (n < 0 || m < 0)
        raise(ErrorCode::ParseError, "line 1: negative count");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(m);
    for (int i = 0; i < m; ++i) {
        if (!sc.next_line(line))
            raise(ErrorCode::ParseError,
                  "line " + std::to_string(sc.line_no + 1) + ": expected " + std::to_string(m) +
                      " arc lines, got " + std::to_string(i));
        pairs.push_back(parse_int_pair(line, sc.line_no));
    }
    if (sc.next_line(line)) {
        if (line.find_first_not_of(" \t") != std::string::npos)
            raise(ErrorCode::ParseError, "line " + std::to_string(sc.line_no) + ": trailing garbage");
        // A whitespace-only line is still garbage: a well-formed file ends
        // after the last arc line.
        raise(ErrorCode::ParseError, "line " + std::to_string(sc.line_no) + ": trailing garbage");
    }
    n_out = n;
    return pairs;
}

}  // namespace

OrientedGraph parse_digraph(const std::string& text) {
    int n = 0;
    auto arcs = parse_pair_lines(text, n);
    return OrientedGraph::build(n, std::move(arcs));
}

UndirectedGraph parse_undirected(const std::string& text) {
    int n = 0;
    auto edges = parse_pair_lines(text, n);
    return UndirectedGraph::build(n, std::move(edges));
}

std::string format_digraph(const OrientedGraph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.arc_count()) + "\n";
    for (auto [u, v] : g.arcs()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string format_undirected(const UndirectedGraph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrorCode::ParseError, "cannot write '" + path + "'");
    out << content;
}

OrientedGraph load_digraph(const std::string& path) { return parse_digraph(read_text_file(path)); }

UndirectedGraph load_undirected(const std::string& path) {
    return parse_undirected(read_text_file(path));
}

uint64_t instance_hash(const OrientedGraph& g) {
    const std::string canon = format_digraph(g);
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace ogc
