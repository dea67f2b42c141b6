#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// DIMACS edge format, ASCII with LF endings: optional "c ..." comment lines,
// one "p edge <n> <m>" line, then m lines "e <i> <j>" with 1-indexed i < j.

inline void write_dimacs(const DenseGraph& g, std::ostream& out) {
    const int n = g.vertex_count();
    out << "p edge " << n << ' ' << g.edge_count() << '\n';
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.edge(i, j))
                out << "e " << i + 1 << ' ' << j + 1 << '\n';
}

inline std::string to_dimacs(const DenseGraph& g) {
    std::ostringstream out;
    write_dimacs(g, out);
    return out.str();
}

inline DenseGraph read_dimacs(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int n = 0;
    long long declared_edges = 0;
    long long seen_edges = 0;
    DenseGraph g;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream tokens(line);
        std::string tag;
        if (!(tokens >> tag))
            continue; // blank line
        if (tag == "c")
            continue;
        if (tag == "p") {
            if (have_header)
                throw ParseError("duplicate problem line", line_no);
            std::string format;
            std::string trailing;
            if (!(tokens >> format >> n >> declared_edges) || format != "edge" ||
                n < 0 || declared_edges < 0 || (tokens >> trailing))
                throw ParseError("malformed header, expected 'p edge <n> <m>'", line_no);
            g = DenseGraph(n);
            have_header = true;
            continue;
        }
        if (tag == "e") {
            if (!have_header)
                throw ParseError("edge line before problem line", line_no);
            int i = 0;
            int j = 0;
            std::string trailing;
            if (!(tokens >> i >> j) || (tokens >> trailing))
                throw ParseError("malformed edge line, expected 'e <i> <j>'", line_no);
            if (i < 1 || i > n || j < 1 || j > n)
                throw ParseError("vertex index out of range", line_no);
            if (i == j)
                throw ParseError("self-loop not allowed", line_no);
            ++seen_edges;
            if (seen_edges > declared_edges)
                throw ParseError("edge count mismatch: more than " +
                                     std::to_string(declared_edges) + " edge lines",
                                 line_no);
            if (!g.edge(i - 1, j - 1))
                g.add_edge(i - 1, j - 1); // duplicate lines are idempotent
            continue;
        }
        throw ParseError("unrecognized line type '" + tag + "'", line_no);
    }

    if (!have_header)
        throw ParseError("missing problem line", line_no);
    if (seen_edges != declared_edges)
        throw ParseError("edge count mismatch: header declares " +
                             std::to_string(declared_edges) + " edges, found " +
                             std::to_string(seen_edges),
                         line_no);
    return g;
}

inline DenseGraph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return read_dimacs(in);
}

} // namespace ramsey
