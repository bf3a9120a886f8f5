#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "specclique/graph.hpp"

namespace specclique {

class graph6_error : public std::runtime_error {
public:
    enum class Kind { MalformedHeader, TruncatedBitstream, SizeOverflow };

    graph6_error(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
    Kind kind;
};

struct Graph6Options {
    int max_n = 10000;
};

/// Decodes one graph6 line (McKay format). A leading ">>graph6<<" marker is
/// tolerated and stripped, as is trailing whitespace.
Graph parse_graph6(std::string_view line, const Graph6Options& opts = {});

/// Canonical graph6 encoding of g under its given vertex order.
std::string write_graph6(const Graph& g);

struct Graph6ReadResult {
    std::vector<Graph> graphs;
    std::vector<std::pair<int, std::string>> errors;  // 1-based line number, message
};

/// Reads a one-graph-per-line stream; parse failures are collected, not thrown.
Graph6ReadResult read_graph6_lines(std::istream& in, const Graph6Options& opts = {});

}  // namespace specclique
