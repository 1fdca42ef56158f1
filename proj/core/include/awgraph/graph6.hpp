#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "awgraph/graph.hpp"

namespace awgraph {

inline constexpr int kGraph6MaxOrder = 62;

/// Decodes one graph6 line. A leading ">>graph6<<" header and trailing
/// whitespace are stripped. Throws InputError for bytes outside 63..126,
/// a body of the wrong length, or n outside 1..62, and
/// DisconnectedGraphError for disconnected graphs.
Graph parse_graph6(std::string_view line);

/// Throws InputError if g has more than 62 vertices.
std::string encode_graph6(const Graph& g);

/// Reads either graph6 (one graph per non-empty line) or a single edge list.
/// The format is sniffed from the first non-empty, non-comment line: a line
/// made of two integers is an edge list, anything else is graph6.
std::vector<Graph> read_graphs(const std::string& text);

}  // namespace awgraph
