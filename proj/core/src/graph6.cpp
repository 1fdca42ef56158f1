#include "awgraph/graph6.hpp"

#include <cctype>
#include <sstream>

namespace awgraph {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    return s;
}

}  // namespace

// Body layout: the upper triangle of the adjacency matrix in column order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, MSB first,
// each byte offset by 63.
Graph parse_graph6(std::string_view line) {
    line = trim(line);
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    if (line.empty()) throw InputError("graph6: empty line");
    for (char ch : line) {
        const int byte = static_cast<unsigned char>(ch);
        if (byte < 63 || byte > 126) {
            throw InputError("graph6: byte " + std::to_string(byte) + " outside 63..126");
        }
    }
    const int n = static_cast<unsigned char>(line[0]) - 63;
    if (n == 63) throw InputError("graph6: orders above 62 are not supported");
    if (n < 1) throw InputError("graph6: graph must have at least one vertex");

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body_len = (bits + 5) / 6;
    if (line.size() - 1 != body_len) {
        throw InputError("graph6: expected " + std::to_string(body_len) + " body bytes for n=" +
                         std::to_string(n) + ", got " + std::to_string(line.size() - 1));
    }
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = static_cast<unsigned char>(line[1 + k / 6]) - 63;
            if (byte & (1 << (5 - static_cast<int>(k % 6)))) edges.emplace_back(i + 1, j + 1);
        }
    }
    for (; k < body_len * 6; ++k) {
        const int byte = static_cast<unsigned char>(line[1 + k / 6]) - 63;
        if (byte & (1 << (5 - static_cast<int>(k % 6)))) {
            throw InputError("graph6: nonzero padding bits");
        }
    }
    return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) {
        throw InputError("graph6: order " + std::to_string(n) + " exceeds 62");
    }
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::string out(1 + (bits + 5) / 6, static_cast<char>(63));
    out[0] = static_cast<char>(n + 63);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (g.adjacent(i + 1, j + 1)) {
                out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - static_cast<int>(k % 6))));
            }
        }
    }
    return out;
}

std::vector<Graph> read_graphs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        lines.emplace_back(t);
    }
    if (lines.empty()) throw InputError("no graph found in input");

    std::istringstream first(lines.front());
    long first_value = 0;
    // Digits never occur in graph6 (bytes 63..126), so a leading integer
    // means an edge list.
    if (first >> first_value) return {parse_edge_list(text)};
    std::vector<Graph> out;
    out.reserve(lines.size());
    for (const auto& l : lines) out.push_back(parse_graph6(l));
    return out;
}

}  // namespace awgraph
