#pragma once

// Simple undirected connected graphs with eagerly computed hop distances,
// Cartesian products, and the metric queries built on top of them.
//
// Vertices are 1-based everywhere in the public API: a graph on n vertices
// has labels 1..n.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace awgraph {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Malformed or out-of-range input (bad graph6 byte, self-loop, ...).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a graph is not connected. Carries one unreachable pair.
class DisconnectedGraphError : public InputError {
public:
    DisconnectedGraphError(Vertex from, Vertex unreachable);
    Vertex from() const noexcept { return from_; }
    Vertex unreachable() const noexcept { return unreachable_; }

private:
    Vertex from_;
    Vertex unreachable_;
};

/// Symmetric n x n matrix of hop counts.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, -1) {}

    int size() const noexcept { return n_; }
    int operator()(Vertex u, Vertex v) const noexcept { return d_[index(u, v)]; }
    int& at(Vertex u, Vertex v) noexcept { return d_[index(u, v)]; }

    /// Row of vertex u, indexed by v - 1.
    std::span<const int> row(Vertex u) const noexcept {
        return {d_.data() + static_cast<std::size_t>(u - 1) * n_, static_cast<std::size_t>(n_)};
    }

    bool operator==(const DistanceMatrix&) const = default;

private:
    std::size_t index(Vertex u, Vertex v) const noexcept {
        return static_cast<std::size_t>(u - 1) * n_ + (v - 1);
    }

    int n_ = 0;
    std::vector<int> d_;
};

class Graph {
public:
    /// Builds the graph and its distance matrix. Throws InputError on
    /// self-loops or labels outside 1..n and DisconnectedGraphError if the
    /// graph is not connected. Duplicate edges are merged.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const noexcept {
        return adj_matrix_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)] != 0;
    }
    std::span<const Vertex> neighbors(Vertex v) const noexcept { return adj_[v - 1]; }
    int degree(Vertex v) const noexcept { return static_cast<int>(adj_[v - 1].size()); }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    const DistanceMatrix& distances() const noexcept { return dist_; }
    int distance(Vertex u, Vertex v) const noexcept { return dist_(u, v); }
    int diameter() const noexcept { return diameter_; }

    /// One shortest u-v path (u first), choosing the least-labelled
    /// neighbour at every step.
    std::vector<Vertex> geodesic(Vertex u, Vertex v) const;

    bool operator==(const Graph& other) const;

private:
    int n_;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint8_t> adj_matrix_;
    DistanceMatrix dist_;
    int diameter_ = 0;
};

/// BFS distances for an arbitrary adjacency (0-based lists). Unreachable
/// entries stay -1. Used for connectivity checks before a Graph exists.
DistanceMatrix bfs_distances(const std::vector<std::vector<Vertex>>& adjacency_1based);

/// Recomputes BFS distances for g; equal to g.distances().
DistanceMatrix all_pairs_distances(const Graph& g);

struct Eccentricities {
    std::vector<int> eccentricity;  // indexed by v - 1
    int diameter = 0;
    std::vector<Vertex> peripheral;  // ascending
};

Eccentricities eccentricities(const Graph& g);

/// True iff distances in `sub` equal host distances through `map`
/// (map[v - 1] is the host vertex of sub-vertex v). Throws
/// std::invalid_argument if the map is not an injective, edge-preserving
/// vertex map.
bool is_isometric_embedding(const Graph& sub, const Graph& host, std::span<const Vertex> map);

struct Bipartition {
    std::vector<Vertex> part_a;  // contains vertex 1
    std::vector<Vertex> part_b;
};

struct OddCycle {
    std::vector<Vertex> cycle;  // closed walk listed without repeating the start
};

/// Two-colours g by BFS. Returns the parts, or an odd cycle witness.
std::pair<std::optional<Bipartition>, std::optional<OddCycle>> bipartition(const Graph& g);

// Named families used throughout tests and the verifier.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}, centre is vertex 1

/// Cartesian product G (vertices u_i) x H (vertices w_j). The product
/// vertex v_{i,j} has flat id (i - 1) * |H| + j.
class ProductGraph {
public:
    ProductGraph(Graph left, Graph right);

    const Graph& left() const noexcept { return left_; }
    const Graph& right() const noexcept { return right_; }
    const Graph& composite() const noexcept { return composite_; }

    Vertex id(int i, int j) const noexcept { return (i - 1) * right_.order() + j; }
    std::pair<int, int> coords(Vertex v) const noexcept {
        return {(v - 1) / right_.order() + 1, (v - 1) % right_.order() + 1};
    }

    /// G_j: the copy of G lying over w_j, i.e. {v_{1,j}, ..., v_{|G|,j}}.
    std::vector<Vertex> left_copy(int j) const;
    /// H_i: the copy of H lying over u_i, i.e. {v_{i,1}, ..., v_{i,|H|}}.
    std::vector<Vertex> right_copy(int i) const;

private:
    Graph left_;
    Graph right_;
    Graph composite_;
};

ProductGraph cartesian_product(const Graph& g, const Graph& h);

/// Parses "u v" lines (1-based, '#' comments and blank lines ignored). The
/// vertex count is the largest label seen, or the first line if it has a
/// single integer.
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace awgraph
