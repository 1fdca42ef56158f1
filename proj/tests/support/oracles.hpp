#pragma once

// Deliberately naive reference implementations. They share no code with
// the library beyond plain vectors, so agreement is evidence rather than
// tautology.

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;  // 1-based endpoints
using Matrix = std::vector<std::vector<int>>;  // 0-based indices

constexpr int kInf = 1 << 20;

/// Floyd-Warshall hop distances; kInf for unreachable pairs.
Matrix floyd_warshall(int n, const EdgeList& edges);

bool connected(int n, const EdgeList& edges);

/// Every k-AP as a sorted 1-based vertex set, found by trying all ordered
/// k-tuples of distinct vertices.
std::set<std::vector<int>> naive_aps(const Matrix& d, int k);

/// aw by scanning every set partition of the vertices.
int naive_aw(const Matrix& d, int k);

/// True iff the coloring (1-based colors per vertex) is rainbow-free over aps.
bool rainbow_free(const std::set<std::vector<int>>& aps, const std::vector<int>& colors);

/// Backtracking isomorphism test on adjacency matrices.
bool isomorphic(int n, const EdgeList& a, const EdgeList& b);

/// Number of isomorphism classes of labelled trees on n vertices, from all
/// Pruefer sequences.
int count_trees_pruefer(int n);

/// Number of isomorphism classes of connected graphs on n vertices, from
/// all labelled graphs.
int count_connected_graphs(int n);

/// Random connected graph: random spanning tree plus extra edges.
EdgeList random_connected(std::mt19937_64& rng, int n, double extra);

}  // namespace oracle
