#pragma once

// Isomorphism-free families of small trees and connected graphs, with the
// flags the claim hypotheses filter on.

#include <string>
#include <vector>

#include "awgraph/graph.hpp"

namespace awgraph {

struct CatalogEntry {
    std::string graph6;
    int n = 0;
    bool is_tree = false;
    bool is_3_peripheral = false;
    int diameter = 0;
    int peripheral_count = 0;

    bool operator==(const CatalogEntry&) const = default;
};

/// Computes the flags for g.
CatalogEntry make_entry(const Graph& g);

inline constexpr int kMaxTreeOrder = 12;
inline constexpr int kMaxGraphOrder = 7;

/// One tree per isomorphism class on n vertices, 1 <= n <= 12, ordered by
/// diameter then canonical code. Each representative is labelled in BFS
/// order from its (least-code) centre. Throws std::out_of_range for n
/// outside 1..12.
std::vector<CatalogEntry> enumerate_trees(int n);

/// One connected graph per isomorphism class on n vertices,
/// 1 <= n <= 7, ordered by edge count then canonical code. Throws
/// std::out_of_range for n outside 1..7.
std::vector<CatalogEntry> enumerate_connected_graphs(int n);

/// Rooted canonical code of a tree at its centre (minimum over the two
/// centres of a bicentral tree). Equal codes iff isomorphic trees.
std::string tree_canonical_code(const Graph& t);

/// Canonical adjacency code of a small graph (n <= 10): the
/// lexicographically greatest upper-triangle bit string over all relabellings
/// that respect a colour-refinement partition. Equal codes iff isomorphic.
std::string graph_canonical_code(const Graph& g);

/// Keeps entries satisfying every predicate, in order. Predicates:
/// "3-peripheral", "not-3-peripheral", "diam-even", "diam-odd", "tree",
/// "min-n=<N>", "max-n=<N>". Throws std::invalid_argument for unknown names.
std::vector<CatalogEntry> filter_catalog(const std::vector<CatalogEntry>& entries,
                                         const std::vector<std::string>& predicates);

/// Convenience: trees with min_n <= n <= max_n, in catalog order.
std::vector<CatalogEntry> trees_between(int min_n, int max_n);
std::vector<CatalogEntry> graphs_between(int min_n, int max_n);

}  // namespace awgraph
