#pragma once

// Spines, roots and branches of trees, k-peripherality, and the spine
// lemmas as constructive operations.

#include <optional>
#include <vector>

#include "awgraph/graph.hpp"

namespace awgraph {

bool is_tree(const Graph& g);

/// The default spine: the tree path between the lexicographically least
/// diametral pair (a, b), a < b, listed from a to b. Throws
/// std::invalid_argument if t is not a tree.
std::vector<Vertex> spine(const Graph& t);

/// Every spine of t, one per unordered diametral pair, each oriented from
/// its smaller endpoint. Ordered by endpoint pair.
std::vector<std::vector<Vertex>> all_spines(const Graph& t);

/// A tree together with a spine x_1..x_k, the root (nearest spine vertex)
/// of every vertex, and the branches B_v.
struct TreeStructure {
    const Graph* tree = nullptr;
    std::vector<Vertex> spine;
    std::vector<Vertex> root;                   // root[v - 1]
    std::vector<int> spine_position;            // 0-based position on the spine, -1 if off-spine
    std::vector<std::vector<Vertex>> branches;  // branches[p] = B_{spine[p]}, ascending

    bool on_spine(Vertex v) const { return spine_position[v - 1] >= 0; }
    const std::vector<Vertex>& branch_of(Vertex spine_vertex) const {
        return branches[static_cast<std::size_t>(spine_position[spine_vertex - 1])];
    }
};

/// Throws std::invalid_argument if `s` is not a diametral path of t. The
/// returned structure refers to t, which must outlive it.
TreeStructure branch_decomposition(const Graph& t, const std::vector<Vertex>& s);

struct PeripheralWitness {
    bool found = false;
    std::vector<Vertex> vertices;  // ascending, pairwise at distance diam
};

/// Searches for k vertices pairwise at distance diam(g). Candidates are the
/// peripheral vertices; the search is plain backtracking over cliques of
/// the diametral-pair relation, returning the lexicographically least
/// witness. Requires k >= 2.
PeripheralWitness is_k_peripheral(const Graph& g, int k);

/// For x, y, z pairwise diametral in a tree: the vertex equidistant from
/// all three at distance diam / 2 (the midpoint of the x-y path). Throws
/// std::invalid_argument if the inputs are not pairwise diametral; returns
/// nullopt if the midpoint does not exist or is not equidistant (which would
/// refute the centre lemma).
std::optional<Vertex> peripheral_center(const Graph& t, Vertex x, Vertex y, Vertex z);

/// For u off the spine and v outside the branch of u's root, a spine vertex
/// u' with d(u', v) = d(u, v); the one nearest the start of the spine when
/// several qualify. Throws std::invalid_argument if the preconditions fail;
/// nullopt would be a counterexample to the spine lemma.
std::optional<Vertex> equidistant_spine_vertex(const TreeStructure& ts, Vertex u, Vertex v);

/// For a non-peripheral u, a vertex w with d(w, v) = d(u, v) + 1, found by
/// moving u onto the default spine and stepping outward. Throws
/// std::invalid_argument if u is peripheral.
std::optional<Vertex> extend_distance_vertex(const Graph& t, Vertex u, Vertex v);

}  // namespace awgraph
