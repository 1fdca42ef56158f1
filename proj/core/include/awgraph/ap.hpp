#pragma once

// Arithmetic progressions in graphs, rainbow detection, the rainbow-free
// colouring search and anti-van der Waerden numbers.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "awgraph/graph.hpp"

namespace awgraph {

/// A nondegenerate k-AP: distinct vertices v_1..v_k with
/// d(v_i, v_{i+1}) = difference. Oriented so that the first vertex label is
/// smaller than the last.
struct ArithmeticProgression {
    std::vector<Vertex> vertices;
    int difference = 0;

    bool operator==(const ArithmeticProgression&) const = default;
    auto operator<=>(const ArithmeticProgression&) const = default;
};

/// An assignment of colours 1..r to vertices 1..n (colors[v - 1]).
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<int> colors) : colors_(std::move(colors)) {}

    int size() const noexcept { return static_cast<int>(colors_.size()); }
    int operator()(Vertex v) const noexcept { return colors_[v - 1]; }
    void set(Vertex v, int color) { colors_[v - 1] = color; }
    const std::vector<int>& colors() const noexcept { return colors_; }

    /// Largest colour id used (the r of an exact r-colouring).
    int num_colors() const;
    /// Every id in 1..num_colors() is used and no id is below 1.
    bool is_exact() const;

    /// Relabels colours by order of first appearance along vertices 1..n,
    /// giving the restricted-growth form of the same partition.
    Coloring canonical() const;

    bool operator==(const Coloring&) const = default;

private:
    std::vector<int> colors_;
};

/// All nondegenerate k-APs of g as vertex sets, each listed once. When a
/// set admits several witnessing orderings the one with the smallest
/// difference, then the lexicographically least sequence, is kept. Sorted
/// by vertex sequence. Requires k >= 2.
std::vector<ArithmeticProgression> enumerate_k_aps(const Graph& g, int k);

bool is_rainbow(const ArithmeticProgression& ap, const Coloring& c);
bool is_rainbow(std::span<const Vertex> vertices, const Coloring& c);

struct SearchStats {
    std::uint64_t nodes = 0;
    std::size_t ap_count = 0;
};

struct SearchOptions {
    /// Abort with SearchBudgetExceeded after this many search nodes; 0 means
    /// unlimited.
    std::uint64_t node_limit = 0;
};

class SearchBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decides whether g has a rainbow-free exact r-colouring with respect to
/// k-APs. Complete backtracking over colour classes (new colours are only
/// introduced as the next unused id) with propagation on the AP table. The
/// returned colouring is in restricted-growth form.
std::optional<Coloring> find_rainbow_free_coloring(const Graph& g, int k, int r,
                                                   SearchStats* stats = nullptr,
                                                   const SearchOptions& options = {});

/// Same search against a prebuilt AP table (for callers that reuse it).
std::optional<Coloring> find_rainbow_free_coloring(const Graph& g, std::span<const ArithmeticProgression> aps,
                                                   int k, int r, SearchStats* stats = nullptr,
                                                   const SearchOptions& options = {});

struct AwResult {
    int aw = 0;
    int max_rainbow_free = 0;  // aw - 1
    Coloring certificate;      // rainbow-free exact (aw - 1)-colouring
    SearchStats stats;
};

/// aw(g, k): ascends r from max(k - 1, 1) while a rainbow-free exact
/// r-colouring exists. If every r up to n is feasible the result is n + 1.
AwResult aw(const Graph& g, int k, const SearchOptions& options = {});

struct TricoloredSubgraph {
    enum class Kind { IsometricPath, Triangle };
    Kind kind = Kind::IsometricPath;
    std::vector<Vertex> vertices;  // path in order, or the three triangle vertices
};

/// Finds a geodesic carrying at least three colours (shortest first), or
/// else a triangle with three distinct colours. Requires n >= 3 and at
/// least three colours in c. Throws std::logic_error if neither exists.
TricoloredSubgraph find_tricolored_geodesic_or_triangle(const Graph& g, const Coloring& c);

}  // namespace awgraph
