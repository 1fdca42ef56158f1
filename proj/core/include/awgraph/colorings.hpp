#pragma once

// The constructive three-colourings of tree products, the P3 x C6 example
// colouring, and a validator for exactness and rainbow-freeness.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "awgraph/ap.hpp"
#include "awgraph/graph.hpp"

namespace awgraph {

/// Colour ids used by the constructions.
inline constexpr int kRed = 1;
inline constexpr int kBlue = 2;
inline constexpr int kGreen = 3;

const char* color_name(int color);

/// Two product vertices at distance diam(product): source = v_{i,h},
/// sink = v_{j,k}.
struct DiametralPairChoice {
    Vertex source = 0;
    Vertex sink = 0;

    bool operator==(const DiametralPairChoice&) const = default;
};

/// Parses "i,h;j,k" into product vertex ids. Throws InputError on bad
/// syntax, out-of-range coordinates, or a non-diametral pair.
DiametralPairChoice parse_pair_choice(const ProductGraph& p, const std::string& text);
std::string format_pair_choice(const ProductGraph& p, const DiametralPairChoice& choice);

/// All ordered diametral pairs. Unordered pairs appear in lexicographic
/// order, each followed immediately by its reverse orientation.
std::vector<DiametralPairChoice> enumerate_diametral_choices(const ProductGraph& p);

/// Lexicographically least source, then least sink.
DiametralPairChoice default_diametral_choice(const ProductGraph& p);

struct ConstructedColoring {
    Coloring coloring;
    /// Vertices that met both the red and the blue rule.
    std::vector<Vertex> overlaps;
};

/// red: at distance diam from the sink; blue: at distance diam from the
/// source; green otherwise. Throws std::invalid_argument if the choice is
/// not diametral, and std::logic_error if some vertex qualifies as both red
/// and blue.
Coloring odd_diameter_coloring(const ProductGraph& p, const DiametralPairChoice& choice);

/// red: at distance diam from the sink; blue: at distance diam - 1 from the
/// source; green otherwise. Red takes precedence; overlapping vertices are
/// reported in `overlaps`.
ConstructedColoring generalized_even_coloring(const ProductGraph& p, const DiametralPairChoice& choice);

/// P3 x C6 with v_{1,1} red, v_{3,4} blue and every other vertex white
/// (colour 3).
ProductGraph p3c6_product();
Coloring example_p3c6_coloring();

struct ValidationReport {
    int colors_used = 0;
    bool exact = false;
    std::optional<ArithmeticProgression> rainbow_witness;
    std::size_t aps_checked = 0;

    bool rainbow_free() const { return !rainbow_witness.has_value(); }
};

/// Checks surjectivity onto 1..r and scans every k-AP in canonical order,
/// stopping at the first rainbow one. Throws std::invalid_argument if c does
/// not assign a colour >= 1 to every vertex.
ValidationReport validate_coloring(const Graph& g, const Coloring& c, int k);

/// Text grid with one row per copy H_i (row i lists v_{i,1}..v_{i,|H|}),
/// using R/B/G for colours 1..3 and the id otherwise.
std::string render_grid(const ProductGraph& p, const Coloring& c);

}  // namespace awgraph
