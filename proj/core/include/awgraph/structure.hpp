#pragma once

// Checks of the three colour-structure lemmas for rainbow-free exact
// colourings of Cartesian products.

#include <string>
#include <vector>

#include "awgraph/ap.hpp"
#include "awgraph/graph.hpp"

namespace awgraph {

enum class LemmaOutcome { Passed, Failed, Skipped };

const char* to_string(LemmaOutcome outcome);

struct LemmaCheck {
    std::string lemma;  // "LEM_COPY_2", "LEM_UNION_2" or "LEM_DIFF_1"
    LemmaOutcome outcome = LemmaOutcome::Skipped;
    std::string note;                // skip reason or failure description
    std::vector<int> witness_copies; // copy indices involved in a failure
};

struct StructuralReport {
    std::vector<LemmaCheck> checks;
    bool all_passed() const;
};

/// The colouring must be exact, rainbow-free for 3-APs and use r >= 3
/// colours; otherwise std::invalid_argument. Each lemma is checked on the
/// copies of G (G_i over w_i) and, by the symmetry of the product, on the
/// copies of H. A lemma whose size hypothesis fails is reported as skipped.
StructuralReport check_structural_lemmas(const ProductGraph& p, const Coloring& c);

}  // namespace awgraph
