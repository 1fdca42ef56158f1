#pragma once

// Registry of checkable claims about anti-van der Waerden numbers of
// graph products, each bound to a bounded instance family.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "awgraph/results.hpp"

namespace awgraph {

/// Size parameters for the instance families. Field comments name the
/// claims each bound applies to.
struct Bounds {
    int metric_graph_n = 5;       // PROP_DIST, OBS_DIAM, COR_ISO_SUBPROD: connected graphs per side
    int path_samples = 200;       // LEM_PATH_OR_C3: random instances
    int path_max_n = 10;          // LEM_PATH_OR_C3: largest random graph
    std::uint64_t seed = 20240601;
    int diam2_graph_n = 5;        // THM_DIAM2_PROD: G ranges over diam <= 2 graphs with 3..N vertices
    int product_graph_n = 4;      // THM_AW_LE_4 (both sides), THM_3PER_G (G side): 2..N vertices
    int max_m = 6;                // THM_PMPN
    int max_n = 6;                // THM_PMPN
    int product_tree_n = 6;       // THM_3PER_G, LEM_PROD_NOT3PER, THM_ODD_4: trees per side
    int spine_tree_n = 8;         // LEM_SPINE_EQUI, COR_DPLUS1
    int lemma_tree_n = 9;         // LEM_3PER_EVEN, LEM_TREEDIAM
    int path_tree_n = 9;          // LEM_P2T, LEM_PNT: 3-peripheral trees
    int pnt_max_path = 5;         // LEM_PNT: P_n with 2..N
    int full_search_max_vertices = 24;  // THM_ODD_4: aw tier only on products this small
    int conj_k = 4;               // CONJ_KPER
    int conj_tree_n = 7;
    int conj_graph_n = 3;
    std::uint64_t conj_node_limit = 5'000'000;
    int threads = 1;
    /// Mutation sanity check: THM_PMPN drops one product edge first.
    bool mutate_drop_edge = false;
};

Bounds quick_profile();
Bounds full_profile();

/// Throws std::invalid_argument if a bound exceeds what the catalog or
/// search supports.
void check_bounds(const Bounds& bounds);

struct ClaimInfo {
    std::string id;
    std::string statement;
    bool exploratory = false;
};

const std::vector<ClaimInfo>& claim_registry();
bool is_registered_claim(const std::string& id);

struct VerificationReport {
    std::string claim;
    bool exploratory = false;
    std::size_t attempted = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::size_t data = 0;     // exploratory outcomes
    std::size_t resumed = 0;  // instances taken from stored records, not recomputed
    std::map<std::string, std::size_t> tiers;
    std::vector<nlohmann::json> failures;
    std::vector<ResultRecord> records;  // one per instance, in family order
    double seconds = 0.0;

    bool ok() const { return failed == 0; }
};

/// Runs one claim over its family. Instances whose key appears in `resume`
/// take the stored outcome instead of being recomputed. Throws
/// std::invalid_argument for an unknown id or out-of-range bounds.
VerificationReport verify_claim(const std::string& id, const Bounds& bounds,
                                const std::vector<ResultRecord>* resume = nullptr);

/// Runs every non-exploratory claim, sharing aw computations between them.
std::vector<VerificationReport> verify_all(const Bounds& bounds, const std::vector<ResultRecord>* resume = nullptr);

/// Summary line counts, no timings (deterministic).
nlohmann::json report_summary(const VerificationReport& report);

/// The closed-form value for paths: 3 when one side is P_2 and the other
/// has even order, or one side is P_3 and the other odd order; 4 otherwise.
int pmpn_formula(int m, int n);

}  // namespace awgraph
