// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any criterion fails. Every comparison is exact; the runtime budget of
// each criterion is part of its verdict.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "awgraph/ap.hpp"
#include "awgraph/catalog.hpp"
#include "awgraph/colorings.hpp"
#include "awgraph/graph6.hpp"
#include "awgraph/verifier.hpp"
#include "oracles.hpp"

#ifdef AWGRAPH_HAVE_CLI
#include "cli.hpp"
#endif

using namespace awgraph;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int number, double budget_seconds, const std::function<Verdict()>& body) {
    const auto start = Clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_budget = seconds < budget_seconds;
    const bool pass = v.ok && in_budget;
    if (!pass) ++failures;
    std::printf("criterion %d: %s  %s  [%.2f s, budget %.0f s%s]\n", number, pass ? "PASS" : "FAIL", v.detail.c_str(),
                seconds, budget_seconds, in_budget ? "" : ", OVER BUDGET");
    std::fflush(stdout);
}

std::string counts(const VerificationReport& r) {
    std::ostringstream s;
    s << r.claim << " " << r.passed << "/" << r.attempted << " passed, " << r.failed << " failed, " << r.skipped
      << " skipped";
    for (const auto& [tier, n] : r.tiers) s << ", " << tier << "=" << n;
    return s.str();
}

// A claim counts only if it ran, passed something and failed nothing.
Verdict claims(const std::vector<std::string>& ids, const Bounds& b) {
    Verdict v;
    for (const auto& id : ids) {
        const auto r = verify_claim(id, b);
        v.ok = v.ok && r.failed == 0 && r.passed > 0;
        if (!v.detail.empty()) v.detail += "; ";
        v.detail += counts(r);
    }
    return v;
}

oracle::Matrix oracle_distances(const Graph& g) {
    oracle::EdgeList edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(u, v);
    return oracle::floyd_warshall(g.order(), edges);
}

}  // namespace

int main() {
    const Bounds full = full_profile();

    criterion(1, 10, [] {
        const auto p = p3c6_product();
        const auto r = aw(p.composite(), 3);
        const auto report = validate_coloring(p.composite(), example_p3c6_coloring(), 3);
        const auto cert = validate_coloring(p.composite(), r.certificate, 3);
        Verdict v;
        v.ok = r.aw == 4 && report.exact && report.colors_used == 3 && report.rainbow_free() && cert.exact &&
               cert.colors_used == 3 && cert.rainbow_free();
        v.detail = "aw(P3xC6,3)=" + std::to_string(r.aw) + ", example colouring " +
                   (report.rainbow_free() ? "rainbow-free" : "rainbow") + " with " +
                   std::to_string(report.colors_used) + " colours";
        return v;
    });

    criterion(2, 600, [&] {
        Bounds b = full;
        b.max_m = 6;
        b.max_n = 6;
        auto v = claims({"THM_PMPN"}, b);
        v.ok = v.ok && verify_claim("THM_PMPN", b).attempted == 25;
        return v;
    });

    criterion(3, 900, [&] {
        Bounds b = full;
        b.product_graph_n = 4;
        return claims({"THM_AW_LE_4"}, b);
    });

    criterion(4, 1800, [&] {
        Bounds b = full;
        b.product_tree_n = 6;
        b.product_graph_n = 4;
        return claims({"THM_3PER_G"}, b);
    });

    criterion(5, 300, [&] {
        Bounds b = full;
        b.product_tree_n = 6;
        b.full_search_max_vertices = 24;
        const auto r = verify_claim("THM_ODD_4", b);
        std::map<std::string, std::size_t> passed;
        std::size_t choices = 0;
        for (const auto& rec : r.records) {
            if (rec.outcome != "passed") continue;
            const auto tier = rec.payload.at("tier").get<std::string>();
            ++passed[tier];
            if (tier == "coloring") choices += rec.payload.at("choices").get<std::size_t>();
        }
        Verdict v;
        v.ok = r.failed == 0 && passed["coloring"] > 0 && passed["full-search"] > 0;
        v.detail = counts(r) + "; passed: coloring=" + std::to_string(passed["coloring"]) + " pairs (" +
                   std::to_string(choices) + " diametral choices), full-search=" +
                   std::to_string(passed["full-search"]);
        return v;
    });

    criterion(6, 60, [&] { return claims({"FIG2_REPRO"}, full); });

    criterion(7, 600, [&] {
        Bounds b = full;
        b.lemma_tree_n = 9;
        b.spine_tree_n = 8;
        b.product_tree_n = 6;
        b.max_m = 6;
        b.max_n = 6;
        b.product_graph_n = 4;
        return claims({"LEM_3PER_EVEN", "LEM_SPINE_EQUI", "COR_DPLUS1", "LEM_TREEDIAM", "LEM_PROD_NOT3PER",
                       "LEM_COPY_2", "LEM_UNION_2", "LEM_DIFF_1"},
                      b);
    });

    criterion(8, 600, [] {
        Verdict v;
        std::size_t checked = 0;
        auto compare = [&](const std::vector<CatalogEntry>& family, int k) {
            for (const auto& e : family) {
                const Graph g = parse_graph6(e.graph6);
                const int fast = aw(g, k).aw;
                const int slow = oracle::naive_aw(oracle_distances(g), k);
                ++checked;
                if (fast != slow) {
                    v.ok = false;
                    v.detail += " mismatch " + e.graph6 + " k=" + std::to_string(k) + ": " + std::to_string(fast) +
                                " vs " + std::to_string(slow) + ";";
                }
            }
        };
        compare(graphs_between(1, 7), 3);
        compare(trees_between(1, 7), 4);
        v.detail = std::to_string(checked) + " graphs agree with the set-partition oracle" + v.detail;
        return v;
    });

    criterion(9, 60, [&] {
        Bounds b = full;
        b.path_samples = 200;
        b.path_max_n = 10;
        return claims({"LEM_PATH_OR_C3"}, b);
    });

    criterion(10, 120, [] {
        Verdict v;
        std::size_t round_trips = 0;
        auto round_trip = [&](const std::vector<CatalogEntry>& family) {
            for (const auto& e : family) {
                const Graph g = parse_graph6(e.graph6);
                ++round_trips;
                if (encode_graph6(g) != e.graph6 || !(parse_graph6(encode_graph6(g)) == g)) {
                    v.ok = false;
                    v.detail += " round-trip failed for " + e.graph6 + ";";
                }
            }
        };
        round_trip(trees_between(1, 8));
        round_trip(graphs_between(1, kMaxGraphOrder));
        std::size_t invocations = 0;
#ifdef AWGRAPH_HAVE_CLI
        const std::vector<std::vector<std::string>> commands = {
            {"aw", "--left", "P3", "--right", "C6", "--grid"},
            {"aw", "--graph6", "Esa?", "--k", "4"},
            {"color", "--scheme", "even-generalized", "--left", "S3", "--right", "P4", "--pair", "all", "--grid"},
            {"color", "--scheme", "example-p3c6", "--check"},
            {"trees", "--max-n", "8", "--filter", "3-peripheral"},
            {"graphs", "--n", "6"},
            {"verify", "--all", "--profile", "quick"},
            {"verify", "--claim", "THM_ODD_4", "--threads", "3"},
            {"analyze", "--left", "P2", "--right", "S3"},
        };
        for (const auto& args : commands) {
            std::ostringstream out1, err1, out2, err2;
            const int c1 = cli::run(args, out1, err1);
            const int c2 = cli::run(args, out2, err2);
            ++invocations;
            if (c1 != c2 || out1.str() != out2.str() || err1.str() != err2.str() || out1.str().empty()) {
                v.ok = false;
                v.detail += " nondeterministic: " + args[0] + ";";
            }
        }
#else
        v.ok = false;
        v.detail += " CLI not built;";
#endif
        v.detail = std::to_string(round_trips) + " graph6 round-trips, " + std::to_string(invocations) +
                   " repeated CLI invocations identical" + v.detail;
        return v;
    });

    std::printf("%s\n", failures == 0 ? "all criteria PASS" : (std::to_string(failures) + " criteria FAIL").c_str());
    return failures == 0 ? 0 : 1;
}
