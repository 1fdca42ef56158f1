#include <doctest.h>

#include <set>

#include "awgraph/verifier.hpp"

using namespace awgraph;

namespace {

// Small bounds so every claim runs in well under a second.
Bounds tiny() {
    Bounds b = quick_profile();
    b.metric_graph_n = 3;
    b.path_samples = 40;
    b.diam2_graph_n = 4;
    b.product_graph_n = 3;
    b.max_m = 4;
    b.max_n = 4;
    b.product_tree_n = 5;
    b.spine_tree_n = 6;
    b.lemma_tree_n = 7;
    b.path_tree_n = 5;
    b.pnt_max_path = 3;
    b.full_search_max_vertices = 16;
    b.conj_tree_n = 5;
    b.conj_graph_n = 2;
    return b;
}

}  // namespace

TEST_CASE("registry") {
    const auto& r = claim_registry();
    CHECK(r.size() == 21);
    std::set<std::string> ids;
    for (const auto& c : r) ids.insert(c.id);
    CHECK(ids.size() == 21);
    CHECK(is_registered_claim("THM_PMPN"));
    CHECK_FALSE(is_registered_claim("NOPE"));
    for (const auto& c : r) CHECK(c.exploratory == (c.id == "CONJ_KPER"));
}

TEST_CASE("closed form for paths") {
    // Independent table of the two-case rule for 2 <= m, n <= 7.
    for (int m = 2; m <= 7; ++m) {
        for (int n = 2; n <= 7; ++n) {
            bool three = false;
            if (m == 2 && n % 2 == 0) three = true;
            if (n == 2 && m % 2 == 0) three = true;
            if (m == 3 && n % 2 == 1) three = true;
            if (n == 3 && m % 2 == 1) three = true;
            CHECK(pmpn_formula(m, n) == (three ? 3 : 4));
        }
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(verify_claim("NOPE", tiny()), std::invalid_argument);
    Bounds b = tiny();
    b.spine_tree_n = 13;
    CHECK_THROWS_AS(verify_claim("LEM_SPINE_EQUI", b), std::invalid_argument);
    b = tiny();
    b.max_m = 9;
    b.max_n = 9;
    CHECK_THROWS_AS(check_bounds(b), std::invalid_argument);
    b = tiny();
    b.threads = 0;
    CHECK_THROWS_AS(check_bounds(b), std::invalid_argument);
    CHECK_NOTHROW(check_bounds(quick_profile()));
    CHECK_NOTHROW(check_bounds(full_profile()));
}

TEST_CASE("every claim passes at small bounds with consistent counts") {
    for (const auto& info : claim_registry()) {
        CAPTURE(info.id);
        const auto r = verify_claim(info.id, tiny());
        CHECK(r.failed == 0);
        CHECK(r.failures.empty());
        CHECK(r.attempted == r.passed + r.failed + r.skipped + r.data);
        CHECK(r.records.size() == r.attempted);
        if (info.exploratory) {
            CHECK(r.passed == 0);
        } else {
            CHECK(r.passed > 0);
            CHECK(r.data == 0);
        }
        for (const auto& rec : r.records) CHECK(rec.claim == info.id);
    }
}

TEST_CASE("hypothesis failures are skipped, never passed") {
    const auto r = verify_claim("THM_ODD_4", tiny());
    CHECK(r.skipped > 0);
    for (const auto& rec : r.records) {
        if (rec.outcome == "skipped") CHECK(rec.payload.contains("reason"));
    }
    CHECK(r.tiers.at("coloring") > 0);
    CHECK(r.tiers.at("full-search") > 0);
}

TEST_CASE("drop-edge mutant is caught with a payload") {
    Bounds b = tiny();
    b.mutate_drop_edge = true;
    const auto r = verify_claim("THM_PMPN", b);
    CHECK(r.failed > 0);
    REQUIRE_FALSE(r.failures.empty());
    CHECK(r.failures.front()["payload"].contains("aw"));
    CHECK(r.failures.front()["payload"].contains("certificate"));
}

TEST_CASE("reports do not depend on the worker count") {
    Bounds one = tiny();
    Bounds four = tiny();
    four.threads = 4;
    for (const char* id : {"THM_PMPN", "THM_ODD_4", "LEM_PATH_OR_C3", "LEM_COPY_2"}) {
        const auto a = verify_claim(id, one);
        const auto b = verify_claim(id, four);
        CHECK(a.records == b.records);
        CHECK(report_summary(a) == report_summary(b));
    }
}

TEST_CASE("stored records are reused instead of recomputed") {
    const auto first = verify_claim("THM_PMPN", tiny());
    const auto second = verify_claim("THM_PMPN", tiny(), &first.records);
    CHECK(second.resumed == second.attempted);
    CHECK(second.records == first.records);
    CHECK(report_summary(second) == report_summary(first));
}

TEST_CASE("verify_all runs only non-exploratory claims") {
    const auto all = verify_all(tiny());
    CHECK(all.size() == 20);
    for (const auto& r : all) {
        CHECK_FALSE(r.exploratory);
        CHECK(r.ok());
    }
}
