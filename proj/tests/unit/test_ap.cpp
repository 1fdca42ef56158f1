#include <doctest.h>

#include <random>
#include <set>

#include "awgraph/ap.hpp"
#include "awgraph/catalog.hpp"
#include "awgraph/colorings.hpp"
#include "awgraph/graph6.hpp"
#include "oracles.hpp"

using namespace awgraph;

namespace {

oracle::Matrix matrix_of(const Graph& g) {
    oracle::EdgeList e;
    for (auto [u, v] : g.edges()) e.emplace_back(u, v);
    return oracle::floyd_warshall(g.order(), e);
}

}  // namespace

TEST_CASE("colouring basics") {
    Coloring c({3, 3, 1, 2});
    CHECK(c.num_colors() == 3);
    CHECK(c.is_exact());
    CHECK(c.canonical().colors() == std::vector<int>{1, 1, 2, 3});
    CHECK_FALSE(Coloring({1, 3, 3}).is_exact());
    CHECK_FALSE(Coloring({0, 1}).is_exact());
    Coloring d({1, 1});
    d.set(2, 2);
    CHECK(d(2) == 2);
}

TEST_CASE("AP enumeration matches ordered-tuple search") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const auto e = oracle::random_connected(rng, n, 0.2);
        Graph g(n, e);
        for (int k = 2; k <= 4; ++k) {
            const auto aps = enumerate_k_aps(g, k);
            std::set<std::vector<int>> sets;
            for (const auto& ap : aps) {
                REQUIRE(static_cast<int>(ap.vertices.size()) == k);
                CHECK(ap.difference >= 1);
                CHECK(ap.vertices.front() < ap.vertices.back());
                for (std::size_t i = 0; i + 1 < ap.vertices.size(); ++i)
                    CHECK(g.distance(ap.vertices[i], ap.vertices[i + 1]) == ap.difference);
                auto s = ap.vertices;
                std::sort(s.begin(), s.end());
                CHECK(sets.insert(s).second);
            }
            CHECK(sets == oracle::naive_aps(oracle::floyd_warshall(n, e), k));
            CHECK(std::is_sorted(aps.begin(), aps.end()));
        }
    }
    CHECK_THROWS_AS(enumerate_k_aps(path_graph(3), 1), std::invalid_argument);
}

TEST_CASE("a set with several orderings keeps the smallest difference") {
    // In C4 the set {1,2,3} is an AP with d = 1 (1-2-3) only; the walk 1-2-3-4 makes all four vertices a 4-AP.
    const auto aps = enumerate_k_aps(cycle_graph(4), 3);
    REQUIRE(aps.size() == 4);
    for (const auto& ap : aps) CHECK(ap.difference == 1);
    const auto four = enumerate_k_aps(cycle_graph(4), 4);
    REQUIRE(four.size() == 1);
    CHECK(four[0].difference == 1);
    // In K_{1,3} the leaves {2,3,4} are a 3-AP with d = 2.
    const auto star = enumerate_k_aps(star_graph(3), 3);
    CHECK(std::count_if(star.begin(), star.end(), [](const auto& ap) { return ap.difference == 2; }) == 1);
}

TEST_CASE("rainbow detection") {
    const ArithmeticProgression ap{{1, 2, 3}, 1};
    CHECK(is_rainbow(ap, Coloring({1, 2, 3})));
    CHECK_FALSE(is_rainbow(ap, Coloring({1, 2, 1})));
    const std::vector<Vertex> two{1, 3};
    CHECK(is_rainbow(two, Coloring({1, 2, 3})));
}

TEST_CASE("small aw values") {
    CHECK(aw(path_graph(3), 3).aw == 3);
    CHECK(aw(path_graph(1), 3).aw == 2);  // no 3-AP and n < k - 1: n + 1
    CHECK(aw(path_graph(2), 3).aw == 3);
    for (int n = 3; n <= 6; ++n) CHECK(aw(complete_graph(n), 3).aw == 3);
    const auto p = p3c6_product();
    const auto r = aw(p.composite(), 3);
    CHECK(r.aw == 4);
    CHECK(r.max_rainbow_free == 3);
}

TEST_CASE("pruned aw agrees with the set-partition oracle") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const auto e = oracle::random_connected(rng, n, 0.25);
        Graph g(n, e);
        const auto d = oracle::floyd_warshall(n, e);
        for (int k = 3; k <= 4; ++k) REQUIRE(aw(g, k).aw == oracle::naive_aw(d, k));
    }
}

TEST_CASE("certificates are exact, rainbow-free and canonical") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 9);
        Graph g(n, oracle::random_connected(rng, n, 0.2));
        for (int k = 3; k <= 4; ++k) {
            const auto r = aw(g, k);
            CHECK(r.max_rainbow_free == r.aw - 1);
            REQUIRE(r.certificate.size() == n);
            CHECK(r.certificate.is_exact());
            CHECK(r.certificate.num_colors() == r.aw - 1);
            CHECK(r.certificate == r.certificate.canonical());
            const auto aps = oracle::naive_aps(matrix_of(g), k);
            CHECK(oracle::rainbow_free(aps, r.certificate.colors()));
        }
    }
}

TEST_CASE("feasibility search") {
    const auto g = p3c6_product().composite();
    SearchStats stats;
    const auto three = find_rainbow_free_coloring(g, 3, 3, &stats);
    REQUIRE(three);
    CHECK(stats.ap_count == enumerate_k_aps(g, 3).size());
    CHECK_FALSE(find_rainbow_free_coloring(g, 3, 4));
    const auto aps = enumerate_k_aps(g, 3);
    CHECK(find_rainbow_free_coloring(g, aps, 3, 3) == three);
    CHECK_THROWS_AS(find_rainbow_free_coloring(g, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(find_rainbow_free_coloring(g, 3, 19), std::invalid_argument);
    CHECK_THROWS_AS(aw(g, 3, SearchOptions{5}), SearchBudgetExceeded);
    CHECK_THROWS_AS(aw(path_graph(65), 3), std::invalid_argument);
}

TEST_CASE("tricoloured geodesic or triangle") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        Graph g(n, oracle::random_connected(rng, n, 0.3));
        std::vector<int> colors(n);
        for (int i = 0; i < n; ++i) colors[i] = i < 3 ? i + 1 : 1 + static_cast<int>(rng() % 3);
        std::shuffle(colors.begin(), colors.end(), rng);
        const Coloring c(colors);
        const auto t = find_tricolored_geodesic_or_triangle(g, c);
        std::set<int> seen;
        for (Vertex v : t.vertices) seen.insert(c(v));
        CHECK(seen.size() >= 3);
        if (t.kind == TricoloredSubgraph::Kind::Triangle) {
            REQUIRE(t.vertices.size() == 3);
            CHECK(g.adjacent(t.vertices[0], t.vertices[1]));
            CHECK(g.adjacent(t.vertices[1], t.vertices[2]));
            CHECK(g.adjacent(t.vertices[0], t.vertices[2]));
        } else {
            CHECK(g.distance(t.vertices.front(), t.vertices.back()) + 1 == static_cast<int>(t.vertices.size()));
            for (std::size_t i = 0; i + 1 < t.vertices.size(); ++i) CHECK(g.adjacent(t.vertices[i], t.vertices[i + 1]));
        }
    }
    CHECK_THROWS_AS(find_tricolored_geodesic_or_triangle(path_graph(3), Coloring({1, 2, 2})), std::invalid_argument);
}
