#include <doctest.h>

#include "awgraph/catalog.hpp"
#include "awgraph/graph6.hpp"

using namespace awgraph;

TEST_CASE("known encodings") {
    CHECK(encode_graph6(path_graph(1)) == "@");
    CHECK(encode_graph6(path_graph(2)) == "A_");
    CHECK(encode_graph6(path_graph(3)) == "Bg");
    CHECK(encode_graph6(complete_graph(3)) == "Bw");
    CHECK(parse_graph6("Bg") == path_graph(3));
    CHECK(parse_graph6(">>graph6<<Bw\n") == complete_graph(3));
}

TEST_CASE("round-trip on every catalog entry up to eight vertices") {
    std::size_t checked = 0;
    for (int n = 1; n <= 8; ++n) {
        for (const auto& e : enumerate_trees(n)) {
            CHECK(encode_graph6(parse_graph6(e.graph6)) == e.graph6);
            ++checked;
        }
        if (n <= kMaxGraphOrder) {
            for (const auto& e : enumerate_connected_graphs(n)) {
                CHECK(encode_graph6(parse_graph6(e.graph6)) == e.graph6);
                ++checked;
            }
        }
    }
    CHECK(checked == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + (1 + 1 + 2 + 6 + 21 + 112 + 853));
}

TEST_CASE("larger graphs round-trip") {
    const auto g = cycle_graph(62);
    CHECK(parse_graph6(encode_graph6(g)) == g);
    CHECK_THROWS_AS(encode_graph6(path_graph(63)), InputError);
}

TEST_CASE("malformed graph6 is rejected") {
    CHECK_THROWS_AS(parse_graph6(""), InputError);
    CHECK_THROWS_AS(parse_graph6("B"), InputError);     // body too short
    CHECK_THROWS_AS(parse_graph6("Bgg"), InputError);   // body too long
    CHECK_THROWS_AS(parse_graph6("B "), InputError);    // byte below 63
    CHECK_THROWS_AS(parse_graph6("A`"), InputError);    // padding bit set
    CHECK_THROWS_AS(parse_graph6("?"), InputError);     // n = 0
    CHECK_THROWS_AS(parse_graph6("A?"), DisconnectedGraphError);
}

TEST_CASE("read_graphs sniffs the format") {
    const auto g6 = read_graphs("Bg\n\nBw\n");
    REQUIRE(g6.size() == 2);
    CHECK(g6[1] == complete_graph(3));
    const auto el = read_graphs("# path\n1 2\n2 3\n");
    REQUIRE(el.size() == 1);
    CHECK(el[0] == path_graph(3));
    CHECK_THROWS_AS(read_graphs(""), InputError);
    CHECK_THROWS_AS(read_graphs("# only a comment\n"), InputError);
}
