#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "specclique/generators.hpp"
#include "specclique/graph6.hpp"
#include "test_util.hpp"

using namespace specclique;

namespace {

// Independent decoder working on an explicit bit string; short-form sizes only.
Graph decode_by_bitstring(const std::string& s) {
    int n = s[0] - 63;
    std::string bits;
    for (size_t i = 1; i < s.size(); ++i) {
        int v = s[i] - 63;
        for (int b = 5; b >= 0; --b) bits.push_back(((v >> b) & 1) ? '1' : '0');
    }
    Graph g(n);
    size_t idx = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++idx)
            if (bits.at(idx) == '1') g.add_edge(row, col);
    return g;
}

std::set<std::pair<int, int>> edge_set(const Graph& g) {
    std::set<std::pair<int, int>> e;
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b)
            if (g.adjacent(a, b)) e.insert({a, b});
    return e;
}

}  // namespace

TEST_CASE("format base cases") {
    Graph one = parse_graph6("@");
    CHECK(one.n() == 1);
    CHECK(one.m() == 0);
    CHECK(write_graph6(one) == "@");

    Graph k2 = parse_graph6("A_");
    CHECK(k2.n() == 2);
    CHECK(k2.adjacent(0, 1));
    CHECK(write_graph6(generate("complete:2")) == "A_");
}

TEST_CASE("five-vertex examples decode per the published format") {
    // 'D' declares n=5; '?' encodes six zero bits, '{' is 111100.
    Graph g = parse_graph6("D?{");
    CHECK(edge_set(g) == std::set<std::pair<int, int>>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(edge_set(g) == edge_set(decode_by_bitstring("D?{")));

    Graph h = parse_graph6("D@{");
    CHECK(edge_set(h) == std::set<std::pair<int, int>>{{0, 4}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(edge_set(h) == edge_set(decode_by_bitstring("D@{")));

    // Documented reference value: n=5 with edges {0,2},{0,4},{1,3},{3,4}.
    Graph r = parse_graph6("DQc");
    CHECK(edge_set(r) == std::set<std::pair<int, int>>{{0, 2}, {0, 4}, {1, 3}, {3, 4}});
}

TEST_CASE("truncated and malformed input") {
    CHECK_THROWS_AS(parse_graph6("E"), graph6_error);  // n=6 needs 3 body bytes
    try {
        parse_graph6("E");
    } catch (const graph6_error& e) {
        CHECK(e.kind == graph6_error::Kind::TruncatedBitstream);
    }
    CHECK_THROWS_AS(parse_graph6(""), graph6_error);
    CHECK_THROWS_AS(parse_graph6("D?\x01"), graph6_error);  // byte below range
    try {
        Graph6Options opts;
        opts.max_n = 50;
        parse_graph6("~??~?????", opts);
        FAIL("size overflow not detected");
    } catch (const graph6_error& e) {
        CHECK(e.kind == graph6_error::Kind::SizeOverflow);
    }
}

TEST_CASE("optional >>graph6<< header is tolerated and stripped") {
    Graph g = parse_graph6(">>graph6<<D?{");
    CHECK(g.n() == 5);
    CHECK(g.m() == 4);
}

TEST_CASE("long-form sizes round-trip") {
    Graph g(63);
    g.add_edge(0, 62);
    g.add_edge(10, 20);
    std::string enc = write_graph6(g);
    CHECK(enc[0] == 126);
    Graph back = parse_graph6(enc);
    CHECK(back == g);

    Graph big(100);
    for (int v = 0; v + 1 < 100; v += 2) big.add_edge(v, v + 1);
    CHECK(parse_graph6(write_graph6(big)) == big);
}

TEST_CASE("round-trip: parse(write(g)) == g on 1000 random graphs") {
    std::mt19937 seed_rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(seed_rng() % 40);
        double p = (trial % 10) / 10.0;
        Graph g = testutil::random_graph(n, p, seed_rng());
        Graph back = parse_graph6(write_graph6(g));
        REQUIRE(back == g);
    }
}

TEST_CASE("round-trip: write(parse(x)) == x on canonical lines") {
    std::vector<std::string> corpus = {"@", "A_", "A?", "D?{", "DQc", "Bw", "IsP@OkWHG"};
    for (int trial = 0; trial < 50; ++trial)
        corpus.push_back(write_graph6(testutil::random_graph(3 + trial % 30, 0.35, 1000 + trial)));
    for (const auto& line : corpus) {
        CAPTURE(line);
        CHECK(write_graph6(parse_graph6(line)) == line);
    }
}

TEST_CASE("stream reading collects per-line errors") {
    std::istringstream in("D?{\n\nE\nA_\n");
    auto res = read_graph6_lines(in);
    REQUIRE(res.graphs.size() == 2);
    CHECK(res.graphs[0].n() == 5);
    CHECK(res.graphs[0].label() == "line 1");
    CHECK(res.graphs[1].n() == 2);
    CHECK(res.graphs[1].label() == "line 4");
    REQUIRE(res.errors.size() == 1);
    CHECK(res.errors[0].first == 3);
}
