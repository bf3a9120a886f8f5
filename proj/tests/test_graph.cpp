#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "specclique/generators.hpp"
#include "specclique/graph.hpp"
#include "test_util.hpp"

using namespace specclique;

namespace {

// Independent count of disjoint / (k-1)-intersecting pairs of k-subsets.
long long subset_pair_count(int p, int k, bool disjoint) {
    std::vector<std::vector<int>> sets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            sets.push_back(cur);
            return;
        }
        for (int v = start; v < p; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    long long count = 0;
    for (size_t a = 0; a < sets.size(); ++a)
        for (size_t b = a + 1; b < sets.size(); ++b) {
            std::vector<int> inter;
            std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end(),
                                  std::back_inserter(inter));
            if (disjoint ? inter.empty() : static_cast<int>(inter.size()) == k - 1) ++count;
        }
    return count;
}

void check_consistent(const Graph& g) {
    long long edges = 0;
    for (int a = 0; a < g.n(); ++a) {
        CHECK_FALSE(g.adjacent(a, a));
        for (int b = 0; b < g.n(); ++b) {
            CHECK(g.adjacent(a, b) == g.adjacent(b, a));
            if (a < b && g.adjacent(a, b)) ++edges;
        }
    }
    CHECK(edges == g.m());
    auto deg = g.degrees();
    CHECK(std::accumulate(deg.begin(), deg.end(), 0LL) == 2 * g.m());
}

}  // namespace

TEST_CASE("kneser(5,2) is the petersen graph") {
    Graph g = generate("kneser:5:2");
    CHECK(g.n() == 10);
    CHECK(g.m() == subset_pair_count(5, 2, true));
    CHECK(g.m() == 15);
    for (int v = 0; v < g.n(); ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("barbell(8) matches n=16 m=57") {
    Graph g = generate("barbell:8");
    CHECK(g.n() == 16);
    CHECK(g.m() == 57);
    auto deg = g.degrees();
    CHECK(std::count(deg.begin(), deg.end(), 8) == 2);
    CHECK(std::count(deg.begin(), deg.end(), 7) == 14);
}

TEST_CASE("johnson(4,2) is the octahedron") {
    Graph g = generate("johnson:4:2");
    CHECK(g.n() == 6);
    CHECK(g.m() == subset_pair_count(4, 2, false));
    CHECK(g.m() == 12);
}

TEST_CASE("gcd graph adjacency is direct gcd enumeration") {
    // X_6({1}): differences with gcd 1 are {1,5}, i.e. the 6-cycle.
    Graph g = generate("gcd:6:1");
    CHECK(g.n() == 6);
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 2);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            if (a != b) CHECK(g.adjacent(a, b) == (std::gcd(std::abs(a - b), 6) == 1));

    // X_6({1,3}) adds the odd difference 3 and becomes 3-regular K_{3,3}.
    Graph h = generate("gcd:6:1,3");
    for (int v = 0; v < 6; ++v) CHECK(h.degree(v) == 3);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            if (a != b) CHECK(h.adjacent(a, b) == ((b - a) % 2 != 0));
}

TEST_CASE("gcd graphs are circulant: adjacency depends only on the difference") {
    Graph g = generate("gcd:12:2,3");
    for (int a = 0; a < 12; ++a)
        for (int b = 0; b < 12; ++b)
            if (a != b) CHECK(g.adjacent(a, b) == g.adjacent(0, (b - a + 12) % 12));
}

TEST_CASE("complement basics") {
    Graph k4 = generate("complete:4");
    Graph empty = complement(k4);
    CHECK(empty.m() == 0);
    CHECK(empty.n() == 4);

    // C5 is self-complementary: the complement is again a connected 2-regular 5-cycle.
    Graph c5c = complement(generate("cycle:5"));
    CHECK(c5c.n() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5c.degree(v) == 2);
    CHECK(testutil::is_connected(c5c));
}

TEST_CASE("folded 7-cube complement is 56-regular on 64 vertices") {
    Graph fc = generate("foldedcube:7");
    CHECK(fc.n() == 64);
    for (int v = 0; v < 64; ++v) CHECK(fc.degree(v) == 7);
    Graph g = complement(fc);
    for (int v = 0; v < 64; ++v) CHECK(g.degree(v) == 56);
    CHECK(g.m() == 64 * 56 / 2);
}

TEST_CASE("folded 3-cube is K4") {
    Graph g = generate("foldedcube:3");
    CHECK(g.n() == 4);
    CHECK(g.m() == 6);
}

TEST_CASE("wheel(6) is the hub-join of C5") {
    Graph g = generate("wheel:6");
    CHECK(g.n() == 6);
    CHECK(g.m() == 10);
    CHECK(g.degree(5) == 5);
    for (int v = 0; v < 5; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("degrees: cycle and kneser regularity") {
    auto d = generate("cycle:5").degrees();
    CHECK(d == std::vector<int>{2, 2, 2, 2, 2});
    for (int p = 4; p <= 9; ++p)
        for (int k = 1; 2 * k <= p; ++k) {
            Graph kn = generate("kneser:" + std::to_string(p) + ":" + std::to_string(k));
            Graph jo = generate("johnson:" + std::to_string(p) + ":" + std::to_string(k));
            for (int v = 0; v < kn.n(); ++v) {
                CHECK(kn.degree(v) == subset_pair_count(p, k, true) * 2 / kn.n());
                CHECK(jo.degree(v) == k * (p - k));
            }
        }
}

TEST_CASE("every generator output is symmetric with consistent m") {
    for (const char* spec :
         {"complete:7", "cycle:9", "wheel:6", "barbell:5", "circulant:16:1,2,3,4", "kneser:7:3",
          "johnson:6:2", "gcd:20:2,5", "foldedcube:5", "complement:cycle:8", "named:petersen",
          "named:coxeter", "named:schlafli"}) {
        CAPTURE(spec);
        Graph g = generate(spec);
        check_consistent(g);
        CHECK(g.label() == parse_family_spec(spec).to_string());
    }
}

TEST_CASE("invalid family parameters are rejected") {
    CHECK_THROWS_AS(generate("kneser:3:2"), std::invalid_argument);   // p < 2k
    CHECK_THROWS_AS(generate("johnson:4"), std::invalid_argument);    // arity
    CHECK_THROWS_AS(generate("gcd:10:3"), std::invalid_argument);     // not a divisor
    CHECK_THROWS_AS(generate("gcd:10:2,2"), std::invalid_argument);   // duplicate
    CHECK_THROWS_AS(generate("circulant:10:6"), std::invalid_argument);  // step > n/2
    CHECK_THROWS_AS(generate("barbell:2"), std::invalid_argument);
    CHECK_THROWS_AS(generate("named:heawood"), std::invalid_argument);
    CHECK_THROWS_AS(generate("frobnicate:4"), std::invalid_argument);
    CHECK_THROWS_AS(generate("wheel:-4"), std::invalid_argument);
}

TEST_CASE("complement round-trips") {
    Graph g = testutil::random_graph(17, 0.4, 42);
    CHECK(complement(complement(g)) == g);
    CHECK(complement(g).m() == 17LL * 16 / 2 - g.m());
}
