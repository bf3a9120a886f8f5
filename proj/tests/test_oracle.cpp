#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specclique/bounds.hpp"
#include "specclique/generators.hpp"
#include "specclique/oracle.hpp"
#include "specclique/spectral.hpp"
#include "test_util.hpp"

using namespace specclique;

TEST_CASE("clique number of the worked examples") {
    CHECK(max_clique_exact(generate("circulant:16:1,2,3,4")).omega == 5);
    CHECK(max_clique_exact(generate("barbell:8")).omega == 8);
    CHECK(max_clique_exact(generate("complete:7")).omega == 7);
    CHECK(max_clique_exact(generate("cycle:9")).omega == 2);
    CHECK(max_clique_exact(generate("named:schlafli")).omega == 6);
    CHECK(max_clique_exact(generate("wheel:6")).omega == 3);
    CHECK(max_clique_exact(Graph(3)).omega == 1);
}

TEST_CASE("clique witness is a clique of the reported size") {
    auto res = max_clique_exact(generate("circulant:16:1,2,3,4"));
    Graph g = generate("circulant:16:1,2,3,4");
    REQUIRE(static_cast<int>(res.witness.size()) == res.omega);
    for (size_t i = 0; i < res.witness.size(); ++i)
        for (size_t j = i + 1; j < res.witness.size(); ++j)
            CHECK(g.adjacent(res.witness[i], res.witness[j]));
}

TEST_CASE("clique solver agrees with exhaustive enumeration on 200 random graphs") {
    std::mt19937 seeds(99);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(seeds() % 9);
        double p = 0.2 + 0.6 * (trial % 5) / 4.0;
        Graph g = testutil::random_graph(n, p, seeds());
        CAPTURE(trial);
        CHECK(max_clique_exact(g).omega == testutil::brute_force_omega(g));
    }
}

TEST_CASE("clique of the complement is the independence number") {
    std::mt19937 seeds(123);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = testutil::random_graph(8 + trial % 9, 0.5, seeds());
        CHECK(max_clique_exact(complement(g)).omega == testutil::brute_force_independence(g));
    }
}

TEST_CASE("chromatic number of the worked examples") {
    CHECK(chromatic_number_exact(generate("cycle:5")).chi == 3);
    CHECK(chromatic_number_exact(generate("barbell:8")).chi == 8);
    CHECK(chromatic_number_exact(generate("kneser:5:2")).chi == 3);
    CHECK(chromatic_number_exact(generate("complete:6")).chi == 6);
    CHECK(chromatic_number_exact(generate("cycle:6")).chi == 2);
    CHECK(chromatic_number_exact(generate("circulant:16:1,2,3,4")).chi == 6);
    CHECK(chromatic_number_exact(Graph(4)).chi == 1);
}

TEST_CASE("chi is sandwiched by omega and the greedy bound, dominates full hoffman") {
    std::mt19937 seeds(7);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testutil::random_graph(7 + trial % 8, 0.5, seeds());
        auto ch = chromatic_number_exact(g);
        REQUIRE(ch.chi.has_value());
        int omega = max_clique_exact(g).omega;
        CHECK(*ch.chi >= omega);
        if (g.m() >= 1) {
            Spectrum sp = spectral_summary(g);
            CHECK(*ch.chi >= hoffman_full_lb(sp));
        }
    }
}

TEST_CASE("triangle-freeness") {
    CHECK(is_triangle_free(generate("cycle:7")));
    CHECK(is_triangle_free(generate("named:petersen")));
    CHECK(is_triangle_free(generate("named:coxeter")));
    CHECK_FALSE(is_triangle_free(generate("complete:3")));
    CHECK_FALSE(is_triangle_free(generate("wheel:6")));
    CHECK(is_triangle_free(Graph(1)));
}

TEST_CASE("triangle-freeness matches omega <= 2") {
    std::mt19937 seeds(55);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testutil::random_graph(4 + trial % 10, 0.3, seeds());
        CHECK(is_triangle_free(g) == (max_clique_exact(g).omega <= 2));
    }
}

TEST_CASE("node limit truncation keeps a valid lower bound") {
    Graph g = testutil::random_graph(40, 0.7, 4242);
    auto full = max_clique_exact(g);
    REQUIRE_FALSE(full.truncated);
    REQUIRE(full.nodes > 10);
    auto cut = max_clique_exact(g, 10);
    CHECK(cut.truncated);
    CHECK(cut.omega <= full.omega);
    CHECK(cut.omega >= 1);
}

TEST_CASE("chromatic truncation reports open bounds") {
    Graph g = testutil::random_graph(40, 0.7, 4242);
    auto ch = chromatic_number_exact(g, 3);
    if (ch.truncated) {
        CHECK_FALSE(ch.chi.has_value());
        CHECK(ch.lb <= ch.ub);
    }
}

TEST_CASE("solver determinism: identical runs, identical node counts") {
    Graph g = generate("circulant:20:1,2,5");
    auto a = max_clique_exact(g);
    auto b = max_clique_exact(g);
    CHECK(a.omega == b.omega);
    CHECK(a.nodes == b.nodes);
    CHECK(a.witness == b.witness);
    auto ca = chromatic_number_exact(g);
    auto cb = chromatic_number_exact(g);
    CHECK(ca.chi == cb.chi);
    CHECK(ca.nodes == cb.nodes);
}

TEST_CASE("oracle_solve composes the pieces") {
    auto res = oracle_solve(generate("barbell:8"));
    CHECK(res.omega == 8);
    REQUIRE(res.chi.has_value());
    CHECK(*res.chi == 8);
    CHECK_FALSE(res.triangle_free);
    CHECK_FALSE(res.truncated);
    CHECK(res.elapsed.count() >= 0);

    OracleLimits lim;
    lim.chi_max_n = 4;  // skip chi for larger graphs
    auto skipped = oracle_solve(generate("barbell:8"), lim);
    CHECK_FALSE(skipped.chi.has_value());
    CHECK(skipped.chi_lb >= 8);
}
