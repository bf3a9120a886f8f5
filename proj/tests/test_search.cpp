#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "specclique/generators.hpp"
#include "specclique/graph6.hpp"
#include "specclique/search.hpp"
#include "test_util.hpp"

using namespace specclique;

namespace {

std::string g6_lines(const std::vector<std::string>& specs) {
    std::string out;
    for (const auto& s : specs) out += write_graph6(generate(s)) + "\n";
    return out;
}

}  // namespace

TEST_CASE("scan of the four known spectra") {
    std::istringstream in(g6_lines({"cycle:5", "cycle:7", "named:petersen", "complete:4"}));
    CorpusStats stats = scan_corpus(in);
    CHECK(stats.total == 4);
    CHECK(stats.squares_violations.empty());
    CHECK(stats.s_plus_exceeds_count == 1);  // C7 only
    CHECK(stats.error_count == 0);
    REQUIRE(stats.per_graph.size() == 4);
    CHECK(stats.per_graph[1].s_plus_exceeds_at_omega == std::optional<bool>(true));
    CHECK(stats.per_graph[0].s_plus_exceeds_at_omega == std::optional<bool>(false));
}

TEST_CASE("empty stream") {
    std::istringstream in("");
    CorpusStats stats = scan_corpus(in);
    CHECK(stats.total == 0);
    CHECK(stats.omega_lt_chi_count == 0);
    CHECK(stats.s_plus_exceeds_count == 0);
    CHECK(stats.per_graph.empty());
}

TEST_CASE("coxeter literal is flagged for the s+ overshoot") {
    std::istringstream in(g6_lines({"named:coxeter"}));
    CorpusStats stats = scan_corpus(in);
    REQUIRE(stats.total == 1);
    CHECK(stats.s_plus_exceeds_count == 1);
    CHECK(stats.per_graph[0].omega_exact == std::optional<int>(2));
}

TEST_CASE("parse failures are recorded, not fatal") {
    std::istringstream in("D?{\nE\nA_\n");
    CorpusStats stats = scan_corpus(in);
    CHECK(stats.total == 3);
    CHECK(stats.error_count == 1);
}

TEST_CASE("gcd family enumeration") {
    // n = 6: divisor pairs {1,2}, {1,3}, {2,3}
    auto graphs = gcd_graph_family(6);
    long long six = std::count_if(graphs.begin(), graphs.end(), [](const Graph& g) { return g.n() == 6; });
    CHECK(six == 3);
    // primes contribute nothing (single proper divisor)
    long long five = std::count_if(graphs.begin(), graphs.end(), [](const Graph& g) { return g.n() == 5; });
    CHECK(five == 0);
}

TEST_CASE("gcd sweep to n = 20 finds no violations") {
    CorpusStats stats = sweep_gcd_graphs(20);
    CHECK(stats.squares_violations.empty());
    CHECK(stats.error_count == 0);
    CHECK(stats.total > 0);
    for (const auto& rep : stats.per_graph) {
        CAPTURE(rep.graph_label);
        CHECK_FALSE(rep.omega_truncated);
        if (rep.squares_holds_at_exact_omega) CHECK(*rep.squares_holds_at_exact_omega);
    }
}

TEST_CASE("conjecture comparison on the circulant worked example") {
    std::istringstream in(g6_lines({"circulant:16:1,2,3,4"}));
    CorpusStats stats = scan_corpus(in);
    REQUIRE(stats.total == 1);
    const BoundReport& rep = stats.per_graph[0];
    CHECK(rep.clique_lb_squares == 5);
    CHECK(rep.clique_lb_two_eig == 3);
    CHECK(rep.omega_exact == std::optional<int>(5));
    CHECK(rep.chi_exact == std::optional<int>(6));
    CHECK(stats.omega_lt_chi_count == 1);
    CHECK(stats.squares_beats_two_eig_count == 1);
    CompareSummary cmp = compare_bounds(stats);
    CHECK(cmp.fraction == doctest::Approx(1.0));
}

TEST_CASE("weakly perfect graphs are excluded from the comparison population") {
    std::istringstream in(g6_lines({"barbell:8", "complete:5", "complete:3"}));
    CorpusStats stats = scan_corpus(in);
    CHECK(stats.omega_lt_chi_count == 0);
    CompareSummary cmp = compare_bounds(stats);
    CHECK(cmp.fraction == 0.0);
    // barbell: n+ = 2, so the two iterative bounds coincide
    CHECK(stats.per_graph[0].clique_lb_squares == stats.per_graph[0].clique_lb_two_eig);
}

TEST_CASE("conjecture holds at the exact clique number for weakly perfect graphs") {
    std::istringstream in(g6_lines({"complete:4", "barbell:6", "cycle:6", "wheel:6", "johnson:4:2",
                                    "gcd:12:1,6", "circulant:9:1,3"}));
    CorpusStats stats = scan_corpus(in);
    CHECK(stats.error_count == 0);
    int weakly_perfect = 0;
    for (const auto& rep : stats.per_graph) {
        REQUIRE(rep.omega_exact.has_value());
        REQUIRE(rep.chi_exact.has_value());
        if (*rep.omega_exact == *rep.chi_exact) {
            ++weakly_perfect;
            REQUIRE(rep.squares_holds_at_exact_omega.has_value());
            CHECK(*rep.squares_holds_at_exact_omega);
        }
    }
    CHECK(weakly_perfect >= 4);
}

TEST_CASE("s+ never exceeds the chromatic right side on solved graphs") {
    std::mt19937 seeds(64);
    std::vector<Graph> graphs;
    for (int trial = 0; trial < 20; ++trial)
        graphs.push_back(testutil::random_graph(6 + trial % 8, 0.5, seeds()));
    CorpusStats stats = scan_graphs(graphs);
    for (const auto& rep : stats.per_graph) {
        if (!rep.chi_exact || rep.m < 1) continue;
        double rhs = 2.0 * rep.m * (*rep.chi_exact - 1) / *rep.chi_exact;
        CHECK(rep.s_plus <= rhs + 1e-6 * 2.0 * rep.m);
    }
}

TEST_CASE("scan aggregates are order independent") {
    std::vector<std::string> specs = {"cycle:5", "cycle:7", "named:petersen", "complete:4",
                                      "barbell:5", "kneser:6:2"};
    std::istringstream fwd(g6_lines(specs));
    std::reverse(specs.begin(), specs.end());
    std::istringstream rev(g6_lines(specs));
    CorpusStats a = scan_corpus(fwd);
    CorpusStats b = scan_corpus(rev);
    CHECK(a.total == b.total);
    CHECK(a.omega_lt_chi_count == b.omega_lt_chi_count);
    CHECK(a.squares_beats_two_eig_count == b.squares_beats_two_eig_count);
    CHECK(a.s_plus_exceeds_count == b.s_plus_exceeds_count);
    CHECK(a.squares_violations.size() == b.squares_violations.size());
}

TEST_CASE("rescanning the same corpus reproduces byte-identical CSV") {
    auto lines = g6_lines({"cycle:5", "cycle:7", "named:petersen", "complete:4", "gcd:10:1,2"});
    std::istringstream in1(lines), in2(lines);
    ScanOptions opts;
    opts.jobs = 2;
    std::string csv1 = stats_to_csv(scan_corpus(in1, opts));
    std::string csv2 = stats_to_csv(scan_corpus(in2, opts));
    CHECK(csv1 == csv2);
    CHECK(csv1.find("label,n,m,mu1,n_pos,s_plus") == 0);
    CHECK(std::count(csv1.begin(), csv1.end(), '\n') == 6);  // header + 5 rows
}

TEST_CASE("json summary carries the aggregate fields") {
    std::istringstream in(g6_lines({"cycle:7", "complete:4"}));
    std::string json = stats_to_json(scan_corpus(in));
    CHECK(json.find("\"total\": 2") != std::string::npos);
    CHECK(json.find("\"s_plus_exceeds\": 1") != std::string::npos);
    CHECK(json.find("\"squares_violations\": []") != std::string::npos);
}

TEST_CASE("per-graph pipeline on a generated graph keeps the label") {
    BoundReport rep = analyze_graph(generate("kneser:5:2"));
    CHECK(rep.graph_label == "kneser:5:2");
    CHECK(rep.omega_exact == std::optional<int>(2));
    CHECK(rep.chi_exact == std::optional<int>(3));
    CHECK(rep.clique_lb_squares == 2);
    CHECK(rep.triangle_free);
    CHECK(rep.cvetkovic_ub == 5);
}

TEST_CASE("edgeless graphs take the omega = 1 convention") {
    BoundReport rep = analyze_graph(Graph(5));
    CHECK(rep.error.empty());
    CHECK(rep.clique_lb_squares == 1);
    CHECK(rep.clique_lb_two_eig == 1);
    CHECK(rep.omega_exact == std::optional<int>(1));
    CHECK(rep.n_pos == 0);
}
