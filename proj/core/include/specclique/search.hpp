#pragma once

#include <istream>
#include <string>
#include <vector>

#include "specclique/bounds.hpp"
#include "specclique/graph.hpp"
#include "specclique/oracle.hpp"

namespace specclique {

struct ScanOptions {
    double zero_tol_rel = 1e-8;
    long long node_limit = 100'000'000;
    long long chi_node_limit = 2'000'000;
    int chi_max_n = 64;
    int jobs = 0;  // 0: SPECCLIQUE_JOBS env var, else hardware concurrency
    int graph6_max_n = 10000;
};

struct CorpusStats {
    long long total = 0;
    long long omega_lt_chi_count = 0;
    std::vector<std::string> squares_violations;
    long long squares_beats_two_eig_count = 0;  // within the omega < chi subpopulation
    long long s_plus_exceeds_count = 0;
    long long truncated_count = 0;
    long long error_count = 0;
    std::vector<BoundReport> per_graph;
};

/// Full per-graph pipeline: spectrum, oracle, every bound, conjecture checks
/// at the exact clique number. Never throws; failures land in report.error.
BoundReport analyze_graph(const Graph& g, const ScanOptions& opts = {});

/// Runs the pipeline over a list of graphs (in parallel, output in input order).
CorpusStats scan_graphs(const std::vector<Graph>& graphs, const ScanOptions& opts = {});

/// graph6 stream, one graph per line.
CorpusStats scan_corpus(std::istream& g6stream, const ScanOptions& opts = {});

/// All gcd graphs X_n({d1, d2}) for n <= n_max over unordered pairs of
/// distinct proper divisors.
CorpusStats sweep_gcd_graphs(int n_max, const ScanOptions& opts = {});
std::vector<Graph> gcd_graph_family(int n_max);

struct CompareSummary {
    long long omega_lt_chi = 0;
    long long squares_beats_two_eig = 0;
    double fraction = 0;
};
CompareSummary compare_bounds(const CorpusStats& stats);

/// One row per graph, stable column order (documented in the README).
std::string stats_to_csv(const CorpusStats& stats);

/// Aggregate summary object (schema documented in the README).
std::string stats_to_json(const CorpusStats& stats);

int resolve_jobs(int requested);

}  // namespace specclique
