#include "specclique/search.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include <json.hpp>

#include "specclique/generators.hpp"
#include "specclique/graph6.hpp"
#include "specclique/spectral.hpp"

namespace specclique {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

int resolve_jobs(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SPECCLIQUE_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

BoundReport analyze_graph(const Graph& g, const ScanOptions& opts) {
    BoundReport rep;
    rep.graph_label = g.label();
    rep.n = g.n();
    rep.m = g.m();
    try {
        Spectrum sp = spectral_summary(g, opts.zero_tol_rel);
        rep.mu1 = sp.mu1();
        rep.n_pos = sp.n_pos;
        rep.s_plus = sp.s_plus;

        OracleLimits lim;
        lim.node_limit = opts.node_limit;
        lim.chi_node_limit = opts.chi_node_limit;
        lim.chi_max_n = opts.chi_max_n;
        OracleResult oracle = oracle_solve(g, lim);
        rep.omega_exact = oracle.truncated ? std::nullopt : std::optional<int>(oracle.omega);
        rep.omega_lb = oracle.omega;
        rep.omega_truncated = oracle.truncated;
        rep.chi_exact = oracle.chi;
        rep.chi_truncated = oracle.chi_truncated;
        rep.triangle_free = oracle.triangle_free;

        if (rep.m >= 1) {
            rep.clique_lb_turan = clique_lb_turan(sp, rep.m);
            IterativeResult squares = clique_lb_iterative(sp, rep.m, LbMode::SumSquares);
            rep.clique_lb_squares = squares.bound;
            rep.squares_counterexample = squares.counterexample;
            rep.squares_trace = std::move(squares.trace);
            IterativeResult two_eig = clique_lb_iterative(sp, rep.m, LbMode::TwoEig);
            rep.clique_lb_two_eig = two_eig.bound;
            rep.two_eig_counterexample = two_eig.counterexample;
            rep.two_eig_turan_fallback = two_eig.turan_fallback;
            rep.two_eig_trace = std::move(two_eig.trace);
            rep.hoffman_ratio_lb = hoffman_ratio_lb(sp);
            rep.hoffman_full_lb = hoffman_full_lb(sp);
            rep.cvetkovic_ub = cvetkovic_ub(sp);

            if (rep.omega_exact && *rep.omega_exact >= 2) {
                int omega = *rep.omega_exact;
                bool holds = squares_bound_holds(sp, rep.m, omega);
                if (!holds) {
                    // A genuine violation must clear a 1e-6*2m margin and
                    // survive a tightened-slack re-check.
                    int ell = std::min(sp.n_pos, omega);
                    double lhs = sp.sum_top_squares(ell);
                    double rhs = 2.0 * rep.m * (omega - 1) / omega;
                    bool decisive = lhs - rhs > 1e-6 * 2.0 * rep.m &&
                                    lhs > rhs + 1e-12 * 2.0 * rep.m;
                    if (!decisive) {
                        rep.squares_borderline = true;
                        holds = true;
                    }
                }
                rep.squares_holds_at_exact_omega = holds;
                rep.s_plus_exceeds_at_omega = s_plus_exceeds(sp, rep.m, omega);
            }
        } else {
            rep.cvetkovic_ub = cvetkovic_ub(sp);
        }
    } catch (const std::exception& e) {
        rep.error = e.what();
    }
    return rep;
}

CorpusStats scan_graphs(const std::vector<Graph>& graphs, const ScanOptions& opts) {
    std::vector<BoundReport> reports(graphs.size());

    int jobs = resolve_jobs(opts.jobs);
    jobs = std::min<int>(jobs, std::max<size_t>(graphs.size(), 1));
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= graphs.size()) break;
            reports[i] = analyze_graph(graphs[i], opts);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    CorpusStats stats;
    stats.total = static_cast<long long>(reports.size());
    for (auto& rep : reports) {
        if (!rep.error.empty()) {
            ++stats.error_count;
        } else {
            if (rep.omega_truncated || rep.chi_truncated) ++stats.truncated_count;
            if (rep.omega_exact && rep.chi_exact && *rep.omega_exact < *rep.chi_exact) {
                ++stats.omega_lt_chi_count;
                if (rep.clique_lb_squares > rep.clique_lb_two_eig) ++stats.squares_beats_two_eig_count;
            }
            if (rep.squares_holds_at_exact_omega && !*rep.squares_holds_at_exact_omega)
                stats.squares_violations.push_back(rep.graph_label);
            if (rep.s_plus_exceeds_at_omega && *rep.s_plus_exceeds_at_omega) ++stats.s_plus_exceeds_count;
        }
        stats.per_graph.push_back(std::move(rep));
    }
    return stats;
}

CorpusStats scan_corpus(std::istream& g6stream, const ScanOptions& opts) {
    Graph6Options g6opts;
    g6opts.max_n = opts.graph6_max_n;
    Graph6ReadResult read = read_graph6_lines(g6stream, g6opts);
    CorpusStats stats = scan_graphs(read.graphs, opts);
    for (auto& [lineno, message] : read.errors) {
        BoundReport rep;
        rep.graph_label = "line " + std::to_string(lineno);
        rep.error = message;
        ++stats.error_count;
        ++stats.total;
        stats.per_graph.push_back(std::move(rep));
    }
    return stats;
}

std::vector<Graph> gcd_graph_family(int n_max) {
    if (n_max < 2) throw std::invalid_argument("gcd sweep needs n_max >= 2");
    std::vector<Graph> graphs;
    for (int n = 2; n <= n_max; ++n) {
        std::vector<int> divisors;
        for (int d = 1; d < n; ++d)
            if (n % d == 0) divisors.push_back(d);
        for (size_t i = 0; i < divisors.size(); ++i)
            for (size_t j = i + 1; j < divisors.size(); ++j) {
                FamilySpec spec;
                spec.family = Family::GcdGraph;
                spec.params = {n, divisors[i], divisors[j]};
                graphs.push_back(generate(spec));
            }
    }
    return graphs;
}

CorpusStats sweep_gcd_graphs(int n_max, const ScanOptions& opts) {
    return scan_graphs(gcd_graph_family(n_max), opts);
}

CompareSummary compare_bounds(const CorpusStats& stats) {
    CompareSummary s;
    s.omega_lt_chi = stats.omega_lt_chi_count;
    s.squares_beats_two_eig = stats.squares_beats_two_eig_count;
    s.fraction = s.omega_lt_chi > 0 ? static_cast<double>(s.squares_beats_two_eig) / s.omega_lt_chi : 0.0;
    return s;
}

std::string stats_to_csv(const CorpusStats& stats) {
    std::string out =
        "label,n,m,mu1,n_pos,s_plus,clique_lb_turan,clique_lb_two_eig,clique_lb_squares,"
        "hoffman_ratio_lb,hoffman_full_lb,cvetkovic_ub,omega_lb,omega,omega_truncated,chi,"
        "chi_truncated,triangle_free,squares_at_omega,s_plus_exceeds,squares_counterexample,error\n";
    for (const auto& r : stats.per_graph) {
        out += csv_quote(r.graph_label);
        out += ',' + std::to_string(r.n) + ',' + std::to_string(r.m);
        out += ',' + format_double(r.mu1) + ',' + std::to_string(r.n_pos) + ',' + format_double(r.s_plus);
        out += ',' + std::to_string(r.clique_lb_turan) + ',' + std::to_string(r.clique_lb_two_eig) + ',' +
               std::to_string(r.clique_lb_squares);
        out += ',' + format_double(r.hoffman_ratio_lb) + ',' + std::to_string(r.hoffman_full_lb) + ',' +
               std::to_string(r.cvetkovic_ub);
        out += ',' + std::to_string(r.omega_lb);
        out += ',';
        out += r.omega_exact ? std::to_string(*r.omega_exact) : "";
        out += ',' + std::string(r.omega_truncated ? "1" : "0");
        out += ',';
        out += r.chi_exact ? std::to_string(*r.chi_exact) : "";
        out += ',' + std::string(r.chi_truncated ? "1" : "0");
        out += ',' + std::string(r.triangle_free ? "1" : "0");
        out += ',';
        if (r.squares_holds_at_exact_omega) out += *r.squares_holds_at_exact_omega ? "1" : "0";
        out += ',';
        if (r.s_plus_exceeds_at_omega) out += *r.s_plus_exceeds_at_omega ? "1" : "0";
        out += ',' + std::string(r.squares_counterexample ? "1" : "0");
        out += ',' + csv_quote(r.error) + '\n';
    }
    return out;
}

std::string stats_to_json(const CorpusStats& stats) {
    nlohmann::json j;
    j["total"] = stats.total;
    j["omega_lt_chi"] = stats.omega_lt_chi_count;
    j["squares_violations"] = stats.squares_violations;
    j["squares_beats_two_eig"] = stats.squares_beats_two_eig_count;
    j["s_plus_exceeds"] = stats.s_plus_exceeds_count;
    j["truncated"] = stats.truncated_count;
    j["errors"] = stats.error_count;
    CompareSummary cmp = compare_bounds(stats);
    j["fraction_squares_beats_two_eig"] = cmp.fraction;
    return j.dump(2);
}

}  // namespace specclique
