#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "specclique/bounds.hpp"
#include "specclique/families.hpp"
#include "specclique/generators.hpp"
#include "specclique/graph6.hpp"
#include "specclique/search.hpp"
#include "specclique/spectral.hpp"

using namespace specclique;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTruncated = 3;

struct CommonOpts {
    std::string format = "text";
    double zero_tol = 1e-8;
    double slack = 1e-9;
    long long node_limit = 100'000'000;
    long long chi_node_limit = 2'000'000;
    int chi_max_n = 64;
    int jobs = 0;
    std::string output;
};

ScanOptions scan_options(const CommonOpts& c) {
    ScanOptions o;
    o.zero_tol_rel = c.zero_tol;
    o.node_limit = c.node_limit;
    o.chi_node_limit = c.chi_node_limit;
    o.chi_max_n = c.chi_max_n;
    o.jobs = c.jobs;
    return o;
}

void add_common_flags(CLI::App* cmd, CommonOpts& c, bool with_format = true) {
    if (with_format)
        cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--zero-tol", c.zero_tol, "Relative eigenvalue zero-classification tolerance");
    cmd->add_option("--slack", c.slack, "Relative slack for inequality comparisons");
    cmd->add_option("--node-limit", c.node_limit, "Clique solver branch-node limit");
    cmd->add_option("--chi-node-limit", c.chi_node_limit, "Coloring solver branch-node limit");
    cmd->add_option("--chi-max-n", c.chi_max_n, "Skip exact chromatic number above this order");
    cmd->add_option("--jobs,-j", c.jobs, "Worker threads")->envname("SPECCLIQUE_JOBS");
    cmd->add_option("--output,-o", c.output, "Write output to a file instead of stdout");
}

std::ostream& open_output(const CommonOpts& c, std::ofstream& file) {
    if (c.output.empty()) return std::cout;
    file.open(c.output);
    if (!file) throw std::runtime_error("cannot open output file: " + c.output);
    return file;
}

std::string fmt(double v, int digits = 4) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// Accepts a family spec, a graph6 file, or a literal graph6 line.
std::vector<Graph> load_input(const std::string& input, int graph6_max_n) {
    try {
        return {generate(parse_family_spec(input))};
    } catch (const std::invalid_argument& e) {
        // A recognized family with bad parameters should not fall through to
        // graph6 guessing; surface the validation message.
        std::string what = e.what();
        if (what.find("unknown family") == std::string::npos &&
            what.find("unknown-named-graph") == std::string::npos &&
            !std::filesystem::exists(input))
            throw;
    }
    Graph6Options opts;
    opts.max_n = graph6_max_n;
    if (input == "-" || std::filesystem::exists(input)) {
        std::ifstream file;
        std::istream* in = &std::cin;
        if (input != "-") {
            file.open(input);
            if (!file) throw std::runtime_error("cannot open input: " + input);
            in = &file;
        }
        auto read = read_graph6_lines(*in, opts);
        if (!read.errors.empty())
            throw std::runtime_error("graph6 parse error at line " + std::to_string(read.errors[0].first) +
                                     ": " + read.errors[0].second);
        if (read.graphs.empty()) throw std::runtime_error("no graphs in input: " + input);
        return std::move(read.graphs);
    }
    Graph g = parse_graph6(input, opts);
    g.set_label(input);
    return {g};
}

std::istream& open_corpus(const std::string& path, std::ifstream& file) {
    if (path == "-") return std::cin;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open input: " + path);
    return file;
}

void render_trace(std::ostream& os, const std::vector<IterStep>& trace, const char* title) {
    os << title << "\n";
    for (const auto& step : trace) {
        os << "    omega = " << step.omega << ", ell = " << step.ell << ": lhs = " << fmt(step.lhs, 3)
           << (step.holds ? " <= rhs = " : " > rhs = ") << fmt(step.rhs, 3) << "  =>  omega "
           << (step.holds ? ">= " : "> ") << step.omega << "\n";
    }
}

void render_report_text(std::ostream& os, const BoundReport& rep, const Graph& g,
                        const ScanOptions& opts) {
    os << "graph: " << rep.graph_label << "  (n = " << rep.n << ", m = " << rep.m << ")\n";
    if (!rep.error.empty()) {
        os << "  error: " << rep.error << "\n";
        return;
    }
    Spectrum sp = spectral_summary(g, opts.zero_tol_rel);
    os << "spectrum:";
    for (const auto& grp : group_multiplicities(sp.eigenvalues)) {
        double shown = std::fabs(grp.value) <= sp.zero_tol ? 0.0 : grp.value;
        os << " " << fmt(shown, 4) << "^" << grp.multiplicity;
    }
    os << "\n";
    os << "inertia: n+ = " << sp.n_pos << ", n0 = " << sp.n_zero << ", n- = " << sp.n_neg
       << ";  s+ = " << fmt(sp.s_plus, 4) << ", s- = " << fmt(sp.s_minus, 4) << "\n";
    if (rep.m >= 1) {
        render_trace(os, rep.squares_trace, "iterative bound, sum of min(n+, omega) squares:");
        os << "  clique lower bound (iterative): " << rep.clique_lb_squares;
        if (rep.squares_counterexample) os << "  [no omega satisfied the inequality: counterexample?]";
        os << "\n";
        if (rep.two_eig_turan_fallback) {
            os << "  two-eigenvalue mode: complete graph, turan fallback => " << rep.clique_lb_two_eig << "\n";
        } else {
            os << "  two-eigenvalue bound (mu1^2 + mu2^2): " << rep.clique_lb_two_eig << "\n";
        }
        os << "  spectral turan bound: " << rep.clique_lb_turan << "\n";
        os << "  hoffman ratio chi bound: " << fmt(rep.hoffman_ratio_lb, 2)
           << "; full hoffman chi bound: " << rep.hoffman_full_lb << "\n";
        os << "  inertia omega upper bound: " << rep.cvetkovic_ub << "\n";
    }
    os << "oracle: omega = ";
    if (rep.omega_exact) os << *rep.omega_exact;
    else os << ">= " << rep.omega_lb << " (truncated)";
    os << ", chi = ";
    if (rep.chi_exact) os << *rep.chi_exact;
    else if (rep.chi_truncated) os << "? (truncated)";
    else os << "? (skipped)";
    os << ", triangle-free = " << (rep.triangle_free ? "yes" : "no") << "\n";
    if (rep.squares_holds_at_exact_omega) {
        os << "at exact omega: bound " << (*rep.squares_holds_at_exact_omega ? "holds" : "VIOLATED")
           << (rep.squares_borderline ? " (borderline)" : "") << ", s+ exceeds rhs: "
           << (*rep.s_plus_exceeds_at_omega ? "yes" : "no") << "\n";
    }
}

json report_to_json(const BoundReport& rep) {
    json j;
    j["label"] = rep.graph_label;
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["mu1"] = rep.mu1;
    j["n_pos"] = rep.n_pos;
    j["s_plus"] = rep.s_plus;
    j["clique_lb_squares"] = rep.clique_lb_squares;
    j["clique_lb_two_eig"] = rep.clique_lb_two_eig;
    j["clique_lb_turan"] = rep.clique_lb_turan;
    j["hoffman_ratio_lb"] = rep.hoffman_ratio_lb;
    j["hoffman_full_lb"] = rep.hoffman_full_lb;
    j["cvetkovic_ub"] = rep.cvetkovic_ub;
    j["triangle_free"] = rep.triangle_free;
    j["squares_counterexample"] = rep.squares_counterexample;
    if (rep.omega_exact) j["omega"] = *rep.omega_exact;
    j["omega_lb"] = rep.omega_lb;
    j["omega_truncated"] = rep.omega_truncated;
    if (rep.chi_exact) j["chi"] = *rep.chi_exact;
    j["chi_truncated"] = rep.chi_truncated;
    if (rep.squares_holds_at_exact_omega) j["squares_at_omega"] = *rep.squares_holds_at_exact_omega;
    if (rep.s_plus_exceeds_at_omega) j["s_plus_exceeds"] = *rep.s_plus_exceeds_at_omega;
    auto trace = json::array();
    for (const auto& s : rep.squares_trace)
        trace.push_back({{"omega", s.omega}, {"ell", s.ell}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"holds", s.holds}});
    j["squares_trace"] = trace;
    if (!rep.error.empty()) j["error"] = rep.error;
    return j;
}

void render_stats_text(std::ostream& os, const CorpusStats& stats) {
    os << "graphs: " << stats.total << " (errors: " << stats.error_count
       << ", truncated: " << stats.truncated_count << ")\n";
    os << "omega < chi: " << stats.omega_lt_chi_count << "\n";
    os << "violations: " << stats.squares_violations.size();
    for (const auto& label : stats.squares_violations) os << " " << label;
    os << "\n";
    os << "s+ exceeds 2m(omega-1)/omega at exact omega: " << stats.s_plus_exceeds_count << "\n";
    CompareSummary cmp = compare_bounds(stats);
    os << "sum-of-squares bound beats the two-eigenvalue bound: " << cmp.squares_beats_two_eig << "/"
       << cmp.omega_lt_chi << " (fraction " << fmt(cmp.fraction, 3) << ")\n";
}

int emit_stats(const CorpusStats& stats, const CommonOpts& c) {
    std::ofstream file;
    std::ostream& os = open_output(c, file);
    if (c.format == "csv") os << stats_to_csv(stats);
    else if (c.format == "json") os << stats_to_json(stats) << "\n";
    else render_stats_text(os, stats);
    return stats.squares_violations.empty() ? kExitOk : kExitVerificationFailed;
}

int cmd_analyze(const std::string& input, const CommonOpts& c) {
    ScanOptions opts = scan_options(c);
    std::vector<Graph> graphs = load_input(input, opts.graph6_max_n);
    std::ofstream file;
    std::ostream& os = open_output(c, file);
    int exit_code = kExitOk;
    json jall = json::array();
    CorpusStats all;
    for (const Graph& g : graphs) {
        BoundReport rep = analyze_graph(g, opts);
        if (rep.omega_truncated) exit_code = kExitTruncated;
        if (c.format == "text") render_report_text(os, rep, g, opts);
        else if (c.format == "json") jall.push_back(report_to_json(rep));
        ++all.total;
        all.per_graph.push_back(std::move(rep));
    }
    if (c.format == "json") os << (jall.size() == 1 ? jall[0] : jall).dump(2) << "\n";
    else if (c.format == "csv") os << stats_to_csv(all);
    return exit_code;
}

int cmd_gen(const std::vector<std::string>& specs, const CommonOpts& c) {
    std::ofstream file;
    std::ostream& os = open_output(c, file);
    for (const auto& text : specs) os << write_graph6(generate(parse_family_spec(text))) << "\n";
    return kExitOk;
}

int cmd_scan(const std::string& input, const CommonOpts& c) {
    std::ifstream file;
    std::istream& in = open_corpus(input, file);
    return emit_stats(scan_corpus(in, scan_options(c)), c);
}

int cmd_sweep_gcd(int n_max, const CommonOpts& c) {
    return emit_stats(sweep_gcd_graphs(n_max, scan_options(c)), c);
}

int cmd_compare(const std::string& input, const CommonOpts& c) {
    std::ifstream file;
    std::istream& in = open_corpus(input, file);
    CorpusStats stats = scan_corpus(in, scan_options(c));
    CompareSummary cmp = compare_bounds(stats);
    std::ofstream out;
    std::ostream& os = open_output(c, out);
    if (c.format == "json") {
        json j{{"omega_lt_chi", cmp.omega_lt_chi},
               {"squares_beats_two_eig", cmp.squares_beats_two_eig},
               {"fraction", cmp.fraction}};
        os << j.dump(2) << "\n";
    } else {
        os << "omega < chi population: " << cmp.omega_lt_chi << "\n";
        os << "sum-of-squares bound strictly better: " << cmp.squares_beats_two_eig << " (fraction "
           << fmt(cmp.fraction, 3) << ")\n";
    }
    return kExitOk;
}

int cmd_verify_family(ClosedFamily family, int p_max, const CommonOpts& c) {
    FamilyTheoremReport report = verify_family_theorem(family, p_max);
    std::ofstream file;
    std::ostream& os = open_output(c, file);
    long long failures = 0;
    double worst = 0;
    for (const auto& e : report.entries) {
        if (!e.holds) {
            ++failures;
            os << "FAIL p=" << e.p << " k=" << e.k << " tightness=" << fmt(e.tightness, 6) << "\n";
        }
        worst = std::max(worst, e.tightness);
    }
    os << (family == ClosedFamily::Kneser ? "kneser" : "johnson") << " sweep p <= " << p_max << ": "
       << report.entries.size() << " cases, " << failures << " failures, max lhs/rhs = " << fmt(worst, 6)
       << "\n";
    return report.all_hold ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_srg(const std::string& table, bool lambda1, const CommonOpts& c) {
    std::ifstream file(table);
    if (!file) throw std::runtime_error("cannot open table: " + table);
    auto rows = parse_srg_csv(file);
    std::ofstream out;
    std::ostream& os = open_output(c, out);
    long long failures = 0;
    for (const auto& p : rows) {
        bool ok = lambda1 ? lambda1_inequality(p) : typec_inequality(p);
        if (!ok) {
            ++failures;
            os << "FAIL srg(" << p.n << "," << p.d << "," << p.lambda << "," << p.mu << ")\n";
        }
    }
    os << (lambda1 ? "lambda=1" : "type-C") << " table: " << rows.size() << " parameter sets, "
       << failures << " failures\n";
    return failures == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_weakly_perfect(const std::string& input, const CommonOpts& c) {
    std::ifstream file;
    std::istream& in = open_corpus(input, file);
    CorpusStats stats = scan_corpus(in, scan_options(c));
    std::ofstream out;
    std::ostream& os = open_output(c, out);
    long long verified = 0, failures = 0, skipped = 0;
    for (const auto& rep : stats.per_graph) {
        if (!rep.error.empty() || !rep.omega_exact || !rep.chi_exact ||
            *rep.omega_exact != *rep.chi_exact || *rep.omega_exact < 2) {
            ++skipped;
            continue;
        }
        ++verified;
        if (!rep.squares_holds_at_exact_omega || !*rep.squares_holds_at_exact_omega) {
            ++failures;
            os << "FAIL " << rep.graph_label << " omega = chi = " << *rep.omega_exact << "\n";
        }
    }
    os << "weakly perfect corpus: " << verified << " verified, " << failures << " failures, " << skipped
       << " skipped (not weakly perfect / unsolved)\n";
    return failures == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral clique-number bounds: analyze graphs, sweep families, hunt counterexamples"};
    app.require_subcommand(1);

    CommonOpts c;
    std::string input;
    std::vector<std::string> gen_specs;
    int n_max = 60;
    int p_max = 24;

    CLI::App* analyze = app.add_subcommand("analyze", "Full bound report for one graph or file");
    analyze->add_option("input", input, "family spec (e.g. circulant:16:1,2,3,4), graph6 file, or graph6 line")
        ->required();
    add_common_flags(analyze, c);

    CLI::App* gen = app.add_subcommand("gen", "Generate graphs as graph6 lines");
    gen->add_option("specs", gen_specs, "family specs")->required();
    gen->add_option("--output,-o", c.output, "Write output to a file instead of stdout");

    CLI::App* scan = app.add_subcommand("scan", "Run all bounds over a graph6 corpus");
    scan->add_option("input", input, "graph6 file ('-' for stdin)")->required();
    add_common_flags(scan, c);

    CLI::App* sweep = app.add_subcommand("sweep-gcd", "Sweep gcd graphs X_n(d1,d2) for n <= n-max");
    sweep->add_option("--n-max", n_max, "Largest vertex count")->capture_default_str();
    add_common_flags(sweep, c);

    CLI::App* compare = app.add_subcommand("compare", "Compare the two iterative bounds over a corpus");
    compare->add_option("input", input, "graph6 file ('-' for stdin)")->required();
    add_common_flags(compare, c);

    CLI::App* verify = app.add_subcommand("verify", "Verify a proved statement over a parameter range");
    verify->require_subcommand(1);
    CLI::App* vk = verify->add_subcommand("kneser", "Family bound over all Kneser parameters");
    vk->add_option("--p-max", p_max, "Largest ground-set size");
    add_common_flags(vk, c, false);
    CLI::App* vj = verify->add_subcommand("johnson", "Family bound over all Johnson parameters");
    vj->add_option("--p-max", p_max, "Largest ground-set size");
    add_common_flags(vj, c, false);
    CLI::App* vt = verify->add_subcommand("srg-typec", "Type-C inequality over an SRG parameter table");
    vt->add_option("table", input, "CSV of n,d,lambda,mu rows")->required();
    add_common_flags(vt, c, false);
    CLI::App* vl = verify->add_subcommand("srg-lambda1", "lambda = 1 inequality over a parameter table");
    vl->add_option("table", input, "CSV of n,d,lambda,mu rows")->required();
    add_common_flags(vl, c, false);
    CLI::App* vw = verify->add_subcommand("weakly-perfect-corpus",
                                          "Bound holds at omega for every omega = chi graph");
    vw->add_option("input", input, "graph6 file ('-' for stdin)")->required();
    add_common_flags(vw, c, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        set_ineq_slack_factor(c.slack);
        if (*analyze) return cmd_analyze(input, c);
        if (*gen) return cmd_gen(gen_specs, c);
        if (*scan) return cmd_scan(input, c);
        if (*sweep) return cmd_sweep_gcd(n_max, c);
        if (*compare) return cmd_compare(input, c);
        if (*verify) {
            if (*vk) return cmd_verify_family(ClosedFamily::Kneser, p_max, c);
            if (*vj) return cmd_verify_family(ClosedFamily::Johnson, p_max, c);
            if (*vt) return cmd_verify_srg(input, false, c);
            if (*vl) return cmd_verify_srg(input, true, c);
            if (*vw) return cmd_verify_weakly_perfect(input, c);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
