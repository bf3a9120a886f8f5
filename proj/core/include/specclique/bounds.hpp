#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specclique/graph.hpp"
#include "specclique/spectral.hpp"

namespace specclique {

/// Relative factor behind every inequality comparison (default 1e-9).
/// Set once at startup; not meant to change during parallel work.
double ineq_slack_factor();
void set_ineq_slack_factor(double factor);

/// Additive tolerance used by every inequality comparison, scaled to 2m.
inline double ineq_slack(double two_m) { return ineq_slack_factor() * std::max(1.0, two_m); }

/// Sum-of-squares bound with ell = min(n+, omega):
/// mu_1^2 + ... + mu_ell^2 <= 2m(omega-1)/omega.
bool squares_bound_holds(const Spectrum& sp, long long m, int omega);

/// Two-eigenvalue form: mu_1^2 + mu_2^2 <= 2m(omega-1)/omega.
/// Not valid for complete graphs; throws std::invalid_argument on one.
bool two_eig_bound_holds(const Spectrum& sp, long long m, int omega);

enum class LbMode { SumSquares, TwoEig };

struct IterStep {
    int omega;
    int ell;
    double lhs;
    double rhs;
    bool holds;
};

struct IterativeResult {
    int bound = 1;                 // smallest non-refuted omega (1 for edgeless input)
    bool counterexample = false;   // nothing <= floor(1 + mu1) satisfied the inequality
    bool turan_fallback = false;   // BN mode on a complete graph
    std::vector<IterStep> trace;
};

/// Raises a candidate omega from 2 until the selected inequality holds
/// (ell recomputed per candidate in SumSquares mode). Cap: omega <= chi <= 1 + mu1.
IterativeResult clique_lb_iterative(const Spectrum& sp, long long m, LbMode mode);

/// ceil(2m / (2m - mu1^2)), clamped to >= 2; capped at floor(1 + mu1) near equality.
int clique_lb_turan(const Spectrum& sp, long long m);

/// 1 + mu1/|mu_n| <= chi. Requires mu_n < 0 (at least one edge).
double hoffman_ratio_lb(const Spectrum& sp);

/// Smallest c >= 2 with mu_1 + mu_{n-c+2} + ... + mu_n <= 0; a chi lower bound.
int hoffman_full_lb(const Spectrum& sp);

/// omega <= min(#{mu_i <= -1} + 1, #{mu_i >= -1}).
int cvetkovic_ub(const Spectrum& sp);

/// s+ > 2m(omega-1)/omega: the full positive energy overshoots the bound.
bool s_plus_exceeds(const Spectrum& sp, long long m, int omega);

/// Walk-power variant mu_1^r + ... + mu_ell^r <= w_r(omega-1)/omega.
/// Diagnostic only; known to fail for r != 2.
bool walk_power_check(const Spectrum& sp, const Graph& g, int r, int omega);

/// Everything the pipeline knows about one graph.
struct BoundReport {
    std::string graph_label;
    int n = 0;
    long long m = 0;
    double mu1 = 0;
    int n_pos = 0;
    double s_plus = 0;

    int clique_lb_squares = 1;
    bool squares_counterexample = false;
    int clique_lb_two_eig = 1;
    bool two_eig_counterexample = false;
    bool two_eig_turan_fallback = false;
    int clique_lb_turan = 1;
    double hoffman_ratio_lb = 0;
    int hoffman_full_lb = 0;
    int cvetkovic_ub = 0;
    bool triangle_free = false;

    std::optional<int> omega_exact;
    int omega_lb = 1;  // best clique found even when the search truncated
    bool omega_truncated = false;
    std::optional<int> chi_exact;
    bool chi_truncated = false;

    std::optional<bool> squares_holds_at_exact_omega;
    bool squares_borderline = false;  // violation that did not survive the tightened re-check
    std::optional<bool> s_plus_exceeds_at_omega;

    std::vector<IterStep> squares_trace;
    std::vector<IterStep> two_eig_trace;
    std::string error;
};

}  // namespace specclique
