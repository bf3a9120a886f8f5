#include "specclique/bounds.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace specclique {

namespace {

double g_slack_factor = 1e-9;

double conj_rhs(long long m, int omega) { return 2.0 * m * (omega - 1) / omega; }

bool is_complete(const Spectrum& sp, long long m) {
    long long n = sp.n();
    return m == n * (n - 1) / 2 && n >= 2 && m >= 1;
}

int omega_cap(const Spectrum& sp) {
    // omega <= chi <= 1 + mu1; the nudge keeps integral mu1 from rounding down.
    return static_cast<int>(std::floor(1.0 + sp.mu1() + 1e-9));
}

}  // namespace

double ineq_slack_factor() { return g_slack_factor; }

void set_ineq_slack_factor(double factor) {
    if (factor < 0) throw std::invalid_argument("slack factor must be nonnegative");
    g_slack_factor = factor;
}

bool squares_bound_holds(const Spectrum& sp, long long m, int omega) {
    if (omega < 2) throw std::invalid_argument("squares_bound_holds needs omega >= 2");
    if (m < 1) throw std::invalid_argument("squares_bound_holds needs m >= 1");
    int ell = std::min(sp.n_pos, omega);
    assert(ell == 0 || sp.eigenvalues[ell - 1] > sp.zero_tol);
    return sp.sum_top_squares(ell) <= conj_rhs(m, omega) + ineq_slack(2.0 * m);
}

bool two_eig_bound_holds(const Spectrum& sp, long long m, int omega) {
    if (omega < 2) throw std::invalid_argument("two_eig_bound_holds needs omega >= 2");
    if (is_complete(sp, m))
        throw std::invalid_argument("two_eig_bound_holds is not valid for complete graphs");
    return sp.sum_top_squares(2) <= conj_rhs(m, omega) + ineq_slack(2.0 * m);
}

IterativeResult clique_lb_iterative(const Spectrum& sp, long long m, LbMode mode) {
    IterativeResult res;
    if (m < 1) return res;  // edgeless: omega = 1 by convention

    if (mode == LbMode::TwoEig && is_complete(sp, m)) {
        res.turan_fallback = true;
        res.bound = clique_lb_turan(sp, m);
        return res;
    }

    int cap = omega_cap(sp);
    for (int omega = 2; omega <= cap; ++omega) {
        int ell = mode == LbMode::SumSquares ? std::min(sp.n_pos, omega) : std::min(sp.n(), 2);
        double lhs = sp.sum_top_squares(ell);
        double rhs = conj_rhs(m, omega);
        bool holds = lhs <= rhs + ineq_slack(2.0 * m);
        res.trace.push_back({omega, ell, lhs, rhs, holds});
        if (holds) {
            res.bound = omega;
            return res;
        }
    }
    // The inequality failed all the way up to the proved chi cap: if the
    // conjecture is true this cannot happen, so flag it.
    res.counterexample = true;
    res.bound = cap;
    return res;
}

int clique_lb_turan(const Spectrum& sp, long long m) {
    if (m < 1) throw std::invalid_argument("clique_lb_turan needs m >= 1");
    double mu1sq = sp.mu1() * sp.mu1();
    double denom = 2.0 * m - mu1sq;
    if (denom <= ineq_slack(2.0 * m)) return omega_cap(sp);  // near-equality (complete multipartite)
    int lb = static_cast<int>(std::ceil(2.0 * m / denom - 1e-9));
    return std::max(lb, 2);
}

double hoffman_ratio_lb(const Spectrum& sp) {
    if (sp.mu_min() >= 0) throw std::invalid_argument("no-edges: hoffman bound needs mu_n < 0");
    return 1.0 + sp.mu1() / std::fabs(sp.mu_min());
}

int hoffman_full_lb(const Spectrum& sp) {
    if (sp.mu_min() >= 0) throw std::invalid_argument("no-edges: hoffman bound needs mu_n < 0");
    const int n = sp.n();
    double slack = ineq_slack(sp.s_plus + sp.s_minus);
    double tail = 0;  // sum of the c-1 smallest eigenvalues
    for (int c = 2; c <= n; ++c) {
        tail += sp.eigenvalues[n - (c - 1)];
        if (sp.mu1() + tail <= slack) return c;
    }
    return n;  // unreachable: trace is zero and mu1 > 0
}

int cvetkovic_ub(const Spectrum& sp) {
    double tol = 1e-8 * std::max(1.0, sp.mu1());
    int at_most = 0, at_least = 0;
    for (double mu : sp.eigenvalues) {
        if (mu <= -1 + tol) ++at_most;
        if (mu >= -1 - tol) ++at_least;
    }
    return std::min(at_most + 1, at_least);
}

bool s_plus_exceeds(const Spectrum& sp, long long m, int omega) {
    if (omega < 2) throw std::invalid_argument("s_plus_exceeds needs omega >= 2");
    return sp.s_plus > conj_rhs(m, omega) + ineq_slack(2.0 * m);
}

bool walk_power_check(const Spectrum& sp, const Graph& g, int r, int omega) {
    if (r < 1) throw std::invalid_argument("walk_power_check needs r >= 1");
    if (omega < 2) throw std::invalid_argument("walk_power_check needs omega >= 2");
    int ell = std::min(sp.n_pos, omega);
    double lhs = 0;
    for (int i = 0; i < ell; ++i) {
        double p = sp.eigenvalues[i];
        for (int e = 1; e < r; ++e) p *= sp.eigenvalues[i];
        lhs += p;
    }
    double wr = walk_count(g, r);
    return lhs <= wr * (omega - 1) / omega + ineq_slack(wr);
}

}  // namespace specclique
