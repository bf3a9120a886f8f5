#pragma once

#include <stdexcept>
#include <vector>

#include "specclique/graph.hpp"

namespace specclique {

class eigen_error : public std::runtime_error {
public:
    explicit eigen_error(const std::string& what) : std::runtime_error(what) {}
};

struct EigenOptions {
    double residual_tol = 1e-9;  // per-pair contract: ||Av - mu v||_2 <= residual_tol * ||A||_2
    int max_iter = 30;           // implicit-shift iterations per eigenvalue
};

/// All adjacency eigenvalues, descending. Householder tridiagonalization
/// followed by implicit-shift QL; every eigenpair is residual-checked before
/// the eigenvectors are discarded. Throws eigen_error on no-convergence or a
/// residual violation.
std::vector<double> eigenvalues_symmetric(const Graph& g, const EigenOptions& opts = {});

/// Eigenvalues plus derived inertia and energy splits.
struct Spectrum {
    std::vector<double> eigenvalues;  // descending
    double zero_tol = 0;              // absolute threshold used to classify signs
    int n_pos = 0, n_zero = 0, n_neg = 0;
    double s_plus = 0, s_minus = 0;

    int n() const { return static_cast<int>(eigenvalues.size()); }
    double mu1() const { return eigenvalues.front(); }
    double mu_min() const { return eigenvalues.back(); }
    /// Sum of squares of the ell largest eigenvalues.
    double sum_top_squares(int ell) const;
};

/// Classifies an already-descending eigenvalue list: |mu| <= zero_tol_rel * max(1, mu1)
/// counts as zero and is excluded from s+ / s-.
Spectrum classify_spectrum(std::vector<double> descending, double zero_tol_rel);

Spectrum spectral_summary(const Graph& g, double zero_tol_rel = 1e-8, const EigenOptions& opts = {});

/// w_r = 1^T A^(r-1) 1, the number of walks on r vertices. Exact integer
/// accumulation with overflow detection, falling back to floating point.
double walk_count(const Graph& g, int r);

struct EigenGroup {
    double value;
    int multiplicity;
};

/// Groups near-equal eigenvalues for display (gap threshold relative to max(1, mu1)).
std::vector<EigenGroup> group_multiplicities(const std::vector<double>& descending, double gap_rel = 1e-6);

}  // namespace specclique
