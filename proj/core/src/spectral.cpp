#include "specclique/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

namespace specclique {

namespace {

// Householder reduction of the symmetric matrix a (n x n, row-major) to
// tridiagonal form; d gets the diagonal, e the subdiagonal (e[0] unused).
// a is overwritten with the accumulated orthogonal transform.
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d, std::vector<double>& e) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    for (int i = n - 1; i >= 1; --i) {
        int l = i - 1;
        double h = 0, scale = 0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::fabs(at(i, k));
            if (scale == 0.0) {
                e[i] = at(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    at(i, k) /= scale;
                    h += at(i, k) * at(i, k);
                }
                double f = at(i, l);
                double g = f >= 0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                at(i, l) = f - g;
                f = 0;
                for (int j = 0; j <= l; ++j) {
                    at(j, i) = at(i, j) / h;
                    g = 0;
                    for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
                    for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
                    e[j] = g / h;
                    f += e[j] * at(i, j);
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = at(i, j);
                    g = e[j] - hh * f;
                    e[j] = g;
                    for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
                }
            }
        } else {
            e[i] = at(i, l);
        }
        d[i] = h;
    }
    d[0] = 0;
    e[0] = 0;
    for (int i = 0; i < n; ++i) {
        int l = i - 1;
        if (d[i] != 0.0) {
            for (int j = 0; j <= l; ++j) {
                double g = 0;
                for (int k = 0; k <= l; ++k) g += at(i, k) * at(k, j);
                for (int k = 0; k <= l; ++k) at(k, j) -= g * at(k, i);
            }
        }
        d[i] = at(i, i);
        at(i, i) = 1;
        for (int j = 0; j <= l; ++j) at(j, i) = at(i, j) = 0;
    }
}

// Implicit-shift QL on the tridiagonal (d, e), rotating the columns of z along.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, int n, std::vector<double>& z, int max_iter) {
    auto zt = [&](int i, int j) -> double& { return z[static_cast<size_t>(i) * n + j]; };
    const double eps = std::numeric_limits<double>::epsilon();

    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0;

    // Absolute deflation floor: inside a cluster of near-zero eigenvalues the
    // relative test alone never fires.
    double anorm = 0;
    for (int i = 0; i < n; ++i) anorm = std::max(anorm, std::fabs(d[i]) + std::fabs(e[i]));

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd || std::fabs(e[m]) <= eps * anorm) break;
            }
            if (m != l) {
                if (iter++ == max_iter)
                    throw eigen_error("no-convergence: QL iteration cap (" + std::to_string(max_iter) +
                                      ") exceeded at eigenvalue " + std::to_string(l));
                double g = (d[l + 1] - d[l]) / (2 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1, c = 1, p = 0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (int k = 0; k < n; ++k) {
                        f = zt(k, i + 1);
                        zt(k, i + 1) = s * zt(k, i) + c * f;
                        zt(k, i) = c * zt(k, i) - s * f;
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0;
            }
        } while (m != l);
    }
}

}  // namespace

std::vector<double> eigenvalues_symmetric(const Graph& g, const EigenOptions& opts) {
    const int n = g.n();
    if (opts.residual_tol <= 0) throw std::invalid_argument("residual_tol must be positive");

    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.adjacent(i, j)) a[static_cast<size_t>(i) * n + j] = 1.0;

    std::vector<double> d(n, 0.0), e(n, 0.0);
    if (n == 1) return {0.0};

    tridiagonalize(a, n, d, e);
    ql_implicit(d, e, n, a, opts.max_iter);

    // Sort descending, carrying eigenvector columns via a permutation.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return d[x] > d[y]; });

    double norm_a = 0;
    for (double v : d) norm_a = std::max(norm_a, std::fabs(v));

    // Residual contract per eigenpair: ||Av - mu v||_2 <= tol * ||A||_2.
    std::vector<double> av(n);
    for (int j = 0; j < n; ++j) {
        double mu = d[j];
        for (int i = 0; i < n; ++i) {
            double acc = 0;
            auto row = g.row(i);
            for (int w = 0; w < g.words_per_row(); ++w) {
                std::uint64_t word = row[w];
                while (word) {
                    int b = std::countr_zero(word);
                    word &= word - 1;
                    acc += a[static_cast<size_t>(w * 64 + b) * n + j];
                }
            }
            av[i] = acc - mu * a[static_cast<size_t>(i) * n + j];
        }
        double res = std::sqrt(std::inner_product(av.begin(), av.end(), av.begin(), 0.0));
        if (norm_a == 0.0 ? res != 0.0 : res > opts.residual_tol * norm_a)
            throw eigen_error("eigenpair residual " + std::to_string(res) + " exceeds contract");
    }

    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = d[order[i]];
    return out;
}

double Spectrum::sum_top_squares(int ell) const {
    double s = 0;
    for (int i = 0; i < ell && i < n(); ++i) s += eigenvalues[i] * eigenvalues[i];
    return s;
}

Spectrum classify_spectrum(std::vector<double> descending, double zero_tol_rel) {
    if (zero_tol_rel <= 0) throw std::invalid_argument("zero_tol_rel must be positive");
    Spectrum sp;
    sp.eigenvalues = std::move(descending);
    sp.zero_tol = zero_tol_rel * std::max(1.0, sp.eigenvalues.empty() ? 0.0 : sp.eigenvalues.front());
    for (double mu : sp.eigenvalues) {
        if (std::fabs(mu) <= sp.zero_tol) {
            ++sp.n_zero;
        } else if (mu > 0) {
            ++sp.n_pos;
            sp.s_plus += mu * mu;
        } else {
            ++sp.n_neg;
            sp.s_minus += mu * mu;
        }
    }
    return sp;
}

Spectrum spectral_summary(const Graph& g, double zero_tol_rel, const EigenOptions& opts) {
    return classify_spectrum(eigenvalues_symmetric(g, opts), zero_tol_rel);
}

double walk_count(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("walk length must be >= 1");
    const int n = g.n();

    // Exact path in 128-bit accumulators; any overflow restarts in floating point.
    using u128 = unsigned __int128;
    constexpr u128 kCap = ~u128{0} >> 1;
    std::vector<u128> v(n, 1), next(n);
    bool overflow = false;
    for (int step = 0; step < r - 1 && !overflow; ++step) {
        for (int i = 0; i < n && !overflow; ++i) {
            u128 acc = 0;
            auto row = g.row(i);
            for (int w = 0; w < g.words_per_row(); ++w) {
                std::uint64_t word = row[w];
                while (word) {
                    int b = std::countr_zero(word);
                    word &= word - 1;
                    u128 add = v[w * 64 + b];
                    if (acc > kCap - add) {
                        overflow = true;
                        break;
                    }
                    acc += add;
                }
                if (overflow) break;
            }
            next[i] = acc;
        }
        std::swap(v, next);
    }
    if (!overflow) {
        u128 total = 0;
        for (u128 x : v) {
            if (total > kCap - x) {
                overflow = true;
                break;
            }
            total += x;
        }
        if (!overflow) return static_cast<double>(total);
    }

    std::vector<double> vf(n, 1.0), nf(n);
    for (int step = 0; step < r - 1; ++step) {
        for (int i = 0; i < n; ++i) {
            double acc = 0;
            auto row = g.row(i);
            for (int w = 0; w < g.words_per_row(); ++w) {
                std::uint64_t word = row[w];
                while (word) {
                    int b = std::countr_zero(word);
                    word &= word - 1;
                    acc += vf[w * 64 + b];
                }
            }
            nf[i] = acc;
        }
        std::swap(vf, nf);
    }
    return std::accumulate(vf.begin(), vf.end(), 0.0);
}

std::vector<EigenGroup> group_multiplicities(const std::vector<double>& descending, double gap_rel) {
    std::vector<EigenGroup> groups;
    if (descending.empty()) return groups;
    double thr = gap_rel * std::max(1.0, descending.front());
    size_t i = 0;
    while (i < descending.size()) {
        size_t j = i + 1;
        double sum = descending[i];
        while (j < descending.size() && descending[j - 1] - descending[j] <= thr) {
            sum += descending[j];
            ++j;
        }
        groups.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
        i = j;
    }
    return groups;
}

}  // namespace specclique
