#pragma once

#include <istream>
#include <string>
#include <vector>

namespace specclique {

/// Exact n choose k; throws std::overflow_error past the 63-bit range.
long long binomial(int n, int k);

/// Integer eigenvalue/multiplicity pairs, descending by eigenvalue.
struct ClosedSpectrum {
    struct Entry {
        long long value;
        long long multiplicity;
    };
    std::vector<Entry> entries;

    long long vertex_count() const;
    long long trace() const;         // sum mult * value
    long long sum_squares() const;   // sum mult * value^2, equals 2m
    long long positive_count() const;

    /// Expanded view, descending, truncated to the first `count` values.
    std::vector<long long> top_values(long long count) const;
};

struct KneserInfo {
    int p, k;
    ClosedSpectrum spectrum;
    long long n;
    long long two_m;
    int chi;    // p - 2k + 2
    int omega;  // floor(p / k)
    long long n_pos;  // C(p-1, k) for even k, C(p-1, k-1) for odd k
};
KneserInfo kneser_closed(int p, int k);

struct JohnsonInfo {
    int p, k;
    ClosedSpectrum spectrum;
    long long n;
    long long two_m;
    int omega;  // p - k + 1 = 1 - mu1/mu_n
};
JohnsonInfo johnson_closed(int p, int k);

/// SRG(n, d, lambda, mu) with derived restricted eigenvalues and multiplicities.
struct SrgParams {
    long long n = 0, d = 0, lambda = 0, mu = 0;
    double r = 0, s = 0;  // roots of x^2 - (lambda-mu)x - (d-mu), r > s
    long long f = 0, g = 0;
    bool integral = false;  // r, s (hence f, g identities) are exact integers
    long long r_int = 0, s_int = 0;
};

/// Solves the restricted-eigenvalue quadratic and the trace conditions.
/// Throws std::invalid_argument("infeasible-parameters...") when any identity fails.
SrgParams srg_derive(long long n, long long d, long long lambda, long long mu);

/// d^2 + (omega-1) r^2 <= n d (omega-1) / omega, the SRG form of the
/// sum-of-squares bound (ell = omega for SRGs).
struct SrgSquaresEval {
    bool holds = false;
    double lhs = 0, rhs = 0;
    bool exact = false;           // integer path (integral r)
    long long lhs_int = 0;        // d^2 + (omega-1) r^2
    long long rhs_num = 0;        // n d (omega-1); rhs = rhs_num / omega
};
SrgSquaresEval srg_squares_form(const SrgParams& p, int omega);

/// r mu <= d s (s+1); holds for every SRG attaining omega = 1 - d/s.
bool typec_inequality(const SrgParams& p);

/// For lambda = 1: 8d + 4rs + drs <= d^2, or one of the two d < 8
/// parameter sets checked directly at omega = 3.
bool lambda1_inequality(const SrgParams& p);

enum class ClosedFamily { Kneser, Johnson };

struct FamilyTheoremEntry {
    int p, k;
    bool holds;
    double tightness;  // lhs / rhs
};
struct FamilyTheoremReport {
    std::vector<FamilyTheoremEntry> entries;
    bool all_hold = true;
};

/// Exact-arithmetic sweep of the family bound over 2 <= k <= p/2, p <= p_max.
FamilyTheoremReport verify_family_theorem(ClosedFamily family, int p_max);

/// Parses "n,d,lambda,mu" CSV lines ('#' comments and blank lines skipped).
std::vector<SrgParams> parse_srg_csv(std::istream& in);

}  // namespace specclique
