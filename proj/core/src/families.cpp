#include "specclique/families.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace specclique {

namespace {

using i128 = __int128;

[[noreturn]] void infeasible(const std::string& msg) {
    throw std::invalid_argument("infeasible-parameters: " + msg);
}

double slack_for(double scale) { return 1e-9 * std::max(1.0, std::fabs(scale)); }

}  // namespace

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    i128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > i128{1} << 62) throw std::overflow_error("binomial overflow");
    }
    return static_cast<long long>(r);
}

long long ClosedSpectrum::vertex_count() const {
    long long t = 0;
    for (const auto& e : entries) t += e.multiplicity;
    return t;
}

long long ClosedSpectrum::trace() const {
    long long t = 0;
    for (const auto& e : entries) t += e.multiplicity * e.value;
    return t;
}

long long ClosedSpectrum::sum_squares() const {
    long long t = 0;
    for (const auto& e : entries) t += e.multiplicity * e.value * e.value;
    return t;
}

long long ClosedSpectrum::positive_count() const {
    long long t = 0;
    for (const auto& e : entries)
        if (e.value > 0) t += e.multiplicity;
    return t;
}

std::vector<long long> ClosedSpectrum::top_values(long long count) const {
    std::vector<long long> out;
    for (const auto& e : entries)
        for (long long i = 0; i < e.multiplicity && static_cast<long long>(out.size()) < count; ++i)
            out.push_back(e.value);
    return out;
}

namespace {

ClosedSpectrum subset_family_spectrum(int p, int k, bool kneser) {
    ClosedSpectrum sp;
    for (int i = 0; i <= k; ++i) {
        long long value = kneser ? (i % 2 ? -1 : 1) * binomial(p - k - i, k - i)
                                 : static_cast<long long>(k - i) * (p - k - i) - i;
        long long mult = binomial(p, i) - binomial(p, i - 1);
        sp.entries.push_back({value, mult});
    }
    std::sort(sp.entries.begin(), sp.entries.end(),
              [](const auto& a, const auto& b) { return a.value > b.value; });
    // Merge equal eigenvalues (Kneser(2k,k) repeats +-1).
    ClosedSpectrum merged;
    for (const auto& e : sp.entries) {
        if (!merged.entries.empty() && merged.entries.back().value == e.value)
            merged.entries.back().multiplicity += e.multiplicity;
        else
            merged.entries.push_back(e);
    }
    return merged;
}

}  // namespace

KneserInfo kneser_closed(int p, int k) {
    if (k < 1 || p < 2 * k) throw std::invalid_argument("invalid-parameters: kneser needs p >= 2k >= 2");
    KneserInfo info;
    info.p = p;
    info.k = k;
    info.spectrum = subset_family_spectrum(p, k, /*kneser=*/true);
    info.n = binomial(p, k);
    info.two_m = binomial(p, k) * binomial(p - k, k);
    info.chi = p - 2 * k + 2;
    info.omega = p / k;
    info.n_pos = k % 2 == 0 ? binomial(p - 1, k) : binomial(p - 1, k - 1);
    return info;
}

JohnsonInfo johnson_closed(int p, int k) {
    if (k < 1 || p < 2 * k) throw std::invalid_argument("invalid-parameters: johnson needs p >= 2k >= 2");
    JohnsonInfo info;
    info.p = p;
    info.k = k;
    info.spectrum = subset_family_spectrum(p, k, /*kneser=*/false);
    info.n = binomial(p, k);
    info.two_m = static_cast<long long>(k) * (p - k) * binomial(p, k);
    info.omega = p - k + 1;

    // omega = 1 - mu1/mu_n must come out exactly from the closed eigenvalues.
    long long mu1 = info.spectrum.entries.front().value;
    long long mun = info.spectrum.entries.back().value;
    if (mun >= 0 || mu1 % (-mun) != 0 || 1 + mu1 / (-mun) != info.omega)
        throw std::logic_error("johnson omega identity failed");
    return info;
}

SrgParams srg_derive(long long n, long long d, long long lambda, long long mu) {
    if (d <= 0 || d >= n) infeasible("need 0 < d < n");
    if (lambda < 0) infeasible("need lambda >= 0");
    if (mu < 1) infeasible("need mu >= 1 (primitive SRG)");
    long long disc = (lambda - mu) * (lambda - mu) + 4 * (d - mu);
    if (disc <= 0) infeasible("restricted-eigenvalue discriminant not positive");

    SrgParams p;
    p.n = n;
    p.d = d;
    p.lambda = lambda;
    p.mu = mu;
    double sq = std::sqrt(static_cast<double>(disc));
    p.r = (static_cast<double>(lambda - mu) + sq) / 2;
    p.s = (static_cast<double>(lambda - mu) - sq) / 2;
    if (p.r < -1e-9 || p.s >= 0) infeasible("need r >= 0 > s");

    double fg_den = p.r - p.s;
    double g_real = (d + (n - 1) * p.r) / fg_den;
    double f_real = (n - 1) - g_real;
    p.f = std::llround(f_real);
    p.g = std::llround(g_real);
    if (std::fabs(f_real - p.f) > 1e-6 || std::fabs(g_real - p.g) > 1e-6)
        infeasible("multiplicities are not integral");
    if (p.f < 0 || p.g < 0) infeasible("negative multiplicity");

    long long rr = std::llround(p.r), ss = std::llround(p.s);
    p.integral = std::fabs(p.r - rr) < 1e-6 && std::fabs(p.s - ss) < 1e-6;
    if (p.integral) {
        p.r_int = rr;
        p.s_int = ss;
    }

    // Feasibility identities: trace, (d-r)(d-s) = n(d+rs), mu = rs + d.
    double trace = d + p.f * p.r + p.g * p.s;
    if (std::fabs(trace) > 1e-6 * std::max<double>(1, d)) infeasible("trace condition violated");
    double lhs = (d - p.r) * (d - p.s);
    double rhs = n * (d + p.r * p.s);
    if (std::fabs(lhs - rhs) > 1e-6 * std::max(1.0, std::fabs(rhs))) infeasible("(d-r)(d-s) = n(d+rs) violated");
    if (std::fabs(p.r * p.s + d - mu) > 1e-6 * std::max<double>(1, mu)) infeasible("mu = rs + d violated");
    return p;
}

SrgSquaresEval srg_squares_form(const SrgParams& p, int omega) {
    if (omega < 2) throw std::invalid_argument("srg_squares_form needs omega >= 2");
    if (omega > 1 + p.f)
        throw std::invalid_argument("omega-exceeds-inertia-bound: omega > 1 + f");
    SrgSquaresEval ev;
    if (p.integral) {
        ev.exact = true;
        ev.lhs_int = p.d * p.d + (omega - 1) * p.r_int * p.r_int;
        ev.rhs_num = p.n * p.d * (omega - 1);
        ev.lhs = static_cast<double>(ev.lhs_int);
        ev.rhs = static_cast<double>(ev.rhs_num) / omega;
        ev.holds = static_cast<i128>(ev.lhs_int) * omega <= static_cast<i128>(ev.rhs_num);
    } else {
        ev.lhs = static_cast<double>(p.d) * p.d + (omega - 1) * p.r * p.r;
        ev.rhs = static_cast<double>(p.n) * p.d * (omega - 1) / omega;
        ev.holds = ev.lhs <= ev.rhs + slack_for(ev.rhs);
    }
    return ev;
}

bool typec_inequality(const SrgParams& p) {
    if (p.integral) {
        i128 lhs = i128{p.r_int} * p.mu;
        i128 rhs = i128{p.d} * p.s_int * (p.s_int + 1);
        return lhs <= rhs;
    }
    double rhs = static_cast<double>(p.d) * p.s * (p.s + 1);
    return p.r * p.mu <= rhs + slack_for(rhs);
}

bool lambda1_inequality(const SrgParams& p) {
    if (p.lambda != 1) throw std::invalid_argument("lambda-not-one");
    long long rs = p.mu - p.d;  // rs = mu - d exactly
    i128 lhs = i128{8} * p.d + (4 + p.d) * rs;
    if (lhs <= i128{p.d} * p.d) return true;
    bool exceptional = (p.n == 9 && p.d == 4 && p.mu == 2) || (p.n == 15 && p.d == 6 && p.mu == 3);
    return p.d < 8 && exceptional && srg_squares_form(p, 3).holds;
}

FamilyTheoremReport verify_family_theorem(ClosedFamily family, int p_max) {
    if (p_max < 4) throw std::invalid_argument("verify_family_theorem needs p_max >= 4");
    FamilyTheoremReport report;
    for (int p = 4; p <= p_max; ++p) {
        for (int k = 2; 2 * k <= p; ++k) {
            ClosedSpectrum spectrum;
            long long two_m, n_pos;
            int omega;
            if (family == ClosedFamily::Kneser) {
                auto info = kneser_closed(p, k);
                spectrum = info.spectrum;
                two_m = info.two_m;
                omega = info.omega;
                n_pos = info.n_pos;
            } else {
                auto info = johnson_closed(p, k);
                spectrum = info.spectrum;
                two_m = info.two_m;
                omega = info.omega;
                n_pos = info.spectrum.positive_count();
            }
            long long ell = std::min<long long>(n_pos, omega);
            i128 lhs = 0;
            for (long long v : spectrum.top_values(ell)) lhs += i128{v} * v;
            i128 rhs_scaled = i128{two_m} * (omega - 1);  // rhs = rhs_scaled / omega
            bool holds = lhs * omega <= rhs_scaled;
            double tightness = static_cast<double>(lhs) * omega / static_cast<double>(rhs_scaled);
            report.entries.push_back({p, k, holds, tightness});
            if (!holds) report.all_hold = false;
        }
    }
    return report;
}

std::vector<SrgParams> parse_srg_csv(std::istream& in) {
    std::vector<SrgParams> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ss(line);
        long long v[4];
        char comma;
        for (int i = 0; i < 4; ++i) {
            if (i > 0 && !(ss >> comma && comma == ','))
                throw std::invalid_argument("srg csv line " + std::to_string(lineno) + ": expected n,d,lambda,mu");
            if (!(ss >> v[i]))
                throw std::invalid_argument("srg csv line " + std::to_string(lineno) + ": expected n,d,lambda,mu");
        }
        out.push_back(srg_derive(v[0], v[1], v[2], v[3]));
    }
    return out;
}

}  // namespace specclique
