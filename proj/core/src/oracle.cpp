#include "specclique/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace specclique {

namespace {

using Word = std::uint64_t;

// Smallest-last elimination order; reversing it puts high-core vertices first.
std::vector<int> degeneracy_order(const Graph& g) {
    const int n = g.n();
    std::vector<int> deg(n), order;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        removed[best] = 1;
        order.push_back(best);
        for (int u = 0; u < n; ++u)
            if (!removed[u] && g.adjacent(best, u)) --deg[u];
    }
    std::reverse(order.begin(), order.end());
    return order;
}

class CliqueSolver {
public:
    CliqueSolver(const Graph& g, long long node_limit)
        : n_(g.n()), words_((g.n() + 63) / 64), limit_(node_limit) {
        order_ = degeneracy_order(g);
        adj_.assign(static_cast<size_t>(n_) * words_, 0);
        std::vector<int> pos(n_);
        for (int i = 0; i < n_; ++i) pos[order_[i]] = i;
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (g.adjacent(order_[a], order_[b]))
                    adj_[static_cast<size_t>(a) * words_ + (b >> 6)] |= Word{1} << (b & 63);
    }

    CliqueResult solve() {
        greedy_seed();
        std::vector<Word> all(words_, 0);
        for (int v = 0; v < n_; ++v) all[v >> 6] |= Word{1} << (v & 63);
        current_.clear();
        expand(all, 0);

        CliqueResult res;
        res.omega = best_;
        res.truncated = truncated_;
        res.nodes = nodes_;
        for (int v : best_clique_) res.witness.push_back(order_[v]);
        std::sort(res.witness.begin(), res.witness.end());
        return res;
    }

private:
    const Word* row(int v) const { return adj_.data() + static_cast<size_t>(v) * words_; }

    void greedy_seed() {
        std::vector<int> clique;
        std::vector<Word> cand(words_, 0);
        for (int v = 0; v < n_; ++v) cand[v >> 6] |= Word{1} << (v & 63);
        for (int v = 0; v < n_; ++v) {
            if (!((cand[v >> 6] >> (v & 63)) & 1)) continue;
            clique.push_back(v);
            for (int w = 0; w < words_; ++w) cand[w] &= row(v)[w];
        }
        best_ = static_cast<int>(clique.size());
        best_clique_ = clique;
    }

    // Greedy coloring of P: emits vertices class by class so that the color
    // number is an upper bound on the clique extension within the prefix.
    void color_sort(const std::vector<Word>& P, std::vector<int>& order, std::vector<int>& bound) {
        order.clear();
        bound.clear();
        std::vector<Word> uncolored = P;
        std::vector<Word> q(words_);
        int color = 0;
        while (true) {
            bool any = false;
            for (int w = 0; w < words_; ++w)
                if (uncolored[w]) { any = true; break; }
            if (!any) break;
            ++color;
            q = uncolored;
            while (true) {
                int v = -1;
                for (int w = 0; w < words_; ++w)
                    if (q[w]) { v = w * 64 + std::countr_zero(q[w]); break; }
                if (v < 0) break;
                q[v >> 6] &= ~(Word{1} << (v & 63));
                uncolored[v >> 6] &= ~(Word{1} << (v & 63));
                for (int w = 0; w < words_; ++w) q[w] &= ~row(v)[w];
                order.push_back(v);
                bound.push_back(color);
            }
        }
    }

    void expand(std::vector<Word>& P, int depth) {
        if (truncated_) return;
        if (++nodes_ > limit_) {
            truncated_ = true;
            return;
        }

        std::vector<int> order, bound;
        color_sort(P, order, bound);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (depth + bound[i] <= best_) return;  // color bound prunes this and all earlier
            int v = order[i];
            current_.push_back(v);

            std::vector<Word> next(words_);
            bool empty = true;
            for (int w = 0; w < words_; ++w) {
                next[w] = P[w] & row(v)[w];
                if (next[w]) empty = false;
            }
            if (empty) {
                if (depth + 1 > best_) {
                    best_ = depth + 1;
                    best_clique_ = current_;
                }
            } else {
                expand(next, depth + 1);
            }
            current_.pop_back();
            P[v >> 6] &= ~(Word{1} << (v & 63));
            if (truncated_) return;
        }
    }

    int n_, words_;
    long long limit_, nodes_ = 0;
    bool truncated_ = false;
    int best_ = 0;
    std::vector<Word> adj_;
    std::vector<int> order_, current_, best_clique_;
};

}  // namespace

CliqueResult max_clique_exact(const Graph& g, long long node_limit) {
    if (g.m() == 0) {
        CliqueResult r;
        r.omega = 1;
        r.witness = {0};
        return r;
    }
    return CliqueSolver(g, node_limit).solve();
}

namespace {

// Two 64-bit words cover color sets up to k = 128.
struct ColorMask {
    Word lo = 0, hi = 0;
    void set(int c) { (c < 64 ? lo : hi) |= Word{1} << (c & 63); }
    void clear(int c) { (c < 64 ? lo : hi) &= ~(Word{1} << (c & 63)); }
    bool test(int c) const { return ((c < 64 ? lo : hi) >> (c & 63)) & 1; }
    int count() const { return std::popcount(lo) + std::popcount(hi); }
};

class KColoring {
public:
    KColoring(const Graph& g, long long node_limit) : g_(g), n_(g.n()), limit_(node_limit) {
        degree_ = g.degrees();
    }

    // Tries to color with at most k colors. Returns true/false; truncated()
    // reports whether the search space was exhausted.
    bool feasible(int k, const std::vector<int>& precolored) {
        k_ = k;
        color_.assign(n_, -1);
        sat_.assign(n_, ColorMask{});
        sat_count_.assign(n_, 0);
        neighbor_count_.assign(static_cast<size_t>(n_) * k, 0);
        max_used_ = 0;
        truncated_ = false;
        int placed = 0;
        for (int v : precolored) {
            if (placed >= k) break;
            assign(v, placed++);
        }
        max_used_ = placed;
        return dive(n_ - placed);
    }

    bool truncated() const { return truncated_; }
    long long nodes() const { return nodes_; }

private:
    // neighbor_count_[u*k + c]: colored neighbors of u wearing c; saturation
    // masks follow the zero/nonzero transitions.
    void assign(int v, int c) {
        color_[v] = c;
        for (int u = 0; u < n_; ++u)
            if (g_.adjacent(v, u) && neighbor_count_[static_cast<size_t>(u) * k_ + c]++ == 0) {
                sat_[u].set(c);
                ++sat_count_[u];
            }
    }

    void unassign(int v, int c) {
        color_[v] = -1;
        for (int u = 0; u < n_; ++u)
            if (g_.adjacent(v, u) && --neighbor_count_[static_cast<size_t>(u) * k_ + c] == 0) {
                sat_[u].clear(c);
                --sat_count_[u];
            }
    }

    bool dive(int remaining) {
        if (remaining == 0) return true;
        if (++nodes_ > limit_) {
            truncated_ = true;
            return false;
        }
        // DSATUR choice: most saturated, then highest degree, then lowest index.
        int v = -1;
        for (int u = 0; u < n_; ++u) {
            if (color_[u] >= 0) continue;
            if (v < 0 || sat_count_[u] > sat_count_[v] ||
                (sat_count_[u] == sat_count_[v] && degree_[u] > degree_[v]))
                v = u;
        }
        if (sat_count_[v] >= k_) return false;

        int limit_color = std::min(k_ - 1, max_used_);  // at most one fresh color
        for (int c = 0; c <= limit_color; ++c) {
            if (sat_[v].test(c)) continue;
            int prev_max = max_used_;
            assign(v, c);
            max_used_ = std::max(max_used_, c + 1);
            if (dive(remaining - 1)) return true;
            unassign(v, c);
            max_used_ = prev_max;
            if (truncated_) return false;
        }
        return false;
    }

    const Graph& g_;
    int n_, k_ = 0;
    long long limit_, nodes_ = 0;
    bool truncated_ = false;
    int max_used_ = 0;
    std::vector<int> color_, sat_count_, degree_, neighbor_count_;
    std::vector<ColorMask> sat_;
};

// Plain DSATUR greedy; returns the number of colors it used.
int dsatur_greedy(const Graph& g) {
    const int n = g.n();
    std::vector<int> color(n, -1), satc(n, 0), degree = g.degrees();
    std::vector<ColorMask> sat(n);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (color[u] >= 0) continue;
            if (v < 0 || satc[u] > satc[v] || (satc[u] == satc[v] && degree[u] > degree[v])) v = u;
        }
        int c = 0;
        while (sat[v].test(c)) ++c;
        color[v] = c;
        used = std::max(used, c + 1);
        for (int u = 0; u < n; ++u)
            if (g.adjacent(v, u) && color[u] < 0 && !sat[u].test(c)) {
                sat[u].set(c);
                ++satc[u];
            }
    }
    return used;
}

}  // namespace

ChromaticResult chromatic_number_exact(const Graph& g, long long node_limit,
                                       const std::vector<int>& clique_hint) {
    if (g.n() > 128) throw std::invalid_argument("chromatic solver supports n <= 128");
    ChromaticResult res;
    if (g.m() == 0) {
        res.chi = 1;
        res.lb = res.ub = 1;
        return res;
    }

    std::vector<int> clique = clique_hint;
    if (clique.empty()) {
        // A truncated clique search still yields a valid clique to precolor.
        CliqueResult cr = max_clique_exact(g, node_limit);
        res.nodes += cr.nodes;
        clique = cr.witness;
    }
    res.lb = std::max<int>(2, static_cast<int>(clique.size()));
    res.ub = dsatur_greedy(g);

    if (res.lb >= res.ub) {
        res.chi = res.ub;
        res.lb = res.ub;
        return res;
    }

    KColoring solver(g, node_limit);
    for (int k = res.lb; k < res.ub; ++k) {
        bool ok = solver.feasible(k, clique);
        res.nodes += solver.nodes();
        if (solver.truncated()) {
            res.truncated = true;
            res.lb = k;  // k-colorability undecided
            return res;
        }
        if (ok) {
            res.chi = k;
            res.ub = k;
            return res;
        }
        res.lb = k + 1;
    }
    res.chi = res.ub;
    return res;
}

std::optional<bool> k_colorable(const Graph& g, int k, long long node_limit,
                                const std::vector<int>& clique_hint) {
    if (g.n() > 128) throw std::invalid_argument("chromatic solver supports n <= 128");
    if (k < 1) return g.n() == 0;
    if (g.m() == 0) return true;
    if (static_cast<int>(clique_hint.size()) > k) return false;
    if (dsatur_greedy(g) <= k) return true;
    KColoring solver(g, node_limit);
    bool ok = solver.feasible(k, clique_hint);
    if (solver.truncated()) return std::nullopt;
    return ok;
}

bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.n(); ++u) {
        auto ru = g.row(u);
        for (int w = 0; w < g.words_per_row(); ++w) {
            Word word = ru[w];
            while (word) {
                int b = std::countr_zero(word);
                word &= word - 1;
                int v = w * 64 + b;
                if (v <= u) continue;
                auto rv = g.row(v);
                for (int x = 0; x < g.words_per_row(); ++x)
                    if (ru[x] & rv[x]) return false;
            }
        }
    }
    return true;
}

OracleResult oracle_solve(const Graph& g, const OracleLimits& limits) {
    auto t0 = std::chrono::steady_clock::now();
    OracleResult res;

    CliqueResult cr = max_clique_exact(g, limits.node_limit);
    res.omega = cr.omega;
    res.truncated = cr.truncated;
    res.nodes = cr.nodes;
    res.triangle_free = is_triangle_free(g);

    if (g.n() <= limits.chi_max_n && !cr.truncated) {
        ChromaticResult ch = chromatic_number_exact(g, limits.chi_node_limit, cr.witness);
        res.nodes += ch.nodes;
        res.chi = ch.chi;
        res.chi_truncated = ch.truncated;
        res.chi_lb = ch.lb;
        res.chi_ub = ch.ub;
    } else {
        res.chi_lb = cr.omega;
        res.chi_ub = g.n();
    }

    res.elapsed = std::chrono::steady_clock::now() - t0;
    return res;
}

}  // namespace specclique
