#include "specclique/graph.hpp"

#include <bit>
#include <stdexcept>

namespace specclique {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

void Graph::add_edge(int a, int b) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
        throw std::out_of_range("edge endpoint out of range");
    if (a == b) return;
    if (adjacent(a, b)) return;
    bits_[static_cast<size_t>(a) * words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);
    bits_[static_cast<size_t>(b) * words_ + (a >> 6)] |= std::uint64_t{1} << (a & 63);
    ++m_;
}

int Graph::degree(int v) const {
    int d = 0;
    for (std::uint64_t w : row(v)) d += std::popcount(w);
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

Graph complement(const Graph& g) {
    Graph c(g.n());
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b)
            if (!g.adjacent(a, b)) c.add_edge(a, b);
    if (!g.label().empty()) c.set_label("complement(" + g.label() + ")");
    return c;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph u(a.n() + b.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = i + 1; j < a.n(); ++j)
            if (a.adjacent(i, j)) u.add_edge(i, j);
    for (int i = 0; i < b.n(); ++i)
        for (int j = i + 1; j < b.n(); ++j)
            if (b.adjacent(i, j)) u.add_edge(a.n() + i, a.n() + j);
    return u;
}

}  // namespace specclique
