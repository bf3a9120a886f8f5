#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace specclique {

/// Undirected simple graph on vertices 0..n-1, dense bit-packed adjacency.
/// Treated as immutable once a generator or parser has returned it.
class Graph {
public:
    explicit Graph(int n);

    int n() const { return n_; }
    long long m() const { return m_; }

    bool adjacent(int a, int b) const {
        return (bits_[static_cast<size_t>(a) * words_ + (b >> 6)] >> (b & 63)) & 1u;
    }

    /// Adds {a,b}; ignores self-loops and duplicates, keeps m consistent.
    void add_edge(int a, int b);

    int degree(int v) const;
    std::vector<int> degrees() const;

    /// Row of 64-bit adjacency words for vertex v (n bits used).
    std::span<const std::uint64_t> row(int v) const {
        return {bits_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
    }
    int words_per_row() const { return words_; }

    const std::string& label() const { return label_; }
    void set_label(std::string s) { label_ = std::move(s); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    int n_;
    int words_;
    long long m_ = 0;
    std::vector<std::uint64_t> bits_;
    std::string label_;
};

Graph complement(const Graph& g);

/// Side-by-side union of two graphs (no edges between them).
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace specclique
