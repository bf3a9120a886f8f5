#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "specclique/graph.hpp"

namespace specclique {

struct CliqueResult {
    int omega = 1;
    bool truncated = false;  // node limit hit; omega is then only a lower bound
    long long nodes = 0;
    std::vector<int> witness;  // vertices of the best clique found
};

/// Exact maximum clique: branch and bound over bitset candidate sets with a
/// greedy-coloring upper bound and degeneracy vertex ordering. Deterministic.
CliqueResult max_clique_exact(const Graph& g, long long node_limit = 100'000'000);

struct ChromaticResult {
    std::optional<int> chi;  // set only when solved exactly
    bool truncated = false;
    int lb = 1, ub = 0;  // best known bounds (always valid)
    long long nodes = 0;
};

/// Exact chromatic number by iterative-deepening k-colorability with
/// DSATUR-style branching; a known clique can be pre-colored to break symmetry.
/// Supports n <= 128.
ChromaticResult chromatic_number_exact(const Graph& g, long long node_limit = 100'000'000,
                                       const std::vector<int>& clique_hint = {});

/// Single k-colorability question; nullopt when the node limit ran out first.
std::optional<bool> k_colorable(const Graph& g, int k, long long node_limit = 100'000'000,
                                const std::vector<int>& clique_hint = {});

/// trace(A^3) == 0, decided by row intersections.
bool is_triangle_free(const Graph& g);

struct OracleLimits {
    long long node_limit = 100'000'000;
    long long chi_node_limit = 2'000'000;
    int chi_max_n = 64;
};

struct OracleResult {
    int omega = 1;
    std::optional<int> chi;
    bool triangle_free = false;
    std::chrono::duration<double> elapsed{};
    bool truncated = false;
    bool chi_truncated = false;
    int chi_lb = 0, chi_ub = 0;
    long long nodes = 0;
};

OracleResult oracle_solve(const Graph& g, const OracleLimits& limits = {});

}  // namespace specclique
