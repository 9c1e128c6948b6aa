#pragma once

// Exact desk-scale graph algorithms. Instance caps are explicit parameters;
// exceeding one raises limit_error rather than degrading to approximation.

#include <optional>
#include <vector>

#include "torlist/multigraph.hpp"

namespace torlist {

inline constexpr int kDefaultChromaticLimit = 40;
inline constexpr int kDefaultIsomorphismLimit = 20;

// Unique maximal subgraph of minimum degree >= k (loops count twice),
// computed by repeated deletion. May be empty.
Subgraph k_core(const Multigraph& g, int k);

struct BipartiteCheck {
    // Set iff bipartite; parts are sorted vertex lists.
    std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> parts;
    // Odd closed walk witness when not bipartite (length is odd).
    std::vector<VertexId> odd_cycle;

    bool ok() const { return parts.has_value(); }
};

BipartiteCheck is_bipartite(const Multigraph& g);

// Exact chromatic number by branch and bound (clique lower bound, greedy
// upper bound). Parallel edges are treated as one; loops are rejected.
int chromatic_number_exact(const Multigraph& g, int max_vertices = kDefaultChromaticLimit);

// Delta + 1 for odd cycles and complete graphs, otherwise Delta.
// Requires a connected simple graph.
int brooks_bound(const Multigraph& g);

bool contains_clique(const Multigraph& g, int k, int max_vertices = kDefaultChromaticLimit);

// Exact isomorphism via degree-refinement classes plus backtracking.
// Multiplicity- and loop-aware.
bool is_isomorphic(const Multigraph& a, const Multigraph& b,
                   int max_vertices = kDefaultIsomorphismLimit);

// Max over the peeling order of the minimum degree at removal time.
int degeneracy(const Multigraph& g);

} // namespace torlist
