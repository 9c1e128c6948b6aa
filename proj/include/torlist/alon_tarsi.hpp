#pragma once

// Edge orientations and Eulerian-subgraph parity counting. The counting
// kernel enumerates edge subsets with degree-balance pruning; a serial
// reference and an OpenMP-split variant share the same recursion and a
// cycle-space enumerator serves as an independent oracle.

#include <vector>

#include "torlist/list_coloring.hpp"
#include "torlist/multigraph.hpp"
#include "torlist/torus.hpp"

namespace torlist {

inline constexpr int kDefaultEulerianBudget = 30;

struct Orientation {
    Multigraph base;                 // loop-free
    std::vector<Edge> directed;      // (tail, head), aligned with base.edges

    std::vector<int> outdegrees() const;
    void check() const; // throws invalid_parameter on malformed direction data
};

Orientation orient_edges(const Multigraph& base, const std::vector<bool>& toward_second);

// The fixed orientation of the completion subgraph: horizontal edges east,
// vertical edges north, diagonal edges south-east. Gives outdegree 2 on
// class 1 and outdegree 1 on class 2; any deviation is an internal error.
Orientation orient_completion_subgraph(const TorusTriangulation& T, const ClassPartition& part,
                                       const Subgraph& g1);

struct EulerianCount {
    long long even = 0; // includes the empty subgraph
    long long odd = 0;
};

// Counts spanning edge subsets with in-degree == out-degree everywhere,
// split by edge-count parity. Subsets need not be connected.
EulerianCount count_eulerian_subgraphs(const Orientation& o,
                                       int max_edges = kDefaultEulerianBudget);
EulerianCount count_eulerian_subgraphs_serial(const Orientation& o,
                                              int max_edges = kDefaultEulerianBudget);

// Independent oracle: enumerates unions of edge-disjoint directed cycles,
// deduplicated by edge set. Intended for tests and cross-checks.
EulerianCount count_eulerian_by_cycle_unions(const Orientation& o, int max_edges = 20);

// even != odd
bool at_condition_holds(const Orientation& o, int max_edges = kDefaultEulerianBudget);

// odd == 0 confirmed by enumeration
bool verify_no_odd_eulerian(const Orientation& o, int max_edges = kDefaultEulerianBudget);

// |L_v| >= outdeg(v) + 1 for every vertex
bool at_list_bound_check(const Orientation& o, const ListAssignment& L);

} // namespace torlist
