#pragma once

// List assignments and exact choosability machinery: backtracking list
// coloring, bounded exhaustive k-choosability search, and the certificates
// needed to turn search results into exact choice numbers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torlist/multigraph.hpp"

namespace torlist {

struct ListAssignment {
    // lists[v] is sorted ascending with distinct entries; one list per vertex.
    std::vector<std::vector<ColorId>> lists;

    ListAssignment() = default;
    explicit ListAssignment(int n) : lists(n) {}

    int size() const { return static_cast<int>(lists.size()); }
    bool is_uniform(int k) const;
    void normalize(); // sort and dedupe each list
};

// Proper coloring with every color drawn from its vertex's list, or
// definitive absence. Exact backtracking, minimum-remaining-values vertex
// order with ties by vertex index, colors tried ascending.
std::optional<Coloring> find_list_coloring(const Multigraph& g, const ListAssignment& L);

// True iff the coloring is total, proper, and (when lists are given)
// list-respecting. A graph with loops admits no valid coloring.
bool verify_coloring(const Multigraph& g, const Coloring& c,
                     const ListAssignment* L = nullptr);

inline constexpr long long kDefaultAssignmentBudget = 2'000'000;

struct ChoosabilityResult {
    enum class Verdict { choosable_in_universe, counterexample, budget_exhausted };
    Verdict verdict = Verdict::choosable_in_universe;
    std::optional<ListAssignment> counterexample;
    long long assignments_checked = 0;
};

// Enumerates k-uniform list assignments with colors from {1..universe_size},
// quotiented by color permutations (colors are introduced in first-appearance
// order) and, when vertex orbits are supplied, by sorting lists along each
// orbit. A "choosable" verdict is relative to the given universe.
ChoosabilityResult is_k_choosable_exhaustive(
    const Multigraph& g, int k, int universe_size,
    long long budget = kDefaultAssignmentBudget,
    const std::vector<std::vector<VertexId>>* vertex_orbits = nullptr);

struct ChoiceNumberResult {
    int value = 0;              // smallest k with no counterexample found
    bool exact = false;         // true iff a certificate pins ch(g) to value
    std::string certificate;    // which upper-bound certificate matched
    bool universe_verified = false; // search at `value` ran to completion
};

// Combines the exhaustive search with independent upper-bound certificates
// (degeneracy, Brooks, bipartite density). Without a matching certificate the
// result is only a lower bound relative to the universe.
ChoiceNumberResult choice_number_small(
    const Multigraph& g, int max_k, int universe_size,
    long long budget = kDefaultAssignmentBudget,
    const std::vector<std::vector<VertexId>>* vertex_orbits = nullptr);

// k-uniform assignment, each list uniform without replacement from
// {1..universe_size}; reproducible from the seed.
ListAssignment random_list_assignment(const Multigraph& g, int k, int universe_size,
                                      std::uint64_t seed);

// degeneracy + 1, a valid upper bound for the choice number of a simple graph.
int degeneracy_choosability_bound(const Multigraph& g);

// Restrict an assignment on the parent graph to a subgraph's vertex numbering.
ListAssignment restrict_assignment(const ListAssignment& L, const Subgraph& sub);

} // namespace torlist
