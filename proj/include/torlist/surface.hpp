#pragma once

// Closed-form surface and coloring formulas in exact integer arithmetic,
// plus the exact maximum subgraph density. No floating point anywhere.

#include <cstdint>

#include "torlist/multigraph.hpp"

namespace torlist {

struct Rational {
    long long num = 0;
    long long den = 1; // > 0, reduced

    static Rational make(long long num, long long den);
    bool operator==(const Rational&) const = default;
};

bool rational_less(const Rational& a, const Rational& b);
long long rational_ceil(const Rational& a);

// floor of the square root, exact
std::uint64_t isqrt(std::uint64_t x);

// floor((7 + sqrt(1 + 48 g)) / 2), g >= 1
long long heawood(long long g);

// floor((7 + sqrt(1 + 24 k)) / 2), k >= 1
long long heawood_nonorientable(long long k);

struct GenusValue {
    long long value = 0;
    bool below_domain = false; // r < 3: 0 by convention
    bool exceptional = false;  // the K7 nonorientable exception
};

// ceil((r-3)(r-4)/12)
GenusValue orientable_genus_complete(long long r);

// ceil((r-3)(r-4)/6), except r = 7 where the value is 3: K7 embeds in the
// surface of nonorientable genus 3 but not in the Klein bottle.
GenusValue nonorientable_genus_complete(long long r);

// ceil((m-2)(n-2)/4), clamped at 0
long long genus_complete_bipartite(long long m, long long n);

// genus of the complete graph plus (m^2 - 1) * r(r-1)/2 handles; checked
// against the ceil(m^2 r^2 / 2) cap.
long long multipartite_genus_upper(long long m, long long r);

// ceil((4r - 1) / 3)
long long kierstead_choice_k3r(long long r);

// floor(6 + 12(g - 1)/n) for n >= 3, never below 0
long long euler_degree_bound(long long g, long long n);

// 5 for the sphere, 12g + 6 otherwise
long long euler_degree_cap(long long g);

// binomial(2k - 1, k)
long long ert_bipartite_threshold(long long k);

// heawood(g), with the 7*sqrt(g) comparison asserted
long long jump_upper_bound(long long g);

// Exact max over nonempty subgraphs of |E(H)|/|V(H)|, by binary search over
// the density parameter with a min-cut feasibility test.
Rational max_subgraph_density(const Multigraph& g);

// ceil(max density) + 1; an upper bound for the choice number of a
// bipartite graph.
int bipartite_choosability_bound(const Multigraph& g);

} // namespace torlist
