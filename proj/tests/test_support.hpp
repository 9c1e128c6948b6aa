#pragma once

// Shared test helpers: deterministic random graphs, brute-force oracles kept
// independent of the implementation paths they check, and small enumerators.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "torlist/list_coloring.hpp"
#include "torlist/multigraph.hpp"
#include "torlist/surface.hpp"
#include "torlist/torus.hpp"

namespace testsupport {

using namespace torlist;

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Multigraph random_simple_graph(Rng& rng, int n, int percent_edges) {
    Multigraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rand_int(rng, 0, 99) < percent_edges) g.add_edge(u, v);
    return g;
}

inline Multigraph random_multigraph(Rng& rng, int n, int edges) {
    Multigraph g(n);
    for (int e = 0; e < edges; ++e) {
        int u = rand_int(rng, 0, n - 1);
        int v = rand_int(rng, 0, n - 1);
        if (u == v) v = (v + 1) % n; // loop-free
        g.add_edge(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

// Try every choice of one color per list; the exhaustive ground truth for
// list colorability on tiny graphs.
inline bool brute_force_list_colorable(const Multigraph& g, const ListAssignment& L) {
    std::vector<size_t> pick(g.n, 0);
    for (;;) {
        bool proper = true;
        for (const auto& [a, b] : g.edges) {
            if (a == b) return false;
            if (L.lists[a][pick[a]] == L.lists[b][pick[b]]) {
                proper = false;
                break;
            }
        }
        if (proper) return true;
        int v = g.n - 1;
        while (v >= 0) {
            if (++pick[v] < L.lists[v].size()) break;
            pick[v] = 0;
            --v;
        }
        if (v < 0) return false;
    }
}

// Max over nonempty vertex subsets of edges-inside / subset-size.
inline Rational brute_force_max_density(const Multigraph& g) {
    Rational best{0, 1};
    for (std::uint32_t mask = 1; mask < (1u << g.n); ++mask) {
        long long inside = 0;
        for (const auto& [a, b] : g.edges)
            if ((mask >> a & 1) && (mask >> b & 1)) ++inside;
        Rational cand = Rational::make(inside, std::popcount(mask));
        if (rational_less(best, cand)) best = cand;
    }
    return best;
}

// All k-subsets of {1..universe}, lexicographic.
inline std::vector<std::vector<ColorId>> all_k_subsets(int universe, int k) {
    std::vector<std::vector<ColorId>> out;
    std::vector<ColorId> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int c = from; c <= universe; ++c) {
            cur.push_back(c);
            self(self, c + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// Invoke fn on every k-uniform assignment over n vertices from {1..universe}.
template <typename Fn>
void for_each_uniform_assignment(int n, int k, int universe, Fn&& fn) {
    auto subsets = all_k_subsets(universe, k);
    std::vector<size_t> idx(n, 0);
    for (;;) {
        ListAssignment L(n);
        for (int v = 0; v < n; ++v) L.lists[v] = subsets[idx[v]];
        fn(L);
        int v = n - 1;
        while (v >= 0) {
            if (++idx[v] < subsets.size()) break;
            idx[v] = 0;
            --v;
        }
        if (v < 0) return;
    }
}

// Closed-form candidates for the loopless multi-edge isomorphism classes on
// n vertices, used as the classification oracle.
inline std::vector<TorusParams> multi_edge_candidates(int n) {
    std::set<std::tuple<int, int, int>> seen;
    std::vector<TorusParams> out;
    auto add = [&](int r, int s, int t) {
        if (t < 0 || t >= s) return;
        if (seen.insert({r, s, t}).second) out.push_back({r, s, t});
    };
    if (n % 2 == 0 && n / 2 >= 2) {
        int s = n / 2;
        add(2, s, 0);
        add(2, s, s - 2);
        add(2, s, s - 1);
    }
    if (n >= 3) {
        add(1, n, 1);
        add(1, n, (n - 1) / 2);
    }
    return out;
}

} // namespace testsupport
