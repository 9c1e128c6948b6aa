#include "torlist/list_coloring.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "torlist/errors.hpp"
#include "torlist/graph_algos.hpp"
#include "torlist/surface.hpp"

namespace torlist {

bool ListAssignment::is_uniform(int k) const {
    for (const auto& l : lists)
        if (static_cast<int>(l.size()) != k) return false;
    return true;
}

void ListAssignment::normalize() {
    for (auto& l : lists) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
}

namespace {

struct ListSolver {
    const Multigraph& g;
    std::vector<std::vector<VertexId>> nbrs;
    std::vector<ColorId> universe; // sorted distinct colors
    int nc = 0;
    std::vector<std::vector<char>> in_list;  // vertex x color-index
    std::vector<std::vector<int>> blocked;   // count of colored neighbors using it
    std::vector<int> remaining;
    std::vector<int> chosen; // color index or -1

    ListSolver(const Multigraph& graph, const ListAssignment& L) : g(graph) {
        nbrs = g.neighbor_sets();
        std::set<ColorId> all;
        for (const auto& l : L.lists) all.insert(l.begin(), l.end());
        universe.assign(all.begin(), all.end());
        nc = static_cast<int>(universe.size());
        in_list.assign(g.n, std::vector<char>(nc, 0));
        blocked.assign(g.n, std::vector<int>(nc, 0));
        remaining.assign(g.n, 0);
        chosen.assign(g.n, -1);
        for (VertexId v = 0; v < g.n; ++v) {
            for (ColorId c : L.lists[v]) {
                int ci = static_cast<int>(std::lower_bound(universe.begin(), universe.end(), c) -
                                          universe.begin());
                if (!in_list[v][ci]) {
                    in_list[v][ci] = 1;
                    ++remaining[v];
                }
            }
        }
    }

    bool solve() {
        int v = -1;
        for (VertexId u = 0; u < g.n; ++u) {
            if (chosen[u] != -1) continue;
            if (v == -1 || remaining[u] < remaining[v]) v = u;
        }
        if (v == -1) return true;
        if (remaining[v] == 0) return false;
        for (int ci = 0; ci < nc; ++ci) {
            if (!in_list[v][ci] || blocked[v][ci] > 0) continue;
            chosen[v] = ci;
            bool dead = false;
            for (VertexId w : nbrs[v]) {
                if (chosen[w] != -1 || !in_list[w][ci]) continue;
                if (++blocked[w][ci] == 1 && --remaining[w] == 0) dead = true;
            }
            if (!dead && solve()) return true;
            for (VertexId w : nbrs[v]) {
                if (chosen[w] != -1 || !in_list[w][ci]) continue;
                if (--blocked[w][ci] == 0) ++remaining[w];
            }
            chosen[v] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<Coloring> find_list_coloring(const Multigraph& g, const ListAssignment& L) {
    if (L.size() != g.n) throw invalid_parameter("list assignment does not cover the vertex set");
    if (g.has_loops()) throw precondition_error("graph has a loop and cannot be colored");
    for (const auto& l : L.lists)
        if (l.empty()) return std::nullopt;

    ListSolver solver(g, L);
    if (!solver.solve()) return std::nullopt;
    Coloring c;
    for (VertexId v = 0; v < g.n; ++v) c.assignment[v] = solver.universe[solver.chosen[v]];
    return c;
}

bool verify_coloring(const Multigraph& g, const Coloring& c, const ListAssignment* L) {
    if (!c.total_on(g)) throw invalid_parameter("coloring is not total on the vertex set");
    if (L && L->size() != g.n)
        throw invalid_parameter("list assignment does not cover the vertex set");
    if (g.has_loops()) return false;
    if (!is_proper(g, c)) return false;
    if (L) {
        for (VertexId v = 0; v < g.n; ++v) {
            ColorId col = *c.color(v);
            const auto& list = L->lists[v];
            if (std::find(list.begin(), list.end(), col) == list.end()) return false;
        }
    }
    return true;
}

namespace {

struct ChoosabilitySearch {
    const Multigraph& g;
    int k, universe;
    long long budget;
    std::vector<int> orbit_prev; // same-orbit predecessor or -1

    ListAssignment current;
    long long checked = 0;
    bool exhausted = false;
    std::optional<ListAssignment> counterexample;

    ChoosabilitySearch(const Multigraph& graph, int kk, int uni, long long bud,
                       const std::vector<std::vector<VertexId>>* orbits)
        : g(graph), k(kk), universe(uni), budget(bud), current(graph.n) {
        orbit_prev.assign(g.n, -1);
        if (orbits) {
            for (const auto& orbit : *orbits) {
                for (size_t i = 1; i < orbit.size(); ++i) {
                    if (orbit[i - 1] >= orbit[i])
                        throw invalid_parameter("vertex orbits must be sorted ascending");
                    orbit_prev[orbit[i]] = orbit[i - 1];
                }
            }
        }
    }

    // done -> stop the whole search
    bool leaf() {
        if (checked >= budget) {
            exhausted = true;
            return true;
        }
        ++checked;
        if (!find_list_coloring(g, current)) {
            counterexample = current;
            return true;
        }
        return false;
    }

    // Enumerate vertex v's list: any (k-j)-subset of the colors seen so far
    // plus the next j fresh colors, so colors are introduced in
    // first-appearance order. Orbit-sorted lists prune symmetric duplicates.
    bool vertex(int v, int max_seen) {
        if (v == g.n) return leaf();
        for (int fresh = 0; fresh <= k; ++fresh) {
            if (max_seen + fresh > universe) break;
            std::vector<ColorId> base;
            for (int c = max_seen + 1; c <= max_seen + fresh; ++c) base.push_back(c);
            if (pick_old(v, max_seen, fresh, k - fresh, 1, base)) return true;
        }
        return false;
    }

    bool pick_old(int v, int max_seen, int fresh, int need, ColorId from,
                  std::vector<ColorId>& chosen_old) {
        if (need == 0) {
            std::vector<ColorId> list(chosen_old.begin(), chosen_old.end());
            std::sort(list.begin(), list.end());
            if (orbit_prev[v] != -1 && list < current.lists[orbit_prev[v]]) return false;
            current.lists[v] = std::move(list);
            return vertex(v + 1, max_seen + fresh);
        }
        for (ColorId c = from; c <= max_seen - need + 1; ++c) {
            chosen_old.push_back(c);
            bool done = pick_old(v, max_seen, fresh, need - 1, c + 1, chosen_old);
            chosen_old.pop_back();
            if (done) return true;
        }
        return false;
    }
};

} // namespace

ChoosabilityResult is_k_choosable_exhaustive(const Multigraph& g, int k, int universe_size,
                                             long long budget,
                                             const std::vector<std::vector<VertexId>>* orbits) {
    if (k < 1) throw invalid_parameter("k must be >= 1");
    if (universe_size < k) throw invalid_parameter("universe must have at least k colors");
    if (g.has_loops()) throw precondition_error("graph has a loop and cannot be colored");

    ChoosabilityResult result;
    if (g.n == 0) {
        result.verdict = ChoosabilityResult::Verdict::choosable_in_universe;
        return result;
    }
    ChoosabilitySearch search(g, k, universe_size, budget, orbits);
    search.vertex(0, 0);
    result.assignments_checked = search.checked;
    if (search.counterexample) {
        result.verdict = ChoosabilityResult::Verdict::counterexample;
        result.counterexample = std::move(search.counterexample);
    } else if (search.exhausted) {
        result.verdict = ChoosabilityResult::Verdict::budget_exhausted;
    } else {
        result.verdict = ChoosabilityResult::Verdict::choosable_in_universe;
    }
    return result;
}

ChoiceNumberResult choice_number_small(const Multigraph& g, int max_k, int universe_size,
                                       long long budget,
                                       const std::vector<std::vector<VertexId>>* orbits) {
    ChoiceNumberResult out;
    for (int k = 1; k <= max_k; ++k) {
        auto r = is_k_choosable_exhaustive(g, k, universe_size, budget, orbits);
        if (r.verdict == ChoosabilityResult::Verdict::counterexample) continue;
        out.value = k;
        out.universe_verified = r.verdict == ChoosabilityResult::Verdict::choosable_in_universe;

        std::vector<std::pair<int, std::string>> certs;
        if (g.is_simple()) {
            if (g.n <= 64 && is_bipartite(g).ok())
                certs.emplace_back(bipartite_choosability_bound(g), "bipartite-density");
            if (g.is_connected() && g.n > 0) certs.emplace_back(brooks_bound(g), "brooks");
            certs.emplace_back(degeneracy_choosability_bound(g), "degeneracy");
        }
        if (!certs.empty()) {
            auto best = *std::min_element(certs.begin(), certs.end());
            if (best.first < k)
                throw internal_error("upper-bound certificate below counterexample level");
            if (best.first == k) {
                out.exact = true;
                out.certificate = best.second;
            }
        }
        return out;
    }
    out.value = max_k + 1; // lower bound: counterexamples up to max_k
    out.exact = false;
    out.universe_verified = false;
    return out;
}

ListAssignment random_list_assignment(const Multigraph& g, int k, int universe_size,
                                      std::uint64_t seed) {
    if (k < 1) throw invalid_parameter("k must be >= 1");
    if (universe_size < k) throw invalid_parameter("universe must have at least k colors");
    std::mt19937_64 rng(seed);
    ListAssignment L(g.n);
    std::vector<ColorId> pool(universe_size);
    for (VertexId v = 0; v < g.n; ++v) {
        for (int i = 0; i < universe_size; ++i) pool[i] = i + 1;
        for (int i = 0; i < k; ++i) {
            int j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(universe_size - i));
            std::swap(pool[i], pool[j]);
        }
        L.lists[v].assign(pool.begin(), pool.begin() + k);
        std::sort(L.lists[v].begin(), L.lists[v].end());
    }
    return L;
}

int degeneracy_choosability_bound(const Multigraph& g) {
    if (!g.is_simple()) throw precondition_error("degeneracy bound requires a simple graph");
    return degeneracy(g) + 1;
}

ListAssignment restrict_assignment(const ListAssignment& L, const Subgraph& sub) {
    ListAssignment out(sub.graph.n);
    for (VertexId v = 0; v < sub.graph.n; ++v) out.lists[v] = L.lists[sub.to_parent[v]];
    return out;
}

} // namespace torlist
