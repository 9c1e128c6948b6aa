#include "torlist/graph_algos.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>

#include "torlist/errors.hpp"

namespace torlist {

Subgraph k_core(const Multigraph& g, int k) {
    std::vector<bool> alive(g.n, true);
    std::vector<int> deg = g.degrees();
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v = 0; v < g.n; ++v) {
            if (!alive[v] || deg[v] >= k) continue;
            alive[v] = false;
            changed = true;
            for (const auto& [a, b] : g.edges) {
                if (a == v && alive[b]) --deg[b];
                if (b == v && alive[a]) --deg[a];
            }
        }
    }
    std::vector<VertexId> kept;
    for (VertexId v = 0; v < g.n; ++v)
        if (alive[v]) kept.push_back(v);
    return induced_subgraph(g, kept);
}

BipartiteCheck is_bipartite(const Multigraph& g) {
    BipartiteCheck result;
    for (const auto& [a, b] : g.edges) {
        if (a == b) {
            result.odd_cycle = {a};
            return result;
        }
    }
    auto adj = g.neighbor_sets();
    std::vector<int> side(g.n, -1), parent(g.n, -1), depth(g.n, 0);
    for (VertexId root = 0; root < g.n; ++root) {
        if (side[root] != -1) continue;
        side[root] = 0;
        std::queue<VertexId> q;
        q.push(root);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId w : adj[v]) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    q.push(w);
                } else if (side[w] == side[v]) {
                    // reconstruct the odd cycle through the tree paths
                    std::vector<VertexId> pv, pw;
                    VertexId x = v, y = w;
                    while (depth[x] > depth[y]) { pv.push_back(x); x = parent[x]; }
                    while (depth[y] > depth[x]) { pw.push_back(y); y = parent[y]; }
                    while (x != y) {
                        pv.push_back(x); x = parent[x];
                        pw.push_back(y); y = parent[y];
                    }
                    pv.push_back(x);
                    result.odd_cycle = pv;
                    std::reverse(pw.begin(), pw.end());
                    for (VertexId z : pw) result.odd_cycle.push_back(z);
                    return result;
                }
            }
        }
    }
    std::pair<std::vector<VertexId>, std::vector<VertexId>> parts;
    for (VertexId v = 0; v < g.n; ++v)
        (side[v] == 0 ? parts.first : parts.second).push_back(v);
    result.parts = std::move(parts);
    return result;
}

namespace {

std::vector<std::uint64_t> adjacency_masks(const Multigraph& g) {
    std::vector<std::uint64_t> adj(g.n, 0);
    for (const auto& [a, b] : g.edges) {
        if (a == b) continue;
        adj[a] |= std::uint64_t(1) << b;
        adj[b] |= std::uint64_t(1) << a;
    }
    return adj;
}

int greedy_clique_lower_bound(const std::vector<std::uint64_t>& adj) {
    int n = static_cast<int>(adj.size());
    int best = n > 0 ? 1 : 0;
    for (int start = 0; start < n; ++start) {
        std::uint64_t cand = adj[start];
        int size = 1;
        while (cand) {
            int v = std::countr_zero(cand);
            ++size;
            cand &= adj[v];
        }
        best = std::max(best, size);
    }
    return best;
}

int greedy_coloring_upper_bound(const std::vector<std::uint64_t>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> color(n, 0);
    int used = 0;
    for (int v = 0; v < n; ++v) {
        std::uint64_t taken = 0;
        for (int w = 0; w < v; ++w)
            if (adj[v] >> w & 1) taken |= std::uint64_t(1) << (color[w] - 1);
        int c = std::countr_one(taken) + 1;
        color[v] = c;
        used = std::max(used, c);
    }
    return std::max(used, n > 0 ? 1 : 0);
}

// Can the graph be colored with at most k colors? Static lowest-index vertex
// order, lowest color first, new colors introduced in order.
bool k_colorable(const std::vector<std::uint64_t>& adj, int k) {
    int n = static_cast<int>(adj.size());
    std::vector<std::uint64_t> class_mask(k, 0);
    std::vector<int> color(n, 0);

    auto rec = [&](auto&& self, int v, int used) -> bool {
        if (v == n) return true;
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (class_mask[c] & adj[v]) continue;
            class_mask[c] |= std::uint64_t(1) << v;
            color[v] = c;
            if (self(self, v + 1, std::max(used, c + 1))) return true;
            class_mask[c] &= ~(std::uint64_t(1) << v);
        }
        return false;
    };
    return rec(rec, 0, 0);
}

} // namespace

int chromatic_number_exact(const Multigraph& g, int max_vertices) {
    if (g.has_loops()) throw precondition_error("graph has a loop and cannot be colored");
    if (g.n > max_vertices || g.n > 64)
        throw limit_error("exact chromatic number limited to " +
                          std::to_string(std::min(max_vertices, 64)) + " vertices");
    if (g.n == 0) return 0;
    Multigraph s = simplify(g);
    if (s.edges.empty()) return 1;
    auto adj = adjacency_masks(s);
    int lb = greedy_clique_lower_bound(adj);
    int ub = greedy_coloring_upper_bound(adj);
    for (int k = lb; k < ub; ++k)
        if (k_colorable(adj, k)) return k;
    return ub;
}

int brooks_bound(const Multigraph& g) {
    if (!g.is_simple()) throw precondition_error("Brooks bound requires a simple graph");
    if (!g.is_connected()) throw precondition_error("Brooks bound requires a connected graph");
    if (g.n == 0) throw precondition_error("Brooks bound requires a nonempty graph");
    auto deg = g.degrees();
    int delta = *std::max_element(deg.begin(), deg.end());
    bool odd_cycle = g.n % 2 == 1 && g.n >= 3 &&
                     std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
    bool complete = static_cast<long long>(g.edges.size()) ==
                    static_cast<long long>(g.n) * (g.n - 1) / 2;
    return (odd_cycle || complete) ? delta + 1 : delta;
}

bool contains_clique(const Multigraph& g, int k, int max_vertices) {
    if (g.n > max_vertices || g.n > 64)
        throw limit_error("clique search limited to " +
                          std::to_string(std::min(max_vertices, 64)) + " vertices");
    if (k <= 0) return true;
    if (k == 1) return g.n >= 1;
    auto adj = adjacency_masks(simplify(g));
    auto rec = [&](auto&& self, int size, std::uint64_t cand) -> bool {
        if (size == k) return true;
        if (size + std::popcount(cand) < k) return false;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (self(self, size + 1, cand & adj[v])) return true;
        }
        return false;
    };
    std::uint64_t all = g.n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.n) - 1;
    return rec(rec, 0, all);
}

namespace {

using MultMatrix = std::vector<std::vector<int>>;

MultMatrix multiplicity_matrix(const Multigraph& g) {
    MultMatrix m(g.n, std::vector<int>(g.n, 0));
    for (const auto& [a, b] : g.edges) {
        if (a == b) {
            m[a][a] += 1;
        } else {
            m[a][b] += 1;
            m[b][a] += 1;
        }
    }
    return m;
}

// Joint degree refinement: class labels are drawn from one shared map so the
// classes of the two graphs are directly comparable.
std::pair<std::vector<int>, std::vector<int>> refine_classes(const Multigraph& a,
                                                             const MultMatrix& ma,
                                                             const Multigraph& b,
                                                             const MultMatrix& mb) {
    std::vector<int> ca(a.n), cb(b.n);
    auto init_sig = [](const Multigraph& g, const MultMatrix& m, VertexId v) {
        return std::pair<int, int>(g.degree(v), m[v][v]);
    };
    {
        std::map<std::pair<int, int>, int> ids;
        for (VertexId v = 0; v < a.n; ++v) ids.emplace(init_sig(a, ma, v), 0);
        for (VertexId v = 0; v < b.n; ++v) ids.emplace(init_sig(b, mb, v), 0);
        int next = 0;
        for (auto& [sig, id] : ids) id = next++;
        for (VertexId v = 0; v < a.n; ++v) ca[v] = ids[init_sig(a, ma, v)];
        for (VertexId v = 0; v < b.n; ++v) cb[v] = ids[init_sig(b, mb, v)];
    }
    using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
    for (;;) {
        auto sig_of = [](const MultMatrix& m, const std::vector<int>& cls, VertexId v) {
            Sig s;
            s.first = cls[v];
            for (VertexId w = 0; w < static_cast<VertexId>(m.size()); ++w)
                if (w != v && m[v][w] > 0) s.second.emplace_back(cls[w], m[v][w]);
            std::sort(s.second.begin(), s.second.end());
            return s;
        };
        std::map<Sig, int> ids;
        for (VertexId v = 0; v < a.n; ++v) ids.emplace(sig_of(ma, ca, v), 0);
        for (VertexId v = 0; v < b.n; ++v) ids.emplace(sig_of(mb, cb, v), 0);
        int next = 0;
        for (auto& [sig, id] : ids) id = next++;
        std::vector<int> na(a.n), nb(b.n);
        for (VertexId v = 0; v < a.n; ++v) na[v] = ids[sig_of(ma, ca, v)];
        for (VertexId v = 0; v < b.n; ++v) nb[v] = ids[sig_of(mb, cb, v)];
        if (na == ca && nb == cb) break;
        ca = std::move(na);
        cb = std::move(nb);
    }
    return {ca, cb};
}

} // namespace

bool is_isomorphic(const Multigraph& a, const Multigraph& b, int max_vertices) {
    if (a.n > max_vertices || b.n > max_vertices)
        throw limit_error("isomorphism search limited to " + std::to_string(max_vertices) +
                          " vertices");
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    if (a.n == 0) return true;

    MultMatrix ma = multiplicity_matrix(a), mb = multiplicity_matrix(b);
    auto [ca, cb] = refine_classes(a, ma, b, mb);

    std::map<int, int> hist_a, hist_b;
    for (int c : ca) ++hist_a[c];
    for (int c : cb) ++hist_b[c];
    if (hist_a != hist_b) return false;

    // Map a's vertices in order of ascending class size, then class id.
    std::vector<VertexId> order(a.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](VertexId x, VertexId y) {
        auto kx = std::tuple(hist_a[ca[x]], ca[x], x);
        auto ky = std::tuple(hist_a[ca[y]], ca[y], y);
        return kx < ky;
    });

    std::vector<int> image(a.n, -1);
    std::vector<bool> used(b.n, false);

    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == a.n) return true;
        VertexId u = order[idx];
        for (VertexId w = 0; w < b.n; ++w) {
            if (used[w] || cb[w] != ca[u]) continue;
            bool ok = ma[u][u] == mb[w][w];
            for (int j = 0; ok && j < idx; ++j) {
                VertexId u2 = order[j];
                if (ma[u][u2] != mb[w][image[u2]]) ok = false;
            }
            if (!ok) continue;
            image[u] = w;
            used[w] = true;
            if (self(self, idx + 1)) return true;
            image[u] = -1;
            used[w] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

int degeneracy(const Multigraph& g) {
    std::vector<bool> alive(g.n, true);
    std::vector<int> deg = g.degrees();
    auto adj = g.adjacency();
    int best = 0;
    for (int step = 0; step < g.n; ++step) {
        int v = -1;
        for (VertexId u = 0; u < g.n; ++u)
            if (alive[u] && (v == -1 || deg[u] < deg[v])) v = u;
        best = std::max(best, deg[v]);
        alive[v] = false;
        for (VertexId w : adj[v])
            if (w != v && alive[w]) --deg[w];
    }
    return best;
}

} // namespace torlist
