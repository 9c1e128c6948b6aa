#include "torlist/alon_tarsi.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "torlist/errors.hpp"

namespace torlist {

std::vector<int> Orientation::outdegrees() const {
    std::vector<int> out(base.n, 0);
    for (const auto& [tail, head] : directed) {
        (void)head;
        ++out[tail];
    }
    return out;
}

void Orientation::check() const {
    if (base.has_loops()) throw invalid_parameter("orientations require a loop-free graph");
    if (directed.size() != base.edges.size())
        throw invalid_parameter("orientation does not direct every edge exactly once");
    for (size_t i = 0; i < directed.size(); ++i) {
        Edge norm = directed[i].first <= directed[i].second
                        ? directed[i]
                        : Edge{directed[i].second, directed[i].first};
        if (norm != base.edges[i])
            throw invalid_parameter("directed edge does not match base edge list");
    }
}

Orientation orient_edges(const Multigraph& base, const std::vector<bool>& toward_second) {
    if (toward_second.size() != base.edges.size())
        throw invalid_parameter("one direction bit per edge required");
    Orientation o;
    o.base = base;
    o.directed.reserve(base.edges.size());
    for (size_t i = 0; i < base.edges.size(); ++i) {
        auto [a, b] = base.edges[i];
        o.directed.emplace_back(toward_second[i] ? Edge{a, b} : Edge{b, a});
    }
    o.check();
    return o;
}

Orientation orient_completion_subgraph(const TorusTriangulation& T, const ClassPartition& part,
                                       const Subgraph& g1) {
    Orientation o;
    o.base = g1.graph;
    o.directed.reserve(g1.graph.edges.size());

    for (const auto& [a, b] : g1.graph.edges) {
        VertexId u = g1.to_parent[a], v = g1.to_parent[b];
        int matches = 0;
        Edge dir{};
        // horizontal east, vertical north, diagonal south-east
        if (T.east(u) == v) { dir = {a, b}; ++matches; }
        if (T.east(v) == u) { dir = {b, a}; ++matches; }
        if (T.north(u) == v) { dir = {a, b}; ++matches; }
        if (T.north(v) == u) { dir = {b, a}; ++matches; }
        if (T.southeast(u) == v) { dir = {a, b}; ++matches; }
        if (T.southeast(v) == u) { dir = {b, a}; ++matches; }
        if (matches != 1)
            throw internal_error("completion edge fits " + std::to_string(matches) +
                                 " orientation rules instead of one");
        o.directed.push_back(dir);
    }

    auto out = o.outdegrees();
    for (VertexId v = 0; v < g1.graph.n; ++v) {
        int cls = part.cls[g1.to_parent[v]];
        int expected = cls == 1 ? 2 : 1;
        if (cls == 0 || out[v] != expected)
            throw internal_error("completion orientation outdegree profile violated");
    }
    return o;
}

namespace {

struct CountPrep {
    int m = 0;
    int n = 0;
    std::vector<int> tail, head;   // reordered edges
    std::vector<int> init_rem;     // incident edge count per vertex
};

CountPrep prepare(const Orientation& o) {
    o.check();
    CountPrep p;
    p.n = o.base.n;
    p.m = static_cast<int>(o.directed.size());

    // BFS positions cluster each vertex's edges so balance pruning fires early.
    std::vector<int> pos(p.n, -1);
    auto adj = o.base.neighbor_sets();
    int next = 0;
    for (VertexId root = 0; root < p.n; ++root) {
        if (pos[root] != -1) continue;
        std::queue<VertexId> q;
        q.push(root);
        pos[root] = next++;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId w : adj[v])
                if (pos[w] == -1) {
                    pos[w] = next++;
                    q.push(w);
                }
        }
    }
    std::vector<int> order(p.m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        auto key = [&](int e) {
            int a = pos[o.directed[e].first], b = pos[o.directed[e].second];
            return std::tuple(std::min(a, b), std::max(a, b), e);
        };
        return key(x) < key(y);
    });
    p.tail.resize(p.m);
    p.head.resize(p.m);
    for (int i = 0; i < p.m; ++i) {
        p.tail[i] = o.directed[order[i]].first;
        p.head[i] = o.directed[order[i]].second;
    }
    p.init_rem.assign(p.n, 0);
    for (int i = 0; i < p.m; ++i) {
        ++p.init_rem[p.tail[i]];
        ++p.init_rem[p.head[i]];
    }
    return p;
}

int abs_int(int x) { return x < 0 ? -x : x; }

// Decide edges from `idx` on; balance[v] is out minus in among included
// edges, rem[v] the number of undecided incident edges.
void count_rec(const CountPrep& p, int idx, int parity, std::vector<int>& balance,
               std::vector<int>& rem, long long& even, long long& odd) {
    if (idx == p.m) {
        (parity == 0 ? even : odd) += 1;
        return;
    }
    int t = p.tail[idx], h = p.head[idx];
    --rem[t];
    --rem[h];

    if (abs_int(balance[t]) <= rem[t] && abs_int(balance[h]) <= rem[h])
        count_rec(p, idx + 1, parity, balance, rem, even, odd);

    ++balance[t];
    --balance[h];
    if (abs_int(balance[t]) <= rem[t] && abs_int(balance[h]) <= rem[h])
        count_rec(p, idx + 1, parity ^ 1, balance, rem, even, odd);
    --balance[t];
    ++balance[h];

    ++rem[t];
    ++rem[h];
}

} // namespace

EulerianCount count_eulerian_subgraphs_serial(const Orientation& o, int max_edges) {
    CountPrep p = prepare(o);
    if (p.m > max_edges)
        throw limit_error("Eulerian enumeration limited to " + std::to_string(max_edges) +
                          " edges (asked for " + std::to_string(p.m) + ")");
    std::vector<int> balance(p.n, 0), rem = p.init_rem;
    EulerianCount c;
    count_rec(p, 0, 0, balance, rem, c.even, c.odd);
    return c;
}

EulerianCount count_eulerian_subgraphs(const Orientation& o, int max_edges) {
    CountPrep p = prepare(o);
    if (p.m > max_edges)
        throw limit_error("Eulerian enumeration limited to " + std::to_string(max_edges) +
                          " edges (asked for " + std::to_string(p.m) + ")");
    if (p.m <= 16) { // not worth the prefix-replay overhead
        std::vector<int> balance(p.n, 0), rem = p.init_rem;
        EulerianCount c;
        count_rec(p, 0, 0, balance, rem, c.even, c.odd);
        return c;
    }
    int split = 12;
    long long tasks = 1LL << split;
    long long even = 0, odd = 0;

#pragma omp parallel for schedule(dynamic, 16) reduction(+ : even, odd)
    for (long long code = 0; code < tasks; ++code) {
        std::vector<int> balance(p.n, 0), rem = p.init_rem;
        int parity = 0;
        bool alive = true;
        for (int i = 0; i < split && alive; ++i) {
            int t = p.tail[i], h = p.head[i];
            --rem[t];
            --rem[h];
            if (code >> i & 1) {
                ++balance[t];
                --balance[h];
                parity ^= 1;
            }
            if (abs_int(balance[t]) > rem[t] || abs_int(balance[h]) > rem[h]) alive = false;
        }
        if (alive) count_rec(p, split, parity, balance, rem, even, odd);
    }
    EulerianCount c;
    c.even = even;
    c.odd = odd;
    return c;
}

EulerianCount count_eulerian_by_cycle_unions(const Orientation& o, int max_edges) {
    o.check();
    int m = static_cast<int>(o.directed.size());
    if (m > max_edges)
        throw limit_error("cycle-union enumeration limited to " + std::to_string(max_edges) +
                          " edges");

    // out-edge lists as (head, edge id)
    std::vector<std::vector<std::pair<VertexId, int>>> out(o.base.n);
    for (int e = 0; e < m; ++e) out[o.directed[e].first].emplace_back(o.directed[e].second, e);

    // All simple directed cycles, anchored at their minimum vertex.
    std::vector<std::uint64_t> cycles;
    std::vector<bool> on_path(o.base.n, false);
    std::uint64_t path_mask = 0;

    auto dfs = [&](auto&& self, VertexId anchor, VertexId v) -> void {
        for (const auto& [w, e] : out[v]) {
            if (w < anchor) continue;
            if (w == anchor) {
                cycles.push_back(path_mask | (std::uint64_t(1) << e));
                continue;
            }
            if (on_path[w]) continue;
            on_path[w] = true;
            path_mask |= std::uint64_t(1) << e;
            self(self, anchor, w);
            path_mask &= ~(std::uint64_t(1) << e);
            on_path[w] = false;
        }
    };
    for (VertexId anchor = 0; anchor < o.base.n; ++anchor) {
        on_path[anchor] = true;
        dfs(dfs, anchor, anchor);
        on_path[anchor] = false;
    }

    // Distinct unions of pairwise edge-disjoint cycles; different
    // decompositions can reach the same edge set, hence the set.
    std::set<std::uint64_t> unions;
    auto combine = [&](auto&& self, size_t idx, std::uint64_t mask) -> void {
        unions.insert(mask);
        for (size_t c = idx; c < cycles.size(); ++c)
            if ((mask & cycles[c]) == 0) self(self, c + 1, mask | cycles[c]);
    };
    combine(combine, 0, 0);

    EulerianCount count;
    for (std::uint64_t mask : unions)
        (std::popcount(mask) % 2 == 0 ? count.even : count.odd) += 1;
    return count;
}

bool at_condition_holds(const Orientation& o, int max_edges) {
    EulerianCount c = count_eulerian_subgraphs(o, max_edges);
    return c.even != c.odd;
}

bool verify_no_odd_eulerian(const Orientation& o, int max_edges) {
    return count_eulerian_subgraphs(o, max_edges).odd == 0;
}

bool at_list_bound_check(const Orientation& o, const ListAssignment& L) {
    if (L.size() != o.base.n)
        throw invalid_parameter("list assignment does not cover the vertex set");
    auto out = o.outdegrees();
    for (VertexId v = 0; v < o.base.n; ++v)
        if (static_cast<int>(L.lists[v].size()) < out[v] + 1) return false;
    return true;
}

} // namespace torlist
