#include "torlist/multigraph.hpp"

#include <algorithm>
#include <set>

#include "torlist/errors.hpp"

namespace torlist {

void Multigraph::add_edge(VertexId u, VertexId v) {
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw invalid_parameter("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v);
}

int Multigraph::degree(VertexId v) const {
    int d = 0;
    for (const auto& [a, b] : edges) {
        if (a == v) ++d;
        if (b == v) ++d;
    }
    return d;
}

std::vector<int> Multigraph::degrees() const {
    std::vector<int> d(n, 0);
    for (const auto& [a, b] : edges) {
        ++d[a];
        ++d[b];
    }
    return d;
}

bool Multigraph::has_loops() const {
    for (const auto& [a, b] : edges)
        if (a == b) return true;
    return false;
}

bool Multigraph::has_multi_edges() const {
    std::set<Edge> seen;
    for (const auto& e : edges)
        if (e.first != e.second && !seen.insert(e).second) return true;
    return false;
}

bool Multigraph::is_connected() const {
    if (n == 0) return true;
    auto adj = neighbor_sets();
    std::vector<bool> visited(n, false);
    std::vector<VertexId> stack = {0};
    visited[0] = true;
    int count = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : adj[v])
            if (!visited[w]) {
                visited[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

std::vector<std::vector<VertexId>> Multigraph::adjacency() const {
    std::vector<std::vector<VertexId>> adj(n);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

std::vector<std::vector<VertexId>> Multigraph::neighbor_sets() const {
    std::vector<std::set<VertexId>> sets(n);
    for (const auto& [a, b] : edges) {
        if (a == b) continue;
        sets[a].insert(b);
        sets[b].insert(a);
    }
    std::vector<std::vector<VertexId>> adj(n);
    for (int v = 0; v < n; ++v) adj[v].assign(sets[v].begin(), sets[v].end());
    return adj;
}

Multigraph build_cycle(int n) {
    if (n < 3) throw invalid_parameter("cycle needs n >= 3");
    Multigraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Multigraph build_path(int n) {
    if (n < 1) throw invalid_parameter("path needs n >= 1");
    Multigraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Multigraph build_complete(int n) {
    if (n < 1) throw invalid_parameter("complete graph needs n >= 1");
    Multigraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Multigraph build_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw invalid_parameter("bipartite part sizes must be >= 1");
    Multigraph g(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Multigraph build_complete_multipartite(int part_size, int parts) {
    if (part_size < 1 || parts < 1) throw invalid_parameter("multipartite sizes must be >= 1");
    int n = part_size * parts;
    Multigraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u / part_size != v / part_size) g.add_edge(u, v);
    return g;
}

Multigraph simplify(const Multigraph& g) {
    Multigraph out(g.n);
    out.labels = g.labels;
    std::set<Edge> seen;
    for (const auto& e : g.edges) {
        if (e.first == e.second) continue;
        if (seen.insert(e).second) out.edges.push_back(e);
    }
    return out;
}

Subgraph induced_subgraph(const Multigraph& g, const std::vector<VertexId>& vertices) {
    Subgraph sub;
    sub.from_parent.assign(g.n, -1);
    for (VertexId v : vertices) {
        if (v < 0 || v >= g.n) throw invalid_parameter("subgraph vertex out of range");
        if (sub.from_parent[v] != -1) throw invalid_parameter("duplicate vertex in subgraph selection");
        sub.from_parent[v] = static_cast<int>(sub.to_parent.size());
        sub.to_parent.push_back(v);
    }
    sub.graph = Multigraph(static_cast<int>(vertices.size()));
    for (const auto& [a, b] : g.edges) {
        int na = sub.from_parent[a], nb = sub.from_parent[b];
        if (na != -1 && nb != -1) sub.graph.add_edge(na, nb);
    }
    return sub;
}

bool Coloring::total_on(const Multigraph& g) const {
    for (VertexId v = 0; v < g.n; ++v)
        if (!assignment.count(v)) return false;
    return true;
}

std::optional<ColorId> Coloring::color(VertexId v) const {
    auto it = assignment.find(v);
    if (it == assignment.end()) return std::nullopt;
    return it->second;
}

bool is_proper(const Multigraph& g, const Coloring& c) {
    for (const auto& [a, b] : g.edges) {
        if (a == b) continue;
        auto ca = c.color(a), cb = c.color(b);
        if (ca && cb && *ca == *cb) return false;
    }
    return true;
}

} // namespace torlist
