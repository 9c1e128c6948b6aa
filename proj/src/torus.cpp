#include "torlist/torus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "torlist/errors.hpp"
#include "torlist/graph_algos.hpp"

namespace torlist {

void validate(const TorusParams& p) {
    if (p.r < 1) throw invalid_parameter("r must be >= 1");
    if (p.s < 1) throw invalid_parameter("s must be >= 1");
    if (p.t < 0 || p.t >= p.s) throw invalid_parameter("t must satisfy 0 <= t < s");
}

namespace {

// 1-based column arithmetic modulo s.
int wrap(int j, int s) {
    int x = (j - 1) % s;
    if (x < 0) x += s;
    return x + 1;
}

} // namespace

VertexId TorusTriangulation::east(VertexId v) const {
    auto [i, j] = coord(v);
    if (i < params.r) return vertex(i + 1, j);
    return vertex(1, wrap(j - params.t, params.s));
}

VertexId TorusTriangulation::west(VertexId v) const {
    auto [i, j] = coord(v);
    if (i > 1) return vertex(i - 1, j);
    return vertex(params.r, wrap(j + params.t, params.s));
}

VertexId TorusTriangulation::north(VertexId v) const {
    auto [i, j] = coord(v);
    return vertex(i, wrap(j + 1, params.s));
}

VertexId TorusTriangulation::south(VertexId v) const {
    auto [i, j] = coord(v);
    return vertex(i, wrap(j - 1, params.s));
}

VertexId TorusTriangulation::southeast(VertexId v) const {
    auto [i, j] = coord(v);
    if (i < params.r) return vertex(i + 1, wrap(j - 1, params.s));
    return vertex(1, wrap(j - params.t - 1, params.s));
}

VertexId TorusTriangulation::northwest(VertexId v) const {
    auto [i, j] = coord(v);
    if (i > 1) return vertex(i - 1, wrap(j + 1, params.s));
    return vertex(params.r, wrap(j + params.t + 1, params.s));
}

TorusTriangulation build_torus_triangulation(const TorusParams& p) {
    validate(p);
    TorusTriangulation T;
    T.params = p;
    T.graph = Multigraph(p.r * p.s);

    // Every vertex states its six neighbors; each edge is stated once from
    // each side (loops contribute two self-statements), so multiplicities
    // are the statement counts halved.
    std::map<Edge, int> statements;
    for (VertexId v = 0; v < T.graph.n; ++v) {
        for (VertexId w : {T.east(v), T.west(v), T.north(v), T.south(v), T.southeast(v),
                           T.northwest(v)}) {
            Edge e = v <= w ? Edge{v, w} : Edge{w, v};
            ++statements[e];
        }
    }
    for (const auto& [e, count] : statements) {
        if (count % 2 != 0)
            throw internal_error("odd statement count for edge in T(" + std::to_string(p.r) +
                                 "," + std::to_string(p.s) + "," + std::to_string(p.t) + ")");
        for (int k = 0; k < count / 2; ++k) T.graph.edges.push_back(e);
    }
    return T;
}

TorusClassification classify(const TorusParams& p) {
    TorusTriangulation T = build_torus_triangulation(p);
    TorusClassification c;
    c.has_loops = T.graph.has_loops();
    c.has_multi_edges = T.graph.has_multi_edges();
    c.is_simple = !c.has_loops && !c.has_multi_edges;
    c.is_three_chromatic = c.is_simple && p.s % 3 == 0 && (p.r - p.t) % 3 == 0;
    return c;
}

bool is_three_chromatic(const TorusParams& p) {
    validate(p);
    TorusTriangulation T = build_torus_triangulation(p);
    if (!T.graph.is_simple())
        throw precondition_error("three-chromaticity condition applies to simple instances only");
    return p.s % 3 == 0 && (p.r - p.t) % 3 == 0;
}

ClassPartition canonical_three_coloring(const TorusTriangulation& T) {
    const auto& p = T.params;
    if (!T.graph.is_simple() || p.s % 3 != 0 || (p.r - p.t) % 3 != 0)
        throw precondition_error("canonical 3-coloring requires a simple 3-chromatic instance");
    ClassPartition part;
    part.cls.resize(T.graph.n);
    for (VertexId v = 0; v < T.graph.n; ++v) {
        auto [i, j] = T.coord(v);
        int c = (j - i) % 3;
        if (c < 0) c += 3;
        part.cls[v] = c;
        part.members[c].push_back(v);
    }
    for (const auto& [a, b] : T.graph.edges)
        if (part.cls[a] == part.cls[b])
            throw internal_error("canonical class partition is not independent");
    return part;
}

Subgraph completion_subgraph(const TorusTriangulation& T, const ClassPartition& part) {
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < T.graph.n; ++v)
        if (part.cls[v] != 0) keep.push_back(v);
    Subgraph sub = induced_subgraph(T.graph, keep);

    for (VertexId v = 0; v < sub.graph.n; ++v)
        if (sub.graph.degree(v) != 3)
            throw internal_error("completion subgraph is not 3-regular");
    for (const auto& [a, b] : sub.graph.edges)
        if (part.cls[sub.to_parent[a]] == part.cls[sub.to_parent[b]])
            throw internal_error("completion subgraph is not bipartite between classes 1 and 2");
    return sub;
}

Subgraph grid_subgraph(const TorusTriangulation& T, const ClassPartition& part) {
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < T.graph.n; ++v)
        if (part.cls[v] != 2) keep.push_back(v);

    Subgraph sub;
    sub.from_parent.assign(T.graph.n, -1);
    for (VertexId v : keep) {
        sub.from_parent[v] = static_cast<int>(sub.to_parent.size());
        sub.to_parent.push_back(v);
    }
    sub.graph = Multigraph(static_cast<int>(keep.size()));
    // East statements give each horizontal edge once, north statements each
    // vertical edge once (the instance is simple, so no slot coincides with
    // its inverse).
    std::vector<Edge> collected;
    for (VertexId v : keep) {
        for (VertexId w : {T.east(v), T.north(v)}) {
            if (sub.from_parent[w] == -1) continue;
            int a = sub.from_parent[v], b = sub.from_parent[w];
            collected.push_back(a <= b ? Edge{a, b} : Edge{b, a});
        }
    }
    std::sort(collected.begin(), collected.end());
    sub.graph.edges = std::move(collected);

    for (VertexId v = 0; v < sub.graph.n; ++v)
        if (sub.graph.degree(v) != 2)
            throw internal_error("grid subgraph is not 2-regular");
    for (const auto& cycle : cycle_decomposition(sub.graph)) {
        if (cycle.size() % 2 != 0) throw internal_error("grid subgraph has an odd cycle");
        for (size_t k = 0; k < cycle.size(); ++k) {
            int ca = part.cls[sub.to_parent[cycle[k]]];
            int cb = part.cls[sub.to_parent[cycle[(k + 1) % cycle.size()]]];
            if (ca == cb) throw internal_error("grid cycle does not alternate classes");
        }
    }
    return sub;
}

std::vector<std::vector<VertexId>> cycle_decomposition(const Multigraph& h) {
    for (VertexId v = 0; v < h.n; ++v)
        if (h.degree(v) != 2) throw precondition_error("cycle decomposition needs a 2-regular graph");

    // incidence lists (neighbor, edge id); loops appear twice
    std::vector<std::vector<std::pair<VertexId, int>>> inc(h.n);
    for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
        auto [a, b] = h.edges[e];
        inc[a].emplace_back(b, e);
        if (a != b) inc[b].emplace_back(a, e);
        else inc[a].emplace_back(a, e);
    }
    for (auto& lst : inc) std::sort(lst.begin(), lst.end());

    std::vector<bool> visited(h.n, false);
    std::vector<std::vector<VertexId>> cycles;
    for (VertexId start = 0; start < h.n; ++start) {
        if (visited[start]) continue;
        std::vector<VertexId> cycle;
        VertexId v = start;
        int arrived_by = -1;
        do {
            visited[v] = true;
            cycle.push_back(v);
            std::pair<VertexId, int> next{-1, -1};
            for (const auto& cand : inc[v])
                if (cand.second != arrived_by) {
                    next = cand;
                    break;
                }
            arrived_by = next.second;
            v = next.first;
        } while (v != start);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

} // namespace torlist
