#pragma once

// Undirected multigraph with loops, plus the standard small constructions.
// Edges are an explicit list so multiplicities and loops are first-class;
// adjacency structures are built on demand.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace torlist {

using VertexId = int;
using ColorId = int;

using Edge = std::pair<VertexId, VertexId>; // stored with first <= second

struct Multigraph {
    int n = 0;
    std::vector<Edge> edges;
    std::map<VertexId, std::string> labels;

    Multigraph() = default;
    explicit Multigraph(int vertex_count) : n(vertex_count) {}

    void add_edge(VertexId u, VertexId v);

    // Loops count twice.
    int degree(VertexId v) const;
    std::vector<int> degrees() const;

    bool has_loops() const;
    bool has_multi_edges() const;
    bool is_simple() const { return !has_loops() && !has_multi_edges(); }
    bool is_connected() const;

    // Per-vertex neighbor lists; parallel edges repeat the neighbor and a
    // loop contributes its endpoint twice, so list lengths equal degrees.
    std::vector<std::vector<VertexId>> adjacency() const;

    // Deduplicated neighbor sets, loops dropped; sorted ascending.
    std::vector<std::vector<VertexId>> neighbor_sets() const;

    bool operator==(const Multigraph& other) const {
        return n == other.n && edges == other.edges;
    }
};

Multigraph build_cycle(int n);
Multigraph build_path(int n);
Multigraph build_complete(int n);
Multigraph build_complete_bipartite(int m, int n);
Multigraph build_complete_multipartite(int part_size, int parts);

// Loops removed, parallel edges collapsed; vertex set unchanged.
Multigraph simplify(const Multigraph& g);

// Subgraph induced on `vertices` with dense renumbering in the given order.
struct Subgraph {
    Multigraph graph;
    std::vector<VertexId> to_parent;  // new id -> parent id
    std::vector<int> from_parent;     // parent id -> new id, -1 if absent
};

Subgraph induced_subgraph(const Multigraph& g, const std::vector<VertexId>& vertices);

struct Coloring {
    std::map<VertexId, ColorId> assignment; // partial map

    bool total_on(const Multigraph& g) const;
    std::optional<ColorId> color(VertexId v) const;
};

// The properness predicate on partial colorings: no non-loop edge with both
// endpoints colored gets equal colors.
bool is_proper(const Multigraph& g, const Coloring& c);

} // namespace torlist
