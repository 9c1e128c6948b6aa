#pragma once

// Altshuler's 6-regular toroidal triangulations T(r,s,t) and the structural
// subgraphs used by the list-coloring pipeline. Grid coordinates are 1-based
// (i in 1..r, j in 1..s); vertex ids are (i-1)*s + (j-1).

#include <array>
#include <vector>

#include "torlist/multigraph.hpp"

namespace torlist {

struct TorusParams {
    int r = 1;
    int s = 1;
    int t = 0;
};

void validate(const TorusParams& p); // throws invalid_parameter

struct TorusTriangulation {
    TorusParams params;
    Multigraph graph; // r*s vertices, degree sum 6*r*s

    VertexId vertex(int i, int j) const { return (i - 1) * params.s + (j - 1); }
    std::pair<int, int> coord(VertexId v) const {
        return {v / params.s + 1, v % params.s + 1};
    }

    // The six adjacency statements of the construction, as permutations of the
    // vertex set. Row wrap applies the twist: east of (r,j) is (1, j-t).
    VertexId east(VertexId v) const;
    VertexId west(VertexId v) const;
    VertexId north(VertexId v) const;
    VertexId south(VertexId v) const;
    VertexId southeast(VertexId v) const;
    VertexId northwest(VertexId v) const;
};

TorusTriangulation build_torus_triangulation(const TorusParams& p);

struct TorusClassification {
    bool has_loops = false;
    bool has_multi_edges = false;
    bool is_simple = false;
    bool is_three_chromatic = false; // meaningful only when simple
};

// Flags are read off the constructed multigraph, not off closed-form tuple
// lists; the lists serve as test oracles.
TorusClassification classify(const TorusParams& p);

// s == 0 == r - t (mod 3). Requires the built instance to be simple.
bool is_three_chromatic(const TorusParams& p);

struct ClassPartition {
    std::vector<int> cls;                         // per vertex, 0..2
    std::array<std::vector<VertexId>, 3> members; // sorted ascending

    int class_of(VertexId v) const { return cls[v]; }
};

// The unique proper 3-coloring: class of (i,j) is (j - i) mod 3, normalized
// so (1, j) lands in class j-1 for j = 1,2,3. Each class is verified
// independent.
ClassPartition canonical_three_coloring(const TorusTriangulation& T);

// Induced subgraph on classes 1 and 2; certified 3-regular and bipartite
// with parts exactly (class 1, class 2).
Subgraph completion_subgraph(const TorusTriangulation& T, const ClassPartition& part);

// Horizontal and vertical edges induced on classes 0 and 1; certified
// 2-regular, a disjoint union of even cycles alternating between the classes.
Subgraph grid_subgraph(const TorusTriangulation& T, const ClassPartition& part);

// Connected components of a 2-regular multigraph as cyclic vertex sequences.
// Components are ordered by minimum vertex id and each starts at it.
std::vector<std::vector<VertexId>> cycle_decomposition(const Multigraph& h);

} // namespace torlist
