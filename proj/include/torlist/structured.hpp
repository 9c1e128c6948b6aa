#pragma once

// The constructive 5-list-coloring pipeline for simple 3-chromatic
// triangulations: color class 0 along the grid cycles so that every class-1
// vertex keeps enough of its list, then finish the completion subgraph by
// backtracking under the orientation certificate.

#include <optional>
#include <vector>

#include "torlist/list_coloring.hpp"
#include "torlist/multigraph.hpp"
#include "torlist/torus.hpp"

namespace torlist {

// A path or cycle whose vertices carry a side flag; positions index `seq`
// and consecutive positions (cyclically, for cycles) are adjacent.
// `to_color` marks the side the coloring procedures assign.
struct SidedPath {
    std::vector<VertexId> seq;
    std::vector<bool> to_color;
    bool is_cycle = false;

    int length() const { return static_cast<int>(seq.size()); }
};

// Maximal run of consecutive positions whose lists all contain c, containing
// start_pos. Positions are returned in path order; on a cycle where every
// list contains c the whole cycle is returned starting at start_pos.
std::vector<int> list_run(const SidedPath& p, const ListAssignment& L, int start_pos, ColorId c);

// Minimum element of L[from] minus L[avoid]; the lists must not be nested
// the wrong way around (equal-size lists with a color split guarantee this).
ColorId escape_color(const ListAssignment& L, VertexId avoid, VertexId from);

// Colors the to_color side of a linear path, starting from the endpoint at
// start_pos (0 or length-1) with `forced` if given, so that every vertex on
// the other side loses at most one color from its list. Uniform list sizes
// required. Segment colors are appended to *segment_colors when non-null.
void color_alternating_path(const SidedPath& p, const ListAssignment& L, int start_pos,
                            std::optional<ColorId> forced, Coloring& out,
                            std::vector<ColorId>* segment_colors = nullptr);

// Max over the not-to-color side of |{colors on path neighbors} ∩ L_v|.
int max_other_side_loss(const SidedPath& p, const ListAssignment& L, const Coloring& col);

struct CycleTrace {
    char case_taken = '?';          // 'a', 'b' or 'c'
    std::vector<ColorId> colors;    // colors in the order they were committed
    int max_loss = -1;              // over the not-to-color side, after coloring
    int length = 0;
};

// The three-case procedure for one even alternating cycle. Every vertex on
// the not-to-color side loses at most one list color; violations raise
// internal_error.
CycleTrace color_grid_cycle(const SidedPath& c, const ListAssignment& L, Coloring& out);

// Lists on the completion subgraph after the class-0 coloring: each list
// drops the colors of its colored neighbors in the full triangulation.
ListAssignment residual_lists(const TorusTriangulation& T, const ClassPartition& part,
                              const ListAssignment& L, const Coloring& partial,
                              const Subgraph& g1);

struct FiveListTrace {
    std::vector<CycleTrace> cycles;
    int min_residual_class1 = -1;
    int min_residual_class2 = -1;
};

// Full pipeline; returns a verified proper list coloring of T. The list
// assignment must be 5-uniform and T simple and 3-chromatic.
Coloring five_list_color(const TorusTriangulation& T, const ListAssignment& L,
                         FiveListTrace* trace = nullptr);

} // namespace torlist
