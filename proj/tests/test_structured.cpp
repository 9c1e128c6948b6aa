#include <doctest.h>

#include <set>

#include "test_support.hpp"
#include "torlist/errors.hpp"
#include "torlist/graph_algos.hpp"
#include "torlist/structured.hpp"

using namespace torlist;
using namespace testsupport;

namespace {

// A standalone path or cycle whose vertices are 0..n-1; side phase picks
// which alternation class gets colored.
SidedPath make_sided(int n, bool cycle, int color_phase) {
    SidedPath p;
    p.is_cycle = cycle;
    for (int v = 0; v < n; ++v) {
        p.seq.push_back(v);
        p.to_color.push_back(v % 2 == color_phase);
    }
    return p;
}

ListAssignment lists_of(std::vector<std::vector<ColorId>> lists) {
    ListAssignment L;
    L.lists = std::move(lists);
    L.normalize();
    return L;
}

} // namespace

TEST_CASE("list runs") {
    SidedPath p = make_sided(4, false, 0);

    ListAssignment all = lists_of({{1, 2}, {1, 3}, {1, 4}, {1, 5}});
    CHECK(list_run(p, all, 0, 1) == std::vector<int>{0, 1, 2, 3});

    ListAssignment only_start = lists_of({{1, 2}, {3, 4}, {1, 4}, {1, 5}});
    CHECK(list_run(p, only_start, 0, 1) == std::vector<int>{0});

    ListAssignment staged = lists_of({{1, 2}, {1, 3}, {4, 5}, {1, 2}});
    CHECK(list_run(p, staged, 0, 1) == std::vector<int>{0, 1});
    CHECK(list_run(p, staged, 3, 1) == std::vector<int>{3});

    CHECK_THROWS_AS(list_run(p, staged, 2, 1), invalid_parameter);

    SidedPath c = make_sided(4, true, 0);
    CHECK(list_run(c, staged, 3, 1) == std::vector<int>{3, 0, 1});
    CHECK(list_run(c, all, 2, 1).size() == 4u); // whole cycle
}

TEST_CASE("escape colors") {
    ListAssignment L = lists_of({{1, 2}, {4, 5}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 6}});
    CHECK(escape_color(L, 0, 1) == 4);
    CHECK(escape_color(L, 2, 3) == 6);
    CHECK_THROWS_AS(escape_color(L, 2, 2), precondition_error);
}

TEST_CASE("alternating path coloring, single steps") {
    SidedPath two = make_sided(2, false, 0);
    ListAssignment L = lists_of({{1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}});
    Coloring out;
    color_alternating_path(two, L, 0, std::nullopt, out);
    CHECK(out.assignment.at(0) == 1); // minimum color first
    CHECK(out.assignment.count(1) == 0);
    CHECK(max_other_side_loss(two, L, out) == 1);

    SidedPath four = make_sided(4, false, 0);
    ListAssignment shared = lists_of({{9, 1}, {9, 2}, {9, 3}, {9, 4}});
    Coloring forced;
    color_alternating_path(four, shared, 0, 9, forced);
    CHECK(forced.assignment.at(0) == 9);
    CHECK(forced.assignment.at(2) == 9);
    CHECK(max_other_side_loss(four, shared, forced) == 1);

    CHECK_THROWS_AS(color_alternating_path(four, shared, 1, std::nullopt, forced),
                    invalid_parameter);
    CHECK_THROWS_AS(color_alternating_path(four, shared, 0, 7, forced), invalid_parameter);
}

TEST_CASE("alternating path coloring loses at most one color, exhaustively") {
    // all 2-uniform assignments from {1..4} on paths of 2..6 vertices,
    // both side phases, both starting end points
    for (int n = 2; n <= 6; ++n) {
        long long runs = 0;
        for_each_uniform_assignment(n, 2, 4, [&](const ListAssignment& L) {
            for (int phase = 0; phase < 2; ++phase) {
                for (int start : {0, n - 1}) {
                    SidedPath p = make_sided(n, false, phase);
                    Coloring out;
                    color_alternating_path(p, L, start, std::nullopt, out);
                    ++runs;
                    REQUIRE(max_other_side_loss(p, L, out) <= 1);
                    for (int pos = 0; pos < n; ++pos) {
                        if (p.to_color[pos]) {
                            REQUIRE(out.assignment.count(pos) == 1);
                            bool in_list = std::binary_search(L.lists[pos].begin(),
                                                              L.lists[pos].end(),
                                                              out.assignment.at(pos));
                            REQUIRE(in_list);
                        } else {
                            REQUIRE(out.assignment.count(pos) == 0);
                        }
                    }
                }
            }
        });
        CHECK(runs > 0);
    }
}

TEST_CASE("cycle coloring cases") {
    // (a): a color common to the colored side
    SidedPath c4 = make_sided(4, true, 0);
    ListAssignment shared = lists_of({{7, 1}, {2, 3}, {7, 4}, {5, 6}});
    Coloring out_a;
    CycleTrace ta = color_grid_cycle(c4, shared, out_a);
    CHECK(ta.case_taken == 'a');
    CHECK(out_a.assignment.at(0) == 7);
    CHECK(out_a.assignment.at(2) == 7);
    CHECK(ta.max_loss <= 1);

    // (b): color 1 has the even run {0, 1}
    ListAssignment evenrun = lists_of({{1, 2}, {1, 3}, {4, 5}, {6, 7}});
    Coloring out_b;
    CycleTrace tb = color_grid_cycle(c4, evenrun, out_b);
    CHECK(tb.case_taken == 'b');
    CHECK(tb.max_loss <= 1);
    CHECK(out_b.assignment.count(0) == 1);
    CHECK(out_b.assignment.count(2) == 1);

    // (c): every run is a singleton
    ListAssignment odd = lists_of({{1, 2}, {3, 4}, {5, 6}, {7, 8}});
    Coloring out_c;
    CycleTrace tc = color_grid_cycle(c4, odd, out_c);
    CHECK(tc.case_taken == 'c');
    CHECK(tc.max_loss <= 1);
}

TEST_CASE("cycle coloring input validation") {
    ListAssignment L = lists_of({{1, 2}, {3, 4}, {5, 6}, {7, 8}});
    Coloring out;
    CHECK_THROWS_AS(color_grid_cycle(make_sided(4, false, 0), L, out), invalid_parameter);
    SidedPath bad = make_sided(4, true, 0);
    bad.to_color[1] = true; // breaks alternation
    CHECK_THROWS_AS(color_grid_cycle(bad, L, out), invalid_parameter);
}

TEST_CASE("cycle coloring loses at most one color, exhaustively") {
    for (int n : {4, 6}) {
        for (int phase = 0; phase < 2; ++phase) {
            for_each_uniform_assignment(n, 2, 4, [&](const ListAssignment& L) {
                SidedPath c = make_sided(n, true, phase);
                Coloring out;
                CycleTrace t = color_grid_cycle(c, L, out);
                REQUIRE(t.max_loss <= 1);
                for (int pos = 0; pos < n; ++pos) {
                    if (c.to_color[pos]) {
                        REQUIRE(out.assignment.count(pos) == 1);
                        REQUIRE(std::binary_search(L.lists[pos].begin(), L.lists[pos].end(),
                                                   out.assignment.at(pos)));
                    }
                }
            });
        }
    }
}

TEST_CASE("cycle case (c) fires on 5-lists when every run is odd") {
    SidedPath c6 = make_sided(6, true, 0);

    // disjoint lists: every run is a singleton and nothing is shared
    {
        ListAssignment L(6);
        for (int v = 0; v < 6; ++v)
            for (int i = 1; i <= 5; ++i) L.lists[v].push_back(10 * v + i);
        Coloring out;
        CycleTrace t = color_grid_cycle(c6, L, out);
        CHECK(t.case_taken == 'c');
        CHECK(t.max_loss <= 1);
    }

    // one three-vertex run with ends on the colored side, all else singletons
    {
        ListAssignment L(6);
        L.lists[0] = {9, 11, 12, 13, 14};
        L.lists[1] = {9, 21, 22, 23, 24};
        L.lists[2] = {9, 31, 32, 33, 34};
        L.lists[3] = {41, 42, 43, 44, 45};
        L.lists[4] = {51, 52, 53, 54, 55};
        L.lists[5] = {61, 62, 63, 64, 65};
        Coloring out;
        CycleTrace t = color_grid_cycle(c6, L, out);
        CHECK(t.case_taken == 'c');
        CHECK(t.max_loss <= 1);
        CHECK(out.assignment.at(0) == 9);
        CHECK(out.assignment.at(2) == 9);
        CHECK(out.assignment.count(4) == 1);
    }
}

TEST_CASE("full pipeline through cycle case (c)") {
    TorusTriangulation T = build_torus_triangulation({3, 3, 0});
    ClassPartition part = canonical_three_coloring(T);
    Subgraph grid = grid_subgraph(T, part);
    auto cycles = cycle_decomposition(grid.graph);
    REQUIRE(cycles.size() == 1u);
    REQUIRE(cycles[0].size() == 6u);

    // disjoint 5-lists along the grid cycle force case (c); class-2 vertices
    // get their own fresh colors
    ListAssignment L(T.graph.n);
    int base = 0;
    for (VertexId v : cycles[0]) {
        VertexId u = grid.to_parent[v];
        for (int i = 1; i <= 5; ++i) L.lists[u].push_back(10 * base + i);
        ++base;
    }
    for (VertexId u : part.members[2]) {
        for (int i = 1; i <= 5; ++i) L.lists[u].push_back(10 * base + i);
        ++base;
    }

    FiveListTrace trace;
    Coloring c = five_list_color(T, L, &trace);
    CHECK(verify_coloring(T.graph, c, &L));
    REQUIRE(trace.cycles.size() == 1u);
    CHECK(trace.cycles[0].case_taken == 'c');
}

TEST_CASE("residual lists") {
    TorusTriangulation T = build_torus_triangulation({3, 3, 0});
    ClassPartition part = canonical_three_coloring(T);
    Subgraph g1 = completion_subgraph(T, part);

    ListAssignment L(T.graph.n);
    for (auto& l : L.lists) l = {1, 2, 3, 4, 5};

    // colors outside every list leave the lists unchanged
    Coloring off_list;
    for (VertexId v : part.members[0]) off_list.assignment[v] = 9;
    ListAssignment same = residual_lists(T, part, L, off_list, g1);
    for (const auto& l : same.lists) CHECK(l.size() == 5u);

    // class-1 vertices have 3 class-0 neighbors; two distinct list colors
    // on them cost exactly two entries
    Coloring two_colors;
    {
        auto nbrs = T.graph.neighbor_sets();
        VertexId target = part.members[1][0];
        int used = 0;
        for (VertexId v : part.members[0]) {
            bool adjacent = false;
            for (VertexId w : nbrs[target])
                if (w == v) adjacent = true;
            two_colors.assignment[v] = adjacent && used < 2 ? ++used : 9;
        }
        ListAssignment res = residual_lists(T, part, L, two_colors, g1);
        CHECK(res.lists[g1.from_parent[target]].size() == 3u);
    }

    Coloring incomplete;
    incomplete.assignment[part.members[0][0]] = 1;
    CHECK_THROWS_AS(residual_lists(T, part, L, incomplete, g1), invalid_parameter);
    Coloring wrong_class;
    for (VertexId v : part.members[0]) wrong_class.assignment[v] = 1;
    wrong_class.assignment[part.members[1][0]] = 1;
    CHECK_THROWS_AS(residual_lists(T, part, L, wrong_class, g1), invalid_parameter);
}

TEST_CASE("five-list coloring on reference instances") {
    TorusTriangulation T = build_torus_triangulation({5, 6, 2});
    ListAssignment constant(T.graph.n);
    for (auto& l : constant.lists) l = {1, 2, 3, 4, 5};
    FiveListTrace trace;
    Coloring c = five_list_color(T, constant, &trace);
    CHECK(verify_coloring(T.graph, c, &constant));
    CHECK(trace.cycles.size() == 1u);
    CHECK(trace.min_residual_class1 >= 3);
    CHECK(trace.min_residual_class2 >= 2);

    // identical lists admit the canonical pattern, so case (a) fires
    CHECK(trace.cycles[0].case_taken == 'a');
}

TEST_CASE("five-list coloring against plain backtracking on small instances") {
    TorusTriangulation T = build_torus_triangulation({3, 3, 0});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        ListAssignment L = random_list_assignment(T.graph, 5, 15, seed);
        Coloring c = five_list_color(T, L);
        CHECK(verify_coloring(T.graph, c, &L));
        CHECK(find_list_coloring(T.graph, L).has_value());
    }
}

TEST_CASE("five-list coloring across multi-cycle grids") {
    TorusTriangulation T = build_torus_triangulation({6, 6, 0});
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        ListAssignment L = random_list_assignment(T.graph, 5, 15, seed);
        FiveListTrace trace;
        Coloring c = five_list_color(T, L, &trace);
        CHECK(verify_coloring(T.graph, c, &L));
        CHECK(trace.cycles.size() == 2u);
    }
}

TEST_CASE("five-list coloring rejects bad inputs") {
    TorusTriangulation T = build_torus_triangulation({3, 4, 0});
    ListAssignment L(T.graph.n);
    for (auto& l : L.lists) l = {1, 2, 3, 4, 5};
    CHECK_THROWS_AS(five_list_color(T, L), precondition_error); // not 3-chromatic

    TorusTriangulation good = build_torus_triangulation({3, 3, 0});
    ListAssignment four(good.graph.n);
    for (auto& l : four.lists) l = {1, 2, 3, 4};
    CHECK_THROWS_AS(five_list_color(good, four), invalid_parameter); // wrong list size
}

TEST_CASE("pipeline and oracle agree over a random sweep") {
    Rng rng(5150);
    for (int r = 1; r <= 18; ++r)
        for (int s = 1; r * s <= 18; ++s)
            for (int t = 0; t < s; ++t) {
                if (!classify({r, s, t}).is_three_chromatic) continue;
                TorusTriangulation T = build_torus_triangulation({r, s, t});
                for (int run = 0; run < 20; ++run) {
                    ListAssignment L = random_list_assignment(T.graph, 5, 15, rng());
                    Coloring c = five_list_color(T, L);
                    CHECK(verify_coloring(T.graph, c, &L));
                    CHECK(find_list_coloring(T.graph, L).has_value());
                }
            }
}
