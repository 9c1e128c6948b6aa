#include <doctest.h>

#include <set>

#include "test_support.hpp"
#include "torlist/errors.hpp"
#include "torlist/graph_algos.hpp"
#include "torlist/list_coloring.hpp"
#include "torlist/torus.hpp"

using namespace torlist;
using namespace testsupport;

namespace {

ListAssignment uniform_lists(int n, std::vector<ColorId> list) {
    ListAssignment L(n);
    for (auto& l : L.lists) l = list;
    L.normalize();
    return L;
}

} // namespace

TEST_CASE("list coloring on small graphs") {
    Multigraph c4 = build_cycle(4);
    auto col = find_list_coloring(c4, uniform_lists(4, {1, 2}));
    REQUIRE(col.has_value());
    CHECK(col->assignment == std::map<VertexId, ColorId>{{0, 1}, {1, 2}, {2, 1}, {3, 2}});
    CHECK(verify_coloring(c4, *col));

    CHECK(!find_list_coloring(build_cycle(3), uniform_lists(3, {1, 2})));
}

TEST_CASE("the K_{2,4} assignment with all pair combinations is uncolorable") {
    Multigraph g = build_complete_bipartite(2, 4);
    ListAssignment L(6);
    L.lists[0] = {1, 2};
    L.lists[1] = {3, 4};
    L.lists[2] = {1, 3};
    L.lists[3] = {1, 4};
    L.lists[4] = {2, 3};
    L.lists[5] = {2, 4};
    CHECK(!brute_force_list_colorable(g, L)); // oracle over all 2^6 selections
    CHECK(!find_list_coloring(g, L));
}

TEST_CASE("list coloring error paths") {
    Multigraph loopy(2);
    loopy.add_edge(0, 0);
    loopy.add_edge(0, 1);
    CHECK_THROWS_AS(find_list_coloring(loopy, uniform_lists(2, {1, 2})), precondition_error);

    ListAssignment with_empty(2);
    with_empty.lists[0] = {1};
    CHECK(!find_list_coloring(build_path(2), with_empty)); // empty list, definitive absence

    CHECK_THROWS_AS(find_list_coloring(build_path(2), ListAssignment(1)), invalid_parameter);
}

TEST_CASE("coloring verification") {
    Multigraph c4 = build_cycle(4);
    Coloring c;
    for (VertexId v = 0; v < 4; ++v) c.assignment[v] = v % 2;
    CHECK(verify_coloring(c4, c));

    Coloring constant;
    for (VertexId v = 0; v < 4; ++v) constant.assignment[v] = 1;
    CHECK(!verify_coloring(c4, constant));

    ListAssignment L = uniform_lists(4, {0, 2});
    CHECK(!verify_coloring(c4, c, &L)); // color 1 is outside the lists

    Coloring partial;
    partial.assignment[0] = 1;
    CHECK_THROWS_AS(verify_coloring(c4, partial), invalid_parameter);
}

TEST_CASE("agreement with the brute-force oracle on random instances") {
    Rng rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        Multigraph g = random_simple_graph(rng, rand_int(rng, 2, 7), rand_int(rng, 20, 90));
        ListAssignment L(g.n);
        for (auto& l : L.lists) {
            int k = rand_int(rng, 1, 3);
            std::set<ColorId> s;
            while (static_cast<int>(s.size()) < k) s.insert(rand_int(rng, 1, 5));
            l.assign(s.begin(), s.end());
        }
        auto got = find_list_coloring(g, L);
        CHECK(got.has_value() == brute_force_list_colorable(g, L));
        if (got) CHECK(verify_coloring(g, *got, &L));
    }
}

TEST_CASE("determinism of the solver") {
    Rng rng(5);
    Multigraph g = random_simple_graph(rng, 8, 50);
    ListAssignment L = random_list_assignment(g, 3, 9, 17);
    auto a = find_list_coloring(g, L);
    auto b = find_list_coloring(g, L);
    REQUIRE(a.has_value() == b.has_value());
    if (a) CHECK(a->assignment == b->assignment);
}

TEST_CASE("monotonicity: growing lists keeps colorability") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        Multigraph g = random_simple_graph(rng, rand_int(rng, 2, 6), rand_int(rng, 20, 80));
        ListAssignment L(g.n);
        for (auto& l : L.lists) {
            std::set<ColorId> s;
            int k = rand_int(rng, 1, 3);
            while (static_cast<int>(s.size()) < k) s.insert(rand_int(rng, 1, 6));
            l.assign(s.begin(), s.end());
        }
        if (!find_list_coloring(g, L)) continue;
        ListAssignment bigger = L;
        for (auto& l : bigger.lists)
            if (rand_int(rng, 0, 1)) l.push_back(7 + rand_int(rng, 0, 3));
        bigger.normalize();
        CHECK(find_list_coloring(g, bigger).has_value());
    }
}

TEST_CASE("identical lists reduce to plain colorability") {
    Rng rng(88);
    for (int trial = 0; trial < 150; ++trial) {
        Multigraph g = random_simple_graph(rng, rand_int(rng, 2, 7), rand_int(rng, 20, 90));
        int k = rand_int(rng, 1, 4);
        std::vector<ColorId> colors;
        for (int c = 1; c <= k; ++c) colors.push_back(c);
        bool ok = find_list_coloring(g, uniform_lists(g.n, colors)).has_value();
        CHECK(ok == (chromatic_number_exact(g) <= k));
    }
}

TEST_CASE("graphs with an empty k-core are k-choosable on sampled lists") {
    Rng rng(140);
    int samples = 0;
    while (samples < 1000) {
        Multigraph g = random_simple_graph(rng, rand_int(rng, 3, 9), rand_int(rng, 10, 45));
        int k = rand_int(rng, 2, 3);
        if (k_core(g, k).graph.n != 0) continue;
        ListAssignment L = random_list_assignment(g, k, 8, rng());
        ++samples;
        CHECK(find_list_coloring(g, L).has_value());
    }
}

TEST_CASE("exhaustive choosability verdicts") {
    auto tri = is_k_choosable_exhaustive(build_cycle(3), 1, 2);
    REQUIRE(tri.verdict == ChoosabilityResult::Verdict::counterexample);
    REQUIRE(tri.counterexample.has_value());
    for (const auto& l : tri.counterexample->lists) CHECK(l == std::vector<ColorId>{1});

    auto c4 = is_k_choosable_exhaustive(build_cycle(4), 2, 4);
    CHECK(c4.verdict == ChoosabilityResult::Verdict::choosable_in_universe);

    std::vector<std::vector<VertexId>> parts{{0, 1, 2}, {3, 4, 5}};
    auto k33 = is_k_choosable_exhaustive(build_complete_bipartite(3, 3), 2, 4,
                                         kDefaultAssignmentBudget, &parts);
    REQUIRE(k33.verdict == ChoosabilityResult::Verdict::counterexample);
    CHECK(!brute_force_list_colorable(build_complete_bipartite(3, 3), *k33.counterexample));

    auto tiny_budget = is_k_choosable_exhaustive(build_cycle(6), 2, 4, 10);
    CHECK(tiny_budget.verdict == ChoosabilityResult::Verdict::budget_exhausted);
    CHECK(tiny_budget.assignments_checked == 10);
}

TEST_CASE("choice numbers with certificates") {
    auto even_cycle = choice_number_small(build_cycle(6), 4, 4);
    CHECK(even_cycle.value == 2);
    CHECK(even_cycle.exact);

    std::vector<std::vector<VertexId>> parts{{0, 1, 2}, {3, 4, 5}};
    auto k33 = choice_number_small(build_complete_bipartite(3, 3), 4, 4,
                                   kDefaultAssignmentBudget, &parts);
    CHECK(k33.value == 3);
    CHECK(k33.exact);
    CHECK(k33.certificate == "bipartite-density");

    auto k4 = choice_number_small(build_complete(4), 5, 5);
    CHECK(k4.value == 4);
    CHECK(k4.exact);
}

TEST_CASE("random list assignments") {
    Multigraph g = build_cycle(5);
    ListAssignment forced = random_list_assignment(g, 5, 5, 99);
    for (const auto& l : forced.lists) CHECK(l == std::vector<ColorId>{1, 2, 3, 4, 5});

    CHECK(random_list_assignment(g, 5, 15, 1).lists ==
          random_list_assignment(g, 5, 15, 1).lists);

    ListAssignment wide = random_list_assignment(g, 5, 15, 1);
    for (const auto& l : wide.lists) {
        CHECK(l.size() == 5u);
        std::set<ColorId> s(l.begin(), l.end());
        CHECK(s.size() == 5u);
        for (ColorId c : l) {
            CHECK(c >= 1);
            CHECK(c <= 15);
        }
    }
    CHECK_THROWS_AS(random_list_assignment(g, 5, 4, 0), invalid_parameter);
}

TEST_CASE("degeneracy choosability bound") {
    CHECK(degeneracy_choosability_bound(build_path(7)) == 2);
    CHECK(degeneracy_choosability_bound(build_complete(5)) == 5);
    TorusTriangulation T = build_torus_triangulation({5, 6, 2});
    CHECK(degeneracy(T.graph) == 6); // peeling a 6-regular graph
    CHECK(degeneracy_choosability_bound(T.graph) == 7);
}
