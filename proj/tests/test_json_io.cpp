#include <doctest.h>

#include "test_support.hpp"
#include "torlist/errors.hpp"
#include "torlist/json_io.hpp"

using namespace torlist;
using namespace testsupport;
using nlohmann::json;

TEST_CASE("graph JSON round-trips bit-exactly") {
    Rng rng(9001);
    for (int trial = 0; trial < 50; ++trial) {
        Multigraph g = random_multigraph(rng, rand_int(rng, 1, 10), rand_int(rng, 0, 15));
        if (trial % 3 == 0) g.labels[0] = "tagged";
        std::string s = to_json(g).dump();
        Multigraph back = multigraph_from_json(json::parse(s));
        CHECK(to_json(back).dump() == s);
        CHECK(back == g);
        CHECK(back.labels == g.labels);
    }

    std::string fixed = R"({"edges":[[0,1],[1,2]],"n":3})";
    std::string once = to_json(multigraph_from_json(json::parse(fixed))).dump();
    CHECK(once == fixed);
}

TEST_CASE("torus JSON carries params and coords") {
    TorusTriangulation T = build_torus_triangulation({2, 6, 2});
    json j = to_json(T);
    CHECK(j["params"] == json({2, 6, 2}));
    CHECK(j["coords"]["0"] == json({1, 1}));
    CHECK(j["coords"]["11"] == json({2, 6}));
    // still parses as a plain graph
    Multigraph g = multigraph_from_json(j);
    CHECK(g.n == 12);
    CHECK(g.edges.size() == 36u);
}

TEST_CASE("list and coloring JSON") {
    ListAssignment L(2);
    L.lists[0] = {1, 5};
    L.lists[1] = {2};
    json j = to_json(L);
    ListAssignment back = lists_from_json(j, 2);
    CHECK(back.lists == L.lists);
    CHECK(to_json(back).dump() == j.dump());

    Coloring c;
    c.assignment[0] = 4;
    c.assignment[7] = 1;
    Coloring cback = coloring_from_json(to_json(c));
    CHECK(cback.assignment == c.assignment);
}

TEST_CASE("orientation JSON lists directed pairs in edge order") {
    Multigraph g = build_path(3);
    Orientation o = orient_edges(g, {true, false});
    json j = to_json(o);
    CHECK(j["directed"] == json({{0, 1}, {2, 1}}));
    CHECK(j["edges"] == json({{0, 1}, {1, 2}}));
}

TEST_CASE("parse failures raise invalid_parameter") {
    CHECK_THROWS_AS(multigraph_from_json(json::parse(R"({"edges":[]})")), invalid_parameter);
    CHECK_THROWS_AS(multigraph_from_json(json::parse(R"({"n":2,"edges":[[0,5]]})")),
                    invalid_parameter);
    CHECK_THROWS_AS(multigraph_from_json(json::parse(R"({"n":-1,"edges":[]})")),
                    invalid_parameter);
    CHECK_THROWS_AS(lists_from_json(json::parse(R"({"lists":{"0":[1]}})"), 2),
                    invalid_parameter); // missing vertex 1
    CHECK_THROWS_AS(lists_from_json(json::parse(R"({"lists":{"9":[1]}})"), 2),
                    invalid_parameter);
    CHECK_THROWS_AS(coloring_from_json(json::parse(R"({"colors":{"x":1}})")),
                    invalid_parameter);
}

TEST_CASE("DOT export") {
    Multigraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 1);
    g.labels[2] = "lonely";
    std::string dot = to_dot(g, "demo");
    CHECK(dot.find("graph demo {") == 0);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("1 -- 1;") != std::string::npos);
    CHECK(dot.find("label=\"lonely\"") != std::string::npos);
}
