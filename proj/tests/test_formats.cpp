#include <doctest.h>

#include <string>

#include "riset/family.hpp"
#include "riset/graph_io.hpp"
#include "riset/json_io.hpp"
#include "riset/rng.hpp"

#include "helpers.hpp"

using namespace riset;
using nlohmann::json;
using riset::testing::random_graph;

TEST_CASE("graph text round trip") {
    SplitMix64 rng(31);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng.below(10)), 1, 2);
        CHECK(parse_graph(format_graph(g)) == g);
    }
}

TEST_CASE("graph text accepts comments and blank lines") {
    Graph g = parse_graph("c a triangle\n\np 3 3\ne 1 2\nc middle\ne 2 3\ne 1 3\n\n");
    CHECK(g == make_complete(3));
}

TEST_CASE("graph text errors name the line") {
    CHECK_THROWS_WITH_AS(parse_graph("p 2 1\n"), doctest::Contains("line"),
                         std::runtime_error);
    CHECK_THROWS_AS(parse_graph("p 2 1\ne 1 3\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_graph("p 2 1\ne 1 1\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_graph("p 2 1\ne 1 2\ne 1 2\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_graph("e 1 2\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_graph("p 2 1\nx 1 2\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_graph("p 2 1\ne 1 2 7\n"), std::runtime_error);
}

TEST_CASE("forest text round trip") {
    std::vector<std::optional<int>> parent(4);
    parent[1] = 0;
    parent[2] = 0;
    parent[3] = 2;
    RootedForest f = RootedForest::from_parents(parent);
    RootedForest back = parse_forest(format_forest(f));
    CHECK(back.size() == 4);
    for (int v = 0; v < 4; ++v) CHECK(back.parent(v) == f.parent(v));
}

TEST_CASE("forest text errors") {
    CHECK_THROWS_AS(parse_forest("v 0 -1\nv 0 -1\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_forest("v 0 5\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_forest("v 1 -1\n"), std::runtime_error);
}

TEST_CASE("family json round trip") {
    IndependentFamily fam;
    fam.set_size = 2;
    fam.sets = {{0, 2}, {1, 3}};
    json j = family_to_json(fam);
    CHECK(j.dump() == R"({"n":2,"sets":[[0,2],[1,3]]})");
    IndependentFamily back = family_from_json(j);
    CHECK(back.set_size == 2);
    CHECK(back.sets == fam.sets);
    CHECK_THROWS_WITH_AS(family_from_json(json{{"sets", json::array()}}),
                         doctest::Contains("n"), std::runtime_error);
    CHECK_THROWS_AS(family_from_json(json{{"n", 2}, {"sets", {{"a"}}}}),
                    std::runtime_error);
}

TEST_CASE("selection json round trip") {
    RainbowSelection sel{{{2, 0}, {3, 1}}};
    json j = selection_to_json(sel);
    CHECK(j.dump() == R"({"picks":[{"set_index":0,"vertex":2},{"set_index":1,"vertex":3}]})");
    RainbowSelection back = selection_from_json(j);
    REQUIRE(back.picks.size() == 2);
    CHECK(back.picks[0].vertex == 2);
    CHECK(back.picks[0].set_index == 0);
    CHECK(back.picks[1].vertex == 3);
}

TEST_CASE("failure report json round trip") {
    FailureReport rep{"pigeonhole", 2, 7, "largest bucket too small"};
    FailureReport back = failure_from_json(failure_to_json(rep));
    CHECK(back.stage == rep.stage);
    CHECK(back.depth == rep.depth);
    CHECK(back.family_size == rep.family_size);
    CHECK(back.detail == rep.detail);
}

TEST_CASE("coloring and order json") {
    ColorAssignment c;
    c.color = {0, 1, 0};
    c.palette_size = 2;
    CHECK(coloring_to_json(c).dump() == R"({"colors":[0,1,0],"palette":2})");
    ColorAssignment cb = coloring_from_json(coloring_to_json(c));
    CHECK(cb.color == c.color);
    CHECK(cb.palette_size == 2);
    CHECK_THROWS_AS(coloring_from_json(json{{"palette", 1}, {"colors", {0, 3}}}),
                    std::invalid_argument);

    LinearOrder o = LinearOrder::from_sequence({2, 0, 1});
    CHECK(order_to_json(o).dump() == R"({"order":[2,0,1]})");
    CHECK(order_from_json(order_to_json(o)) == o);
}

TEST_CASE("family validation against a host") {
    Graph c4 = make_cycle(4);
    IndependentFamily fam = make_family(c4, 2, {{0, 2}, {1, 3}});
    CHECK(fam.size() == 2);
    CHECK_THROWS_AS(make_family(c4, 2, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_family(c4, 2, {{0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_family(c4, 2, {{2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_family(c4, 2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_family(c4, 2, {{0, 7}}), std::invalid_argument);
}

TEST_CASE("selection validation") {
    Graph c4 = make_cycle(4);
    IndependentFamily fam = make_family(c4, 2, {{0, 2}, {0, 2}});
    RainbowSelection good{{{0, 0}, {2, 1}}};
    CHECK(selection_error(c4, fam, good).empty());
    RainbowSelection repeat_set{{{0, 0}, {2, 0}}};
    CHECK(!selection_error(c4, fam, repeat_set).empty());
    RainbowSelection repeat_vertex{{{0, 0}, {0, 1}}};
    CHECK(!selection_error(c4, fam, repeat_vertex).empty());
    RainbowSelection non_member{{{1, 0}, {2, 1}}};
    CHECK(!selection_error(c4, fam, non_member).empty());
    RainbowSelection wrong_size{{{0, 0}}};
    CHECK(!selection_error(c4, fam, wrong_size).empty());
    IndependentFamily adj = make_family(make_empty(4), 2, {{0, 1}, {0, 1}});
    RainbowSelection adjacent_pair{{{0, 0}, {1, 1}}};
    CHECK(selection_error(make_path(2), adj, adjacent_pair) ==
          selection_error(make_path(2), adj, adjacent_pair));
    CHECK(!selection_error(make_path(2), adj, adjacent_pair).empty());
}
