#include <catch_amalgamated.hpp>

#include "cwl/families.hpp"
#include "support/named_graphs.hpp"

using namespace cwl;
using namespace cwl::testing;

TEST_CASE("basic families", "[families]") {
    Graph p2 = make_family(family::Path{2});
    CHECK(p2.size() == 2);
    CHECK(p2.edge_count() == 1);
    CHECK(make_family(family::Cycle{6}) == cycle_graph(6));
    CHECK(make_family(family::Complete{4}).edge_count() == 6);
    CHECK_THROWS_AS(make_family(family::Cycle{2}), Error);
    CHECK_THROWS_AS(make_family(family::Path{0}), Error);
}

TEST_CASE("n-clique graphs", "[families]") {
    Graph d = make_family(family::NClique{2, {1, 1}});
    CHECK(d.labels() == std::vector<std::string>{"x1", "x2", "y11", "y21"});
    CHECK(d.edge_count() == 5);
    CHECK(d.adjacent(d.at("x1"), d.at("x2")));
    CHECK_FALSE(d.adjacent(d.at("y11"), d.at("y21")));
    CHECK(d.degree(d.at("y11")) == 2);

    // Γ_{1,3,2,1}: K4, K3 and K2 glued at x1.
    Graph g = make_family(family::NClique{1, {3, 2, 1}});
    CHECK(g.size() == 7);
    CHECK(g.edge_count() == 6 + 3 + 1);
    CHECK(g.degree(g.at("x1")) == 6);
    CHECK(is_clique(g, g.set_of({"x1", "y11", "y12", "y13"})));
    CHECK(is_clique(g, g.set_of({"x1", "y21", "y22"})));
    CHECK(g.degree(g.at("y31")) == 1);
    CHECK_FALSE(g.adjacent(g.at("y11"), g.at("y21")));

    CHECK(nclique_label(10, 2) == "y10_2");
    CHECK_THROWS_AS(make_family(family::NClique{2, {}}), Error);
    CHECK_THROWS_AS(make_family(family::NClique{2, {1, 0}}), Error);
}

TEST_CASE("star graphs based on a complete graph", "[families]") {
    Graph s = make_family(family::StarComplete{3, {{1}, {1, 2}, {2, 3}}});
    CHECK(s.size() == 6);
    CHECK(is_clique(s, s.set_of({"x1", "x2", "x3"})));
    CHECK(is_independent(s, s.set_of({"y1", "y2", "y3"})));
    CHECK(s.neighbors(s.at("y2")) == s.set_of({"x1", "x2"}));
    CHECK_THROWS_AS(make_family(family::StarComplete{3, {{4}}}), Error);
    CHECK_THROWS_AS(make_family(family::StarComplete{3, {{}}}), Error);
}

TEST_CASE("random families are seeded", "[families]") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph t = make_family(family::RandomTree{8, seed});
        REQUIRE(is_connected(t));
        REQUIRE(is_forest(t));
        REQUIRE(t == make_family(family::RandomTree{8, seed}));
    }
    CHECK(make_family(family::RandomTree{8, 1}) != make_family(family::RandomTree{8, 2}));
    CHECK(make_family(family::RandomTree{1, 0}).size() == 1);
    CHECK(make_family(family::RandomTree{2, 0}).edge_count() == 1);

    Graph r = make_family(family::RandomGraph{10, 0.5, 7});
    CHECK(r == make_family(family::RandomGraph{10, 0.5, 7}));
    CHECK(make_family(family::RandomGraph{6, 0.0, 1}).edge_count() == 0);
    CHECK(make_family(family::RandomGraph{6, 1.0, 1}).edge_count() == 15);
}

TEST_CASE("family spec strings", "[families]") {
    CHECK(make_family(parse_family("nclique:2:1,1")) == make_family(family::NClique{2, {1, 1}}));
    CHECK(make_family(parse_family("star:3:1/1,2")) == make_family(family::StarComplete{3, {{1}, {1, 2}}}));
    CHECK(describe(parse_family("random-tree:8:3")) == "random-tree:8:3");
    CHECK(describe(parse_family("star:3:1/1,2")) == "star:3:1/1,2");
    CHECK_THROWS_AS(parse_family("hexagon:3"), Error);
    CHECK_THROWS_AS(parse_family("path"), Error);
    CHECK_THROWS_AS(parse_family("path:x"), Error);
}
