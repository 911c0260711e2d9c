#include "gammacone/graph.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <utility>
#include <vector>

using namespace gammacone;

TEST_CASE("graph construction canonicalizes and validates edges") {
    Graph g(4, {{2, 1}, {0, 1}, {3, 2}});
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.edge_count() == 3);
    CHECK(g.edge_index(2, 1) == 1);
    CHECK(g.edge_index(0, 3) == -1);
    CHECK(g.adj[1] == (vbit(0) | vbit(2)));

    CHECK_THROWS_AS(Graph(2, {{0, 0}}), input_error);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), input_error);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), input_error);
    CHECK_THROWS_AS(Graph(0, {}), input_error);
    CHECK_THROWS_AS(Graph(65, {}), guard_error);
}

TEST_CASE("vertex set helpers work on masks") {
    CHECK(vfull(3) == 0b111u);
    CHECK(vcount(0b1011u) == 3);
    CHECK(vlowest(0b1000u) == 3);
    std::vector<int> seen;
    for_each_vertex(0b1011u, [&](int v) { seen.push_back(v); });
    CHECK(seen == std::vector<int>{0, 1, 3});
}

TEST_CASE("classification distinguishes trees, forests, and cyclic graphs") {
    CHECK(classify(named_family("path", 5)) == GraphClass::tree);
    CHECK(classify(Graph(1, {})) == GraphClass::tree);
    CHECK(classify(Graph(4, {{0, 1}, {2, 3}})) == GraphClass::forest);
    CHECK(classify(Graph(3, {{0, 1}, {1, 2}, {0, 2}})) == GraphClass::cyclic);
    CHECK(is_connected(named_family("star", 6)));
    CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("connected components respect the removed set") {
    Graph g = named_family("path", 5);
    CHECK(connected_component(g, 0, 2) == vfull(5));
    CHECK(connected_component(g, vbit(2), 0) == (vbit(0) | vbit(1)));
    CHECK(connected_component(g, vbit(2), 4) == (vbit(3) | vbit(4)));
    CHECK_THROWS_AS(connected_component(g, vbit(2), 2), input_error);
}

TEST_CASE("edge list parsing accepts headers, comments, and CRLF") {
    Graph g = parse_graph("vertices 4\n0 1\n1 2 # comment\n\r\n2 3\r\n");
    CHECK(g.n == 4);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    Graph inferred = parse_graph("0 1\n1 4\n");
    CHECK(inferred.n == 5);

    Graph isolated = parse_graph("vertices 3\n0 1\n");
    CHECK(isolated.n == 3);
    CHECK(isolated.edge_count() == 1);
}

TEST_CASE("edge list parsing reports the offending line") {
    CHECK_THROWS_WITH(parse_graph("0 1\nx 2\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_WITH(parse_graph("vertices 2\n0 1 9\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_AS(parse_graph("vertices 2\n0 3\n"), input_error);
    CHECK_THROWS_AS(parse_graph("0 -1\n"), input_error);
    CHECK_THROWS_AS(parse_graph("# nothing\n"), input_error);
}

TEST_CASE("named families have the documented shapes") {
    CHECK(named_family("path", 1).edge_count() == 0);
    CHECK(named_family("A", 4).edges ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(named_family("star", 4).edges ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}});
    CHECK(named_family("D", 4).edges == named_family("star", 4).edges);
    CHECK(named_family("d", 5).edges ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 4}, {2, 3}});
    // e(4) degenerates to the 4-path: the extra leaf lands at the path's end
    CHECK(named_family("e", 4).edges == named_family("path", 4).edges);
    CHECK(named_family("e", 6).edges ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {2, 5}, {3, 4}});

    CHECK_THROWS_AS(named_family("path", 0), input_error);
    CHECK_THROWS_AS(named_family("star", 1), input_error);
    CHECK_THROWS_AS(named_family("d", 3), input_error);
    CHECK_THROWS_AS(named_family("petersen", 10), input_error);
}

TEST_CASE("prufer decoding reproduces known small trees") {
    CHECK(prufer_decode({}, 2) == std::vector<std::pair<int, int>>{{0, 1}});
    // sequence (0,0) encodes the star with hub 0
    auto star = Graph(4, prufer_decode({0, 0}, 4));
    CHECK(star.adj[0] == (vbit(1) | vbit(2) | vbit(3)));
    // sequence (1,2) encodes the path 0-1-2-3
    CHECK(Graph(4, prufer_decode({1, 2}, 4)).edges == named_family("path", 4).edges);
    CHECK_THROWS_AS(prufer_decode({9}, 3), input_error);
    CHECK_THROWS_AS(prufer_decode({0, 0}, 3), input_error);
}

TEST_CASE("prufer enumeration is a bijection onto labeled trees") {
    int count = 0;
    std::set<std::vector<std::pair<int, int>>> distinct;
    for_each_labeled_tree(4, [&](const Graph& g) {
        ++count;
        distinct.insert(g.edges);
        CHECK(classify(g) == GraphClass::tree);
    });
    CHECK(count == 16);
    CHECK(distinct.size() == 16);

    count = 0;
    for_each_labeled_tree(5, [&](const Graph&) { ++count; });
    CHECK(count == 125);

    CHECK_THROWS_AS(for_each_labeled_tree(9, [](const Graph&) {}), guard_error);
}

TEST_CASE("random trees are deterministic per seed") {
    Graph a = random_tree(9, 42);
    Graph b = random_tree(9, 42);
    Graph c = random_tree(9, 43);
    CHECK(a.edges == b.edges);
    CHECK(classify(a) == GraphClass::tree);
    CHECK(classify(c) == GraphClass::tree);
}

TEST_CASE("induced subgraphs renumber vertices in increasing order") {
    Graph g = named_family("path", 5);
    auto sub = induced_subgraph(g, vbit(1) | vbit(2) | vbit(4));
    CHECK(sub.graph.n == 3);
    CHECK(sub.to_old == std::vector<int>{1, 2, 4});
    CHECK(sub.to_new[4] == 2);
    CHECK(sub.graph.edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK_THROWS_AS(induced_subgraph(g, 0), input_error);
}
