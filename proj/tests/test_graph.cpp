#include "anticlique/graph.hpp"

#include "doctest.h"

#include <cmath>

using namespace anticlique;

namespace {

const char* kG5 = "c five-vertex example\np edge 5 6\ne 1 2\ne 1 4\ne 1 5\ne 2 4\ne 3 4\ne 4 5\n";

}

TEST_CASE("parse DIMACS: five-vertex example") {
  auto g = parse_graph(kG5, GraphFormat::dimacs);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 6);
  CHECK(g.neighbors(2) == VertexSet{1, 4});
  CHECK(g.neighbors(4) == VertexSet{1, 2, 3, 5});
  CHECK(g.adjacent(5, 1));
  CHECK_FALSE(g.adjacent(2, 3));
}

TEST_CASE("parse edge list without edges") {
  auto g = parse_graph("3\n", GraphFormat::edge_list);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("parse errors name the line") {
  SUBCASE("index out of range") {
    try {
      parse_graph("p edge 3 1\ne 1 4\n", GraphFormat::dimacs);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("self-loop") {
    try {
      parse_graph("4\n1 2\n3 3\n", GraphFormat::edge_list);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("malformed header") {
    CHECK_THROWS_AS(parse_graph("p graph 3\n", GraphFormat::dimacs), ParseError);
    CHECK_THROWS_AS(parse_graph("e 1 2\n", GraphFormat::dimacs), ParseError);
    CHECK_THROWS_AS(parse_graph("3 4\n", GraphFormat::edge_list), ParseError);
    CHECK_THROWS_AS(parse_graph("{\"edges\": []}", GraphFormat::json), ParseError);
  }
  SUBCASE("json syntax error reports its line") {
    try {
      parse_graph("{\"v\": 3,\n \"edges\": [[1, 2],\n }", GraphFormat::json);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
}

TEST_CASE("serialize then parse returns the same graph in every format") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = random_graph(12, 0.4, seed);
    for (auto f : {GraphFormat::dimacs, GraphFormat::edge_list, GraphFormat::json})
      CHECK(parse_graph(serialize_graph(g, f), f) == g);
  }
}

TEST_CASE("json form is sorted and diff-stable") {
  Graph g(4, {{3, 1}, {2, 1}, {4, 3}});
  CHECK(serialize_graph(g, GraphFormat::json) == "{\"edges\":[[1,2],[1,3],[3,4]],\"v\":4}\n");
}

TEST_CASE("complement") {
  CHECK(to_complement(complete_graph(3)).edge_count() == 0);
  CHECK(to_complement(empty_graph(4)) == complete_graph(4));
  auto g5 = parse_graph(kG5, GraphFormat::dimacs);
  CHECK(to_complement(g5).edge_count() == 4);
  CHECK(to_complement(to_complement(g5)) == g5);
}

TEST_CASE("random graph extremes and determinism") {
  CHECK(random_graph(10, 0.0, 1).edge_count() == 0);
  CHECK(random_graph(10, 1.0, 1) == complete_graph(10));
  CHECK(random_graph(45, 0.08, 777) == random_graph(45, 0.08, 777));
  CHECK_FALSE(random_graph(45, 0.5, 1) == random_graph(45, 0.5, 2));
  CHECK_THROWS_AS(random_graph(5, 1.5, 1), ConfigError);
}

TEST_CASE("random graph edge count stays within four standard deviations") {
  const double pairs = 30.0 * 29.0 / 2.0;
  const double mean = 0.5 * pairs;
  const double sd = std::sqrt(pairs * 0.25);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const double w = static_cast<double>(random_graph(30, 0.5, seed).edge_count());
    CHECK(std::abs(w - mean) <= 4.0 * sd);
  }
}

TEST_CASE("bipartition") {
  auto p3 = bipartition(path_graph(3));
  REQUIRE(p3);
  CHECK(p3->smaller == VertexSet{2});
  CHECK(p3->larger == VertexSet{1, 3});

  CHECK_FALSE(bipartition(complete_graph(3)));

  auto iso = bipartition(empty_graph(4));
  REQUIRE(iso);
  CHECK(iso->smaller.empty());
  CHECK(iso->larger == VertexSet{1, 2, 3, 4});

  Graph k23(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  auto parts = bipartition(k23);
  REQUIRE(parts);
  CHECK(parts->smaller == VertexSet{1, 2});
  CHECK(parts->larger == VertexSet{3, 4, 5});

  // even cycle: equal sides, the lowest vertex's side goes first
  auto c4 = bipartition(cycle_graph(4));
  REQUIRE(c4);
  CHECK(c4->smaller == VertexSet{1, 3});
}

TEST_CASE("bipartition is a proper colouring") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = random_bipartite_graph(6, 9, 0.3, seed);
    auto parts = bipartition(g);
    REQUIRE(parts);
    CHECK(g.is_anticlique(parts->smaller));
    CHECK(g.is_anticlique(parts->larger));
    CHECK(parts->smaller.size() <= parts->larger.size());
    CHECK(parts->smaller.size() + parts->larger.size() == 15);
    CHECK(g.is_vertex_cover(parts->smaller));
  }
}

TEST_CASE("constructor rejects bad input") {
  CHECK_THROWS_AS(Graph(0, {}), ConfigError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), ConfigError);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), ConfigError);
  CHECK(Graph(3, {{1, 2}, {2, 1}}).edge_count() == 1);
}
