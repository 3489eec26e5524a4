#include "anticlique/oracle.hpp"

#include "doctest.h"

using namespace anticlique;

TEST_CASE("oracle on the five-vertex example") {
  Graph g(5, {{1, 2}, {1, 4}, {1, 5}, {2, 4}, {3, 4}, {4, 5}});
  auto r = oracle_report(g);
  CHECK(r.f == 11);
  CHECK(r.spectrum == Polynomial{1, 5, 4, 1});
  CHECK(r.alpha == 3);
  CHECK(r.maximum_sets == std::vector<VertexSet>{{2, 3, 5}});
  CHECK(r.maximal_sets == std::vector<VertexSet>{{1, 3}, {2, 3, 5}, {4}});
  REQUIRE(r.chi);
  CHECK(*r.chi == 3);
}

TEST_CASE("oracle on small named graphs") {
  auto k3 = oracle_report(complete_graph(3));
  CHECK(k3.f == 4);
  CHECK(*k3.chi == 3);

  auto p4 = oracle_report(path_graph(4));
  CHECK(p4.f == 8);
  CHECK(p4.alpha == 2);
  CHECK(p4.maximum_sets == std::vector<VertexSet>{{1, 3}, {1, 4}, {2, 4}});
  CHECK(*p4.chi == 2);

  auto e = oracle_report(empty_graph(3));
  CHECK(e.f == 8);
  CHECK(e.maximal_sets == std::vector<VertexSet>{{1, 2, 3}});
  CHECK(*e.chi == 1);
}

TEST_CASE("oracle guards") {
  CHECK_THROWS_AS(oracle_report(empty_graph(26)), GuardError);
  CHECK_THROWS_AS(oracle_report(empty_graph(10), 8), GuardError);
  CHECK_FALSE(oracle_report(empty_graph(10), 25, 5).chi);
}

TEST_CASE("oracle chromatic number") {
  CHECK(oracle_chromatic_number(cycle_graph(5)) == 3);
  CHECK(oracle_chromatic_number(cycle_graph(8)) == 2);
  CHECK(oracle_chromatic_number(complete_graph(5)) == 5);
}

TEST_CASE("bipartite matching") {
  CHECK(oracle_matching(complete_graph(2)) == 1);
  CHECK(oracle_matching(path_graph(3)) == 1);
  CHECK(oracle_matching(cycle_graph(6)) == 3);
  CHECK(oracle_matching(empty_graph(4)) == 0);
  CHECK_THROWS_AS(oracle_matching(complete_graph(3)), ConfigError);
}

TEST_CASE("matching and independence agree by Konig") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = random_bipartite_graph(6, 8, 0.3, seed);
    CHECK(oracle_report(g).alpha == g.vertex_count() - oracle_matching(g));
  }
}
