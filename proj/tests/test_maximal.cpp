#include "anticlique/maximal.hpp"

#include "doctest.h"
#include "support/brute.hpp"

#include <algorithm>

using namespace anticlique;

namespace {

Graph g5() { return Graph(5, {{1, 2}, {1, 4}, {1, 5}, {2, 4}, {3, 4}, {4, 5}}); }

std::vector<VertexSet> brute_maximal(const Graph& g) {
  auto all = brute::anticliques(g);
  std::vector<VertexSet> out;
  for (auto x : all) {
    bool maximal = true;
    for (int y = 0; y < g.vertex_count() && maximal; ++y) {
      const brute::Mask bigger = x | (brute::Mask{1} << y);
      if (bigger != x && brute::independent(bigger, g)) maximal = false;
    }
    if (maximal) out.push_back(brute::to_set(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("row-wise maximal members") {
  CHECK(row_maximal_members(Row::parse("(2,0,1,2,a1,b1,b1,b1,a2,b2,a3,b3,b3)")).size() == 8);
  CHECK(row_maximal_members(Row::full(3)) == std::vector<VertexSet>{{1, 2, 3}});
  CHECK(row_maximal_members(Row::parse("(a1,0,0,0,b1)")) == std::vector<VertexSet>{{1}, {5}});
}

TEST_CASE("sieve keeps the inclusion-maximal sets") {
  CHECK(sieve_maximal({{1}, {1, 2}, {3}, {2, 3}, {}}, 3) == std::vector<VertexSet>{{1, 2}, {2, 3}});
  CHECK(sieve_maximal({{}, {}}, 2) == std::vector<VertexSet>{{}});
  CHECK(sieve_maximal({{1, 2}, {1, 2}}, 2) == std::vector<VertexSet>{{1, 2}});
  CHECK(sieve_maximal({{2}, {1, 2, 3}, {1}}, 3) == std::vector<VertexSet>{{1, 2, 3}});

  ContainIndex idx(4);
  CHECK(idx.offer({1, 2}));
  CHECK_FALSE(idx.offer({1}));
  CHECK(idx.offer({1, 2, 3}));
  CHECK(idx.live_count() == 1);
  CHECK(idx.dominated() == 1);
  CHECK(idx.evicted() == 1);
}

TEST_CASE("sieve is idempotent and order-insensitive") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<VertexSet> sets;
    for (int i = 0; i < 20; ++i) sets.push_back(brute::to_set(rng() & 0xFF));
    auto once = sieve_maximal(sets, 8);
    CHECK(sieve_maximal(once, 8) == once);
    std::shuffle(sets.begin(), sets.end(), rng);
    CHECK(sieve_maximal(sets, 8) == once);
    for (const auto& a : once)
      for (const auto& b : once)
        if (a != b) CHECK_FALSE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
  }
}

TEST_CASE("maximal anticliques of named graphs") {
  CHECK(maximal_anticliques(g5()).sets == std::vector<VertexSet>{{1, 3}, {2, 3, 5}, {4}});
  CHECK(maximal_anticliques(cycle_graph(5)).sets ==
        std::vector<VertexSet>{{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}});
  CHECK(maximal_anticliques(complete_graph(4)).sets == std::vector<VertexSet>{{1}, {2}, {3}, {4}});
  CHECK(maximal_anticliques(empty_graph(3)).sets == std::vector<VertexSet>{{1, 2, 3}});
}

TEST_CASE("maximal anticliques match brute force") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = random_graph(4 + static_cast<int>(seed % 12), 0.1 + 0.2 * static_cast<double>(seed % 5), seed);
    auto r = maximal_anticliques(g);
    CHECK(r.sets == brute_maximal(g));
    CHECK(r.candidates >= r.sets.size());
  }
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(g5()).chi == 3);
  CHECK(chromatic_number(cycle_graph(5)).chi == 3);
  CHECK(chromatic_number(cycle_graph(6)).chi == 2);
  CHECK(chromatic_number(random_bipartite_graph(5, 6, 0.5, 1)).chi <= 2);
  CHECK(chromatic_number(complete_graph(6)).chi == 6);
  CHECK(chromatic_number(empty_graph(4)).chi == 1);
  CHECK_THROWS_AS(chromatic_number(empty_graph(31)), GuardError);
  CHECK_THROWS_AS(chromatic_number(empty_graph(12), 10), GuardError);
}

TEST_CASE("chromatic cover is valid") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = random_graph(12, 0.4, seed);
    auto r = chromatic_number(g);
    CHECK(static_cast<int>(r.cover.size()) == r.chi);
    std::vector<bool> seen(13, false);
    for (const auto& c : r.cover) {
      CHECK(g.is_anticlique(c));
      for (Vertex y : c) seen[static_cast<std::size_t>(y)] = true;
    }
    for (Vertex y = 1; y <= 12; ++y) CHECK(seen[static_cast<std::size_t>(y)]);
  }
}
