#include "anticlique/row.hpp"

#include "doctest.h"
#include "support/brute.hpp"

#include <random>
#include <set>

using namespace anticlique;

namespace {

// 13 positions, one zero, one 1, two 2's, groups of anticonclusion sizes 3, 1, 2.
const char* kExampleRow = "(2,0,1,2,a1,b1,b1,b1,a2,b2,a3,b3,b3)";

}

TEST_CASE("full row") {
  auto r = Row::full(5);
  CHECK(r.to_string() == "(2,2,2,2,2)");
  CHECK(r.member_count() == 32);
  CHECK(r.pending() == 0);
  CHECK(Row::full(1).member_count() == 2);
  CHECK_THROWS_AS(Row::full(0), ConfigError);
}

TEST_CASE("parse and print") {
  auto r = Row::parse(kExampleRow);
  CHECK(r.to_string() == kExampleRow);
  CHECK(r.zeros() == VertexSet{2});
  CHECK(r.ones() == VertexSet{3});
  CHECK(r.twos() == VertexSet{1, 4});
  CHECK(r.premset() == VertexSet{5, 9, 11});
  CHECK(r.anticonc(5) == VertexSet{6, 7, 8});
  CHECK(r.anticonc(11) == VertexSet{12, 13});
  r.check_invariants();

  CHECK_THROWS_AS(Row::parse("(a1,0)"), ConfigError);
  CHECK_THROWS_AS(Row::parse("(b1,0)"), ConfigError);
  CHECK_THROWS_AS(Row::parse("(a1,a1,b1)"), ConfigError);
  CHECK_THROWS_AS(Row::parse("(3,0)"), ConfigError);
  CHECK_THROWS_AS(Row::parse("2,0"), ConfigError);
}

TEST_CASE("w_max") {
  CHECK(Row::parse(kExampleRow).w_max() == 9);
  CHECK(Row::full(5).w_max() == 5);
  CHECK(Row::parse("(a1,0,0,0,b1)").w_max() == 1);
}

TEST_CASE("member_count") {
  CHECK(Row::parse("(a1,0,0,0,b1)").member_count() == 3);
  CHECK(Row::full(5).member_count() == 32);
  CHECK(Row::parse(kExampleRow).member_count() == 540);
  // the five finalized rows of the five-vertex run
  BigInt total = 0;
  for (auto s : {"(a1,0,0,0,b1)", "(0,0,0,1,0)", "(0,0,1,0,1)", "(2,0,1,0,0)", "(0,1,2,0,2)"})
    total += Row::parse(s).member_count();
  CHECK(total == 11);
}

TEST_CASE("spectrum") {
  CHECK(Row::parse("(a1,0,0,0,b1)").spectrum() == Polynomial{1, 2});
  CHECK(Row::full(5).spectrum() == Polynomial{1, 5, 10, 10, 5, 1});

  // Sizes of the 540 members, counted by exhaustive expansion.
  auto s = Row::parse(kExampleRow).spectrum();
  CHECK(s == Polynomial{0, 1, 11, 49, 115, 156, 127, 62, 17, 2});
  CHECK(s[1] == 1);
  CHECK(s[8] == 17);
  CHECK(s.at_one() == 540);
}

TEST_CASE("max_member and contains") {
  CHECK(Row::parse("(0,1,2,0,2)").max_member() == VertexSet{2, 3, 5});
  CHECK(Row::full(5).max_member() == VertexSet{1, 2, 3, 4, 5});
  CHECK(Row::parse("(a1,0,0,0,b1)").max_member() == VertexSet{5});

  CHECK(Row::parse("(0,1,2,0,2)").contains({2, 3, 5}));
  CHECK_FALSE(Row::parse("(0,1,2,0,2)").contains({1}));
  CHECK_FALSE(Row::parse(kExampleRow).contains({3, 5, 6}));
  CHECK(Row::parse(kExampleRow).contains({3, 5}));
}

TEST_CASE("expand") {
  auto r = Row::parse("(a1,0,0,0,b1)");
  auto all = r.expand(0);
  CHECK(std::set<VertexSet>(all.begin(), all.end()) == std::set<VertexSet>{{}, {1}, {5}});
  CHECK(all.size() == 3);
  auto big = r.expand(1);
  CHECK(std::set<VertexSet>(big.begin(), big.end()) == std::set<VertexSet>{{1}, {5}});

  auto members = Row::parse(kExampleRow).expand(0);
  CHECK(members.size() == 540);
  CHECK(std::set<VertexSet>(members.begin(), members.end()).size() == 540);
  CHECK(Row::parse(kExampleRow).expand(9).size() == 2);

  // fixed order
  CHECK(Row::parse("(2,a1,b1)").expand(0) == std::vector<VertexSet>{{2}, {}, {3}, {1, 2}, {1}, {1, 3}});
}

TEST_CASE("random rows agree with exhaustive membership") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int v = 1 + static_cast<int>(rng() % 14);
    auto text = brute::random_row(v, rng);
    auto r = Row::parse(text);
    r.check_invariants();
    auto members = brute::row_members(text);

    CHECK(BigInt(members.size()) == r.member_count());
    auto hist = brute::size_histogram(members);
    std::vector<BigInt> coeffs(hist.begin(), hist.end());
    CHECK(r.spectrum() == Polynomial(coeffs));
    CHECK(r.spectrum().degree() == r.w_max());
    CHECK(r.spectrum().at_one() == r.member_count());

    const auto max_member = r.max_member();
    CHECK(static_cast<int>(max_member.size()) == r.w_max());
    CHECK(r.contains(max_member));

    std::set<brute::Mask> expected(members.begin(), members.end());
    std::set<brute::Mask> expanded;
    r.expand(0, [&](const VertexSet& x) {
      CHECK(r.contains(x));
      expanded.insert(brute::to_mask(x));
    });
    CHECK(expanded == expected);
    CHECK(BigInt(expanded.size()) == r.member_count());

    // contains agrees on arbitrary subsets too
    for (int probe = 0; probe < 8; ++probe) {
      const brute::Mask x = rng() & ((brute::Mask{1} << v) - 1);
      CHECK(r.contains(brute::to_set(x)) == (expected.count(x) > 0));
    }
  }
}

TEST_CASE("weighted bound dominates every member and is attained") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int v = 1 + static_cast<int>(rng() % 12);
    auto r = Row::parse(brute::random_row(v, rng));
    std::vector<std::int64_t> w(static_cast<std::size_t>(v));
    for (auto& x : w) x = 1 + static_cast<std::int64_t>(rng() % 9);
    const auto bound = r.weighted_bound(w);
    std::int64_t best = -1;
    r.expand(0, [&](const VertexSet& x) {
      std::int64_t s = 0;
      for (Vertex y : x) s += w[static_cast<std::size_t>(y - 1)];
      CHECK(s <= bound);
      best = std::max(best, s);
    });
    CHECK(best == bound);
    auto arg = r.weighted_max_member(w);
    CHECK(r.contains(arg));
    std::int64_t s = 0;
    for (Vertex y : arg) s += w[static_cast<std::size_t>(y - 1)];
    CHECK(s == bound);

    std::vector<std::int64_t> unit(static_cast<std::size_t>(v), 1);
    CHECK(r.weighted_bound(unit) == r.w_max());
  }
}

TEST_CASE("editing primitives keep the tables consistent") {
  auto r = Row::parse("(a1,b1,2,b1,b1)");
  r.detach_anti(2, Symbol::zero);
  CHECK(r.to_string() == "(a1,0,2,b1,b1)");
  r.detach_anti(4, Symbol::zero);
  r.detach_anti(5, Symbol::one);
  CHECK(r.to_string() == "(2,0,2,0,1)");
  r.check_invariants();

  auto s = Row::full(4);
  int id = s.create_group(1, {3, 4});
  CHECK(s.to_string() == "(a1,2,b1,b1)");
  s.dissolve_group(id, Symbol::zero, Symbol::two);
  CHECK(s.to_string() == "(0,2,2,2)");
  CHECK(s.create_group(2, {3}) == 2);  // ids are not reused
  s.check_invariants();

  CHECK_THROWS_AS(s.set_free(2, Symbol::zero), std::logic_error);
  CHECK_THROWS_AS(s.create_group(1, {3}), std::logic_error);
}

TEST_CASE("structural equality ignores group ids") {
  CHECK(Row::parse("(a1,b1,a2,b2)") == Row::parse("(a7,b7,a3,b3)"));
  CHECK_FALSE(Row::parse("(a1,b1,b1,2)") == Row::parse("(a1,b1,2,2)"));
}
