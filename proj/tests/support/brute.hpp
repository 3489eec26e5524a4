#pragma once

// Test-only brute force. Reads rows through their debug text and graphs
// through their edge list, never through the library's row queries.

#include "anticlique/graph.hpp"
#include "anticlique/row.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace brute {

using anticlique::Vertex;
using anticlique::VertexSet;
using Mask = std::uint64_t;

inline VertexSet to_set(Mask m) {
  VertexSet out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1U) out.push_back(i + 1);
  return out;
}

inline Mask to_mask(const VertexSet& x) {
  Mask m = 0;
  for (Vertex y : x) m |= Mask{1} << (y - 1);
  return m;
}

/// Members of a row written as "(a1,0,2,b1,...)", as bit masks, ascending.
inline std::vector<Mask> row_members(const std::string& text) {
  std::vector<std::string> tok;
  std::string body = text.substr(1, text.size() - 2);
  std::stringstream ss(body);
  for (std::string t; std::getline(ss, t, ',');) tok.push_back(t);
  const int v = static_cast<int>(tok.size());
  Mask zeros = 0, ones = 0;
  std::map<int, Mask> prem, anti;
  for (int i = 0; i < v; ++i) {
    const Mask bit = Mask{1} << i;
    if (tok[i] == "0") zeros |= bit;
    else if (tok[i] == "1") ones |= bit;
    else if (tok[i][0] == 'a') prem[std::stoi(tok[i].substr(1))] |= bit;
    else if (tok[i][0] == 'b') anti[std::stoi(tok[i].substr(1))] |= bit;
  }
  std::vector<Mask> out;
  for (Mask x = 0; x < (Mask{1} << v); ++x) {
    if (x & zeros) continue;
    if ((x & ones) != ones) continue;
    bool ok = true;
    for (auto& [id, p] : prem)
      if ((x & p) && (x & anti[id])) ok = false;
    if (ok) out.push_back(x);
  }
  return out;
}

inline std::vector<Mask> row_members(const anticlique::Row& r) { return row_members(r.to_string()); }

inline bool independent(Mask x, const anticlique::Graph& g) {
  for (auto [a, b] : g.edges())
    if ((x >> (a - 1) & 1U) && (x >> (b - 1) & 1U)) return false;
  return true;
}

inline std::vector<Mask> anticliques(const anticlique::Graph& g) {
  std::vector<Mask> out;
  for (Mask x = 0; x < (Mask{1} << g.vertex_count()); ++x)
    if (independent(x, g)) out.push_back(x);
  return out;
}

inline std::vector<long> size_histogram(const std::vector<Mask>& family) {
  std::vector<long> h;
  for (Mask x : family) {
    auto k = static_cast<std::size_t>(__builtin_popcountll(x));
    if (h.size() <= k) h.resize(k + 1, 0);
    ++h[k];
  }
  return h;
}

/// Random valid row of length v whose positions after t hold only 0, 2 or
/// anticonclusions, and whose symbol at t is 0, 2 or an anticonclusion.
inline std::string random_row_before(int v, Vertex t, std::mt19937_64& rng) {
  std::vector<std::string> sym(static_cast<std::size_t>(v));
  std::vector<bool> taken(static_cast<std::size_t>(v), false);
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };

  const int groups = pick(v / 2 + 1);
  int id = 1;
  for (int gi = 0; gi < groups; ++gi) {
    std::vector<int> prem_slots, anti_slots;
    for (int i = 0; i < v; ++i)
      if (!taken[i]) {
        if (i + 1 < t) prem_slots.push_back(i);
        anti_slots.push_back(i);
      }
    if (prem_slots.empty()) break;
    const int p = prem_slots[static_cast<std::size_t>(pick(static_cast<int>(prem_slots.size())))];
    std::vector<int> anti;
    for (int q : anti_slots)
      if (q != p && pick(3) == 0) anti.push_back(q);
    if (anti.empty()) {
      for (int q : anti_slots)
        if (q != p) {
          anti.push_back(q);
          break;
        }
    }
    if (anti.empty()) break;
    taken[p] = true;
    sym[p] = "a" + std::to_string(id);
    for (int q : anti) {
      taken[q] = true;
      sym[q] = "b" + std::to_string(id);
    }
    ++id;
  }
  for (int i = 0; i < v; ++i) {
    if (taken[i]) continue;
    if (i + 1 < t) sym[i] = std::to_string(pick(3));
    else sym[i] = pick(2) ? "2" : "0";
  }
  std::string out = "(";
  for (int i = 0; i < v; ++i) out += (i ? "," : "") + sym[i];
  return out + ")";
}

/// Random row with no order discipline at all.
inline std::string random_row(int v, std::mt19937_64& rng) { return random_row_before(v, v + 1, rng); }

}  // namespace brute
