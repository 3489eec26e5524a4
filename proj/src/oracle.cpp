#include "anticlique/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace anticlique {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.vertex_count()), 0);
  for (auto [a, b] : g.edges()) {
    adj[static_cast<std::size_t>(a - 1)] |= Mask{1} << (b - 1);
    adj[static_cast<std::size_t>(b - 1)] |= Mask{1} << (a - 1);
  }
  return adj;
}

VertexSet to_set(Mask m) {
  VertexSet out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1U) out.push_back(i + 1);
  return out;
}

}  // namespace

OracleReport oracle_report(const Graph& g, int max_vertices, int chi_guard) {
  const int v = g.vertex_count();
  if (v > std::min(max_vertices, 32))
    throw GuardError("oracle refused: " + std::to_string(v) + " vertices exceeds the guard of " +
                     std::to_string(std::min(max_vertices, 32)));
  const auto adj = adjacency_masks(g);
  const Mask total = Mask{1} << v;

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(v) + 1, 0);
  std::vector<Mask> maximal;
  for (Mask m = 0; m < total; ++m) {
    bool independent = true;
    for (Mask rest = m; rest && independent; rest &= rest - 1)
      independent = !(adj[static_cast<std::size_t>(std::countr_zero(rest))] & m);
    if (!independent) continue;
    counts[static_cast<std::size_t>(std::popcount(m))] += 1;
    bool is_maximal = true;
    for (int y = 0; y < v && is_maximal; ++y)
      if (!(m >> y & 1U) && !(adj[static_cast<std::size_t>(y)] & m)) is_maximal = false;
    if (is_maximal) maximal.push_back(m);
  }

  OracleReport report;
  report.spectrum = Polynomial(std::vector<BigInt>(counts.begin(), counts.end()));
  report.f = report.spectrum.at_one();
  report.alpha = static_cast<int>(report.spectrum.degree());
  for (Mask m : maximal) {
    report.maximal_sets.push_back(to_set(m));
    if (std::popcount(m) == report.alpha) report.maximum_sets.push_back(to_set(m));
  }
  std::sort(report.maximal_sets.begin(), report.maximal_sets.end());
  std::sort(report.maximum_sets.begin(), report.maximum_sets.end());
  if (v <= chi_guard) report.chi = oracle_chromatic_number(g);
  return report;
}

int oracle_chromatic_number(const Graph& g) {
  const int v = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(v) + 1, -1);

  std::function<bool(int, int, int)> assign = [&](Vertex y, int k, int used) -> bool {
    if (y > v) return true;
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      bool clash = false;
      for (Vertex z : g.neighbors(y))
        if (z < y && colour[z] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      colour[y] = c;
      if (assign(y + 1, k, std::max(used, c + 1))) return true;
    }
    colour[y] = -1;
    return false;
  };

  for (int k = 1;; ++k)
    if (assign(1, k, 0)) return k;
}

int oracle_matching(const Graph& g) {
  const int v = g.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(v) + 1, -1);
  for (Vertex root = 1; root <= v; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::vector<Vertex> todo{root};
    while (!todo.empty()) {
      Vertex y = todo.back();
      todo.pop_back();
      for (Vertex z : g.neighbors(y)) {
        if (side[z] == -1) {
          side[z] = 1 - side[y];
          todo.push_back(z);
        } else if (side[z] == side[y]) {
          throw ConfigError("matching oracle needs a bipartite graph");
        }
      }
    }
  }

  std::vector<Vertex> mate(static_cast<std::size_t>(v) + 1, 0);
  std::vector<int> seen(static_cast<std::size_t>(v) + 1, 0);
  int stamp = 0;
  std::function<bool(Vertex)> augment = [&](Vertex left) -> bool {
    for (Vertex right : g.neighbors(left)) {
      if (seen[right] == stamp) continue;
      seen[right] = stamp;
      if (mate[right] == 0 || augment(mate[right])) {
        mate[right] = left;
        return true;
      }
    }
    return false;
  };

  int size = 0;
  for (Vertex left = 1; left <= v; ++left) {
    if (side[left] != 0) continue;
    ++stamp;
    if (augment(left)) ++size;
  }
  return size;
}

}  // namespace anticlique
