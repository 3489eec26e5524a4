#pragma once

#include "anticlique/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace anticlique {

using Edge = std::pair<Vertex, Vertex>;

/**
 * Simple undirected graph on vertices 1..v.
 *
 * Immutable once built. Edges are kept normalized (i < j) and sorted; each
 * vertex y has its neighbour set B(y) as a sorted list.
 */
class Graph {
public:
  /// Throws ConfigError on v < 1, out-of-range endpoints or self-loops.
  /// Duplicate edges (in either orientation) are collapsed.
  Graph(int v, std::vector<Edge> edges);

  int vertex_count() const noexcept { return v_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Normalized edge list, i < j, sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// B(y), sorted ascending.
  const VertexSet& neighbors(Vertex y) const { return neighbors_.at(static_cast<std::size_t>(y - 1)); }

  std::size_t degree(Vertex y) const { return neighbors(y).size(); }

  bool adjacent(Vertex a, Vertex b) const;

  /// True iff no edge joins two members of the set.
  bool is_anticlique(const VertexSet& set) const;

  /// True iff every edge has at least one endpoint in the set.
  bool is_vertex_cover(const VertexSet& set) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.v_ == b.v_ && a.edges_ == b.edges_;
  }

private:
  int v_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> neighbors_;
};

enum class GraphFormat { dimacs, edge_list, json };

std::optional<GraphFormat> format_from_name(std::string_view name);

/// Guess a format from a file extension (.col/.dimacs, .json, anything else edge-list).
GraphFormat format_from_path(std::string_view path);

/// Throws ParseError naming the offending line.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(std::string_view text, GraphFormat format);

std::string serialize_graph(const Graph& g, GraphFormat format);

Graph to_complement(const Graph& g);

/// Gilbert G(v, p) with p = d. Each pair i < j in lexicographic order consumes
/// one draw of a 64-bit Mersenne twister seeded with `seed`.
Graph random_graph(int v, double d, std::uint64_t seed);

/// Random bipartite graph: class sizes v1, v2 (vertices 1..v1 and v1+1..v1+v2),
/// each cross pair present with probability d.
Graph random_bipartite_graph(int v1, int v2, double d, std::uint64_t seed);

struct Bipartition {
  VertexSet smaller;  ///< classA, |classA| <= |classB|
  VertexSet larger;   ///< classB
};

/// Proper 2-colouring with the smaller side of every component in `smaller`;
/// isolated vertices land in `larger`. Absent if g has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

// Small named graphs used by tests, docs and the CLI.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);

}  // namespace anticlique
