#pragma once

// Brute-force ground truth. Shares nothing with the row machinery: every
// answer comes from sweeping all 2^v subsets against the edge list.

#include "anticlique/graph.hpp"
#include "anticlique/polynomial.hpp"

#include <optional>
#include <vector>

namespace anticlique {

struct OracleReport {
  BigInt f;
  Polynomial spectrum;
  int alpha = 0;
  std::vector<VertexSet> maximum_sets;  ///< sorted lexicographically
  std::vector<VertexSet> maximal_sets;  ///< sorted lexicographically
  std::optional<int> chi;               ///< filled when v <= chi_guard
};

/// Throws GuardError when v exceeds `max_vertices`.
OracleReport oracle_report(const Graph& g, int max_vertices = 25, int chi_guard = 25);

/// Chromatic number by backtracking k-colouring, k = 1, 2, ...
int oracle_chromatic_number(const Graph& g);

/// Maximum matching size of a bipartite graph by augmenting paths.
/// Throws ConfigError on a non-bipartite graph.
int oracle_matching(const Graph& g);

}  // namespace anticlique
