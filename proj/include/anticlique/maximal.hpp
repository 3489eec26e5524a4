#pragma once

#include "anticlique/enumerator.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <vector>

namespace anticlique {

/// ones ∪ twos plus, per group, either {prem} or the whole anti set: the 2^s
/// inclusion-maximal members of the row. Groups vary in id order, the
/// premise choice before the anti choice, last group fastest.
std::vector<VertexSet> row_maximal_members(const Row& row);

/**
 * Pile of pairwise incomparable vertex sets, maintained through one index
 * list per vertex: contain[a] holds the pile indices of the sets containing a.
 * Indices of removed sets are retired, never reused.
 */
class ContainIndex {
public:
  explicit ContainIndex(int v);

  /// Admit x unless a pile set contains it; drop the pile sets x contains.
  /// Returns true iff x was admitted.
  bool offer(const VertexSet& x);

  /// Live pile sets, sorted lexicographically.
  std::vector<VertexSet> sets() const;

  std::size_t live_count() const noexcept { return live_.count(); }
  /// Candidates refused because a pile set already contained them.
  std::uint64_t dominated() const noexcept { return dominated_; }
  /// Pile sets evicted by a later superset.
  std::uint64_t evicted() const noexcept { return evicted_; }

private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  int v_;
  std::vector<VertexSet> pile_;
  std::vector<Bits> contain_;  // contain_[a - 1]
  Bits live_;
  std::uint64_t dominated_ = 0;
  std::uint64_t evicted_ = 0;
};

/// Inclusion-maximal sets of the input, duplicates collapsed, sorted.
std::vector<VertexSet> sieve_maximal(const std::vector<VertexSet>& sets, int v);

struct MaximalResult {
  std::vector<VertexSet> sets;             ///< inclusion-maximal anticliques, sorted
  std::uint64_t candidates = 0;            ///< row-wise maximal sets offered
  std::uint64_t cross_row_dominations = 0; ///< refusals plus evictions, all between different rows
  SearchStats stats;
};

MaximalResult maximal_anticliques(const Graph& g);

struct ChromaticResult {
  int chi = 0;
  std::vector<VertexSet> cover;  ///< chi anticliques whose union is V
};

/// Exact minimum cover of V by row-wise maximal anticliques. Throws
/// GuardError when v exceeds `max_vertices` (hard ceiling 64).
ChromaticResult chromatic_number(const Graph& g, int max_vertices = 30);

}  // namespace anticlique
