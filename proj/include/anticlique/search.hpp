#pragma once

#include "anticlique/enumerator.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace anticlique {

using Clock = std::chrono::steady_clock;

struct SearchOptions {
  /// Defaults to 1..v; may be a vertex cover.
  std::optional<ImpositionOrder> order;
  /// Starting currentmax. A positive bound must come with a witness of that
  /// weight, returned when nothing better exists.
  std::int64_t initial_bound = 0;
  VertexSet initial_witness;
  /// weights[y - 1] for vertex y; empty means unit weights.
  std::vector<std::int64_t> weights;
  /// The search gives up at this point and flags stats.interrupted.
  std::optional<Clock::time_point> deadline;
  Trace* trace = nullptr;
};

struct MaxResult {
  std::int64_t alpha = 0;  ///< size, or weight in weighted mode
  VertexSet witness;
  SearchStats stats;
};

enum class ThresholdMode { all, first };

struct ThresholdResult {
  std::vector<Row> rows;          ///< mode all: the surviving finalized rows
  std::optional<VertexSet> first; ///< mode first: max member of the first finalized row
  SearchStats stats;
};

struct AllMaxResult {
  int alpha = 0;
  std::vector<VertexSet> sets;  ///< sorted lexicographically
  SearchStats bound_stats;      ///< currentmax phase
  SearchStats threshold_stats;  ///< k = alpha - 1 phase
};

/// Monotone best-so-far cell; concurrent updaters only ever raise it.
class MonotoneBound {
public:
  explicit MonotoneBound(std::int64_t start = 0) : value_(start) {}

  std::int64_t load() const noexcept { return value_.load(std::memory_order_acquire); }

  /// Atomic maximum. Returns true iff this call raised the value.
  bool raise(std::int64_t candidate) noexcept {
    std::int64_t seen = value_.load(std::memory_order_relaxed);
    while (candidate > seen)
      if (value_.compare_exchange_weak(seen, candidate, std::memory_order_acq_rel)) return true;
    return false;
  }

private:
  std::atomic<std::int64_t> value_;
};

/// Anticliques of cardinality > k: rows with w_max <= k are dropped.
ThresholdResult threshold_search(const Graph& g, int k, ThresholdMode mode, const SearchOptions& opts = {});

/// currentmax branch and bound. Uses opts.order, opts.initial_bound/witness,
/// opts.weights and opts.deadline.
MaxResult max_anticlique(const Graph& g, const SearchOptions& opts = {});

/// Throws ConfigError on a wrong-length or non-positive weight vector.
MaxResult max_weight_anticlique(const Graph& g, const std::vector<std::int64_t>& weights);

/// Every maximum anticlique: learn alpha by currentmax, then rerun the
/// threshold search at k = alpha - 1 from scratch.
AllMaxResult all_max_anticliques(const Graph& g);

/// Intersection of all maximum anticliques.
VertexSet core(const Graph& g);

/// Smaller colour class as the imposition order, currentmax starting at the
/// size of the larger class (which is also the initial witness).
/// Throws ConfigError if g is not bipartite.
SearchOptions bipartite_options(const Graph& g);

}  // namespace anticlique
