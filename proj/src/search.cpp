#include "anticlique/search.hpp"

#include <algorithm>

namespace anticlique {

namespace {

// Polls the clock every 256 calls.
class DeadlinePoll {
public:
  explicit DeadlinePoll(std::optional<Clock::time_point> deadline) : deadline_(deadline) {}

  bool operator()() {
    if (!deadline_) return false;
    if ((++calls_ & 0xFF) != 1) return false;
    return Clock::now() >= *deadline_;
  }

private:
  std::optional<Clock::time_point> deadline_;
  std::uint64_t calls_ = 0;
};

ImpositionOrder order_for(const Graph& g, const SearchOptions& opts) {
  return opts.order ? *opts.order : ImpositionOrder::full(g.vertex_count());
}

void check_weights(const Graph& g, const std::vector<std::int64_t>& weights) {
  if (weights.size() != static_cast<std::size_t>(g.vertex_count()))
    throw ConfigError("expected " + std::to_string(g.vertex_count()) + " weights, got " +
                      std::to_string(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] <= 0)
      throw ConfigError("weight of vertex " + std::to_string(i + 1) + " must be positive, got " +
                        std::to_string(weights[i]));
}

}  // namespace

ThresholdResult threshold_search(const Graph& g, int k, ThresholdMode mode, const SearchOptions& opts) {
  if (k < 0) throw ConfigError("threshold k must be non-negative");
  ThresholdResult result;
  result.stats = detail::run_exclusion(
      g, order_for(g, opts), [k](const Row& r) { return r.w_max() > k; },
      [&](Row&& row) {
        if (mode == ThresholdMode::first) {
          result.first = row.max_member();
          return false;
        }
        result.rows.push_back(std::move(row));
        return true;
      },
      DeadlinePoll(opts.deadline), opts.trace);
  return result;
}

MaxResult max_anticlique(const Graph& g, const SearchOptions& opts) {
  const bool weighted = !opts.weights.empty();
  if (weighted) check_weights(g, opts.weights);
  auto weight_of = [&](const VertexSet& x) {
    std::int64_t total = 0;
    for (Vertex y : x) total += weighted ? opts.weights[static_cast<std::size_t>(y - 1)] : 1;
    return total;
  };
  auto bound = [&](const Row& r) -> std::int64_t { return weighted ? r.weighted_bound(opts.weights) : r.w_max(); };

  if (opts.initial_bound < 0) throw ConfigError("initial bound must be non-negative");
  if (opts.initial_bound > 0) {
    if (!g.is_anticlique(opts.initial_witness) || weight_of(opts.initial_witness) != opts.initial_bound)
      throw ConfigError("a positive initial bound needs an anticlique witness of exactly that weight");
  }

  MonotoneBound currentmax(opts.initial_bound);
  std::optional<Row> best;
  MaxResult result;
  result.stats = detail::run_exclusion(
      g, order_for(g, opts), [&](const Row& r) { return bound(r) > currentmax.load(); },
      [&](Row&& row) {
        if (currentmax.raise(bound(row))) best = std::move(row);
        return true;
      },
      DeadlinePoll(opts.deadline), opts.trace);

  result.alpha = currentmax.load();
  if (best)
    result.witness = weighted ? best->weighted_max_member(opts.weights) : best->max_member();
  else
    result.witness = opts.initial_witness;
  return result;
}

MaxResult max_weight_anticlique(const Graph& g, const std::vector<std::int64_t>& weights) {
  check_weights(g, weights);
  SearchOptions opts;
  opts.weights = weights;
  return max_anticlique(g, opts);
}

AllMaxResult all_max_anticliques(const Graph& g) {
  AllMaxResult result;
  auto best = max_anticlique(g);
  result.alpha = static_cast<int>(best.alpha);
  result.bound_stats = best.stats;
  auto rows = threshold_search(g, result.alpha - 1, ThresholdMode::all);
  result.threshold_stats = rows.stats;
  for (const auto& r : rows.rows) r.expand(result.alpha, [&](const VertexSet& x) { result.sets.push_back(x); });
  std::sort(result.sets.begin(), result.sets.end());
  return result;
}

VertexSet core(const Graph& g) {
  auto all = all_max_anticliques(g);
  VertexSet common = all.sets.front();
  for (const auto& x : all.sets) {
    VertexSet next;
    std::set_intersection(common.begin(), common.end(), x.begin(), x.end(), std::back_inserter(next));
    common = std::move(next);
  }
  return common;
}

SearchOptions bipartite_options(const Graph& g) {
  auto parts = bipartition(g);
  if (!parts) throw ConfigError("graph is not bipartite");
  SearchOptions opts;
  opts.order = ImpositionOrder::cover(g, parts->smaller);
  opts.initial_bound = static_cast<std::int64_t>(parts->larger.size());
  opts.initial_witness = parts->larger;
  return opts;
}

}  // namespace anticlique
