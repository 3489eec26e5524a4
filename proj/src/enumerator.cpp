#include "anticlique/enumerator.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace anticlique {

ImpositionOrder ImpositionOrder::full(int v) {
  VertexSet order(static_cast<std::size_t>(std::max(v, 0)));
  std::iota(order.begin(), order.end(), 1);
  return ImpositionOrder(std::move(order), true);
}

ImpositionOrder ImpositionOrder::cover(const Graph& g, VertexSet vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  ImpositionOrder order(std::move(vertices), true);
  order.validate(g);
  return order;
}

void ImpositionOrder::validate(const Graph& g) const {
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (order_[i] < 1 || order_[i] > g.vertex_count())
      throw ConfigError("imposition order names vertex " + std::to_string(order_[i]) + " outside 1.." +
                        std::to_string(g.vertex_count()));
    if (i && order_[i - 1] >= order_[i]) throw ConfigError("imposition order must be strictly increasing");
  }
  const bool complete = order_.size() == static_cast<std::size_t>(g.vertex_count());
  if (complete) return;
  if (!covers_) throw ConfigError("a partial imposition order must be flagged as a vertex cover");
  if (!g.is_vertex_cover(order_)) throw ConfigError("partial imposition order is not a vertex cover");
}

std::string Trace::pending_label(const Row& row, const ImpositionOrder& order) const {
  if (row.pending() >= order.size()) return "final";
  return "PA=" + std::to_string(order[row.pending()]);
}

void Trace::imposed(const Row& before, Vertex t, const ImpositionOutcome& outcome, const ImpositionOrder& order,
                    const std::vector<Row>& working, const Row* top) {
  const char* kind = std::holds_alternative<Unchanged>(outcome) ? "unchanged"
                     : std::holds_alternative<Mutated>(outcome) ? "trivial change"
                                                                : "split";
  std::vector<std::string> stack;
  if (top) stack.push_back(top->to_string() + ' ' + pending_label(*top, order));
  for (auto it = working.rbegin(); it != working.rend(); ++it)
    stack.push_back(it->to_string() + ' ' + pending_label(*it, order));
  std::vector<std::string> output(output_.rbegin(), output_.rend());

  auto join = [](const std::vector<std::string>& parts) {
    if (parts.empty()) return std::string(" (empty)");
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? " " : " | ") + p;
    return s;
  };
  *out_ << "impose " << t << " on " << before.to_string() << ": " << kind << '\n'
        << "  working:" << join(stack) << '\n'
        << "  output:" << join(output) << '\n';
}

void Trace::finalized(const Row& row) {
  output_.push_back(row.to_string());
  *out_ << "finalize " << row.to_string() << " (" << row.member_count() << " members)\n";
}

void Trace::deleted(const Row& row) { *out_ << "delete " << row.to_string() << " (w_max " << row.w_max() << ")\n"; }

SearchStats run_standard(const Graph& g, const ImpositionOrder& order, const std::function<void(const Row&)>& on_row,
                         Trace* trace) {
  return detail::run_exclusion(
      g, order, [](const Row&) { return true; },
      [&](Row&& row) {
        on_row(row);
        return true;
      },
      [] { return false; }, trace);
}

SearchStats run_standard(const Graph& g, const std::function<void(const Row&)>& on_row, Trace* trace) {
  return run_standard(g, ImpositionOrder::full(g.vertex_count()), on_row, trace);
}

std::vector<Row> standard_rows(const Graph& g, SearchStats* stats) {
  std::vector<Row> rows;
  auto s = run_standard(g, [&](const Row& r) { rows.push_back(r); });
  if (stats) *stats = s;
  return rows;
}

BigInt fibonacci_number(const Graph& g, SearchStats* stats) {
  BigInt total = 0;
  auto s = run_standard(g, [&](const Row& r) { total += r.member_count(); });
  if (stats) *stats = s;
  return total;
}

Polynomial independence_polynomial(const Graph& g, SearchStats* stats) {
  Polynomial total;
  auto s = run_standard(g, [&](const Row& r) { total += r.spectrum(); });
  if (stats) *stats = s;
  return total;
}

void enumerate_anticliques(const Graph& g, int min_size, const std::function<void(const VertexSet&)>& emit) {
  run_standard(g, [&](const Row& r) {
    if (r.w_max() >= min_size) r.expand(min_size, emit);
  });
}

std::vector<VertexSet> enumerate_anticliques(const Graph& g, int min_size) {
  std::vector<VertexSet> out;
  enumerate_anticliques(g, min_size, [&](const VertexSet& x) { out.push_back(x); });
  return out;
}

std::optional<std::string> stack_bound_warning(const SearchStats& stats, const Graph& g) {
  if (stats.peak_stack <= std::max<std::uint64_t>(g.edge_count(), 1)) return std::nullopt;
  return "working stack peaked at " + std::to_string(stats.peak_stack) + " rows, above the edge count " +
         std::to_string(g.edge_count());
}

}  // namespace anticlique
