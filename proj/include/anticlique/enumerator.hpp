#pragma once

#include "anticlique/graph.hpp"
#include "anticlique/impose.hpp"
#include "anticlique/row.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace anticlique {

struct SearchStats {
  std::uint64_t rsp = 0;              ///< row splittings
  std::uint64_t trivial_changes = 0;  ///< impositions that did not split
  std::uint64_t peak_stack = 0;       ///< largest working stack seen
  std::uint64_t finalized = 0;        ///< rows that received every anti-implication
  std::uint64_t deleted = 0;          ///< rows pruned by a bound
  bool interrupted = false;           ///< stopped early by a deadline

  std::uint64_t impositions() const noexcept { return rsp + trivial_changes; }
};

/// Vertices whose anti-implications get imposed, in increasing order.
/// Anything short of 1..v must be a vertex cover of the graph.
class ImpositionOrder {
public:
  /// 1, 2, ..., v
  static ImpositionOrder full(int v);

  /// Sorts and deduplicates; throws ConfigError unless the set covers every edge of g.
  static ImpositionOrder cover(const Graph& g, VertexSet vertices);

  const VertexSet& vertices() const noexcept { return order_; }
  bool covers() const noexcept { return covers_; }
  std::size_t size() const noexcept { return order_.size(); }
  Vertex operator[](std::size_t i) const { return order_[i]; }

  /// Throws ConfigError if the order does not fit g (range, monotonicity, cover).
  void validate(const Graph& g) const;

private:
  ImpositionOrder(VertexSet order, bool covers) : order_(std::move(order)), covers_(covers) {}
  VertexSet order_;
  bool covers_;
};

/// Writes the working and output stacks after every imposition, rows in
/// debug form with their pending anti-implication.
class Trace {
public:
  explicit Trace(std::ostream& out) : out_(&out) {}

  void imposed(const Row& before, Vertex t, const ImpositionOutcome& outcome, const ImpositionOrder& order,
               const std::vector<Row>& working, const Row* top);
  void finalized(const Row& row);
  void deleted(const Row& row);

  const std::vector<std::string>& output_stack() const noexcept { return output_; }

private:
  std::string pending_label(const Row& row, const ImpositionOrder& order) const;
  std::ostream* out_;
  std::vector<std::string> output_;
};

namespace detail {

/// LIFO driver shared by every variant. `keep(row)` is asked at pop time and
/// for every row an imposition produces; rejected rows count as deleted.
/// `on_final(row)` receives finalized rows and returns false to halt.
/// `stop()` is polled once per pop.
template <class Keep, class OnFinal, class Stop>
SearchStats run_exclusion(const Graph& g, const ImpositionOrder& order, Keep&& keep, OnFinal&& on_final, Stop&& stop,
                          Trace* trace = nullptr) {
  order.validate(g);
  SearchStats stats;
  std::vector<Row> working;
  working.push_back(Row::full(g.vertex_count()));
  stats.peak_stack = 1;

  auto reject = [&](const Row& r) {
    if (keep(r)) return false;
    ++stats.deleted;
    if (trace) trace->deleted(r);
    return true;
  };

  while (!working.empty()) {
    if (stop()) {
      stats.interrupted = true;
      break;
    }
    Row row = std::move(working.back());
    working.pop_back();
    if (reject(row)) continue;

    bool halted = false;
    while (true) {
      if (row.pending() == order.size()) {
        ++stats.finalized;
        if (trace) trace->finalized(row);
        halted = !on_final(std::move(row));
        break;
      }
      const Vertex t = order[row.pending()];
      auto outcome = impose(row, t, g.neighbors(t));
      const std::size_t next = row.pending() + 1;
      if (auto* split = std::get_if<Split>(&outcome)) {
        ++stats.rsp;
        split->zero_son.set_pending(next);
        split->one_son.set_pending(next);
        const bool keep_zero = !reject(split->zero_son);
        const bool keep_one = !reject(split->one_son);
        if (keep_zero) working.push_back(std::move(split->zero_son));
        if (keep_one) working.push_back(std::move(split->one_son));
        stats.peak_stack = std::max<std::uint64_t>(stats.peak_stack, working.size());
        if (trace) trace->imposed(row, t, outcome, order, working, nullptr);
        break;
      }
      ++stats.trivial_changes;
      if (auto* mutated = std::get_if<Mutated>(&outcome)) {
        mutated->row.set_pending(next);
        if (trace) trace->imposed(row, t, outcome, order, working, &mutated->row);
        row = std::move(mutated->row);
        if (reject(row)) break;
      } else {
        row.set_pending(next);
        if (trace) trace->imposed(row, t, outcome, order, working, &row);
      }
    }
    if (halted) break;
  }
  return stats;
}

}  // namespace detail

/// The standard run: every finalized row is handed to `on_row`. The rows are
/// pairwise disjoint and together hold exactly the anticliques of g.
SearchStats run_standard(const Graph& g, const ImpositionOrder& order, const std::function<void(const Row&)>& on_row,
                         Trace* trace = nullptr);
SearchStats run_standard(const Graph& g, const std::function<void(const Row&)>& on_row, Trace* trace = nullptr);

/// Finalized rows of the standard run with order 1..v, collected.
std::vector<Row> standard_rows(const Graph& g, SearchStats* stats = nullptr);

/// f(G), the number of anticliques (the empty set included).
BigInt fibonacci_number(const Graph& g, SearchStats* stats = nullptr);

/// I(G, x) = sum over k of s_k x^k.
Polynomial independence_polynomial(const Graph& g, SearchStats* stats = nullptr);

/// Every anticlique with at least `min_size` vertices, each exactly once.
void enumerate_anticliques(const Graph& g, int min_size, const std::function<void(const VertexSet&)>& emit);
std::vector<VertexSet> enumerate_anticliques(const Graph& g, int min_size = 0);

/// Message if the working stack grew beyond the edge count of g.
std::optional<std::string> stack_bound_warning(const SearchStats& stats, const Graph& g);

}  // namespace anticlique
