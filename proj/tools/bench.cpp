#include "bench.hpp"

#include "anticlique/oracle.hpp"
#include "anticlique/search.hpp"

#include <chrono>
#include <sstream>

namespace anticlique::cli {

namespace {

const std::vector<std::string> kColumns{"method", "v", "w", "d", "seed", "status", "alpha", "rsp", "trivial", "ms"};

std::vector<std::string> row_cells(const BenchRecord& r) {
  std::ostringstream d, ms;
  d << r.d;
  ms.setf(std::ios::fixed);
  ms.precision(3);
  ms << r.ms;
  return {r.method,
          std::to_string(r.v),
          std::to_string(r.w),
          d.str(),
          std::to_string(r.seed),
          r.status,
          r.alpha ? std::to_string(*r.alpha) : "",
          std::to_string(r.rsp),
          std::to_string(r.trivial_changes),
          ms.str()};
}

void add_stats(BenchRecord& r, const SearchStats& s) {
  r.rsp += s.rsp;
  r.trivial_changes += s.trivial_changes;
  r.peak_stack = std::max(r.peak_stack, s.peak_stack);
}

BenchRecord run_cell(const BenchCell& cell, std::uint64_t seed, int oracle_max_v) {
  BenchRecord r;
  r.method = cell.method;
  r.v = cell.v;
  r.d = cell.d;
  r.seed = seed;
  const auto g = random_graph(cell.v, cell.d, seed);
  r.w = g.edge_count();

  const auto start = Clock::now();
  SearchOptions opts;
  if (cell.timeout_ms) opts.deadline = start + std::chrono::milliseconds(*cell.timeout_ms);

  if (cell.method == "currentmax") {
    auto m = max_anticlique(g, opts);
    add_stats(r, m.stats);
    r.status = m.stats.interrupted ? "timeout" : "ok";
    if (!m.stats.interrupted) r.alpha = static_cast<int>(m.alpha);
  } else if (cell.method == "threshold") {
    // Ascending one-sided probes: each success raises k past the size found.
    int k = 0, found = 0;
    bool interrupted = false;
    for (;;) {
      auto t = threshold_search(g, k, ThresholdMode::first, opts);
      add_stats(r, t.stats);
      if (t.stats.interrupted) {
        interrupted = true;
        break;
      }
      if (!t.first) break;
      found = static_cast<int>(t.first->size());
      k = found;
    }
    r.status = interrupted ? "timeout" : "ok";
    if (!interrupted) r.alpha = found;
  } else {
    try {
      r.alpha = oracle_report(g, oracle_max_v, 0).alpha;
      r.status = "ok";
    } catch (const GuardError&) {
      r.status = "refused";
    }
  }
  r.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<BenchCell> parse_bench_spec(const nlohmann::json& spec) {
  if (!spec.is_object()) throw ConfigError("bench spec must be a JSON object");
  std::vector<BenchCell> cells;
  if (!spec.contains("cells")) return cells;
  if (!spec["cells"].is_array()) throw ConfigError("bench spec: \"cells\" must be an array");
  for (const auto& c : spec["cells"]) {
    BenchCell cell;
    try {
      cell.v = c.at("v").get<int>();
      cell.d = c.at("d").get<double>();
      cell.method = c.value("method", std::string("currentmax"));
      if (c.contains("seeds")) cell.seeds = c["seeds"].get<std::vector<std::uint64_t>>();
      else cell.seeds = {c.value("seed", std::uint64_t{1})};
      if (c.contains("timeout_ms")) cell.timeout_ms = c["timeout_ms"].get<std::int64_t>();
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("bench spec: bad cell: ") + e.what());
    }
    if (cell.v < 1) throw ConfigError("bench spec: v must be >= 1");
    if (!(cell.d >= 0.0 && cell.d <= 1.0)) throw ConfigError("bench spec: d must lie in [0, 1]");
    if (cell.method != "currentmax" && cell.method != "threshold" && cell.method != "oracle")
      throw ConfigError("bench spec: unknown method '" + cell.method + "'");
    if (cell.timeout_ms && *cell.timeout_ms < 0) throw ConfigError("bench spec: timeout_ms must be >= 0");
    cells.push_back(std::move(cell));
  }
  return cells;
}

std::vector<BenchRecord> bench_run(const std::vector<BenchCell>& cells, int oracle_max_v) {
  std::vector<BenchRecord> out;
  for (const auto& cell : cells)
    for (auto seed : cell.seeds) out.push_back(run_cell(cell, seed, oracle_max_v));
  return out;
}

nlohmann::json to_json(const BenchRecord& r) {
  nlohmann::json j{{"method", r.method},
                   {"graph", {{"v", r.v}, {"w", r.w}, {"d", r.d}, {"seed", r.seed}}},
                   {"status", r.status},
                   {"stats", {{"rsp", r.rsp}, {"trivial_changes", r.trivial_changes}, {"peak_stack", r.peak_stack}}},
                   {"ms", r.ms}};
  j["alpha"] = r.alpha ? nlohmann::json(*r.alpha) : nlohmann::json(nullptr);
  return j;
}

std::string emit_markdown(const std::vector<BenchRecord>& records) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    os << '|';
    for (const auto& c : cells) os << ' ' << c << " |";
    os << '\n';
  };
  line(kColumns);
  os << '|';
  for (std::size_t i = 0; i < kColumns.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& r : records) line(row_cells(r));
  return os.str();
}

std::string emit_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(kColumns);
  for (const auto& r : records) line(row_cells(r));
  return os.str();
}

}  // namespace anticlique::cli
