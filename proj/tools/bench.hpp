#pragma once

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace anticlique::cli {

struct BenchCell {
  int v = 0;
  double d = 0.0;
  std::vector<std::uint64_t> seeds;
  std::string method;  // currentmax | threshold | oracle
  std::optional<std::int64_t> timeout_ms;
};

struct BenchRecord {
  std::string method;
  int v = 0;
  std::size_t w = 0;
  double d = 0.0;
  std::uint64_t seed = 0;
  std::string status;  // ok | timeout | refused
  std::optional<int> alpha;
  std::uint64_t rsp = 0;
  std::uint64_t trivial_changes = 0;
  std::uint64_t peak_stack = 0;
  double ms = 0.0;
};

/// Throws ConfigError on a malformed spec.
std::vector<BenchCell> parse_bench_spec(const nlohmann::json& spec);

std::vector<BenchRecord> bench_run(const std::vector<BenchCell>& cells, int oracle_max_v);

nlohmann::json to_json(const BenchRecord& r);
std::string emit_markdown(const std::vector<BenchRecord>& records);
std::string emit_csv(const std::vector<BenchRecord>& records);

}  // namespace anticlique::cli
