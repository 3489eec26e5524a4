#include "cli.hpp"

#include "bench.hpp"

#include "anticlique/enumerator.hpp"
#include "anticlique/maximal.hpp"
#include "anticlique/oracle.hpp"
#include "anticlique/search.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace anticlique::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string graph_file;
  std::string format;
  std::string gen;
  bool as_json = false;
  bool trace = false;

  int min_size = 0;
  bool bipartite = false;
  std::string weights_file;
  bool all = false;
  bool core = false;
  int k = -1;
  bool first = false;
  std::int64_t timeout_ms = -1;

  int gen_v = 0;
  double gen_d = 0.0;
  std::uint64_t gen_seed = 1;
  std::string out_file;

  std::string spec_file;
  std::string emit = "markdown";
};

struct Input {
  Graph graph;
  json descriptor;
};

int env_guard(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    return std::stoi(raw);
  } catch (const std::exception&) {
    throw ConfigError(std::string(name) + " must be an integer");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Input load_graph(const Options& o) {
  if (!o.gen.empty() && !o.graph_file.empty()) throw ConfigError("--graph and --gen are mutually exclusive");
  if (!o.gen.empty()) {
    int v = 0;
    double d = 0.0;
    unsigned long long seed = 0;
    char c1 = 0, c2 = 0;
    std::istringstream ss(o.gen);
    if (!(ss >> v >> c1 >> d >> c2 >> seed) || c1 != ',' || c2 != ',' || !(ss >> std::ws).eof())
      throw ConfigError("--gen expects V,D,SEED");
    auto g = random_graph(v, d, seed);
    json desc{{"v", v}, {"w", g.edge_count()}, {"d", d}, {"seed", seed}};
    return {std::move(g), std::move(desc)};
  }
  if (o.graph_file.empty()) throw ConfigError("no input graph: pass --graph FILE or --gen V,D,SEED");
  GraphFormat fmt = format_from_path(o.graph_file);
  if (!o.format.empty()) {
    auto named = format_from_name(o.format);
    if (!named) throw ConfigError("unknown format '" + o.format + "'");
    fmt = *named;
  }
  auto g = parse_graph(read_file(o.graph_file), fmt);
  const double pairs = 0.5 * g.vertex_count() * (g.vertex_count() - 1);
  json desc{{"v", g.vertex_count()},
            {"w", g.edge_count()},
            {"d", pairs > 0 ? static_cast<double>(g.edge_count()) / pairs : 0.0},
            {"file", o.graph_file}};
  return {std::move(g), std::move(desc)};
}

std::vector<std::int64_t> load_weights(const std::string& path, int v) {
  std::vector<std::int64_t> w(static_cast<std::size_t>(v), 1);
  std::istringstream in(read_file(path));
  std::string text;
  for (int line = 1; std::getline(in, text); ++line) {
    auto hash = text.find('#');
    if (hash != std::string::npos) text.erase(hash);
    std::istringstream ss(text);
    long long y = 0, weight = 0;
    if (!(ss >> y)) continue;
    if (!(ss >> weight) || !(ss >> std::ws).eof()) throw ParseError(line, "expected 'vertex weight'");
    if (y < 1 || y > v) throw ParseError(line, "vertex " + std::to_string(y) + " out of range 1.." + std::to_string(v));
    if (weight < 1) throw ParseError(line, "weights must be positive");
    w[static_cast<std::size_t>(y - 1)] = weight;
  }
  return w;
}

json set_json(const VertexSet& x) { return json(x); }

json sets_json(const std::vector<VertexSet>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(x);
  return a;
}

json stats_json(const SearchStats& s) {
  return {{"rsp", s.rsp},
          {"trivial_changes", s.trivial_changes},
          {"peak_stack", s.peak_stack},
          {"finalized", s.finalized},
          {"deleted", s.deleted},
          {"interrupted", s.interrupted}};
}

json coeffs_json(const Polynomial& p) {
  json a = json::array();
  for (int k = 0; k <= p.degree(); ++k) {
    const BigInt& c = p[static_cast<std::size_t>(k)];
    if (c <= BigInt(std::numeric_limits<std::int64_t>::max())) a.push_back(static_cast<std::int64_t>(c));
    else a.push_back(c.str());
  }
  return a;
}

json big_json(const BigInt& n) {
  if (n <= BigInt(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(n);
  return n.str();
}

void print_sets(std::ostream& out, const std::vector<VertexSet>& xs) {
  for (const auto& x : xs) out << to_string(x) << '\n';
}

class Runner {
public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int run(const std::string& command) {
    const auto start = std::chrono::steady_clock::now();
    if (command == "gen") return gen();
    if (command == "bench") return bench();

    auto input = load_graph(o_);
    g_ = &input.graph;
    record_ = json::object();
    record_["command"] = command;
    record_["graph"] = input.descriptor;
    if (o_.trace) trace_.emplace(o_.as_json ? err_ : out_);

    if (command == "count") count();
    else if (command == "poly") poly();
    else if (command == "enum") enumerate();
    else if (command == "alpha") alpha();
    else if (command == "threshold") threshold();
    else if (command == "maximal") maximal();
    else if (command == "chromatic") chromatic();
    else if (command == "oracle") oracle();

    record_["ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o_.as_json) out_ << record_.dump() << '\n';
    else out_ << text_.str();
    return ok;
  }

private:
  Trace* trace() { return trace_ ? &*trace_ : nullptr; }

  void warn_stack(const SearchStats& s) {
    if (auto w = stack_bound_warning(s, *g_)) err_ << "warning: " << *w << '\n';
  }

  // Standard run feeding every finalized row to `each`.
  SearchStats standard(const std::function<void(const Row&)>& each) {
    auto s = run_standard(*g_, each, trace());
    if (trace_) {
      auto& os = o_.as_json ? err_ : out_;
      const auto& rows = trace_->output_stack();
      os << "output stack, top first:\n";
      for (auto it = rows.rbegin(); it != rows.rend(); ++it) os << "  " << *it << '\n';
    }
    warn_stack(s);
    record_["stats"] = stats_json(s);
    return s;
  }

  void count() {
    BigInt f = 0;
    standard([&](const Row& r) { f += r.member_count(); });
    record_["f"] = big_json(f);
    text_ << f << '\n';
  }

  void poly() {
    Polynomial p;
    standard([&](const Row& r) { p += r.spectrum(); });
    record_["coefficients"] = coeffs_json(p);
    record_["alpha"] = p.degree();
    text_ << p.to_string() << '\n';
  }

  void enumerate() {
    std::vector<VertexSet> sets;
    standard([&](const Row& r) { r.expand(o_.min_size, [&](const VertexSet& x) { sets.push_back(x); }); });
    std::sort(sets.begin(), sets.end());
    record_["min_size"] = o_.min_size;
    record_["count"] = sets.size();
    record_["sets"] = sets_json(sets);
    print_sets(text_, sets);
  }

  SearchOptions search_options() {
    SearchOptions opts;
    if (o_.bipartite) opts = bipartite_options(*g_);
    if (!o_.weights_file.empty()) {
      if (o_.bipartite) throw ConfigError("--bipartite and --weights cannot be combined");
      opts.weights = load_weights(o_.weights_file, g_->vertex_count());
    }
    if (o_.timeout_ms >= 0) opts.deadline = Clock::now() + std::chrono::milliseconds(o_.timeout_ms);
    opts.trace = trace();
    return opts;
  }

  void alpha() {
    if ((o_.all || o_.core) && (o_.bipartite || !o_.weights_file.empty()))
      throw ConfigError("--all and --core use the plain search");
    if (o_.all || o_.core) {
      auto r = all_max_anticliques(*g_);
      record_["alpha"] = r.alpha;
      record_["stats"] = stats_json(r.bound_stats);
      record_["threshold_stats"] = stats_json(r.threshold_stats);
      text_ << "alpha " << r.alpha << '\n';
      if (o_.all) {
        record_["sets"] = sets_json(r.sets);
        text_ << "maximum anticliques " << r.sets.size() << '\n';
        print_sets(text_, r.sets);
      }
      if (o_.core) {
        VertexSet c = r.sets.front();
        for (const auto& x : r.sets) {
          VertexSet keep;
          std::set_intersection(c.begin(), c.end(), x.begin(), x.end(), std::back_inserter(keep));
          c = std::move(keep);
        }
        record_["core"] = set_json(c);
        text_ << "core " << to_string(c) << '\n';
      }
      return;
    }
    auto opts = search_options();
    auto r = max_anticlique(*g_, opts);
    record_["stats"] = stats_json(r.stats);
    if (opts.order) record_["order"] = opts.order->vertices();
    if (r.stats.interrupted) {
      record_["timed_out"] = true;
      record_["best"] = r.alpha;
      record_["witness"] = set_json(r.witness);
      text_ << "timed out, best so far " << r.alpha << ' ' << to_string(r.witness) << '\n';
      return;
    }
    record_[opts.weights.empty() ? "alpha" : "weight"] = r.alpha;
    record_["witness"] = set_json(r.witness);
    text_ << (opts.weights.empty() ? "alpha " : "weight ") << r.alpha << '\n';
    text_ << "witness " << to_string(r.witness) << '\n';
  }

  void threshold() {
    if (o_.k < 0) throw ConfigError("threshold needs --k K with K >= 0");
    SearchOptions opts;
    opts.trace = trace();
    if (o_.timeout_ms >= 0) opts.deadline = Clock::now() + std::chrono::milliseconds(o_.timeout_ms);
    auto r = threshold_search(*g_, o_.k, o_.first ? ThresholdMode::first : ThresholdMode::all, opts);
    record_["k"] = o_.k;
    record_["stats"] = stats_json(r.stats);
    if (r.stats.interrupted) record_["timed_out"] = true;
    if (o_.first) {
      record_["found"] = r.first ? set_json(*r.first) : json(nullptr);
      text_ << (r.first ? to_string(*r.first) : std::string("none")) << '\n';
      return;
    }
    std::vector<VertexSet> sets;
    json rows = json::array();
    for (const auto& row : r.rows) {
      rows.push_back(row.to_string());
      row.expand(o_.k + 1, [&](const VertexSet& x) { sets.push_back(x); });
    }
    std::sort(sets.begin(), sets.end());
    record_["rows"] = rows;
    record_["sets"] = sets_json(sets);
    if (sets.empty()) text_ << "none\n";
    print_sets(text_, sets);
  }

  void maximal() {
    auto r = maximal_anticliques(*g_);
    record_["sets"] = sets_json(r.sets);
    record_["candidates"] = r.candidates;
    record_["cross_row_dominations"] = r.cross_row_dominations;
    record_["stats"] = stats_json(r.stats);
    print_sets(text_, r.sets);
  }

  void chromatic() {
    auto r = chromatic_number(*g_, env_guard("ANTICLIQUE_CHROMATIC_MAX_V", 30));
    record_["chi"] = r.chi;
    record_["cover"] = sets_json(r.cover);
    text_ << "chi " << r.chi << '\n';
    print_sets(text_, r.cover);
  }

  void oracle() {
    const int guard = env_guard("ANTICLIQUE_ORACLE_MAX_V", 25);
    auto r = oracle_report(*g_, guard, guard);
    record_["f"] = big_json(r.f);
    record_["coefficients"] = coeffs_json(r.spectrum);
    record_["alpha"] = r.alpha;
    record_["maximum_sets"] = sets_json(r.maximum_sets);
    record_["maximal_sets"] = sets_json(r.maximal_sets);
    record_["chi"] = r.chi ? json(*r.chi) : json(nullptr);
    text_ << "f " << r.f << '\n'
          << "polynomial " << r.spectrum.to_string() << '\n'
          << "alpha " << r.alpha << '\n'
          << "maximum anticliques " << r.maximum_sets.size() << '\n'
          << "maximal anticliques " << r.maximal_sets.size() << '\n'
          << "chi " << (r.chi ? std::to_string(*r.chi) : std::string("skipped")) << '\n';
  }

  int gen() {
    auto g = random_graph(o_.gen_v, o_.gen_d, o_.gen_seed);
    GraphFormat fmt = GraphFormat::dimacs;
    if (!o_.out_file.empty()) fmt = format_from_path(o_.out_file);
    if (!o_.format.empty()) {
      auto named = format_from_name(o_.format);
      if (!named) throw ConfigError("unknown format '" + o_.format + "'");
      fmt = *named;
    }
    const auto text = serialize_graph(g, fmt);
    if (o_.out_file.empty()) {
      out_ << text;
      return ok;
    }
    std::ofstream file(o_.out_file, std::ios::binary);
    if (!file || !(file << text)) throw ConfigError("cannot write '" + o_.out_file + "'");
    return ok;
  }

  int bench() {
    json spec;
    try {
      spec = json::parse(read_file(o_.spec_file));
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("bench spec: ") + e.what());
    }
    auto records = bench_run(parse_bench_spec(spec), env_guard("ANTICLIQUE_ORACLE_MAX_V", 25));
    if (o_.as_json || o_.emit == "json") {
      json a = json::array();
      for (const auto& r : records) a.push_back(to_json(r));
      out_ << a.dump() << '\n';
    } else if (o_.emit == "csv") {
      out_ << emit_csv(records);
    } else {
      out_ << emit_markdown(records);
    }
    return ok;
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  const Graph* g_ = nullptr;
  std::optional<Trace> trace_;
  json record_;
  std::ostringstream text_;
};

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("--graph", o.graph_file, "graph file");
  sub->add_option("--format", o.format, "dimacs, edgelist or json (default: by extension)");
  sub->add_option("--gen", o.gen, "random graph V,D,SEED instead of a file");
  sub->add_flag("--json", o.as_json, "print one JSON record");
  sub->add_flag("--trace", o.trace, "print the working and output stacks after each imposition");
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Anticlique counting, enumeration and search", "anticlique"};
  app.require_subcommand(1);

  add_input(app.add_subcommand("count", "number of anticliques f(G)"), o);
  add_input(app.add_subcommand("poly", "independence polynomial"), o);
  auto* en = app.add_subcommand("enum", "list anticliques");
  add_input(en, o);
  en->add_option("--min-size", o.min_size, "smallest size listed")->check(CLI::NonNegativeNumber);

  auto* al = app.add_subcommand("alpha", "maximum anticlique");
  add_input(al, o);
  al->add_flag("--bipartite", o.bipartite, "impose over the smaller colour class only");
  al->add_option("--weights", o.weights_file, "file of 'vertex weight' lines");
  al->add_flag("--all", o.all, "list every maximum anticlique");
  al->add_flag("--core", o.core, "intersection of all maximum anticliques");
  al->add_option("--timeout-ms", o.timeout_ms, "give up after this many milliseconds");

  auto* th = app.add_subcommand("threshold", "anticliques larger than k");
  add_input(th, o);
  th->add_option("--k", o.k, "size threshold")->required()->check(CLI::NonNegativeNumber);
  th->add_flag("--first", o.first, "stop at the first one found");
  th->add_option("--timeout-ms", o.timeout_ms, "give up after this many milliseconds");

  add_input(app.add_subcommand("maximal", "inclusion-maximal anticliques"), o);
  add_input(app.add_subcommand("chromatic", "chromatic number"), o);
  add_input(app.add_subcommand("oracle", "exhaustive reference values"), o);

  auto* gen = app.add_subcommand("gen", "write a random graph");
  gen->add_option("--v", o.gen_v, "vertex count")->required();
  gen->add_option("--d", o.gen_d, "edge probability")->required();
  gen->add_option("--seed", o.gen_seed, "seed")->required();
  gen->add_option("--format", o.format, "dimacs, edgelist or json");
  gen->add_option("--out", o.out_file, "output file (default: stdout)");

  auto* bench = app.add_subcommand("bench", "run a benchmark spec");
  bench->add_option("--spec", o.spec_file, "JSON spec file")->required();
  bench->add_option("--emit", o.emit, "markdown, csv or json")->check(CLI::IsMember({"markdown", "csv", "json"}));
  bench->add_flag("--json", o.as_json, "same as --emit json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : usage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return Runner(o, out, err).run(command);
  } catch (const GuardError& e) {
    err << "refused: " << e.what() << '\n';
    return refused;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
}

}  // namespace anticlique::cli
