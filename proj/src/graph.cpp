#include "anticlique/graph.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <queue>
#include <random>
#include <sstream>

namespace anticlique {

std::string to_string(const VertexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(set[i]);
  }
  return out + "}";
}

Graph::Graph(int v, std::vector<Edge> edges) : v_(v) {
  if (v < 1) throw ConfigError("graph needs at least one vertex");
  for (auto& [a, b] : edges) {
    if (a < 1 || a > v || b < 1 || b > v)
      throw ConfigError("edge {" + std::to_string(a) + "," + std::to_string(b) + "} out of range 1.." +
                        std::to_string(v));
    if (a == b) throw ConfigError("self-loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  neighbors_.resize(static_cast<std::size_t>(v));
  for (auto [a, b] : edges_) {
    neighbors_[a - 1].push_back(b);
    neighbors_[b - 1].push_back(a);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

bool Graph::is_anticlique(const VertexSet& set) const {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (adjacent(set[i], set[j])) return false;
  return true;
}

bool Graph::is_vertex_cover(const VertexSet& set) const {
  std::vector<bool> in(static_cast<std::size_t>(v_) + 1, false);
  for (auto y : set)
    if (y >= 1 && y <= v_) in[y] = true;
  return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return in[e.first] || in[e.second]; });
}

std::optional<GraphFormat> format_from_name(std::string_view name) {
  if (name == "dimacs" || name == "col") return GraphFormat::dimacs;
  if (name == "edgelist" || name == "edge-list") return GraphFormat::edge_list;
  if (name == "json") return GraphFormat::json;
  return std::nullopt;
}

GraphFormat format_from_path(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".col") || ends_with(".dimacs")) return GraphFormat::dimacs;
  if (ends_with(".json")) return GraphFormat::json;
  return GraphFormat::edge_list;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_int(std::string_view tok, std::size_t line, const char* what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
  return value;
}

void check_edge(long a, long b, long v, std::size_t line) {
  if (a < 1 || a > v || b < 1 || b > v)
    throw ParseError(line, "vertex index out of range 1.." + std::to_string(v) + " in edge " + std::to_string(a) +
                               " " + std::to_string(b));
  if (a == b) throw ParseError(line, "self-loop at vertex " + std::to_string(a));
}

Graph parse_dimacs(std::istream& in) {
  std::string text;
  std::size_t lineno = 0;
  long v = -1;
  std::vector<Edge> edges;
  while (std::getline(in, text)) {
    ++lineno;
    auto tok = split_ws(text);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (v >= 0) throw ParseError(lineno, "duplicate problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
        throw ParseError(lineno, "malformed header, expected 'p edge V E'");
      v = parse_int(tok[2], lineno, "vertex count");
      parse_int(tok[3], lineno, "edge count");
      if (v < 1) throw ParseError(lineno, "vertex count must be positive");
    } else if (tok[0] == "e") {
      if (v < 0) throw ParseError(lineno, "edge line before 'p edge' header");
      if (tok.size() != 3) throw ParseError(lineno, "malformed edge line, expected 'e i j'");
      long a = parse_int(tok[1], lineno, "endpoint");
      long b = parse_int(tok[2], lineno, "endpoint");
      check_edge(a, b, v, lineno);
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    } else {
      throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (v < 0) throw ParseError(lineno, "missing 'p edge V E' header");
  return Graph(static_cast<int>(v), std::move(edges));
}

Graph parse_edge_list(std::istream& in) {
  std::string text;
  std::size_t lineno = 0;
  long v = -1;
  std::vector<Edge> edges;
  while (std::getline(in, text)) {
    ++lineno;
    auto tok = split_ws(text);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (v < 0) {
      if (tok.size() != 1) throw ParseError(lineno, "malformed header, expected the vertex count alone");
      v = parse_int(tok[0], lineno, "vertex count");
      if (v < 1) throw ParseError(lineno, "vertex count must be positive");
      continue;
    }
    if (tok.size() != 2) throw ParseError(lineno, "malformed edge line, expected 'i j'");
    long a = parse_int(tok[0], lineno, "endpoint");
    long b = parse_int(tok[1], lineno, "endpoint");
    check_edge(a, b, v, lineno);
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (v < 0) throw ParseError(lineno, "missing vertex count");
  return Graph(static_cast<int>(v), std::move(edges));
}

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

Graph parse_json(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte), e.what());
  }
  if (!doc.is_object() || !doc.contains("v") || !doc["v"].is_number_integer())
    throw ParseError(1, "malformed header, expected an object with integer \"v\"");
  long v = doc["v"].get<long>();
  if (v < 1) throw ParseError(1, "vertex count must be positive");
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    const auto& list = doc["edges"];
    if (!list.is_array()) throw ParseError(1, "\"edges\" must be an array");
    for (const auto& e : list) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw ParseError(1, "edge entries must be [i, j] integer pairs");
      long a = e[0].get<long>();
      long b = e[1].get<long>();
      check_edge(a, b, v, 1);
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  return Graph(static_cast<int>(v), std::move(edges));
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
  switch (format) {
    case GraphFormat::dimacs: return parse_dimacs(in);
    case GraphFormat::edge_list: return parse_edge_list(in);
    case GraphFormat::json: return parse_json(in);
  }
  throw std::logic_error("unknown graph format");
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  std::istringstream in{std::string(text)};
  return parse_graph(in, format);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  switch (format) {
    case GraphFormat::dimacs:
      out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
      for (auto [a, b] : g.edges()) out << "e " << a << ' ' << b << '\n';
      break;
    case GraphFormat::edge_list:
      out << g.vertex_count() << '\n';
      for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
      break;
    case GraphFormat::json: {
      nlohmann::json doc;
      doc["v"] = g.vertex_count();
      doc["edges"] = nlohmann::json::array();
      for (auto [a, b] : g.edges()) doc["edges"].push_back({a, b});
      out << doc.dump() << '\n';
      break;
    }
  }
  return out.str();
}

Graph to_complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= g.vertex_count(); ++a)
    for (Vertex b = a + 1; b <= g.vertex_count(); ++b)
      if (!g.adjacent(a, b)) edges.emplace_back(a, b);
  return Graph(g.vertex_count(), std::move(edges));
}

namespace {

// 53-bit uniform in [0, 1); value-identical on every platform, unlike
// std::uniform_real_distribution.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Graph random_graph(int v, double d, std::uint64_t seed) {
  if (!(d >= 0.0 && d <= 1.0)) throw ConfigError("edge density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= v; ++a)
    for (Vertex b = a + 1; b <= v; ++b)
      if (unit_draw(rng) < d) edges.emplace_back(a, b);
  return Graph(v, std::move(edges));
}

Graph random_bipartite_graph(int v1, int v2, double d, std::uint64_t seed) {
  if (!(d >= 0.0 && d <= 1.0)) throw ConfigError("edge density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= v1; ++a)
    for (Vertex b = v1 + 1; b <= v1 + v2; ++b)
      if (unit_draw(rng) < d) edges.emplace_back(a, b);
  return Graph(v1 + v2, std::move(edges));
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int v = g.vertex_count();
  std::vector<int> colour(static_cast<std::size_t>(v) + 1, -1);
  Bipartition result;
  for (Vertex root = 1; root <= v; ++root) {
    if (colour[root] != -1) continue;
    VertexSet side[2];
    std::queue<Vertex> queue;
    colour[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
      Vertex y = queue.front();
      queue.pop();
      side[colour[y]].push_back(y);
      for (Vertex z : g.neighbors(y)) {
        if (colour[z] == -1) {
          colour[z] = 1 - colour[y];
          queue.push(z);
        } else if (colour[z] == colour[y]) {
          return std::nullopt;
        }
      }
    }
    // The root's side wins ties.
    bool root_side_smaller = side[0].size() <= side[1].size();
    auto& small = root_side_smaller ? side[0] : side[1];
    auto& large = root_side_smaller ? side[1] : side[0];
    result.smaller.insert(result.smaller.end(), small.begin(), small.end());
    result.larger.insert(result.larger.end(), large.begin(), large.end());
  }
  std::sort(result.smaller.begin(), result.smaller.end());
  std::sort(result.larger.begin(), result.larger.end());
  return result;
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex a = 1; a < n; ++a) edges.emplace_back(a, a + 1);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex a = 1; a < n; ++a) edges.emplace_back(a, a + 1);
  if (n >= 3) edges.emplace_back(1, n);
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b) edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

Graph empty_graph(int n) { return Graph(n, {}); }

}  // namespace anticlique
