#include "anticlique/enumerator.hpp"
#include "anticlique/maximal.hpp"
#include "anticlique/oracle.hpp"
#include "anticlique/search.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace anticlique;

namespace {

py::int_ to_py(const BigInt& n) {
  const std::string digits = n.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::list coefficients(const Polynomial& p) {
  py::list out;
  for (int k = 0; k <= p.degree(); ++k) out.append(to_py(p[static_cast<std::size_t>(k)]));
  return out;
}

py::dict stats_dict(const SearchStats& s) {
  py::dict d;
  d["rsp"] = s.rsp;
  d["trivial_changes"] = s.trivial_changes;
  d["peak_stack"] = s.peak_stack;
  d["finalized"] = s.finalized;
  d["deleted"] = s.deleted;
  d["interrupted"] = s.interrupted;
  return d;
}

GraphFormat format_arg(const std::string& name) {
  auto f = format_from_name(name);
  if (!f) throw ConfigError("unknown format '" + name + "'");
  return *f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Anticlique counting, enumeration and search over 5-valued rows";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, std::vector<Edge>>(), py::arg("v"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges", &Graph::edges)
      .def("neighbors", &Graph::neighbors, py::arg("y"))
      .def("is_anticlique", &Graph::is_anticlique, py::arg("x"))
      .def("complement", [](const Graph& g) { return to_complement(g); })
      .def("serialize", [](const Graph& g, const std::string& fmt) { return serialize_graph(g, format_arg(fmt)); },
           py::arg("format") = "json")
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(v=" + std::to_string(g.vertex_count()) + ", w=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_graph", [](const std::string& text, const std::string& fmt) { return parse_graph(text, format_arg(fmt)); },
        py::arg("text"), py::arg("format") = "dimacs");
  m.def("random_graph", &random_graph, py::arg("v"), py::arg("d"), py::arg("seed"));
  m.def("random_bipartite_graph", &random_bipartite_graph, py::arg("v1"), py::arg("v2"), py::arg("d"), py::arg("seed"));

  py::class_<Row>(m, "Row")
      .def_static("full", &Row::full, py::arg("v"))
      .def_static("parse", &Row::parse, py::arg("text"))
      .def_property_readonly("w_max", &Row::w_max)
      .def("member_count", [](const Row& r) { return to_py(r.member_count()); })
      .def("spectrum", [](const Row& r) { return coefficients(r.spectrum()); })
      .def("max_member", &Row::max_member)
      .def("contains", &Row::contains, py::arg("x"))
      .def("expand", [](const Row& r, int min_size) { return r.expand(min_size); }, py::arg("min_size") = 0)
      .def("__str__", &Row::to_string)
      .def("__repr__", [](const Row& r) { return "Row('" + r.to_string() + "')"; });

  m.def("standard_rows", [](const Graph& g) { return standard_rows(g); }, py::arg("g"));
  m.def("fibonacci_number", [](const Graph& g) { return to_py(fibonacci_number(g)); }, py::arg("g"));
  m.def("independence_polynomial", [](const Graph& g) { return coefficients(independence_polynomial(g)); },
        py::arg("g"));
  m.def("enumerate_anticliques", [](const Graph& g, int min_size) { return enumerate_anticliques(g, min_size); },
        py::arg("g"), py::arg("min_size") = 0);

  m.def(
      "max_anticlique",
      [](const Graph& g, bool bipartite, std::optional<std::vector<std::int64_t>> weights) {
        SearchOptions opts;
        if (bipartite) opts = bipartite_options(g);
        if (weights) opts.weights = *weights;
        py::gil_scoped_release release;
        auto r = max_anticlique(g, opts);
        py::gil_scoped_acquire acquire;
        py::dict d;
        d["alpha"] = r.alpha;
        d["witness"] = r.witness;
        d["stats"] = stats_dict(r.stats);
        return d;
      },
      py::arg("g"), py::arg("bipartite") = false, py::arg("weights") = py::none());

  m.def(
      "threshold_search",
      [](const Graph& g, int k, bool first) {
        auto r = threshold_search(g, k, first ? ThresholdMode::first : ThresholdMode::all);
        py::dict d;
        d["stats"] = stats_dict(r.stats);
        if (first) {
          d["first"] = r.first ? py::cast(*r.first) : py::none();
        } else {
          std::vector<std::string> rows;
          for (const auto& row : r.rows) rows.push_back(row.to_string());
          d["rows"] = rows;
        }
        return d;
      },
      py::arg("g"), py::arg("k"), py::arg("first") = false);

  m.def(
      "all_max_anticliques",
      [](const Graph& g) {
        auto r = all_max_anticliques(g);
        return py::make_tuple(r.alpha, r.sets);
      },
      py::arg("g"));
  m.def("core", &core, py::arg("g"));
  m.def("maximal_anticliques", [](const Graph& g) { return maximal_anticliques(g).sets; }, py::arg("g"));
  m.def(
      "chromatic_number",
      [](const Graph& g, int max_vertices) {
        auto r = chromatic_number(g, max_vertices);
        return py::make_tuple(r.chi, r.cover);
      },
      py::arg("g"), py::arg("max_vertices") = 30);

  m.def(
      "oracle_report",
      [](const Graph& g, int max_vertices) {
        auto r = oracle_report(g, max_vertices, max_vertices);
        py::dict d;
        d["f"] = to_py(r.f);
        d["coefficients"] = coefficients(r.spectrum);
        d["alpha"] = r.alpha;
        d["maximum_sets"] = r.maximum_sets;
        d["maximal_sets"] = r.maximal_sets;
        d["chi"] = r.chi ? py::cast(*r.chi) : py::none();
        return d;
      },
      py::arg("g"), py::arg("max_vertices") = 25);
  m.def("oracle_matching", &oracle_matching, py::arg("g"));
}
