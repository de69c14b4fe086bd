#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "resist/canonical.hpp"
#include "resist/drs.hpp"
#include "resist/enumeration.hpp"
#include "resist/error.hpp"
#include "resist/graph.hpp"
#include "resist/lemmas.hpp"
#include "resist/network.hpp"
#include "resist/resistance.hpp"

namespace py = pybind11;
using namespace resist;

namespace {

// Exact values cross the boundary as fractions.Fraction; the string form is lossless.
// Cached callables are leaked on purpose: destroying them after interpreter shutdown crashes.
py::object to_fraction(const Rational& r) {
  static const auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
  return (*fraction)(to_string(r));
}

Rational from_python(const py::handle& value) {
  return parse_rational(py::str(value).cast<std::string>());
}

py::list spectrum_list(const ResistanceSpectrum& s) {
  py::list out;
  for (const auto& e : s.entries()) out.append(py::make_tuple(to_fraction(e.value), e.multiplicity));
  return out;
}

py::object json_loads(const std::string& text) {
  static const auto* loads = new py::object(py::module_::import("json").attr("loads"));
  return (*loads)(text);
}

DrsOptions drs_options(std::size_t max_n, unsigned threads, bool allow_n10) {
  DrsOptions o;
  o.threads = threads;
  o.allow_order_ten = allow_n10;
  o.max_order = max_n;
  return o;
}

}  // namespace

PYBIND11_MODULE(_resist, m) {
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InfiniteResistance>(m, "InfiniteResistance", PyExc_ArithmeticError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_ValueError);
  py::register_exception<CacheError>(m, "CacheError", PyExc_OSError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("add_edge", &Graph::add_edge)
      .def("delete_edge", &Graph::delete_edge)
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) { return "Graph.from_graph6('" + to_graph6(g) + "')"; });

  m.def("complete_bipartite", &complete_bipartite);
  m.def("complete_graph", &complete_graph);
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);

  m.def("resistance", [](const Graph& g, VertexId u, VertexId v) { return to_fraction(resistance(g, u, v)); });
  m.def("resistance_matrix", [](const Graph& g) {
    const auto r = resistance_matrix(g);
    py::list rows;
    for (VertexId u = 0; u < g.order(); ++u) {
      py::list row;
      for (VertexId v = 0; v < g.order(); ++v) row.append(to_fraction(r(u, v)));
      rows.append(row);
    }
    return rows;
  });
  m.def("spanning_tree_count", [](const Graph& g) { return py::int_(py::str(spanning_tree_count(g).str())); });
  m.def("resistance_spectrum", [](const Graph& g) { return spectrum_list(resistance_spectrum(g)); });
  m.def("spectrum_json", [](const Graph& g) { return to_json(resistance_spectrum(g)); });
  m.def("kmn_spectrum", [](std::size_t a, std::size_t b) { return spectrum_list(kmn_spectrum_closed_form(a, b)); });

  m.def("canonical_graph", &canonical_graph);
  m.def("canonical_graph6", [](const Graph& g) { return to_graph6(canonical_graph(g)); });
  m.def("are_isomorphic", &are_isomorphic);

  m.def(
      "enumerate_connected",
      [](std::size_t n, unsigned threads, bool allow_n10) {
        EnumerationOptions o;
        o.threads = threads;
        o.allow_order_ten = allow_n10;
        py::gil_scoped_release release;
        return enumerate_connected(n, o);
      },
      py::arg("n"), py::arg("threads") = 1, py::arg("allow_n10") = false);

  m.def("series", [](const py::handle& a, const py::handle& b) {
    return to_fraction(series_combine(from_python(a), from_python(b)));
  });
  m.def("parallel", [](const py::handle& a, const py::handle& b) {
    return to_fraction(parallel_combine(from_python(a), from_python(b)));
  });
  m.def("network_resistance", [](const std::string& text, VertexId u, VertexId v) {
    return to_fraction(weighted_resistance(parse_network(text), u, v));
  });

  m.def(
      "verify_drs",
      [](const Graph& g, std::size_t max_n, unsigned threads, bool allow_n10) {
        std::optional<DrsVerdict> verdict;
        {
          py::gil_scoped_release release;
          verdict = verify_drs(g, drs_options(max_n, threads, allow_n10));
        }
        return json_loads(to_json(*verdict));
      },
      py::arg("graph"), py::arg("max_n") = kEnumerationGuard, py::arg("threads") = 1, py::arg("allow_n10") = false);
  m.def(
      "find_collisions",
      [](std::size_t n, unsigned threads) {
        std::optional<CollisionReport> report;
        {
          py::gil_scoped_release release;
          report = find_collisions(n, drs_options(n, threads, false));
        }
        return json_loads(to_json(*report));
      },
      py::arg("n"), py::arg("threads") = 1);
  m.def(
      "check_lemmas",
      [](std::size_t max_n, unsigned threads) {
        EnumerationOptions o;
        o.threads = threads;
        CheckSummary summary;
        {
          py::gil_scoped_release release;
          summary = run_all_checks(max_n, o);
        }
        return json_loads(summary.to_json());
      },
      py::arg("max_n"), py::arg("threads") = 1);
}
