#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dee/errors.hpp"
#include "dee/estrada_bounds.hpp"
#include "dee/harness.hpp"

namespace py = pybind11;
using namespace dee;

namespace {

std::vector<double> values(const Spectrum& s) { return {s.values().begin(), s.values().end()}; }

py::dict report_dict(const BoundReport& b) {
  py::dict d;
  d["theorem_id"] = std::string(to_string(b.theorem_id));
  d["bound_value"] = b.bound_value;
  d["observed"] = b.observed;
  d["slack"] = b.slack;
  d["holds"] = b.holds;
  d["equality"] = b.equality;
  d["strict_required"] = b.strict_required;
  d["log_domain"] = b.log_domain;
  if (!b.detail.empty()) d["detail"] = b.detail;
  return d;
}

py::list events(const std::vector<VerificationEvent>& ev) {
  py::list out;
  for (const auto& e : ev) out.append(py::make_tuple(e.n, e.graph_id, e.check, e.value));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Distance Estrada index of connected graphs and its bounds";

  auto base = py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  (void)base;

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_static("from_edges", [](int n, const std::vector<Edge>& e) { return Graph::from_edges(n, e); },
                  py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); }, py::arg("text"))
      .def_static("from_edge_list", [](const std::string& s) { return parse_edge_list(s); }, py::arg("text"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("edges", &Graph::edges)
      .def("add_edge", &Graph::add_edge)
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def("complement", [](const Graph& g) { return complement(g); })
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("is_regular", [](const Graph& g) { return is_regular(g); })
      .def("diameter", [](const Graph& g) { return diameter(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("complete", [](int n) { return generate(family::Complete{n}); }, py::arg("n"));
  m.def("complete_multipartite", [](std::vector<int> parts) { return generate(family::CompleteMultipartite{std::move(parts)}); },
        py::arg("parts"));
  m.def("cycle", [](int n) { return generate(family::Cycle{n}); }, py::arg("n"));
  m.def("path", [](int n) { return generate(family::Path{n}); }, py::arg("n"));
  m.def("star", [](int n) { return generate(family::Star{n}); }, py::arg("n"));
  m.def("petersen", [] { return generate(family::Petersen{}); });
  m.def("gnp", [](int n, double p, std::uint64_t seed) { return generate(family::RandomGnp{n, p, seed}); },
        py::arg("n"), py::arg("p"), py::arg("seed"));

  m.def("distance_matrix", [](const Graph& g) {
    const DistanceMatrix dm = distance_matrix(g);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(dm.order()));
    for (int i = 0; i < dm.order(); ++i) {
      for (int j = 0; j < dm.order(); ++j) rows[static_cast<std::size_t>(i)].push_back(dm.at(i, j));
    }
    return rows;
  });
  m.def("distance_spectrum", [](const Graph& g) { return values(distance_spectrum(g)); });
  m.def("adjacency_spectrum", [](const Graph& g) { return values(adjacency_spectrum(g)); });
  m.def("eigvalsh", [](const std::vector<std::vector<double>>& a) {
    const int n = static_cast<int>(a.size());
    SymMatrix s(n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(a[static_cast<std::size_t>(i)].size()) != n) throw PreconditionError("eigvalsh: matrix is not square");
      for (int j = 0; j < n; ++j) {
        if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
          throw PreconditionError("eigvalsh: matrix is not symmetric");
        }
        s.set(i, j, a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      }
    }
    return values(eig_sym(s));
  }, py::arg("matrix"), "Eigenvalues of a real symmetric matrix, non-increasing.");

  m.def("dee", [](const Graph& g) { return estrada_index(distance_spectrum(g)).value; },
        "Distance Estrada index; inf when it leaves double range.");
  m.def("log_dee", [](const Graph& g) { return estrada_index(distance_spectrum(g)).log_value; });
  m.def("estrada", [](const Graph& g) { return estrada_index(adjacency_spectrum(g)).value; },
        "Estrada index of the adjacency spectrum.");

  m.def("bounds", [](const Graph& g) {
    const BoundReportSet set = bound_report(g);
    py::list reports;
    for (const auto& b : set.reports) reports.append(report_dict(b));
    py::dict omitted;
    for (const auto& o : set.omitted) omitted[py::str(std::string(to_string(o.theorem_id)))] = o.reason;
    py::dict d;
    d["reports"] = reports;
    d["omitted"] = omitted;
    return d;
  });

  m.def("compute_json", [](const Graph& g) { return record_json(make_record(g)); },
        "Same document as `dee compute`.");
  m.def("bounds_json", [](const Graph& g) { return bounds_json(make_record(g)); },
        "Same document as `dee bounds`.");

  m.def("verify", [](int max_n, int threads) {
    VerificationSummary s;
    {
      py::gil_scoped_release release;
      s = run_verification(max_n, threads);
    }
    py::dict d;
    d["population"] = s.population;
    d["max_n"] = s.max_n;
    d["graphs_checked"] = s.graphs_checked;
    d["checked_per_n"] = s.checked_per_n;
    d["violations"] = events(s.violations);
    d["findings"] = events(s.findings);
    d["equality_hits"] = events(s.equality_hits);
    d["ok"] = s.ok();
    return d;
  }, py::arg("max_n"), py::arg("threads") = 1,
     "Exhaustive check over connected labeled graphs with 2 <= n <= max_n.");
}
