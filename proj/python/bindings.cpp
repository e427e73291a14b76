#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wellcovered/edge_list.hpp"
#include "wellcovered/harness.hpp"

namespace py = pybind11;
using namespace wc;

namespace {

Graph make_graph(std::size_t n, const std::vector<Edge>& edges) { return Graph::build(n, edges); }

std::vector<std::vector<Vertex>> as_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Well-covered spaces of graphs";

  auto base = py::register_exception<Error>(m, "WellCoveredError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", base.ptr());
  py::register_exception<ScsValidationError>(m, "ScsValidationError", base.ptr());
  py::register_exception<VertexRangeError>(m, "VertexRangeError", base.ptr());
  py::register_exception<DisconnectedGraphError>(m, "DisconnectedGraphError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text).graph; });
  m.def("read_edge_list", [](const std::string& path) { return read_edge_list(path).graph; });
  m.def("write_edge_list", [](const Graph& g) { return write_edge_list(g); });
  m.def("generate", [](const std::string& family, const std::vector<std::size_t>& params) {
    return generate_family(family, params).graph;
  }, py::arg("family"), py::arg("params") = std::vector<std::size_t>{});
  m.def("corpus_names", [] {
    std::vector<std::string> out;
    for (const auto& ng : named_corpus()) out.push_back(ng.name);
    return out;
  });

  m.def("enumerate_mis", [](const Graph& g, std::size_t cap) { return as_lists(enumerate_mis(g, cap).sets); },
        py::arg("g"), py::arg("cap") = kDefaultMisCap, py::call_guard<py::gil_scoped_release>());
  m.def("count_mis", &count_mis, py::arg("g"), py::arg("cap") = kDefaultMisCap,
        py::call_guard<py::gil_scoped_release>());
  m.def("is_chordal", &is_chordal);
  m.def("is_sccg", py::overload_cast<const Graph&>(&is_sccg));
  m.def("is_well_covered", py::overload_cast<const Graph&, std::size_t>(&is_well_covered), py::arg("g"),
        py::arg("cap") = kDefaultMisCap);

  m.def("wcdim", [](const Graph& g, const std::string& field, std::size_t cap) {
    return wcdim(g, FieldSpec::parse(field), cap);
  }, py::arg("g"), py::arg("field") = "q", py::arg("cap") = kDefaultMisCap, py::call_guard<py::gil_scoped_release>());
  m.def("_well_covered_space_json", [](const Graph& g, const std::string& field, std::size_t cap) {
    return dump(wcspace_report("graph", well_covered_space(g, FieldSpec::parse(field), cap)));
  }, py::arg("g"), py::arg("field") = "q", py::arg("cap") = kDefaultMisCap);
  m.def("_simplicial_report_json", [](const Graph& g) { return dump(to_json(simplicial_report(g))); });
  m.def("_sccg_formula_json", [](const Graph& g, bool simplicial_only) {
    return dump(to_json(sccg_mis_count_formula(
        g, simplicial_only ? ResidualReading::simplicial_only : ResidualReading::residual_size)));
  }, py::arg("g"), py::arg("simplicial_only") = false);

  m.def("scs_compose", [](const Graph& g1, const Graph& g2, const std::vector<std::pair<Vertex, Vertex>>& glue) {
    const auto sum = scs_compose({g1, g2, glue});
    return py::make_tuple(sum.graph, std::vector<Vertex>(sum.shared.begin(), sum.shared.end()));
  }, py::arg("g1"), py::arg("g2"), py::arg("glue"));
  m.def("scs_split", [](const Graph& g) -> py::object {
    const auto split = scs_split(g);
    if (!split) return py::none();
    return py::make_tuple(split->spec.g1, split->spec.g2, split->spec.glue);
  });

  m.def("_run_suite_json", [](const std::string& suite, std::uint64_t seed, std::size_t threads) {
    SuiteConfig cfg;
    cfg.suite = suite;
    cfg.seed = seed;
    cfg.threads = threads;
    return dump(run_suite(cfg).to_json());
  }, py::arg("suite") = "default", py::arg("seed") = 0, py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
}
