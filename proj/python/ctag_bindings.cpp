#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ctag/bench.hpp"
#include "ctag/initial_mapping.hpp"
#include "ctag/io.hpp"
#include "ctag/pattern.hpp"
#include "ctag/scheduler.hpp"
#include "ctag/verify.hpp"

namespace py = pybind11;
using namespace ctag;

namespace {

std::vector<std::pair<int, int>> edge_pairs(const std::vector<Edge>& edges) {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

py::list cycles_as_tuples(const ScheduledCircuit& c) {
  py::list cycles;
  for (const auto& cycle : c.cycles) {
    py::list gates;
    for (const auto& g : cycle) {
      gates.append(py::make_tuple(
          g.kind == GateKind::Swap ? "SWAP" : "CPHASE", g.a, g.b));
    }
    cycles.append(gates);
  }
  return cycles;
}

SchedulerConfig make_config(const std::string& strategy, std::uint32_t seed,
                            double threshold, int beam) {
  SchedulerConfig cfg;
  cfg.strategy = parse_strategy(strategy);
  cfg.seed = seed;
  cfg.threshold = threshold;
  cfg.beam = beam;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_ctag, m) {
  m.doc() = "Commutativity-aware QAOA circuit scheduling";

  auto validation = py::register_exception<ValidationError>(
      m, "ValidationError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", validation.ptr());

  py::class_<ProblemGraph>(m, "ProblemGraph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return ProblemGraph(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &ProblemGraph::num_vertices)
      .def_property_readonly("num_edges", &ProblemGraph::num_edges)
      .def_property_readonly(
          "edges", [](const ProblemGraph& g) { return edge_pairs(g.edges()); })
      .def("has_edge", &ProblemGraph::has_edge)
      .def("degree", &ProblemGraph::degree)
      .def("__repr__", [](const ProblemGraph& g) {
        return "<ProblemGraph n=" + std::to_string(g.num_vertices()) +
               " m=" + std::to_string(g.num_edges()) + ">";
      });

  py::class_<Architecture>(m, "Architecture")
      .def(py::init([](const std::string& name, int q,
                       const std::vector<std::pair<int, int>>& couplings) {
             std::vector<Edge> edges;
             for (const auto& [a, b] : couplings) edges.emplace_back(a, b);
             return Architecture(name, q, edges);
           }),
           py::arg("name"), py::arg("num_qubits"), py::arg("couplings"))
      .def_property_readonly("name", &Architecture::name)
      .def_property_readonly("num_qubits", &Architecture::num_qubits)
      .def_property_readonly("couplings",
                             [](const Architecture& a) {
                               return edge_pairs(a.couplings());
                             })
      .def("coupled", &Architecture::coupled)
      .def("distance", &Architecture::distance);

  py::class_<ScheduledCircuit>(m, "ScheduledCircuit")
      .def_property_readonly("depth", &ScheduledCircuit::depth)
      .def_property_readonly(
          "init", [](const ScheduledCircuit& c) { return c.init.values(); })
      .def_readonly("arch_name", &ScheduledCircuit::arch_name)
      .def_readonly("num_qubits", &ScheduledCircuit::num_qubits)
      .def_property_readonly("cycles", &cycles_as_tuples)
      .def("to_text", &schedule_to_text)
      .def("to_json", &schedule_to_json)
      .def_static("from_json", &schedule_from_json);

  py::class_<Metrics>(m, "Metrics")
      .def_readonly("abstract_depth", &Metrics::abstract_depth)
      .def_readonly("decomposed_depth", &Metrics::decomposed_depth)
      .def_readonly("cphase_count", &Metrics::cphase_count)
      .def_readonly("swap_count", &Metrics::swap_count)
      .def_readonly("decomposed_gate_count", &Metrics::decomposed_gate_count);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("ok", &VerificationReport::ok)
      .def_property_readonly("missing",
                             [](const VerificationReport& r) {
                               return edge_pairs(r.missing);
                             })
      .def_property_readonly("duplicated",
                             [](const VerificationReport& r) {
                               return edge_pairs(r.duplicated);
                             })
      .def_property_readonly(
          "illegal_gate_count",
          [](const VerificationReport& r) { return r.illegal_gates.size(); })
      .def_property_readonly(
          "final_mapping",
          [](const VerificationReport& r) { return r.final_mapping.values(); })
      .def("to_json", [](const VerificationReport& r) { return to_json(r); });

  m.def("clique", &clique, py::arg("n"));
  m.def("random_graph", &random_graph, py::arg("n"), py::arg("density"),
        py::arg("seed"));
  m.def("read_graph", &read_problem_graph_file, py::arg("path"));
  m.def("architecture", &make_architecture, py::arg("spec"),
        "Build an architecture from a spec such as 'linear:8', 'grid:4x4', "
        "'ibm20' or 'ibm27'.");

  m.def(
      "schedule",
      [](const ProblemGraph& g, const Architecture& arch,
         const std::string& strategy, std::uint32_t seed, double threshold,
         int beam) {
        py::gil_scoped_release unlock;
        return schedule(g, arch, make_config(strategy, seed, threshold, beam));
      },
      py::arg("graph"), py::arg("arch"), py::arg("strategy") = "ctag",
      py::arg("seed") = 0, py::arg("threshold") = 0.5, py::arg("beam") = 64);
  m.def("verify", &verify, py::arg("circuit"), py::arg("graph"),
        py::arg("arch"));
  m.def(
      "metrics",
      [](const ScheduledCircuit& c, int n) { return metrics(c, n); },
      py::arg("circuit"), py::arg("n"));

  m.def("clique_pattern", &generate_clique_pattern, py::arg("n"));
  m.def("meet_cycle", &meet_cycle, py::arg("n"), py::arg("pos_a"),
        py::arg("pos_b"));
  m.def(
      "predicted_depth",
      [](const ProblemGraph& g, const std::vector<int>& positions, int n) {
        return predicted_depth(g, Mapping(positions), n);
      },
      py::arg("graph"), py::arg("positions"), py::arg("n"));
  m.def(
      "astar_mapping",
      [](const ProblemGraph& g) {
        const auto r = astar_initial_mapping(g);
        return py::make_tuple(r.mapping.values(), r.predicted_depth);
      },
      py::arg("graph"));
}
