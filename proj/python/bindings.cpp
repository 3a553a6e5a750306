#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "preclusion/cli.hpp"
#include "preclusion/error.hpp"
#include "preclusion/graph.hpp"
#include "preclusion/graph_io.hpp"
#include "preclusion/hypercube.hpp"
#include "preclusion/matching.hpp"
#include "preclusion/reduction.hpp"
#include "preclusion/report.hpp"
#include "preclusion/solver.hpp"

namespace py = pybind11;
using namespace preclusion;

namespace {

ProblemKind kind_from(const std::string& mode, std::optional<unsigned> s) {
  if (mode == "mp") return ProblemKind::mp();
  if (mode == "ak") return ProblemKind::ak();
  if (mode == "mps") {
    if (!s) throw ParameterError("mode 'mps' needs s");
    return ProblemKind::mps(*s);
  }
  throw ParameterError("unknown mode '" + mode + "'");
}

io::Format format_from(const std::string& name) {
  const auto f = io::format_from_name(name);
  if (!f) throw ParameterError("unknown format '" + name + "'");
  return *f;
}

std::vector<std::pair<VertexId, VertexId>> edge_pairs(const Graph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact matching preclusion, s-restricted matching preclusion and anti-Kekule solver";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<TagMismatchError>(m, "TagMismatchError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<OracleLimitError>(m, "OracleLimitError", base.ptr());
  py::register_exception<BudgetError>(m, "BudgetError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                       std::optional<std::vector<std::uint8_t>> bipartition) {
             std::vector<Edge> es;
             for (auto [u, v] : edges) es.push_back({u, v});
             return Graph(n, std::move(es), std::move(bipartition));
           }),
           py::arg("n"), py::arg("edges"), py::arg("bipartition") = py::none())
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges", &edge_pairs)
      .def_property_readonly("bipartition", [](const Graph& g) { return g.bipartition(); })
      .def("degree", &Graph::degree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("hypercube", &generate::hypercube, py::arg("n"));
  m.def("complete", &generate::complete, py::arg("n"));
  m.def("complete_bipartite", &generate::complete_bipartite, py::arg("a"), py::arg("b"));
  m.def("petersen", &generate::petersen);
  m.def("cycle", &generate::cycle, py::arg("n"));
  m.def("path", &generate::path, py::arg("n"));
  m.def("random_bipartite_with_pm", &generate::random_bipartite_with_pm, py::arg("t"),
        py::arg("p"), py::arg("seed"));

  m.def("parse", [](const std::string& text, std::optional<std::string> format) {
    return format ? io::parse(format_from(*format), text) : io::parse_auto(text);
  }, py::arg("text"), py::arg("format") = py::none());
  m.def("emit", [](const Graph& g, const std::string& format) { return io::emit(g, format_from(format)); },
        py::arg("graph"), py::arg("format") = "edges");

  m.def("matching_number", [](const Graph& g) { return matching_number(g); });
  m.def("max_matching", [](const Graph& g, bool lex_min) {
    return max_matching(g, lex_min ? TieBreak::LexMin : TieBreak::Any).edges().members();
  }, py::arg("graph"), py::arg("lex_min") = false);
  m.def("has_perfect_matching", &has_perfect_matching);
  m.def("brute_force_matching_number", &brute_force_matching_number, py::arg("graph"),
        py::arg("edge_limit") = kDefaultMatchingOracleEdgeLimit);

  m.def("satisfies", [](const Graph& g, const std::vector<EdgeId>& f, const std::string& mode,
                        std::optional<unsigned> s) {
    return satisfies(g, EdgeSet(g, f), kind_from(mode, s));
  }, py::arg("graph"), py::arg("edges"), py::arg("mode"), py::arg("s") = py::none());

  m.def("_solve", [](const Graph& g, const std::string& mode, std::optional<unsigned> s,
                     std::optional<std::size_t> budget, bool deterministic, unsigned jobs) {
    SolveOptions options;
    options.budget = budget;
    options.deterministic = deterministic;
    options.jobs = jobs;
    PreclusionCertificate cert;
    {
      py::gil_scoped_release release;
      cert = solve(g, kind_from(mode, s), options);
    }
    return certificate_json(g, cert).dump();
  }, py::arg("graph"), py::arg("mode"), py::arg("s") = py::none(), py::arg("budget") = py::none(),
        py::arg("deterministic") = true, py::arg("jobs") = 1);

  m.def("_brute_force_solve", [](const Graph& g, const std::string& mode, std::optional<unsigned> s,
                                 std::size_t edge_limit) {
    BruteForceOptions options;
    options.edge_limit = edge_limit;
    return certificate_json(g, brute_force_solve(g, kind_from(mode, s), options)).dump();
  }, py::arg("graph"), py::arg("mode"), py::arg("s") = py::none(),
        py::arg("edge_limit") = kDefaultSolveOracleEdgeLimit);

  m.def("_build_reduction", [](const Graph& g) {
    const ReductionInstance r = build_reduction(g);
    return py::dict(py::arg("gadget") = r.gadget, py::arg("t") = r.t,
                    py::arg("u_prime") = r.u_prime, py::arg("u_dprime") = r.u_dprime,
                    py::arg("v_prime") = r.v_prime, py::arg("v_dprime") = r.v_dprime,
                    py::arg("e") = r.e, py::arg("e_prime") = r.e_prime);
  });
  m.def("verify_equivalence", [](const Graph& g, std::size_t k, unsigned s) {
    const EquivalenceCheck c = verify_equivalence(g, k, s);
    return py::dict(py::arg("left") = c.left, py::arg("right_ak") = c.right_ak,
                    py::arg("right_mps") = c.right_mps, py::arg("agree") = c.agree);
  }, py::arg("graph"), py::arg("k"), py::arg("s") = 1);

  m.def("compute_v_e", &compute_v_e);
  m.def("_verify_mps_hypercube", [](unsigned n, unsigned s) {
    return mps_hypercube_json(generate::hypercube(n), verify_mps_hypercube(n, s)).dump();
  });

  m.def("run_cli", [](const std::vector<std::string>& args, const std::string& stdin_text) {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = cli::run(args, in, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), py::arg("stdin") = "");

  m.attr("__version__") = kToolVersion;
}
