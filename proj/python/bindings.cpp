#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "extgraph/errors.hpp"
#include "extgraph/report.hpp"

namespace py = pybind11;
using namespace extgraph;

namespace {

py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::int_ to_py(const BigInt& z) { return py::int_(py::str(z.get_str())); }

WeightPoint as_point(const Graph& g, const std::optional<std::vector<std::string>>& weights, const std::string& domain) {
  WeightDomain d = domain == "dp"     ? WeightDomain::DegreePreserving
                   : domain == "free" ? WeightDomain::Unconstrained
                                      : WeightDomain::Full;
  if (domain != "full" && domain != "dp" && domain != "free") throw DomainError("domain must be full, dp or free");
  if (!weights) return WeightPoint::unweighted(g, d);
  std::vector<Rational> x;
  for (const auto& s : *weights) {
    Rational q;
    if (!try_parse_rational(s, q)) throw DomainError("bad weight '" + s + "'");
    x.push_back(q);
  }
  return WeightPoint(g, x, d);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact spanning-tree counts, extremal certificates and cubic-graph search";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> e;
             for (auto [u, v] : edges) e.push_back({u, v});
             return Graph(n, e);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
                               return out;
                             })
      .def("degrees", &Graph::degrees)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__",
           [](const Graph& g) { return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) + ">"; });

  m.def("family", &make_family, py::arg("spec"), "Named graph such as 'petersen' or 'moebius_ladder:8'");
  m.def(
      "parse_graph", [](const std::string& text) { return parse_graph(text).graph(); }, py::arg("text"));
  m.def(
      "emit_graph", [](const Graph& g) { return emit_graph(g); }, py::arg("graph"));
  m.def(
      "to_dot", [](const Graph& g) { return to_dot(WeightPoint::unweighted(g)); }, py::arg("graph"));

  m.def(
      "tree_count", [](const Graph& g) { return to_py(tree_count(g)); }, py::arg("graph"));
  m.def(
      "tree_number",
      [](const Graph& g, std::optional<std::vector<std::string>> weights) {
        return to_string(tree_number_exact(as_point(g, weights, "free")));
      },
      py::arg("graph"), py::arg("weights") = py::none(), "Weighted tree number as a 'p/q' string");
  m.def(
      "invariants",
      [](const Graph& g, std::optional<std::vector<std::string>> weights) {
        return from_json(invariants(as_point(g, weights, "free")));
      },
      py::arg("graph"), py::arg("weights") = py::none());

  m.def(
      "certify",
      [](const Graph& g, const std::string& objective, std::optional<std::vector<std::string>> weights) {
        ExtremalCertificate c;
        WeightPoint w = as_point(g, weights, objective == "girth" || objective == "diameter" ? "full" : "dp");
        if (objective == "girth") {
          c = certify_girth_max(w);
        } else if (objective == "diameter") {
          c = certify_diameter_min(w);
        } else if (objective == "expansion" || objective == "cheeger") {
          c = certify_cut_max(w, objective == "expansion" ? CutKind::Expansion : CutKind::Cheeger);
        } else {
          throw DomainError("objective must be girth, diameter, expansion or cheeger");
        }
        Json j = to_json(c);
        j["verified"] = verify_certificate(w, c);
        return from_json(j);
      },
      py::arg("graph"), py::arg("objective"), py::arg("weights") = py::none());

  m.def(
      "optimize",
      [](const Graph& g, const std::string& domain) {
        return from_json(to_json(tree_weight_ascent(g, as_point(g, std::nullopt, domain).domain())));
      },
      py::arg("graph"), py::arg("domain") = "full");

  m.def(
      "eigen_criticality",
      [](const Graph& g, int index) { return from_json(to_json(eigen_criticality(WeightPoint::unweighted(g), index))); },
      py::arg("graph"), py::arg("index") = 1);

  m.def(
      "greedy",
      [](int target, std::optional<Graph> start, int jobs) {
        GreedyTrace t;
        {
          py::gil_scoped_release release;
          t = greedy_sequence(start ? *start : make_family("complete:4"), target, {jobs, {}});
        }
        py::list steps;
        for (const GreedyStep& s : t.steps) {
          py::dict d;
          d["n"] = s.graph.n();
          d["tau"] = to_py(s.tau);
          d["girth"] = s.girth;
          d["tied"] = s.tied;
          d["graph"] = s.graph;
          steps.append(d);
        }
        return py::make_tuple(steps, t.trajectory_tie());
      },
      py::arg("target"), py::arg("start") = py::none(), py::arg("jobs") = 1,
      "Greedy insertion trace as (steps, trajectory_tie)");

  m.def(
      "switch_scan", [](const Graph& g, int jobs) { return from_json(to_json(edge_switch_scan(g, jobs))); },
      py::arg("graph"), py::arg("jobs") = 1);
  m.def(
      "jacobian", [](const Graph& g) { return from_json(to_json(jacobian(g))); }, py::arg("graph"));
  m.def("isomorphic", &isomorphic, py::arg("a"), py::arg("b"));
  m.def(
      "canonical", [](const Graph& g) { return canonical_graph(g); }, py::arg("graph"));
  m.def(
      "dual",
      [](const Graph& g, std::optional<std::string> rotation) {
        RotationSystem rot = rotation ? parse_rotation(g, *rotation) : default_rotation(g);
        EmbeddedGraph e = trace_faces(g, rot);
        return from_json(Json{{"primal", to_json(e)}, {"dual", to_json(dual(e))}});
      },
      py::arg("graph"), py::arg("rotation") = py::none());

  m.def(
      "moore_bound", [](int k, int g) { return to_py(moore_bound(k, g)); }, py::arg("k"), py::arg("girth"));
  m.def(
      "mckay_sigma", [](int k) { return from_json(to_json(mckay_sigma(k), k)); }, py::arg("k"));
  m.def("lattice_entropy", [] { return from_json(to_json(lattice_entropy_square())); });
}
