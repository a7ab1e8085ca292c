#include "extgraph/report.hpp"

#include "extgraph/errors.hpp"

namespace extgraph {

Json rational_json(const Rational& q) { return to_string(q); }

Json rationals_json(const std::vector<Rational>& qs) {
  Json out = Json::array();
  for (const auto& q : qs) out.push_back(to_string(q));
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  Rational q;
  if (!j.is_string() || !try_parse_rational(j.get<std::string>(), q))
    throw DomainError("expected an exact rational, got " + j.dump());
  return q;
}

std::string decimal_string(const Rational& q) {
  BigInt den = q.get_den();
  int twos = 0, fives = 0;
  while (den % 2 == 0) den /= 2, ++twos;
  while (den % 5 == 0) den /= 5, ++fives;
  if (den != 1) return to_string(q);
  const int digits = std::max(twos, fives);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  BigInt scaled = q.get_num() * scale / q.get_den();
  std::string sign = scaled < 0 ? "-" : "";
  std::string s = BigInt(abs(scaled)).get_str();
  if (digits == 0) return sign + s;
  if (static_cast<int>(s.size()) <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
  return sign + s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
}

namespace {

Json int_lists(const std::vector<std::vector<int>>& v) {
  Json out = Json::array();
  for (const auto& row : v) out.push_back(row);
  return out;
}

Json cut_json(const Cut& c) {
  return Json{{"side_a", c.side_a},
              {"cut_edges", c.cut_edges},
              {"volume_a", rational_json(c.volume_a)},
              {"volume_b", rational_json(c.volume_b)},
              {"cut_weight", rational_json(c.cut_weight)}};
}

Objective objective_from(const std::string& s) {
  for (Objective o : {Objective::GirthMax, Objective::DiameterMin, Objective::ExpansionMax, Objective::CheegerMax})
    if (s == to_string(o)) return o;
  throw DomainError("unknown objective '" + s + "'");
}

std::vector<Rational> rationals_from(const Json& j) {
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

}  // namespace

Json to_json(const TreeReport& r) {
  Json j;
  j["method"] = to_string(r.method);
  j["connected"] = r.connected;
  if (r.method == TreeMethod::Spectral) {
    j["tau_approx"] = r.tau_approx;
    return j;
  }
  j["tau"] = rational_json(r.tau);
  j["per_edge_tau"] = rationals_json(r.per_edge_tau);
  j["resistances"] = rationals_json(r.resistances);
  return j;
}

Json to_json(const CycleSet& c) {
  return Json{{"girth", rational_json(c.girth)}, {"systole_count", c.systoles.size()}, {"systoles", int_lists(c.systoles)}};
}

Json to_json(const MeridianSet& s) {
  Json pairs = Json::array();
  for (auto [u, v] : s.diametral_pairs) pairs.push_back({u, v});
  return Json{{"diameter", rational_json(s.diameter)},
              {"diametral_pairs", pairs},
              {"meridian_count", s.meridians.size()},
              {"meridians", int_lists(s.meridians)},
              {"meridian_pair", s.meridian_pair}};
}

Json to_json(const CutReport& r) {
  Json ec = Json::array(), hc = Json::array();
  for (const Cut& c : r.expansion_cuts) ec.push_back(cut_json(c));
  for (const Cut& c : r.cheeger_cuts) hc.push_back(cut_json(c));
  return Json{{"expansion", rational_json(r.expansion)},
              {"cheeger", rational_json(r.cheeger)},
              {"expansion_cuts", ec},
              {"cheeger_cuts", hc}};
}

Json to_json(const ExtremalCertificate& c) {
  Json j;
  j["objective"] = to_string(c.objective);
  j["verdict"] = to_string(c.verdict);
  j["active_count"] = c.active_count;
  j["experimental"] = c.experimental;
  j["value_before"] = rational_json(c.value_before);
  if (c.verdict == Verdict::LocalExtremum) {
    j["cone"] = rationals_json(c.cone);
    if (!c.potential.empty()) j["potential"] = rationals_json(c.potential);
  } else {
    j["direction"] = rationals_json(c.direction);
    j["epsilon"] = rational_json(c.epsilon);
    j["value_after"] = rational_json(c.value_after);
  }
  return j;
}

ExtremalCertificate certificate_from_json(const Json& j) {
  try {
    ExtremalCertificate c;
    c.objective = objective_from(j.at("objective").get<std::string>());
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == to_string(Verdict::LocalExtremum)) {
      c.verdict = Verdict::LocalExtremum;
    } else if (verdict == to_string(Verdict::NotExtremum)) {
      c.verdict = Verdict::NotExtremum;
    } else {
      throw DomainError("unknown verdict '" + verdict + "'");
    }
    c.active_count = j.at("active_count").get<int>();
    c.experimental = j.at("experimental").get<bool>();
    c.value_before = rational_from_json(j.at("value_before"));
    if (c.verdict == Verdict::LocalExtremum) {
      c.cone = rationals_from(j.at("cone"));
      if (j.contains("potential")) c.potential = rationals_from(j.at("potential"));
    } else {
      c.direction = rationals_from(j.at("direction"));
      c.epsilon = rational_from_json(j.at("epsilon"));
      c.value_after = rational_from_json(j.at("value_after"));
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed certificate: ") + e.what());
  }
}

Json to_json(const AscentResult& r) {
  Json j;
  j["domain"] = to_string(r.final_point.domain());
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  j["tau"] = rational_json(r.tau);
  j["log_tau"] = r.log_tau.empty() ? 0.0 : r.log_tau.back();
  j["resistance_spread"] = r.resistance_spread;
  j["gradient_norm"] = r.gradient_norm;
  j["weights"] = rationals_json(r.final_point.weights());
  j["trajectory"] = r.log_tau;
  j["graph"] = emit_graph(r.final_point);
  return j;
}

Json to_json(const EigenCriticalityReport& r) {
  Json j;
  j["mu"] = r.mu;
  j["first_index"] = r.first_index;
  j["multiplicity"] = r.multiplicity;
  j["critical"] = r.critical;
  j["adjacent_pairs_included"] = r.adjacent_pairs_included;
  j["verdicts_agree"] = r.verdicts_agree;
  j["form_count"] = r.forms.size();
  if (r.increasing_form) {
    const PairForm& f = r.forms[*r.increasing_form];
    j["increasing_pair"] = {f.edge_a, f.edge_b};
    j["increasing_eigenvalues"] = f.eigenvalues;
  } else {
    j["increasing_pair"] = nullptr;
  }
  if (r.df_const) {
    j["df_const"] = Json{{"holds", r.df_const->holds},
                         {"constant", r.df_const->constant},
                         {"deviation", r.df_const->deviation},
                         {"searched", r.df_const->searched},
                         {"vector", r.df_const->vector}};
  }
  return j;
}

Json to_json(const JacobianReport& r) {
  Json j;
  Json factors = Json::array();
  for (const BigInt& f : r.invariant_factors) factors.push_back(f.get_str());
  j["invariant_factors"] = factors;
  j["group_order"] = r.group_order.get_str();
  j["lattice_dimension"] = r.lattice_dimension;
  j["regular_degree"] = r.regular_degree ? Json(*r.regular_degree) : Json(nullptr);
  j["unnormalized_min_norm"] = r.unnormalized_min_norm ? Json(*r.unnormalized_min_norm) : Json(nullptr);
  j["normalized_min_norm"] = r.normalized_min_norm ? Json(*r.normalized_min_norm) : Json(nullptr);
  return j;
}

Json to_json(const EmbeddedGraph& e) {
  Json edges = Json::array();
  for (const Edge& ed : e.graph.edges) edges.push_back({ed.u, ed.v});
  Json j;
  j["n"] = e.graph.n;
  j["m"] = e.graph.m();
  j["faces"] = e.faces.size();
  j["genus"] = e.genus;
  j["simple"] = e.graph.is_simple();
  j["edges"] = edges;
  j["face_darts"] = int_lists(e.faces);
  j["rotation"] = emit_rotation(e.graph, e.rotation);
  j["tau"] = rational_json(multigraph_tree_number(e.graph));
  return j;
}

Json to_json(const SwitchScan& s) {
  Json j;
  j["tau_before"] = s.tau_before.get_str();
  j["valid_switches"] = s.valid;
  j["improving"] = s.improving;
  if (s.best_switch) {
    auto [a, b] = *s.best_switch;
    j["best_switch"] = {{a.u, a.v}, {b.u, b.v}};
    j["tau_after"] = s.tau_after.get_str();
    j["delta_tau"] = s.delta_tau.get_str();
  } else {
    j["best_switch"] = nullptr;
  }
  return j;
}

Json to_json(const SigmaValue& s, int k) {
  Json j;
  j["k"] = k;
  j["value"] = s.exact ? Json(decimal_string(*s.exact)) : Json(s.value);
  j["exact"] = s.exact ? rational_json(*s.exact) : Json(nullptr);
  j["squared"] = rational_json(s.squared);
  j["approx"] = s.value;
  return j;
}

Json to_json(const LatticeEntropy& e) {
  return Json{{"value", e.value},
              {"exponent", e.exponent},
              {"series_exponent", e.series_exponent},
              {"catalan", e.catalan}};
}

Json to_json(const CanonicalForm& c) {
  static const char* hex = "0123456789abcdef";
  std::string h;
  for (unsigned char b : c.bytes) {
    h += hex[b >> 4];
    h += hex[b & 15];
  }
  return Json{{"certificate", h}, {"labeling", c.labeling}, {"leaves", c.leaves}};
}

Json invariants(const WeightPoint& w) {
  const Graph& g = w.graph();
  Json j;
  j["n"] = g.n();
  j["m"] = g.m();
  j["domain"] = to_string(w.domain());
  if (!w.is_unweighted()) j["weights"] = rationals_json(w.weights());
  const bool conn = is_connected(g);
  j["connected"] = conn;
  j["tau"] = rational_json(tree_number_exact(w));

  const bool has_cycle = g.m() > g.n() - component_count(g);
  j["girth"] = has_cycle ? rational_json(girth(w).girth) : Json(nullptr);
  j["diameter"] = conn ? rational_json(diameter(w).diameter) : Json(nullptr);
  if (conn && g.n() >= 2 && g.n() <= kMaxCutVertices) {
    CutReport cuts = cut_constants(w);
    j["expansion"] = rational_json(cuts.expansion);
    j["cheeger"] = rational_json(cuts.cheeger);
  } else {
    j["expansion"] = nullptr;
    j["cheeger"] = nullptr;
  }

  SpectrumReport spec = spectrum(w);
  j["laplacian_spectrum"] = spec.laplacian;
  j["adjacency_spectrum"] = spec.adjacency;

  auto k = g.regular_degree();
  j["regular_degree"] = k ? Json(*k) : Json(nullptr);
  if (w.is_unweighted() && conn && g.n() >= 2) {
    EquiarborealReport eq = equiarboreal_test(g);
    j["equiarboreal"] = eq.is_equiarboreal;
    if (k && *k >= 2) j["ramanujan"] = is_ramanujan(g).verdict;
  }
  return j;
}

}  // namespace extgraph
