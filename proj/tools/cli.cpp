#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "extgraph/errors.hpp"
#include "extgraph/report.hpp"

namespace extgraph::cli {

namespace {

enum class Format { Text, Json, Dot };

struct Common {
  std::vector<std::string> inputs;
  std::vector<std::string> families;
  std::string format = "text";
  bool json = false;
  int jobs = 1;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format format_of(const Common& c) {
  if (c.json && c.format != "text" && c.format != "json") throw UsageError("--json conflicts with --format " + c.format);
  if (c.json || c.format == "json") return Format::Json;
  return c.format == "dot" ? Format::Dot : Format::Text;
}

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open '" + path + "'");
    buf << f.rdbuf();
  }
  return buf.str();
}

std::vector<WeightPoint> load_all(const Common& c, Context& ctx) {
  std::vector<WeightPoint> out;
  for (const auto& path : c.inputs) out.push_back(parse_graph(read_source(path, ctx.in)));
  for (const auto& fam : c.families) out.push_back(WeightPoint::unweighted(make_family(fam)));
  return out;
}

WeightPoint load_one(const Common& c, Context& ctx) {
  auto all = load_all(c, ctx);
  if (all.size() != 1) throw UsageError("expected exactly one graph (a file path or --family)");
  return all.front();
}

void add_common(CLI::App* sub, Common& c, bool many_inputs = false) {
  sub->add_option("inputs", c.inputs, many_inputs ? "Graph files ('-' for stdin)" : "Graph file ('-' for stdin)");
  sub->add_option("--family", c.families, "Named graph, e.g. petersen or moebius_ladder:8");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  sub->add_flag("--json", c.json, "Same as --format json");
}

void print_json(Context& ctx, const Json& j) { ctx.out << j.dump(2) << '\n'; }

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + scalar_text(v[i]);
    return s;
  }
  return v.dump();
}

void print_fields(Context& ctx, const Json& j, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      print_fields(ctx, value, prefix + key + ".");
    } else {
      ctx.out << prefix << key << ": " << scalar_text(value) << '\n';
    }
  }
}

// --- verbs -------------------------------------------------------------------

int cmd_inv(const Common& c, Context& ctx) {
  Format fmt = format_of(c);
  WeightPoint w = load_one(c, ctx);
  if (fmt == Format::Dot) {
    ctx.out << to_dot(w);
    return kOk;
  }
  Json j = invariants(w);
  if (fmt == Format::Json) {
    print_json(ctx, j);
  } else {
    print_fields(ctx, j);
  }
  return kOk;
}

std::string objective_noun(Objective o) {
  switch (o) {
    case Objective::GirthMax: return "girth";
    case Objective::DiameterMin: return "diameter";
    case Objective::ExpansionMax: return "expansion constant";
    case Objective::CheegerMax: return "Cheeger constant";
  }
  return "";
}

void sketch(Context& ctx, const ExtremalCertificate& cert, bool verified) {
  const bool cut = cert.objective == Objective::ExpansionMax || cert.objective == Objective::CheegerMax;
  const char* active = cert.objective == Objective::GirthMax      ? "shortest cycles"
                       : cert.objective == Objective::DiameterMin ? "diametral paths"
                                                                  : "minimizing cuts";
  ctx.out << to_string(cert.objective) << ": " << (cert.verdict == Verdict::LocalExtremum ? "LOCAL_EXTREMUM" : "NOT_EXTREMUM")
          << (cert.experimental ? " (experimental: not at omega)" : "") << '\n';
  ctx.out << "  " << objective_noun(cert.objective) << " = " << to_string(cert.value_before) << ", " << cert.active_count
          << ' ' << active << '\n';
  if (cert.verdict == Verdict::LocalExtremum) {
    if (cut) {
      ctx.out << "  convex combination of cut vectors c = (" << join(cert.cone) << ")\n";
      ctx.out << "  equals a cut-space vector N d with d = (" << join(cert.potential) << ")\n";
      ctx.out << "  so no degree-preserving perturbation raises every minimizing cut\n";
    } else {
      ctx.out << "  weights = sum_i c_i * (incidence column i), c = (" << join(cert.cone) << ") >= 0\n";
      ctx.out << "  so no weight-preserving perturbation can "
              << (cert.objective == Objective::GirthMax ? "lengthen every shortest cycle" : "shorten every diametral path")
              << '\n';
    }
  } else {
    ctx.out << "  direction y = (" << join(cert.direction) << ")\n";
    ctx.out << "  at epsilon = " << to_string(cert.epsilon) << " the " << objective_noun(cert.objective) << " becomes "
            << to_string(cert.value_after) << '\n';
  }
  ctx.out << "  exact re-check: " << (verified ? "ok" : "FAILED") << '\n';
}

int cmd_certify(const Common& c, const std::string& objective, int index, Context& ctx) {
  Format fmt = format_of(c);
  if (fmt == Format::Dot) throw UsageError("certify has no DOT output");
  WeightPoint w = load_one(c, ctx);

  if (objective == "eigen") {
    if (index < 1) throw UsageError("--index must be at least 1");
    EigenCriticalityReport r = eigen_criticality(w, index);
    if (fmt == Format::Json) {
      print_json(ctx, to_json(r));
      return kOk;
    }
    ctx.out << "mu_" << index << " = " << r.mu << " (multiplicity " << r.multiplicity << "): "
            << (r.critical ? "critical" : "not critical") << '\n';
    if (r.increasing_form) {
      const PairForm& f = r.forms[*r.increasing_form];
      ctx.out << "  moving weight between edges " << f.edge_a << " and " << f.edge_b << " raises mu\n";
    } else {
      ctx.out << "  every pair form is indefinite or zero (" << r.forms.size() << " pairs)\n";
    }
    if (r.df_const)
      ctx.out << "  |f(u) - f(v)| constant: " << (r.df_const->holds ? "yes" : "no") << ", constant "
              << r.df_const->constant << '\n';
    return kOk;
  }

  std::vector<Objective> todo;
  if (objective == "girth" || objective == "all") todo.push_back(Objective::GirthMax);
  if (objective == "diameter" || objective == "all") todo.push_back(Objective::DiameterMin);
  if (objective == "expansion" || objective == "all") todo.push_back(Objective::ExpansionMax);
  if (objective == "cheeger" || objective == "all") todo.push_back(Objective::CheegerMax);

  Json certs = Json::array();
  for (Objective o : todo) {
    ExtremalCertificate cert;
    WeightPoint at = w;
    if (o == Objective::GirthMax) {
      cert = certify_girth_max(at);
    } else if (o == Objective::DiameterMin) {
      cert = certify_diameter_min(at);
    } else {
      at = w.with_domain(WeightDomain::DegreePreserving);
      cert = certify_cut_max(at, o == Objective::ExpansionMax ? CutKind::Expansion : CutKind::Cheeger);
    }
    const bool verified = verify_certificate(at, cert);
    if (fmt == Format::Json) {
      Json j = to_json(cert);
      j["verified"] = verified;
      certs.push_back(j);
    } else {
      sketch(ctx, cert, verified);
    }
  }
  if (fmt == Format::Json) print_json(ctx, Json{{"n", w.graph().n()}, {"m", w.graph().m()}, {"certificates", certs}});
  return kOk;
}

int cmd_optimize(const Common& c, const std::string& domain, double tol, int max_iter, Context& ctx) {
  Format fmt = format_of(c);
  WeightPoint w = load_one(c, ctx);
  AscentOptions opts;
  opts.tol = tol;
  opts.max_iter = max_iter;
  AscentResult r =
      tree_weight_ascent(w.graph(), domain == "dp" ? WeightDomain::DegreePreserving : WeightDomain::Full, {}, opts);
  if (fmt == Format::Json) {
    print_json(ctx, to_json(r));
  } else if (fmt == Format::Dot) {
    ctx.out << to_dot(r.final_point, "optimum");
  } else {
    ctx.out << "# tau " << to_string(r.tau) << '\n'
            << "# log tau " << (r.log_tau.empty() ? 0.0 : r.log_tau.back()) << '\n'
            << "# resistance spread " << r.resistance_spread << '\n'
            << "# iterations " << r.iterations << (r.converged ? "" : " (not converged)") << '\n'
            << emit_graph(r.final_point);
  }
  return kOk;
}

int cmd_greedy(const Common& c, int target, const std::string& trace_path, Context& ctx) {
  Format fmt = format_of(c);
  Common start = c;
  if (start.inputs.empty() && start.families.empty()) start.families.push_back("complete:4");
  WeightPoint w = load_one(start, ctx);
  if (!w.is_unweighted()) throw DomainError("greedy search takes an unweighted graph");

  std::ofstream trace;
  if (!trace_path.empty()) {
    trace.open(trace_path);
    if (!trace) throw DomainError("cannot write '" + trace_path + "'");
  }
  GreedyOptions opts;
  opts.jobs = c.jobs;
  GreedyTrace result = greedy_sequence(w.graph(), target, opts);
  if (trace.is_open()) trace << trace_jsonl(result);

  const GreedyStep& last = result.steps.back();
  if (fmt == Format::Json) {
    Json steps = Json::array();
    for (const GreedyStep& s : result.steps)
      steps.push_back(Json{{"n", s.graph.n()}, {"tau", s.tau.get_str()}, {"girth", s.girth}, {"tied", s.tied}});
    print_json(ctx, Json{{"n", last.graph.n()},
                         {"girth", last.girth},
                         {"tau", last.tau.get_str()},
                         {"trajectory_tie", result.trajectory_tie()},
                         {"tie_events", result.ties.size()},
                         {"steps", steps},
                         {"graph", emit_graph(last.graph)}});
  } else if (fmt == Format::Dot) {
    ctx.out << step_dot(last, static_cast<int>(result.steps.size()) - 1);
  } else {
    ctx.out << "# n tau girth tied\n";
    for (const GreedyStep& s : result.steps)
      ctx.out << "# " << s.graph.n() << ' ' << s.tau.get_str() << ' ' << s.girth << ' ' << s.tied << '\n';
    ctx.out << emit_graph(last.graph);
  }
  if (result.trajectory_tie()) {
    for (const TieEvent& t : result.ties)
      if (t.distinct_graphs > 1)
        ctx.err << "tie at step " << t.step << ": " << t.candidates.size() << " insertions reach tau " << t.tau.get_str()
                << " with " << t.distinct_graphs << " non-isomorphic results\n";
    return kDomainError;
  }
  return kOk;
}

int cmd_switch_scan(const Common& c, Context& ctx) {
  Format fmt = format_of(c);
  WeightPoint w = load_one(c, ctx);
  SwitchScan s = edge_switch_scan(w.graph(), c.jobs);
  Graph after = s.improving ? edge_switch(w.graph(), s.best_switch->first, s.best_switch->second) : w.graph();
  if (fmt == Format::Json) {
    Json j = to_json(s);
    j["graph"] = emit_graph(after);
    print_json(ctx, j);
  } else if (fmt == Format::Dot) {
    ctx.out << to_dot(WeightPoint::unweighted(after), "switched");
  } else {
    ctx.out << "# tau " << s.tau_before.get_str() << ", " << s.valid << " valid switches\n";
    if (s.best_switch) {
      auto [a, b] = *s.best_switch;
      ctx.out << "# best: (" << a.u << ' ' << a.v << "), (" << b.u << ' ' << b.v << ") -> tau " << s.tau_after.get_str()
              << (s.improving ? "" : " (no improvement)") << '\n';
    }
    ctx.out << emit_graph(after);
  }
  return kOk;
}

int cmd_jacobian(const Common& c, const std::string& growth_path, Context& ctx) {
  Format fmt = format_of(c);
  if (fmt == Format::Dot) throw UsageError("jacobian has no DOT output");
  if (!growth_path.empty()) {
    std::istringstream lines(read_source(growth_path, ctx.in));
    std::vector<Graph> family;
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      Json j;
      try {
        j = Json::parse(line);
      } catch (const nlohmann::json::exception& e) {
        throw DomainError("trace is not JSON lines: " + std::string(e.what()));
      }
      if (!j.contains("graph")) throw DomainError("trace line without a graph");
      family.push_back(parse_graph(j["graph"].get<std::string>()).graph());
    }
    auto rows = minimal_norm_growth_scan(family, c.jobs);
    if (fmt == Format::Json) {
      Json arr = Json::array();
      for (const GrowthRow& r : rows) arr.push_back(Json{{"n", r.n}, {"nu", r.nu}, {"log_n", r.log_n}});
      print_json(ctx, arr);
    } else {
      ctx.out << growth_csv(rows);
    }
    return kOk;
  }
  WeightPoint w = load_one(c, ctx);
  if (!w.is_unweighted()) throw DomainError("the Jacobian is defined for unweighted graphs");
  JacobianReport r = jacobian(w.graph());
  if (fmt == Format::Json) {
    print_json(ctx, to_json(r));
    return kOk;
  }
  ctx.out << "group:";
  if (r.invariant_factors.empty()) ctx.out << " trivial";
  for (std::size_t i = 0; i < r.invariant_factors.size(); ++i)
    ctx.out << (i ? " x " : " ") << "Z/" << r.invariant_factors[i].get_str();
  ctx.out << "\norder: " << r.group_order.get_str() << "\ndimension: " << r.lattice_dimension << '\n';
  if (r.unnormalized_min_norm) ctx.out << "min norm: " << *r.unnormalized_min_norm << '\n';
  if (r.normalized_min_norm) ctx.out << "normalized min norm: " << *r.normalized_min_norm << '\n';
  return kOk;
}

std::string multigraph_dot(const Multigraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.n; ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.edges) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

int cmd_dual(const Common& c, const std::string& rotation_path, Context& ctx) {
  Format fmt = format_of(c);
  WeightPoint w = load_one(c, ctx);
  RotationSystem rot =
      rotation_path.empty() ? default_rotation(w.graph()) : parse_rotation(w.graph(), read_source(rotation_path, ctx.in));
  EmbeddedGraph primal = trace_faces(w.graph(), rot);
  EmbeddedGraph d = dual(primal);
  if (fmt == Format::Json) {
    print_json(ctx, Json{{"primal", to_json(primal)}, {"dual", to_json(d)}});
  } else if (fmt == Format::Dot) {
    ctx.out << multigraph_dot(d.graph, "dual");
  } else {
    ctx.out << "# genus " << primal.genus << ", " << primal.faces.size() << " faces\n"
            << "# tau " << to_string(multigraph_tree_number(primal.graph)) << " primal, "
            << to_string(multigraph_tree_number(d.graph)) << " dual\n"
            << "# dual edges:";
    for (const Edge& e : d.graph.edges) ctx.out << " (" << e.u << ' ' << e.v << ')';
    ctx.out << '\n' << emit_rotation(d.graph, d.rotation);
  }
  return kOk;
}

int cmd_constants(const Common& c, const std::vector<int>& sigma, const std::vector<std::string>& moore, bool lattice,
                  Context& ctx) {
  Format fmt = format_of(c);
  if (fmt == Format::Dot) throw UsageError("constants has no DOT output");
  if (sigma.empty() && moore.empty() && !lattice) throw UsageError("give --sigma, --moore or --lattice");
  Json j;
  for (int k : sigma) {
    SigmaValue s = mckay_sigma(k);
    Json v = to_json(s, k);
    if (fmt == Format::Json) {
      j["sigma"].push_back(v);
    } else {
      ctx.out << "sigma_" << k << " = " << scalar_text(v["value"]);
      if (!s.exact) ctx.out << " (squared " << to_string(s.squared) << ")";
      ctx.out << '\n';
    }
  }
  for (const std::string& spec : moore) {
    int k = 0, g = 0;
    char comma = 0;
    std::istringstream is(spec);
    if (!(is >> k >> comma >> g) || comma != ',' || !is.eof()) throw UsageError("--moore expects K,G");
    BigInt b = moore_bound(k, g);
    if (fmt == Format::Json) {
      j["moore"].push_back(Json{{"k", k}, {"girth", g}, {"bound", b.get_str()}});
    } else {
      ctx.out << "moore(" << k << "," << g << ") = " << b.get_str() << '\n';
    }
  }
  if (lattice) {
    LatticeEntropy e = lattice_entropy_square();
    if (fmt == Format::Json) {
      j["lattice"] = to_json(e);
    } else {
      std::ostringstream v;
      v.precision(12);
      v << "lattice entropy = " << e.value << " (integral exponent " << e.exponent << ", series exponent "
        << e.series_exponent << ")\n";
      ctx.out << v.str();
    }
  }
  if (fmt == Format::Json) print_json(ctx, j);
  return kOk;
}

int cmd_iso(const Common& c, Context& ctx) {
  Format fmt = format_of(c);
  auto graphs = load_all(c, ctx);
  if (graphs.empty() || graphs.size() > 2) throw UsageError("iso takes one or two graphs");
  std::vector<CanonicalForm> forms;
  for (const auto& w : graphs) forms.push_back(canonical_form(w.graph()));
  if (graphs.size() == 2) {
    const bool same = forms[0].bytes == forms[1].bytes;
    if (fmt == Format::Json) {
      print_json(ctx, Json{{"isomorphic", same},
                           {"certificates", {to_json(forms[0])["certificate"], to_json(forms[1])["certificate"]}}});
    } else if (fmt == Format::Dot) {
      throw UsageError("DOT output needs a single graph");
    } else {
      ctx.out << (same ? "isomorphic" : "not isomorphic") << '\n';
    }
    return kOk;
  }
  Graph canon = canonical_graph(graphs[0].graph());
  if (fmt == Format::Json) {
    Json j = to_json(forms[0]);
    j["graph"] = emit_graph(canon);
    print_json(ctx, j);
  } else if (fmt == Format::Dot) {
    ctx.out << to_dot(WeightPoint::unweighted(canon), "canonical");
  } else {
    ctx.out << "# certificate " << to_json(forms[0])["certificate"].get<std::string>() << '\n' << emit_graph(canon);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Extremal invariants of graphs", "extgraph"};
  app.require_subcommand(1);
  Common common;

  auto* inv = app.add_subcommand("inv", "Tree number, girth, diameter, cut constants and spectra");
  add_common(inv, common);

  std::string objective = "all";
  int index = 1;
  auto* certify = app.add_subcommand("certify", "Certify local extremality at the given weights");
  add_common(certify, common);
  certify->add_option("--objective", objective, "girth, diameter, expansion, cheeger, all or eigen")
      ->check(CLI::IsMember({"girth", "diameter", "expansion", "cheeger", "all", "eigen"}));
  certify->add_option("--index", index, "Laplacian eigenvalue position for --objective eigen");

  std::string domain = "full";
  double tol = AscentOptions{}.tol;
  int max_iter = AscentOptions{}.max_iter;
  auto* optimize = app.add_subcommand("optimize", "Maximize the tree number over edge weights");
  add_common(optimize, common);
  optimize->add_option("--domain", domain, "full or dp (degree-preserving)")->check(CLI::IsMember({"full", "dp"}));
  optimize->add_option("--tol", tol, "Projected-gradient tolerance")->check(CLI::PositiveNumber);
  optimize->add_option("--max-iter", max_iter, "Iteration cap")->check(CLI::PositiveNumber);

  int target = 0;
  std::string trace_path;
  auto* greedy = app.add_subcommand("greedy", "Greedy tree-number edge insertion on cubic graphs");
  add_common(greedy, common);
  greedy->add_option("--to", target, "Target vertex count")->required();
  greedy->add_option("--trace", trace_path, "Write every step as JSON lines");
  greedy->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* sscan = app.add_subcommand("switch-scan", "Best single edge switch for the tree number");
  add_common(sscan, common);
  sscan->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string growth_path;
  auto* jac = app.add_subcommand("jacobian", "Critical group and lattice norms");
  add_common(jac, common);
  jac->add_option("--growth", growth_path, "Greedy trace (JSON lines) to scan for minimal-norm growth");
  jac->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string rotation_path;
  auto* dual_cmd = app.add_subcommand("dual", "Faces, genus and dual of an embedded graph");
  add_common(dual_cmd, common);
  dual_cmd->add_option("--rotation", rotation_path, "Rotation system file (default: edge order)");

  std::vector<int> sigma;
  std::vector<std::string> moore;
  bool lattice = false;
  auto* constants = app.add_subcommand("constants", "Moore bounds, McKay's constant and the lattice entropy");
  constants->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  constants->add_flag("--json", common.json, "Same as --format json");
  constants->add_option("--sigma", sigma, "Degree k for sigma_k")->check(CLI::Range(3, 1000));
  constants->add_option("--moore", moore, "K,G for the Moore bound");
  constants->add_flag("--lattice", lattice, "Square-lattice spanning-tree entropy");

  auto* iso = app.add_subcommand("iso", "Canonical form, or isomorphism of two graphs");
  add_common(iso, common, true);

  std::vector<const char*> argv{"extgraph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (inv->parsed()) return cmd_inv(common, ctx);
    if (certify->parsed()) return cmd_certify(common, objective, index, ctx);
    if (optimize->parsed()) return cmd_optimize(common, domain, tol, max_iter, ctx);
    if (greedy->parsed()) return cmd_greedy(common, target, trace_path, ctx);
    if (sscan->parsed()) return cmd_switch_scan(common, ctx);
    if (jac->parsed()) return cmd_jacobian(common, growth_path, ctx);
    if (dual_cmd->parsed()) return cmd_dual(common, rotation_path, ctx);
    if (constants->parsed()) return cmd_constants(common, sigma, moore, lattice, ctx);
    if (iso->parsed()) return cmd_iso(common, ctx);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace extgraph::cli
