#include "extgraph/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "extgraph/errors.hpp"
#include "extgraph/exact_linalg.hpp"
#include "extgraph/lp.hpp"
#include "extgraph/metric.hpp"
#include "extgraph/spectral.hpp"

namespace extgraph {

const char* to_string(Objective o) {
  switch (o) {
    case Objective::GirthMax: return "girth_max";
    case Objective::DiameterMin: return "diameter_min";
    case Objective::ExpansionMax: return "expansion_max";
    case Objective::CheegerMax: return "cheeger_max";
  }
  return "?";
}

const char* to_string(Verdict v) { return v == Verdict::LocalExtremum ? "local_extremum" : "not_extremum"; }

namespace {

void require_interior(const WeightPoint& w) {
  if (!w.is_interior()) throw DomainError("certificate requires an interior point (all weights > 0)");
}

void normalize_inf(std::vector<Rational>& y) {
  Rational big = 0;
  for (const auto& v : y) big = std::max(big, Rational(abs(v)));
  if (big == 0) throw std::logic_error("zero improving direction");
  for (auto& v : y) v /= big;
}

Rational objective_value(const WeightPoint& w, Objective o) {
  switch (o) {
    case Objective::GirthMax: return girth(w, true).girth;
    case Objective::DiameterMin: return diameter(w, true).diameter;
    case Objective::ExpansionMax: return cut_constants(w).expansion;
    case Objective::CheegerMax: return cut_constants(w).cheeger;
  }
  return 0;
}

bool improves(Objective o, const Rational& before, const Rational& after) {
  return o == Objective::DiameterMin ? after < before : after > before;
}

WeightDomain perturbation_domain(const WeightPoint& w, Objective o) {
  if (o == Objective::ExpansionMax || o == Objective::CheegerMax) return WeightDomain::DegreePreserving;
  return w.domain() == WeightDomain::Unconstrained ? WeightDomain::Unconstrained : WeightDomain::Full;
}

std::optional<WeightPoint> step(const WeightPoint& w, const std::vector<Rational>& y, const Rational& eps,
                                WeightDomain domain) {
  std::vector<Rational> x = w.weights();
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] += eps * y[j];
    if (x[j] <= 0) return std::nullopt;
  }
  return WeightPoint(w.graph(), std::move(x), domain);
}

// Starts at eps = 1/1024 and halves until the objective strictly improves.
void find_improving_step(const WeightPoint& w, ExtremalCertificate& cert) {
  const WeightDomain domain = perturbation_domain(w, cert.objective);
  Rational eps(1, 1024);
  for (int attempt = 0; attempt < 64; ++attempt, eps /= 2) {
    auto p = step(w, cert.direction, eps, domain);
    if (!p) continue;
    Rational after = objective_value(*p, cert.objective);
    if (improves(cert.objective, cert.value_before, after)) {
      cert.epsilon = eps;
      cert.value_after = after;
      return;
    }
  }
  throw std::logic_error("Farkas direction did not improve the objective");
}

Rational cut_coefficient(const Cut& c, bool expansion) {
  if (expansion) return Rational(1 / (c.volume_a * c.volume_b));
  return Rational(1 / std::min(c.volume_a, c.volume_b));
}

DenseMatrix<Rational> incidence_matrix(const std::vector<std::vector<int>>& sets, int m) {
  DenseMatrix<Rational> a(m, sets.size(), Rational(0));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (int j : sets[i]) a(j, i) = 1;
  return a;
}

// Cone test omega in cone(columns); sign = +1 for maximizing, -1 for minimizing.
ExtremalCertificate certify_cone(const WeightPoint& w, Objective o, const std::vector<std::vector<int>>& sets,
                                 const Rational& value, int sign) {
  const int m = w.graph().m();
  ExtremalCertificate cert;
  cert.objective = o;
  cert.value_before = value;
  cert.active_count = static_cast<int>(sets.size());
  cert.experimental = !w.is_unweighted();
  auto lp = solve_feasibility(incidence_matrix(sets, m), std::vector<Rational>(m, Rational(1)));
  if (lp.feasible) {
    cert.verdict = Verdict::LocalExtremum;
    cert.cone = std::move(lp.x);
    return cert;
  }
  // z^T S >= 0 and omega^T z < 0; shifting by a multiple of omega makes every
  // column strictly positive and the direction tangent to sum(x) = m.
  const Rational zsum = sum(lp.farkas);
  cert.verdict = Verdict::NotExtremum;
  cert.direction.resize(m);
  for (int j = 0; j < m; ++j) cert.direction[j] = sign * (lp.farkas[j] - zsum / m);
  normalize_inf(cert.direction);
  find_improving_step(w, cert);
  return cert;
}

}  // namespace

ExtremalCertificate certify_girth_max(const WeightPoint& w) {
  require_interior(w);
  CycleSet cs = girth(w, true);
  return certify_cone(w, Objective::GirthMax, cs.systoles, cs.girth, +1);
}

ExtremalCertificate certify_diameter_min(const WeightPoint& w) {
  require_interior(w);
  MeridianSet ms = diameter(w, true);
  return certify_cone(w, Objective::DiameterMin, ms.meridians, ms.diameter, -1);
}

ExtremalCertificate certify_cut_max(const WeightPoint& w, CutKind which) {
  if (w.domain() != WeightDomain::DegreePreserving)
    throw DomainError("cut certificates require a degree-preserving weight point");
  require_interior(w);
  const Graph& g = w.graph();
  const int m = g.m(), n = g.n();
  CutReport cr = cut_constants(w);
  const auto& cuts = which == CutKind::Expansion ? cr.expansion_cuts : cr.cheeger_cuts;
  const int r = static_cast<int>(cuts.size());

  // columns: c (r), d+ (n), d- (n); rows: E c - N d+ + N d- = 0, sum c = 1
  DenseMatrix<Rational> a(m + 1, r + 2 * n, Rational(0));
  for (int k = 0; k < r; ++k) {
    const Cut& c = cuts[k];
    Rational coef = cut_coefficient(c, which == CutKind::Expansion);
    for (int j : c.cut_edges) a(j, k) = coef;
    a(m, k) = 1;
  }
  for (int j = 0; j < m; ++j) {
    for (int v : {g.edge(j).u, g.edge(j).v}) {
      a(j, r + v) = -1;
      a(j, r + n + v) = 1;
    }
  }
  std::vector<Rational> b(m + 1, Rational(0));
  b[m] = 1;

  ExtremalCertificate cert;
  cert.objective = which == CutKind::Expansion ? Objective::ExpansionMax : Objective::CheegerMax;
  cert.value_before = which == CutKind::Expansion ? cr.expansion : cr.cheeger;
  cert.active_count = r;
  cert.experimental = !w.is_unweighted();
  auto lp = solve_feasibility(a, b);
  if (lp.feasible) {
    cert.verdict = Verdict::LocalExtremum;
    cert.cone.assign(lp.x.begin(), lp.x.begin() + r);
    cert.potential.resize(n);
    for (int v = 0; v < n; ++v) cert.potential[v] = lp.x[r + v] - lp.x[r + n + v];
    return cert;
  }
  // The d columns force N^T y = 0; the c columns give y^T E_k >= -z_m > 0.
  cert.verdict = Verdict::NotExtremum;
  cert.direction.assign(lp.farkas.begin(), lp.farkas.begin() + m);
  normalize_inf(cert.direction);
  find_improving_step(w, cert);
  return cert;
}

bool verify_certificate(const WeightPoint& w, const ExtremalCertificate& cert) {
  const Graph& g = w.graph();
  const int m = g.m();
  if (cert.verdict == Verdict::NotExtremum) {
    if (static_cast<int>(cert.direction.size()) != m || sum(cert.direction) != 0) return false;
    if (cert.objective == Objective::ExpansionMax || cert.objective == Objective::CheegerMax) {
      std::vector<Rational> at(g.n(), Rational(0));
      for (int j = 0; j < m; ++j) {
        at[g.edge(j).u] += cert.direction[j];
        at[g.edge(j).v] += cert.direction[j];
      }
      for (const auto& v : at)
        if (v != 0) return false;
    }
    auto p = step(w, cert.direction, cert.epsilon, perturbation_domain(w, cert.objective));
    if (!p) return false;
    Rational before = objective_value(w, cert.objective);
    return before == cert.value_before && improves(cert.objective, before, objective_value(*p, cert.objective));
  }
  for (const auto& c : cert.cone)
    if (c < 0) return false;
  std::vector<Rational> lhs(m, Rational(0));
  if (cert.objective == Objective::GirthMax || cert.objective == Objective::DiameterMin) {
    auto sets = cert.objective == Objective::GirthMax ? girth(w, true).systoles : diameter(w, true).meridians;
    if (sets.size() != cert.cone.size()) return false;
    for (std::size_t k = 0; k < sets.size(); ++k)
      for (int j : sets[k]) lhs[j] += cert.cone[k];
    for (const auto& v : lhs)
      if (v != 1) return false;
    return true;
  }
  CutReport cr = cut_constants(w);
  const bool exp = cert.objective == Objective::ExpansionMax;
  const auto& cuts = exp ? cr.expansion_cuts : cr.cheeger_cuts;
  if (cuts.size() != cert.cone.size() || static_cast<int>(cert.potential.size()) != g.n()) return false;
  if (sum(cert.cone) != 1) return false;
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const Cut& c = cuts[k];
    Rational coef = cut_coefficient(c, exp);
    for (int j : c.cut_edges) lhs[j] += coef * cert.cone[k];
  }
  for (int j = 0; j < m; ++j)
    if (lhs[j] != cert.potential[g.edge(j).u] + cert.potential[g.edge(j).v]) return false;
  return true;
}

// --- ascent ---------------------------------------------------------------

namespace {

Eigen::MatrixXd tangent_projector(const Graph& g, WeightDomain domain) {
  const int m = g.m();
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(m, m);
  if (domain == WeightDomain::Full) return p - Eigen::MatrixXd::Constant(m, m, 1.0 / m);
  Eigen::MatrixXd nmat = Eigen::MatrixXd::Zero(m, g.n());
  for (int j = 0; j < m; ++j) {
    nmat(j, g.edge(j).u) = 1;
    nmat(j, g.edge(j).v) = 1;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(nmat, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  for (int i = 0; i < s.size(); ++i)
    if (s[i] > 1e-10 * s[0]) p -= svd.matrixU().col(i) * svd.matrixU().col(i).transpose();
  return p;
}

double spread(const std::vector<double>& r) {
  auto [lo, hi] = std::minmax_element(r.begin(), r.end());
  return *hi - *lo;
}

// Rounds to dyadic rationals and restores the domain constraint exactly.
std::vector<Rational> round_into_domain(const Graph& g, const std::vector<double>& x, WeightDomain domain, int bits) {
  const int m = g.m();
  std::vector<Rational> xr(m);
  for (int j = 0; j < m; ++j) xr[j] = dyadic_round(x[j], bits);
  if (domain == WeightDomain::Full) {
    int big = static_cast<int>(std::max_element(x.begin(), x.end()) - x.begin());
    xr[big] += Rational(m) - sum(xr);
    return xr;
  }
  DenseMatrix<Rational> nt(g.n(), m, Rational(0));
  std::vector<Rational> resid(g.n());
  for (int v = 0; v < g.n(); ++v) resid[v] = g.degree(v);
  for (int j = 0; j < m; ++j) {
    nt(g.edge(j).u, j) = 1;
    nt(g.edge(j).v, j) = 1;
    resid[g.edge(j).u] -= xr[j];
    resid[g.edge(j).v] -= xr[j];
  }
  auto delta = solve_any(nt, resid);
  if (!delta) throw std::logic_error("degree constraints are inconsistent");
  for (int j = 0; j < m; ++j) xr[j] += (*delta)[j];
  return xr;
}

}  // namespace

AscentResult tree_weight_ascent(const Graph& g, WeightDomain domain, const std::optional<WeightPoint>& start,
                                const AscentOptions& opts) {
  if (domain == WeightDomain::Unconstrained) throw DomainError("ascent needs a bounded domain (full or degree-preserving)");
  if (!is_connected(g)) throw DomainError("ascent requires a connected graph");
  if (g.m() == 0) throw DomainError("ascent requires at least one edge");
  WeightPoint x0 = start ? WeightPoint(g, start->weights(), domain) : WeightPoint::unweighted(g, domain);
  if (start && !(start->graph() == g)) throw DomainError("start point belongs to a different graph");
  if (!x0.is_interior()) throw DomainError("ascent start lies on the boundary");

  const int m = g.m(), n = g.n();
  const Eigen::MatrixXd proj = tangent_projector(g, domain);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> pe(proj);
  std::vector<int> keep;
  for (int i = 0; i < m; ++i)
    if (pe.eigenvalues()[i] > 0.5) keep.push_back(i);
  Eigen::MatrixXd basis(m, keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) basis.col(i) = pe.eigenvectors().col(keep[i]);
  Eigen::MatrixXd inc = Eigen::MatrixXd::Zero(m, n);
  for (int j = 0; j < m; ++j) {
    inc(j, g.edge(j).u) = 1;
    inc(j, g.edge(j).v) = -1;
  }

  std::vector<double> x = x0.weights_as_double();
  double f = log_tree_number(g, x);
  // M_ij = b_i^T L^+ b_j: the gradient of log tau is diag(M) and the Hessian is -(M o M)
  auto transfer = [&](const std::vector<double>& at) {
    Eigen::MatrixXd l = laplacian_double(g, at) + Eigen::MatrixXd::Constant(n, n, 1.0 / n);
    Eigen::MatrixXd lp = l.inverse() - Eigen::MatrixXd::Constant(n, n, 1.0 / n);
    return Eigen::MatrixXd(inc * lp * inc.transpose());
  };

  AscentResult res;
  res.log_tau.push_back(f);
  double t = 1.0;
  for (; res.iterations < opts.max_iter; ++res.iterations) {
    Eigen::MatrixXd mm = transfer(x);
    Eigen::VectorXd r = mm.diagonal();
    Eigen::VectorXd pg = proj * r;
    res.gradient_norm = pg.norm();
    const double measure = domain == WeightDomain::Full ? r.maxCoeff() - r.minCoeff() : res.gradient_norm;
    if (measure <= opts.tol) {
      res.converged = true;
      break;
    }
    Eigen::VectorXd d = pg;
    if (opts.newton && basis.cols() > 0) {
      Eigen::MatrixXd h = basis.transpose() * mm.cwiseProduct(mm) * basis;
      Eigen::VectorXd nd = basis * h.ldlt().solve(basis.transpose() * r);
      if (nd.allFinite() && nd.dot(r) > 0) d = nd;
      t = 1.0;
    } else {
      t = std::min(t * 2, 1e6);
    }
    const double slope = d.dot(r);
    bool accepted = false;
    std::vector<double> xn(m);
    while (t > 1e-30) {
      bool positive = true;
      for (int j = 0; j < m; ++j) {
        xn[j] = x[j] + t * d[j];
        positive = positive && xn[j] > 0;
      }
      if (positive) {
        double fn = log_tree_number(g, xn);
        bool ok = fn >= f + 1e-4 * t * slope;
        if (!ok) {
          // log tau is concave, so a nonnegative slope at the trial point
          // guarantees no decrease; this still works once gains fall below
          // double resolution
          ok = d.dot(transfer(xn).diagonal()) >= 0 && fn >= f - 1e-14 * std::abs(f);
        }
        if (ok) {
          x = xn;
          f = fn;
          accepted = true;
          break;
        }
      }
      t /= 2;
    }
    if (!accepted) break;
    res.log_tau.push_back(f);
  }

  std::vector<Rational> xr = round_into_domain(g, x, domain, opts.rounding_bits);
  res.final_point = WeightPoint(g, std::move(xr), domain);
  if (!res.final_point.is_interior()) throw std::logic_error("rounded ascent point left the interior");
  res.tau = tree_number_exact(res.final_point);
  res.resistance_spread = spread(resistances_pseudoinverse(res.final_point));
  return res;
}

double log_tau_second_difference(const Graph& g, const std::vector<Rational>& x0, const std::vector<Rational>& x1) {
  std::vector<Rational> mid(x0.size());
  for (std::size_t j = 0; j < x0.size(); ++j) mid[j] = (x0[j] + x1[j]) / 2;
  auto tau = [&](const std::vector<Rational>& x) {
    return tree_number_exact(WeightPoint(g, x, WeightDomain::Unconstrained));
  };
  Rational t0 = tau(x0), t1 = tau(x1), tm = tau(mid);
  if (t0 == 0 || t1 == 0 || tm == 0) throw DomainError("tree number vanishes on the segment");
  return log_of(t0 * t1 / (tm * tm));
}

// --- eigenvalue criticality ----------------------------------------------------

namespace {

// Edges e, f are linked when disjoint. When that relation leaves the edge set
// disconnected, disjoint pairs alone cannot force |df| to be constant.
bool needs_adjacent_pairs(const Graph& g) {
  const int m = g.m();
  if (m <= 1) return false;
  std::vector<int> seen(m, 0), stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    const Edge& a = g.edge(e);
    for (int f = 0; f < m; ++f) {
      if (seen[f]) continue;
      const Edge& b = g.edge(f);
      if (a.touches(b.u) || a.touches(b.v)) continue;
      seen[f] = 1;
      ++count;
      stack.push_back(f);
    }
  }
  return count < m;
}

EigenCriticalityReport criticality_for_cluster(const WeightPoint& w, const SpectrumReport& s,
                                               const std::vector<int>& cluster, double tol) {
  const Graph& g = w.graph();
  const int p = static_cast<int>(cluster.size());
  EigenCriticalityReport rep;
  rep.first_index = cluster.front();
  rep.multiplicity = p;
  double mu = 0;
  for (int i : cluster) mu += s.laplacian[i];
  rep.mu = mu / p;

  Eigen::MatrixXd diff(g.m(), p);
  for (int j = 0; j < g.m(); ++j)
    for (int a = 0; a < p; ++a)
      diff(j, a) = s.laplacian_vectors(g.edge(j).u, cluster[a]) - s.laplacian_vectors(g.edge(j).v, cluster[a]);

  rep.adjacent_pairs_included = needs_adjacent_pairs(g);
  for (int i = 0; i < g.m(); ++i) {
    for (int j = i + 1; j < g.m(); ++j) {
      const Edge& a = g.edge(i);
      const Edge& b = g.edge(j);
      const bool adjacent = a.touches(b.u) || a.touches(b.v);
      if (adjacent && !rep.adjacent_pairs_included) continue;
      Eigen::VectorXd z = diff.row(i).transpose(), y = diff.row(j).transpose();
      Eigen::MatrixXd f = z * z.transpose() - y * y.transpose();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(f, Eigen::EigenvaluesOnly);
      PairForm form;
      form.edge_a = i;
      form.edge_b = j;
      form.adjacent = adjacent;
      form.f.assign(p, std::vector<double>(p));
      for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c) form.f[r][c] = f(r, c);
      const auto& ev = es.eigenvalues();
      double norm = 0, sum1 = 0, sum2 = 0;
      for (int k = 0; k < p; ++k) {
        form.eigenvalues.push_back(ev[k]);
        form.singular_values.push_back(std::abs(ev[k]));
        norm = std::max(norm, std::abs(ev[k]));
        sum1 += ev[k];
        sum2 += ev[k] * ev[k];
      }
      std::sort(form.singular_values.rbegin(), form.singular_values.rend());
      const double zero = std::max(1e-9 * norm, tol);
      for (int k = 0; k < p; ++k) {
        if (ev[k] > zero) ++form.positive;
        else if (ev[k] < -zero) ++form.negative;
        else ++form.zero;
      }
      form.c_pm2 = (sum1 * sum1 - sum2) / 2;
      for (int a2 = 0; a2 < p; ++a2)
        for (int b2 = a2 + 1; b2 < p; ++b2) {
          double t = z[a2] * y[b2] - z[b2] * y[a2];
          form.c_pm2_formula -= t * t;
        }
      rep.forms.push_back(std::move(form));
    }
  }
  rep.critical = true;
  for (std::size_t k = 0; k < rep.forms.size(); ++k)
    if (rep.forms[k].definite_nonzero()) {
      rep.critical = false;
      rep.increasing_form = static_cast<int>(k);
      break;
    }
  if (p == 1 || g.n() <= 24) {
    rep.df_const = df_const_search(w, rep.mu, tol);
    if (p == 1) rep.verdicts_agree = rep.df_const->holds == rep.critical;
  }
  return rep;
}

const std::vector<int>& checked_cluster(const SpectrumReport& s, int index) {
  for (const auto& c : s.clusters) {
    if (std::find(c.begin(), c.end(), index) == c.end()) continue;
    if (c.front() == 0) throw DomainError("eigenvalue 0 has no criticality question");
    const double lo = s.laplacian[c.front()], hi = s.laplacian[c.back()];
    const double gap_below = c.front() > 0 ? lo - s.laplacian[c.front() - 1] : 1e300;
    const double gap_above =
        c.back() + 1 < static_cast<int>(s.laplacian.size()) ? s.laplacian[c.back() + 1] - hi : 1e300;
    if (std::min(gap_below, gap_above) < 100 * s.cluster_tol)
      throw DomainError("eigenvalue cluster is ambiguous at the clustering tolerance");
    return c;
  }
  throw DomainError("eigenvalue index out of range");
}

}  // namespace

EigenCriticalityReport eigen_criticality(const WeightPoint& w, int index, double tol) {
  if (index < 1 || index >= w.graph().n()) throw DomainError("eigenvalue index must be in 1..n-1");
  SpectrumReport s = spectrum(w);
  return criticality_for_cluster(w, s, checked_cluster(s, index), tol);
}

EigenCriticalityReport eigen_criticality_value(const WeightPoint& w, double mu, double tol) {
  SpectrumReport s = spectrum(w);
  for (const auto& c : s.clusters)
    if (std::abs(s.laplacian[c.front()] - mu) <= std::max(s.cluster_tol, tol * std::max(1.0, std::abs(mu))))
      return criticality_for_cluster(w, s, checked_cluster(s, c.front()), tol);
  throw DomainError("no Laplacian eigenvalue near " + std::to_string(mu));
}

DfConstCheck df_const_search(const WeightPoint& w, double mu, double tol) {
  const Graph& g = w.graph();
  SpectrumReport s = spectrum(w);
  std::vector<int> cluster;
  for (const auto& c : s.clusters)
    if (std::abs(s.laplacian[c.front()] - mu) <= std::max(s.cluster_tol, tol * std::max(1.0, std::abs(mu))))
      cluster = c;
  if (cluster.empty()) throw DomainError("no Laplacian eigenvalue near " + std::to_string(mu));

  DfConstCheck out;
  auto measure = [&](const Eigen::VectorXd& f) {
    double lo = 1e300, hi = 0;
    for (const Edge& e : g.edges()) {
      double d = std::abs(f[e.u] - f[e.v]);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    out.vector.assign(f.data(), f.data() + f.size());
    out.deviation = g.m() ? hi - lo : 0.0;
    out.constant = g.m() ? hi : 0.0;
    out.holds = g.m() > 0 && out.deviation <= tol && out.constant > tol;
  };
  if (cluster.size() == 1) {
    measure(s.laplacian_vectors.col(cluster[0]));
    return out;
  }

  out.searched = true;
  if (!bipartition(g)) {
    // an odd cycle cannot carry +-c steps summing to zero
    measure(s.laplacian_vectors.col(cluster[0]));
    out.holds = false;
    return out;
  }
  if (g.n() > 24) throw DomainError("df_const search for multiple eigenvalues is limited to 24 vertices");

  // Walk a BFS order; each vertex sits one step above or below its parent.
  const int n = g.n();
  std::vector<int> order, parent(n, -1), pos(n, -1);
  std::vector<char> seen(n, 0);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    order.push_back(root);
    for (std::size_t h = order.size() - 1; h < order.size(); ++h)
      for (int v : g.neighbors(order[h]))
        if (!seen[v]) {
          seen[v] = 1;
          parent[v] = order[h];
          order.push_back(v);
        }
  }
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<long> val(n, 0);
  Eigen::MatrixXd lap = laplacian_double(w);
  bool found = false;
  std::function<void(int)> rec = [&](int i) {
    if (found) return;
    if (i == n) {
      Eigen::VectorXd f(n);
      double mean = 0;
      for (int v = 0; v < n; ++v) mean += val[v];
      mean /= n;
      for (int v = 0; v < n; ++v) f[v] = val[v] - mean;
      if (f.norm() == 0) return;
      f /= f.norm();
      if ((lap * f - mu * f).norm() <= 1e-8 * std::max(1.0, mu)) {
        found = true;
        measure(f);
      }
      return;
    }
    const int v = order[i];
    const int choices = parent[v] < 0 ? 1 : 2;
    for (int c = 0; c < choices; ++c) {
      val[v] = parent[v] < 0 ? 0 : val[parent[v]] + (c == 0 ? 1 : -1);
      bool ok = true;
      for (int u : g.neighbors(v))
        if (pos[u] < i && std::labs(val[u] - val[v]) != 1) ok = false;
      if (ok) rec(i + 1);
    }
  };
  rec(0);
  if (!found) {
    measure(s.laplacian_vectors.col(cluster[0]));
    out.holds = false;
  }
  return out;
}

ExactDfConst df_const_exact(const Graph& g, const std::vector<Rational>& f) {
  ExactDfConst out;
  if (g.m() == 0) return out;
  out.constant = abs(f[g.edge(0).u] - f[g.edge(0).v]);
  out.holds = out.constant != 0;
  for (const Edge& e : g.edges())
    if (abs(f[e.u] - f[e.v]) != out.constant) out.holds = false;
  return out;
}

bool CharacterReport::passed() const {
  return bipartite && mu_even && r1_divides_k && level_degrees && n_divisible && binomial_levels && n0_at_least_r1;
}

CharacterReport character_check(const Graph& g, const std::vector<Rational>& f, const Rational& mu) {
  auto kk = g.regular_degree();
  if (!kk || !is_connected(g)) throw DomainError("character_check needs a connected regular graph");
  const int k = *kk, n = g.n();
  if (static_cast<int>(f.size()) != n) throw DomainError("vector length does not match the vertex count");
  auto lap = laplacian(WeightPoint::unweighted(g, WeightDomain::Unconstrained));
  for (int u = 0; u < n; ++u) {
    Rational s = 0;
    for (int v = 0; v < n; ++v) s += lap(u, v) * f[v];
    if (s != mu * f[u]) throw DomainError("f is not an eigenvector for mu");
  }
  auto dc = df_const_exact(g, f);
  if (!dc.holds) throw DomainError("|f(u) - f(v)| is not constant over the edges");

  CharacterReport rep;
  rep.constant = dc.constant;
  rep.bipartite = bipartition(g).has_value();
  Rational half = mu / 2;
  rep.mu_even = half.get_den() == 1 && half >= 1;
  if (rep.mu_even) rep.r1 = static_cast<int>(half.get_num().get_si());
  rep.r1_divides_k = rep.r1 > 0 && k % rep.r1 == 0;

  // rescale to unit steps; level = distance below the maximum
  std::vector<Rational> h(n);
  Rational top = f[0] / dc.constant;
  for (int u = 0; u < n; ++u) {
    h[u] = f[u] / dc.constant;
    top = std::max(top, h[u]);
  }
  std::vector<int> level(n);
  for (int u = 0; u < n; ++u) {
    Rational l = top - h[u];
    if (l.get_den() != 1) throw std::logic_error("levels must be integral on a connected graph");
    level[u] = static_cast<int>(l.get_num().get_si());
  }
  const int depth = *std::max_element(level.begin(), level.end());
  rep.level_sizes.assign(depth + 1, 0);
  for (int u = 0; u < n; ++u) ++rep.level_sizes[level[u]];
  rep.level_degrees = rep.r1 > 0;
  for (int u = 0; u < n && rep.level_degrees; ++u) {
    int below = 0;
    for (int v : g.neighbors(u))
      if (level[v] == level[u] - 1) ++below;
    if (below != rep.r1 * level[u]) rep.level_degrees = false;
  }
  rep.n0 = rep.level_sizes[0];
  if (rep.r1_divides_k) {
    const int e = k / rep.r1;
    rep.n_divisible = e < 62 && n % (1L << e) == 0;
  }
  if (rep.r1 == 1) {
    rep.binomial_levels = depth == k && n == (1L << k) * rep.n0;
    long binom = 1;
    for (int j = 0; j <= depth && rep.binomial_levels; ++j) {
      if (rep.level_sizes[j] != rep.n0 * binom) rep.binomial_levels = false;
      binom = binom * (k - j) / (j + 1);
    }
  } else {
    rep.binomial_levels = true;  // only stated for r_1 = 1
  }
  rep.n0_at_least_r1 = rep.n0 >= rep.r1;
  return rep;
}

CubeFamily cube_family(int k, int n0, const std::vector<CubeSwitch>& switches) {
  if (k < 1 || k > 16) throw DomainError("cube_family: k must be in 1..16");
  if (n0 < 1) throw DomainError("cube_family: n0 must be positive");
  Graph cube = make_named("hypercube", {k});
  Graph g = cube;
  for (int c = 1; c < n0; ++c) g = disjoint_union(g, cube);
  CubeFamily out;
  const int size = 1 << k;
  out.level.resize(g.n());
  out.f.resize(g.n());
  for (int v = 0; v < g.n(); ++v) {
    out.level[v] = __builtin_popcount(static_cast<unsigned>(v % size));
    out.f[v] = k - 2L * out.level[v];
  }
  out.components_before = component_count(g);
  for (const auto& s : switches) {
    for (int v : {s.a.u, s.a.v, s.b.u, s.b.v})
      if (v < 0 || v >= g.n()) throw DomainError("cube_family: switch vertex out of range");
    const auto& lv = out.level;
    if (lv[s.a.u] != lv[s.b.u] || lv[s.a.v] != lv[s.b.v] || std::abs(lv[s.a.u] - lv[s.a.v]) != 1)
      throw DomainError("cube_family: switch is not level-respecting");
    g = edge_switch(g, s.a, s.b);
  }
  out.components_after = component_count(g);
  out.eigen_exact = true;
  for (int u = 0; u < g.n(); ++u) {
    long lf = static_cast<long>(g.degree(u)) * out.f[u];
    for (int v : g.neighbors(u)) lf -= out.f[v];
    if (lf != 2 * out.f[u]) out.eigen_exact = false;
  }
  out.graph = std::move(g);
  return out;
}

}  // namespace extgraph
