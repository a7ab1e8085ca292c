#pragma once

#include <optional>
#include <vector>

#include "extgraph/graph.hpp"
#include "extgraph/rational.hpp"

namespace extgraph {

enum class Objective { GirthMax, DiameterMin, ExpansionMax, CheegerMax };
enum class Verdict { LocalExtremum, NotExtremum };
enum class CutKind { Expansion, Cheeger };

const char* to_string(Objective o);
const char* to_string(Verdict v);

// LocalExtremum: `cone` holds c >= 0 with (matrix) c = omega; for cuts, c sums
// to 1 and `potential` holds d with E c = N d.
// NotExtremum: `direction` is y with sum(y) = 0 (and N^T y = 0 for cuts),
// max |y_j| = 1, and the objective at w + epsilon*y strictly improves on
// `value_before`.
struct ExtremalCertificate {
  Objective objective = Objective::GirthMax;
  Verdict verdict = Verdict::LocalExtremum;
  std::vector<Rational> cone;
  std::vector<Rational> potential;
  std::vector<Rational> direction;
  Rational epsilon = 0;
  Rational value_before = 0;
  Rational value_after = 0;
  int active_count = 0;       // systoles / meridians / minimizing cuts
  bool experimental = false;  // certified at a point other than omega
};

// Throws DomainError unless w is interior (all weights > 0).
ExtremalCertificate certify_girth_max(const WeightPoint& w);
ExtremalCertificate certify_diameter_min(const WeightPoint& w);
// Requires a DegreePreserving interior point with n <= 24.
ExtremalCertificate certify_cut_max(const WeightPoint& w, CutKind which);

// Independently re-checks a certificate against w with exact arithmetic.
bool verify_certificate(const WeightPoint& w, const ExtremalCertificate& cert);

// --- tree-number maximization ---------------------------------------------

struct AscentOptions {
  double tol = 1e-10;  // stop when the projected gradient's 2-norm drops below tol
  int max_iter = 20000;
  int rounding_bits = 48;
  bool newton = true;  // precondition the projected gradient with the Hessian of log tau
};

struct AscentResult {
  WeightPoint final_point;
  Rational tau = 0;                 // exact, at final_point
  std::vector<double> log_tau;      // trajectory, one entry per accepted iterate
  double resistance_spread = 0.0;   // max r_j - min r_j at the final point
  double gradient_norm = 0.0;       // projected, at the last double iterate
  bool converged = false;
  int iterations = 0;
};

// Projected ascent of log tau (gradient = effective resistances) over
// P (Full) or the degree-preserving polytope. The start must be interior;
// without one, the ascent starts at omega.
AscentResult tree_weight_ascent(const Graph& g, WeightDomain domain, const std::optional<WeightPoint>& start = {},
                                const AscentOptions& opts = {});

// log( tau(x0) tau(x1) / tau((x0+x1)/2)^2 ); <= 0 along segments if log tau is concave.
double log_tau_second_difference(const Graph& g, const std::vector<Rational>& x0, const std::vector<Rational>& x1);

// --- eigenvalue criticality ----------------------------------------------------

// First-order form of the perturbation x = omega + t (e_i - e_j) restricted to
// the eigenspace: F_ab = z_a z_b - w_a w_b, z and w the edge differences of the
// basis vectors across e_i and e_j.
struct PairForm {
  int edge_a = 0;
  int edge_b = 0;
  bool adjacent = false;
  std::vector<std::vector<double>> f;
  std::vector<double> eigenvalues;  // ascending
  std::vector<double> singular_values;  // descending
  int positive = 0, negative = 0, zero = 0;
  double c_pm2 = 0.0;          // second elementary symmetric function of F's eigenvalues
  double c_pm2_formula = 0.0;  // -sum_{a<b} (z_a w_b - z_b w_a)^2
  bool definite_nonzero() const { return (positive > 0) != (negative > 0); }
};

struct DfConstCheck {
  bool holds = false;
  double constant = 0.0;   // common |f(u) - f(v)| of the unit eigenvector found
  double deviation = 0.0;  // max spread of |f(u) - f(v)| for the tested vector
  std::vector<double> vector;
  bool searched = false;   // true when the multiple-eigenvalue search ran
};

struct EigenCriticalityReport {
  double mu = 0.0;
  int first_index = 0;  // position of the cluster in the ascending Laplacian spectrum
  int multiplicity = 0;
  std::vector<PairForm> forms;
  bool adjacent_pairs_included = false;
  bool critical = false;
  std::optional<int> increasing_form;  // index into forms
  std::optional<DfConstCheck> df_const;
  bool verdicts_agree = true;
};

// `index` selects mu by its position in the ascending Laplacian spectrum (>= 1).
EigenCriticalityReport eigen_criticality(const WeightPoint& w, int index, double tol = 1e-9);
EigenCriticalityReport eigen_criticality_value(const WeightPoint& w, double mu, double tol = 1e-9);

// Searches the eigenspace of mu for a vector with |f(u) - f(v)| constant over
// edges (n <= 24 for multiple eigenvalues).
DfConstCheck df_const_search(const WeightPoint& w, double mu, double tol = 1e-9);

struct ExactDfConst {
  bool holds = false;
  Rational constant = 0;
};
ExactDfConst df_const_exact(const Graph& g, const std::vector<Rational>& f);

struct CharacterReport {
  Rational constant = 0;  // common |f(u) - f(v)| before rescaling
  bool bipartite = false;
  bool mu_even = false;   // mu = 2 r_1, r_1 a positive integer
  int r1 = 0;
  bool r1_divides_k = false;
  bool level_degrees = false;  // each vertex in level j has r_1 j neighbours in level j-1
  std::vector<long> level_sizes;
  bool n_divisible = false;    // 2^(k/r_1) | n
  long n0 = 0;                 // size of level 0
  bool binomial_levels = false;  // n_j = n_0 C(k,j); checked when r_1 = 1
  bool n0_at_least_r1 = false;
  bool passed() const;
};

// Throws DomainError if g is not connected and regular, f is not an exact
// eigenvector for mu, or |f(u) - f(v)| is not constant.
CharacterReport character_check(const Graph& g, const std::vector<Rational>& f, const Rational& mu);

struct CubeSwitch {
  Edge a;
  Edge b;
};

struct CubeFamily {
  Graph graph;
  std::vector<long> f;  // k - 2 level(u)
  std::vector<int> level;
  int components_before = 0;
  int components_after = 0;
  bool eigen_exact = false;  // L f == 2 f in integers
};

// n0 disjoint copies of Q_k (copy c uses vertices c 2^k + bits), followed by
// level-respecting edge switches applied in order.
CubeFamily cube_family(int k, int n0, const std::vector<CubeSwitch>& switches);

}  // namespace extgraph
