#include "extgraph/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "extgraph/errors.hpp"
#include "extgraph/exact_linalg.hpp"

namespace extgraph {

bool Multigraph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    if (e.u == e.v) return false;
    if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) return false;
  }
  return true;
}

Graph Multigraph::to_graph() const {
  if (!is_simple()) throw GraphError("multigraph has loops or parallel edges");
  return Graph(n, edges);
}

Multigraph Multigraph::from_graph(const Graph& g) { return {g.n(), g.edges()}; }

Rational multigraph_tree_number(const Multigraph& g) {
  if (g.n <= 1) return 1;
  DenseMatrix<BigInt> lap(g.n - 1, g.n - 1, BigInt(0));
  for (const Edge& e : g.edges) {
    if (e.u == e.v) continue;
    if (e.u < g.n - 1) lap(e.u, e.u) += 1;
    if (e.v < g.n - 1) lap(e.v, e.v) += 1;
    if (e.u < g.n - 1 && e.v < g.n - 1) {
      lap(e.u, e.v) -= 1;
      lap(e.v, e.u) -= 1;
    }
  }
  return Rational(bareiss_determinant(lap));
}

namespace {

bool connected(const Multigraph& g) {
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int parts = g.n;
  for (const Edge& e : g.edges) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts <= 1;
}

}  // namespace

EmbeddedGraph trace_faces(const Multigraph& g, const RotationSystem& rotation) {
  validate_rotation(g.n, g.edges, rotation);
  if (g.n == 0 || !connected(g)) throw DomainError("face tracing needs a connected graph");
  if (g.m() == 0) {
    // a lone vertex on the sphere bounds one face
    EmbeddedGraph out{g, rotation, {{}}, {}, 0};
    return out;
  }
  const int darts = 2 * g.m();
  std::vector<int> next_at(darts, -1);
  for (const auto& cyc : rotation.darts)
    for (std::size_t i = 0; i < cyc.size(); ++i) next_at[cyc[i]] = cyc[(i + 1) % cyc.size()];

  EmbeddedGraph out;
  out.graph = g;
  out.rotation = rotation;
  out.face_of_dart.assign(darts, -1);
  for (int start = 0; start < darts; ++start) {
    if (out.face_of_dart[start] >= 0) continue;
    std::vector<int> face;
    for (int d = start; out.face_of_dart[d] < 0; d = next_at[reverse_dart(d)]) {
      out.face_of_dart[d] = static_cast<int>(out.faces.size());
      face.push_back(d);
    }
    out.faces.push_back(std::move(face));
  }
  const int chi = out.euler_characteristic();
  if (chi > 2 || (2 - chi) % 2 != 0) throw std::logic_error("face tracing produced an impossible Euler characteristic");
  out.genus = (2 - chi) / 2;
  return out;
}

EmbeddedGraph trace_faces(const Graph& g, const RotationSystem& rotation) {
  return trace_faces(Multigraph::from_graph(g), rotation);
}

RotationSystem default_rotation(const Multigraph& g) {
  RotationSystem rot;
  rot.darts.assign(g.n, {});
  for (int j = 0; j < g.m(); ++j) {
    rot.darts[g.edges[j].u].push_back(dart_of(j, 0));
    rot.darts[g.edges[j].v].push_back(dart_of(j, 1));
  }
  return rot;
}

RotationSystem default_rotation(const Graph& g) { return default_rotation(Multigraph::from_graph(g)); }

RotationSystem parse_rotation(const Multigraph& g, std::string_view text) {
  RotationSystem rot;
  rot.darts.assign(g.n, {});
  std::vector<char> listed(g.n, 0);
  std::vector<int> ends_used(g.m(), 0);
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) { throw ParseError(ParseErrorKind::MalformedRotation, lineno, why); };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected 'v: e1 e2 ...'");
    int v;
    try {
      std::size_t used = 0;
      v = std::stoi(line.substr(0, colon), &used);
      if (line.substr(0, colon).find_first_not_of(" \t", used) != std::string::npos) fail("bad vertex");
    } catch (const std::logic_error&) {
      fail("bad vertex");
    }
    if (v < 0 || v >= g.n) fail("vertex " + std::to_string(v) + " out of range");
    if (listed[v]) fail("vertex " + std::to_string(v) + " listed twice");
    listed[v] = 1;
    std::istringstream items(line.substr(colon + 1));
    std::string tok;
    while (items >> tok) {
      int e;
      try {
        std::size_t used = 0;
        e = std::stoi(tok, &used);
        if (used != tok.size()) fail("bad edge index '" + tok + "'");
      } catch (const std::logic_error&) {
        fail("bad edge index '" + tok + "'");
      }
      if (e < 0 || e >= g.m()) fail("edge " + std::to_string(e) + " out of range");
      const Edge& ed = g.edges[e];
      int side;
      if (ed.u == ed.v && ed.u == v) {
        side = ends_used[e]++;
        if (side > 1) fail("loop " + std::to_string(e) + " listed more than twice");
      } else if (ed.u == v) {
        side = 0;
      } else if (ed.v == v) {
        side = 1;
      } else {
        fail("edge " + std::to_string(e) + " is not incident to vertex " + std::to_string(v));
      }
      rot.darts[v].push_back(dart_of(e, side));
    }
  }
  try {
    validate_rotation(g.n, g.edges, rot);
  } catch (const DomainError& err) {
    throw ParseError(ParseErrorKind::MalformedRotation, lineno, err.what());
  }
  return rot;
}

RotationSystem parse_rotation(const Graph& g, std::string_view text) {
  return parse_rotation(Multigraph::from_graph(g), text);
}

std::string emit_rotation(const Multigraph& g, const RotationSystem& rotation) {
  validate_rotation(g.n, g.edges, rotation);
  std::ostringstream out;
  for (int v = 0; v < g.n; ++v) {
    out << v << ":";
    for (int d : rotation.darts[v]) out << ' ' << dart_edge(d);
    out << '\n';
  }
  return out.str();
}

EmbeddedGraph dual(const EmbeddedGraph& e) {
  Multigraph d;
  d.n = static_cast<int>(e.faces.size());
  for (int j = 0; j < e.graph.m(); ++j) d.edges.push_back({e.face_of_dart[dart_of(j, 0)], e.face_of_dart[dart_of(j, 1)]});
  // Dual dart 2j+s sits at the face of primal dart 2j+s.
  RotationSystem rot;
  rot.darts = e.faces;
  EmbeddedGraph out = trace_faces(d, rot);
  if (out.genus != e.genus) throw std::logic_error("dual embedding changed the genus");
  return out;
}

TreeComplementReport tree_complement_check(const EmbeddedGraph& e, const std::vector<int>& tree) {
  const Multigraph& g = e.graph;
  std::vector<char> in_tree(g.m(), 0);
  for (int j : tree) {
    if (j < 0 || j >= g.m() || in_tree[j]) throw DomainError("tree lists an invalid or repeated edge");
    in_tree[j] = 1;
  }
  Multigraph t{g.n, {}};
  for (int j : tree) t.edges.push_back(g.edges[j]);
  if (t.m() != g.n - 1 || !connected(t)) throw DomainError("edges do not form a spanning tree");

  TreeComplementReport rep;
  rep.bound = 2 * e.genus;
  const int faces = static_cast<int>(e.faces.size());
  Multigraph s{faces, {}};
  for (int j = 0; j < g.m(); ++j)
    if (!in_tree[j]) s.edges.push_back({e.face_of_dart[dart_of(j, 0)], e.face_of_dart[dart_of(j, 1)]});
  rep.complement_size = s.m();
  rep.complement_spans_dual = connected(s);
  rep.edges_removed_to_tree = rep.complement_size - (faces - 1);
  return rep;
}

// --- square-lattice constant -------------------------------------------------

namespace {

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
void gauss_legendre(int k, std::vector<double>& x, std::vector<double>& w) {
  x.resize(k);
  w.resize(k);
  for (int i = 0; i < k; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (k + 0.5)), dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = z;
      for (int j = 2; j <= k; ++j) {
        double p2 = ((2 * j - 1) * z * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = k * (z * p1 - p0) / (z * z - 1);
      double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = z;
    w[i] = 2 / ((1 - z * z) * dp * dp);
  }
}

}  // namespace

double catalan_constant() {
  // G = pi/8 log(2 + sqrt 3) + 3/8 sum_k (k!)^2 / ((2k)! (2k+1)^2)
  double s = 0, ratio = 1;  // ratio = (k!)^2 / (2k)!
  for (int k = 0; k < 60; ++k) {
    double term = ratio / ((2.0 * k + 1) * (2.0 * k + 1));
    s += term;
    if (term < 1e-18) break;
    ratio *= (k + 1.0) / (2.0 * (2.0 * k + 1));
  }
  return std::numbers::pi / 8 * std::log(2 + std::sqrt(3.0)) + 3.0 / 8 * s;
}

LatticeEntropy lattice_entropy_square() {
  std::vector<double> gx, gw;
  gauss_legendre(24, gx, gw);
  auto square = [&](double x0, double y0, double h) {
    double s = 0;
    for (int i = 0; i < 24; ++i)
      for (int j = 0; j < 24; ++j) {
        double x = x0 + h * (gx[i] + 1) / 2, y = y0 + h * (gx[j] + 1) / 2;
        // 4 - 2cos a - 2cos b, written without cancellation near the origin
        double sx = std::sin(std::numbers::pi * x), sy = std::sin(std::numbers::pi * y);
        s += gw[i] * gw[j] * std::log(4 * (sx * sx + sy * sy));
      }
    return s * h * h / 4;
  };
  // By symmetry the unit-square integral is 4x the one over [0,1/2]^2, whose
  // only singular point is the origin; peel off L-shaped rings toward it.
  double total = 0;
  for (double side = 0.5; side > 1e-10; side /= 2) {
    const double h = side / 2;
    total += square(h, 0, h) + square(0, h, h) + square(h, h, h);
  }
  LatticeEntropy out;
  out.exponent = 4 * total;
  out.value = std::exp(out.exponent);
  out.catalan = catalan_constant();
  out.series_exponent = 4 * out.catalan / std::numbers::pi;
  return out;
}

}  // namespace extgraph
