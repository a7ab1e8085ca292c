#include "extgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>

#include "extgraph/errors.hpp"

namespace extgraph {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw GraphError("negative vertex count");
  incidence_.assign(n, {});
  sorted_keys_.reserve(edges_.size());
  for (int j = 0; j < m(); ++j) {
    const Edge& e = edges_[j];
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw GraphError("edge " + std::to_string(j) + " has an endpoint out of range");
    if (e.u == e.v) throw GraphError("edge " + std::to_string(j) + " is a loop");
    incidence_[e.u].push_back(j);
    incidence_[e.v].push_back(j);
    sorted_keys_.emplace_back(key(e.u, e.v), j);
  }
  std::sort(sorted_keys_.begin(), sorted_keys_.end());
  for (std::size_t i = 1; i < sorted_keys_.size(); ++i) {
    if (sorted_keys_[i].first == sorted_keys_[i - 1].first)
      throw GraphError("edges " + std::to_string(sorted_keys_[i - 1].second) + " and " +
                       std::to_string(sorted_keys_[i].second) + " are parallel");
  }
}

std::uint64_t Graph::key(int u, int v) const {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  out.reserve(incidence_[v].size());
  for (int j : incidence_[v]) out.push_back(edges_[j].other(v));
  return out;
}

int Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
  auto k = key(u, v);
  auto it = std::lower_bound(sorted_keys_.begin(), sorted_keys_.end(), std::make_pair(k, -1));
  if (it == sorted_keys_.end() || it->first != k) return -1;
  return it->second;
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::optional<int> Graph::regular_degree() const {
  if (n_ == 0) return 0;
  int k = degree(0);
  for (int v = 1; v < n_; ++v)
    if (degree(v) != k) return std::nullopt;
  return k;
}

const char* to_string(WeightDomain d) {
  switch (d) {
    case WeightDomain::Full: return "FULL";
    case WeightDomain::DegreePreserving: return "DEGREE_PRESERVING";
    case WeightDomain::Unconstrained: return "UNCONSTRAINED";
  }
  return "?";
}

WeightPoint::WeightPoint(Graph graph, std::vector<Rational> weights, WeightDomain domain)
    : graph_(std::move(graph)), weights_(std::move(weights)), domain_(domain) {
  if (static_cast<int>(weights_.size()) != graph_.m())
    throw DomainError("weight vector length " + std::to_string(weights_.size()) +
                      " does not match edge count " + std::to_string(graph_.m()));
  for (int j = 0; j < graph_.m(); ++j)
    if (sgn(weights_[j]) < 0) throw DomainError("weight of edge " + std::to_string(j) + " is negative");
  if (domain_ == WeightDomain::Full) {
    if (sum(weights_) != graph_.m())
      throw DomainError("weights sum to " + to_string(sum(weights_)) + ", expected m = " +
                        std::to_string(graph_.m()));
  } else if (domain_ == WeightDomain::DegreePreserving) {
    auto wd = weighted_degrees();
    for (int v = 0; v < graph_.n(); ++v)
      if (wd[v] != graph_.degree(v))
        throw DomainError("weighted degree of vertex " + std::to_string(v) + " is " + to_string(wd[v]) +
                          ", expected " + std::to_string(graph_.degree(v)));
  }
}

WeightPoint WeightPoint::unweighted(Graph graph, WeightDomain domain) {
  std::vector<Rational> w(graph.m(), Rational(1));
  return WeightPoint(std::move(graph), std::move(w), domain);
}

bool WeightPoint::is_interior() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Rational& x) { return sgn(x) > 0; });
}

bool WeightPoint::is_unweighted() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Rational& x) { return x == 1; });
}

std::vector<Rational> WeightPoint::weighted_degrees() const {
  std::vector<Rational> d(graph_.n(), Rational(0));
  for (int j = 0; j < graph_.m(); ++j) {
    d[graph_.edge(j).u] += weights_[j];
    d[graph_.edge(j).v] += weights_[j];
  }
  return d;
}

std::vector<double> WeightPoint::weights_as_double() const {
  std::vector<double> out(weights_.size());
  for (std::size_t j = 0; j < weights_.size(); ++j) out[j] = weights_[j].get_d();
  return out;
}

WeightPoint WeightPoint::with_weights(std::vector<Rational> weights) const {
  return WeightPoint(graph_, std::move(weights), domain_);
}

WeightPoint WeightPoint::with_domain(WeightDomain domain) const { return WeightPoint(graph_, weights_, domain); }

// --- rotation systems --------------------------------------------------------

void validate_rotation(int n, const std::vector<Edge>& edges, const RotationSystem& rotation) {
  if (static_cast<int>(rotation.darts.size()) != n)
    throw DomainError("rotation lists " + std::to_string(rotation.darts.size()) + " vertices, graph has " +
                      std::to_string(n));
  std::vector<char> seen(2 * edges.size(), 0);
  for (int v = 0; v < n; ++v) {
    for (int d : rotation.darts[v]) {
      if (d < 0 || d >= static_cast<int>(seen.size())) throw DomainError("rotation references an unknown dart");
      if (seen[d]) throw DomainError("dart " + std::to_string(d) + " appears twice in the rotation");
      seen[d] = 1;
      const Edge& e = edges[dart_edge(d)];
      int tail = dart_side(d) == 0 ? e.u : e.v;
      if (tail != v)
        throw DomainError("edge " + std::to_string(dart_edge(d)) + " is listed at vertex " + std::to_string(v) +
                          " which is not its endpoint");
    }
  }
  for (std::size_t d = 0; d < seen.size(); ++d)
    if (!seen[d]) throw DomainError("edge " + std::to_string(d / 2) + " is missing an end in the rotation");
}

RotationSystem rotation_from_layout(const Graph& g, const std::vector<std::pair<double, double>>& xy) {
  if (static_cast<int>(xy.size()) != g.n()) throw DomainError("layout size does not match vertex count");
  RotationSystem rot;
  rot.darts.resize(g.n());
  for (int v = 0; v < g.n(); ++v) {
    std::vector<std::pair<double, int>> by_angle;
    for (int j : g.incident(v)) {
      int w = g.edge(j).other(v);
      double angle = std::atan2(xy[w].second - xy[v].second, xy[w].first - xy[v].first);
      by_angle.emplace_back(angle, dart_of(j, g.edge(j).u == v ? 0 : 1));
    }
    std::sort(by_angle.begin(), by_angle.end());
    for (auto& [a, d] : by_angle) rot.darts[v].push_back(d);
  }
  return rot;
}

// --- text format -------------------------------------------------------------

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(const std::string& s, long long& out) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size() || s.size() > 18) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') return false;
  out = std::stoll(s);
  return true;
}

}  // namespace

WeightPoint parse_graph(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> lines;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++lineno;
    auto toks = tokens_of(line);
    if (!toks.empty()) lines.emplace_back(lineno, std::move(toks));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (lines.empty()) throw ParseError(ParseErrorKind::MalformedHeader, 1, "empty document");

  const auto& [hline, header] = lines.front();
  long long n = 0, m = 0;
  if (header.size() != 2 || !parse_int(header[0], n) || !parse_int(header[1], m) || n < 0 || m < 0)
    throw ParseError(ParseErrorKind::MalformedHeader, hline, "expected \"n m\"");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    int at = lines.size() > static_cast<std::size_t>(m) + 1 ? lines[m + 1].first : lines.back().first;
    throw ParseError(ParseErrorKind::EdgeCountMismatch, at,
                     "header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  }

  std::vector<Edge> edges;
  std::vector<Rational> weights;
  std::vector<std::pair<std::uint64_t, int>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [ln, tok] = lines[i];
    long long u = 0, v = 0;
    if ((tok.size() != 2 && tok.size() != 3) || !parse_int(tok[0], u) || !parse_int(tok[1], v))
      throw ParseError(ParseErrorKind::MalformedEdge, ln, "expected \"u v\" or \"u v w\"");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(ParseErrorKind::VertexOutOfRange, ln,
                       "endpoint outside 0.." + std::to_string(n > 0 ? n - 1 : 0));
    if (u == v) throw ParseError(ParseErrorKind::Loop, ln, "vertex " + std::to_string(u) + " joined to itself");
    Rational w = 1;
    if (tok.size() == 3) {
      if (!try_parse_rational(tok[2], w)) throw ParseError(ParseErrorKind::BadWeight, ln, "\"" + tok[2] + "\"");
      if (sgn(w) < 0) throw ParseError(ParseErrorKind::NegativeWeight, ln, tok[2]);
    }
    std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | static_cast<std::uint64_t>(std::max(u, v));
    seen.emplace_back(key, ln);
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    weights.push_back(w);
  }
  std::stable_sort(seen.begin(), seen.end(), [](auto& a, auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < seen.size(); ++i)
    if (seen[i].first == seen[i - 1].first)
      throw ParseError(ParseErrorKind::DuplicateEdge, std::max(seen[i].second, seen[i - 1].second),
                       "edge repeats line " + std::to_string(std::min(seen[i].second, seen[i - 1].second)));

  Graph g(static_cast<int>(n), std::move(edges));
  WeightDomain domain = sum(weights) == g.m() ? WeightDomain::Full : WeightDomain::Unconstrained;
  return WeightPoint(std::move(g), std::move(weights), domain);
}

std::string emit_graph(const WeightPoint& w) {
  std::ostringstream os;
  const Graph& g = w.graph();
  os << g.n() << ' ' << g.m() << '\n';
  for (int j = 0; j < g.m(); ++j) {
    os << g.edge(j).u << ' ' << g.edge(j).v;
    if (w.weight(j) != 1) os << ' ' << to_string(w.weight(j));
    os << '\n';
  }
  return os.str();
}

std::string emit_graph(const Graph& g) { return emit_graph(WeightPoint::unweighted(g, WeightDomain::Full)); }

std::string to_dot(const WeightPoint& w, std::string_view name) {
  std::ostringstream os;
  const Graph& g = w.graph();
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
  for (int j = 0; j < g.m(); ++j) {
    os << "  " << g.edge(j).u << " -- " << g.edge(j).v;
    if (w.weight(j) != 1) os << " [label=\"" << to_string(w.weight(j)) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

// --- named families ----------------------------------------------------------

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw DomainError(msg);
}

void require_params(std::string_view family, const std::vector<int>& params, std::size_t count) {
  require(params.size() == count, std::string(family) + " takes " + std::to_string(count) + " parameter(s)");
}

}  // namespace

Graph make_lcf(const std::vector<int>& code, int reps) {
  require(!code.empty() && reps >= 1, "lcf needs a non-empty code and reps >= 1");
  int n = static_cast<int>(code.size()) * reps;
  require(n >= 3, "lcf graph needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  std::vector<int> partner(n, -1);
  for (int i = 0; i < n; ++i) {
    int j = ((i + code[i % code.size()]) % n + n) % n;
    partner[i] = j;
  }
  for (int i = 0; i < n; ++i) {
    int j = partner[i];
    require(j != i, "lcf code produces a loop at vertex " + std::to_string(i));
    require(partner[j] == i, "lcf code is inconsistent at vertex " + std::to_string(i));
    if (i < j) edges.push_back({i, j});
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const GraphError& e) {
    throw DomainError(std::string("lcf code produces duplicate edges: ") + e.what());
  }
}

Graph make_named(std::string_view family, const std::vector<int>& params) {
  std::vector<Edge> edges;
  if (family == "complete") {
    require_params(family, params, 1);
    int n = params[0];
    require(n >= 1, "complete graph needs n >= 1");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(n, edges);
  }
  if (family == "complete_bipartite") {
    require_params(family, params, 2);
    int a = params[0], b = params[1];
    require(a >= 1 && b >= 1, "complete_bipartite needs a, b >= 1");
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return Graph(a + b, edges);
  }
  if (family == "cycle") {
    require_params(family, params, 1);
    int n = params[0];
    require(n >= 3, "cycle needs n >= 3 (smaller cycles are not simple)");
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(n, edges);
  }
  if (family == "path") {
    require_params(family, params, 1);
    int n = params[0];
    require(n >= 1, "path needs n >= 1");
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, edges);
  }
  if (family == "moebius_ladder") {
    require_params(family, params, 1);
    int n = params[0];
    require(n >= 6 && n % 2 == 0, "moebius_ladder needs an even vertex count >= 6");
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    for (int i = 0; i < n / 2; ++i) edges.push_back({i, i + n / 2});
    return Graph(n, edges);
  }
  if (family == "hypercube") {
    require_params(family, params, 1);
    int k = params[0];
    require(k >= 0 && k <= 16, "hypercube dimension must be in 0..16");
    int n = 1 << k;
    for (int v = 0; v < n; ++v)
      for (int b = 0; b < k; ++b)
        if (!(v & (1 << b))) edges.push_back({v, v | (1 << b)});
    return Graph(n, edges);
  }
  if (family == "petersen") {
    require_params(family, params, 0);
    for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
    for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
    for (int i = 0; i < 5; ++i) edges.push_back({i, 5 + i});
    return Graph(10, edges);
  }
  if (family == "heawood") {
    require_params(family, params, 0);
    return make_lcf({5, -5}, 7);
  }
  if (family == "mcgee") {
    require_params(family, params, 0);
    return make_lcf({12, 7, -7}, 8);
  }
  if (family == "tutte_coxeter") {
    require_params(family, params, 0);
    return make_lcf({-13, -9, 7, -7, 9, 13}, 5);
  }
  if (family == "lcf") {
    require(params.size() >= 2, "lcf takes the code followed by the repetition count");
    std::vector<int> code(params.begin(), params.end() - 1);
    return make_lcf(code, params.back());
  }
  if (family == "g2" || family == "two_vertex_cubic") {
    throw DomainError(
        "the two-vertex cubic graph has three parallel edges and is not a simple graph; "
        "use subdivide_and_match_g2 to build graphs from it");
  }
  throw DomainError("unknown graph family \"" + std::string(family) + "\"");
}

Graph make_family(std::string_view spec) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    auto c = spec.find(':', pos);
    parts.emplace_back(spec.substr(pos, c == std::string_view::npos ? std::string_view::npos : c - pos));
    if (c == std::string_view::npos) break;
    pos = c + 1;
  }
  auto ints = [](const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      long long v = 0;
      if (!parse_int(item, v)) throw DomainError("bad family parameter \"" + item + "\"");
      out.push_back(static_cast<int>(v));
    }
    return out;
  };
  const std::string& name = parts[0];
  if (name == "lcf") {
    require(parts.size() == 3, "lcf family syntax is lcf:c1,c2,...:reps");
    auto code = ints(parts[1]);
    auto reps = ints(parts[2]);
    require(reps.size() == 1, "lcf reps must be a single integer");
    return make_lcf(code, reps[0]);
  }
  require(parts.size() <= 2, "family syntax is name[:p1,p2,...]");
  return make_named(name, parts.size() == 2 ? ints(parts[1]) : std::vector<int>{});
}

// --- structural operations ---------------------------------------------------

Graph insert_edge(const Graph& g, int e1, int e2) {
  if (e1 < 0 || e2 < 0 || e1 >= g.m() || e2 >= g.m()) throw DomainError("insert_edge: edge index out of range");
  if (e1 == e2) throw DomainError("insert_edge: the two edges must be distinct");
  int n = g.n();
  std::vector<Edge> edges;
  edges.reserve(g.m() + 3);
  for (int j = 0; j < g.m(); ++j)
    if (j != e1 && j != e2) edges.push_back(g.edge(j));
  const Edge a = g.edge(e1), b = g.edge(e2);
  edges.push_back({a.u, n});
  edges.push_back({n, a.v});
  edges.push_back({b.u, n + 1});
  edges.push_back({n + 1, b.v});
  edges.push_back({n, n + 1});
  return Graph(n + 2, std::move(edges));
}

namespace {

Graph subdivide_edges(int n, const std::vector<Edge>& base, const std::vector<int>& counts,
                      const std::vector<std::pair<int, int>>& matching) {
  if (counts.size() != base.size()) throw DomainError("subdivide_and_match: one count per edge is required");
  int total = 0;
  for (int c : counts) {
    if (c < 0) throw DomainError("subdivide_and_match: negative subdivision count");
    total += c;
  }
  if (total % 2 != 0) throw DomainError("subdivide_and_match: total number of new vertices is odd");
  std::vector<Edge> edges;
  int next = n;
  for (std::size_t j = 0; j < base.size(); ++j) {
    int prev = base[j].u;
    for (int k = 0; k < counts[j]; ++k) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, base[j].v});
  }
  std::vector<int> used(total, 0);
  if (static_cast<int>(matching.size()) * 2 != total)
    throw DomainError("subdivide_and_match: matching is not perfect on the new vertices");
  for (auto [a, b] : matching) {
    if (a < n || b < n || a >= n + total || b >= n + total || a == b)
      throw DomainError("subdivide_and_match: matching pairs must be distinct new vertices");
    if (used[a - n]++ || used[b - n]++)
      throw DomainError("subdivide_and_match: matching is not perfect on the new vertices");
    edges.push_back({a, b});
  }
  try {
    return Graph(n + total, std::move(edges));
  } catch (const GraphError& e) {
    throw DomainError(std::string("subdivide_and_match: result is not simple (") + e.what() + ")");
  }
}

}  // namespace

Graph subdivide_and_match(const Graph& g, const std::vector<int>& counts,
                          const std::vector<std::pair<int, int>>& matching) {
  return subdivide_edges(g.n(), g.edges(), counts, matching);
}

Graph subdivide_and_match_g2(const std::vector<int>& counts, const std::vector<std::pair<int, int>>& matching) {
  const std::vector<Edge> g2 = {{0, 1}, {0, 1}, {0, 1}};
  return subdivide_edges(2, g2, counts, matching);
}

Graph edge_switch(const Graph& g, Edge a, Edge b) {
  int ia = g.edge_index(a.u, a.v), ib = g.edge_index(b.u, b.v);
  if (ia < 0 || ib < 0) throw DomainError("edge_switch: both edges must belong to the graph");
  if (a.touches(b.u) || a.touches(b.v)) throw DomainError("edge_switch: edges share a vertex");
  if (g.has_edge(a.u, b.v) || g.has_edge(b.u, a.v))
    throw DomainError("edge_switch: a replacement edge is already present");
  std::vector<Edge> edges = g.edges();
  edges[ia] = {a.u, b.v};
  edges[ib] = {b.u, a.v};
  return Graph(g.n(), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + a.n(), e.v + a.n()});
  return Graph(a.n() + b.n(), std::move(edges));
}

// --- basic structure -------------------------------------------------------

std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(g.n(), -1);
  int next = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int j : g.incident(v)) {
        int w = g.edge(j).other(v);
        if (label[w] < 0) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

int component_count(const Graph& g) {
  auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_connected_without(const Graph& g, const std::vector<int>& removed) {
  std::vector<char> gone(g.n(), 0);
  for (int v : removed) gone[v] = 1;
  int start = -1, alive = 0;
  for (int v = 0; v < g.n(); ++v)
    if (!gone[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive <= 1) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int j : g.incident(v)) {
      int w = g.edge(j).other(v);
      if (!gone[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == alive;
}

bool is_k_vertex_connected(const Graph& g, int k) {
  if (g.n() <= k) return false;
  std::vector<int> chosen;
  // every subset of size < k must leave the graph connected
  auto rec = [&](auto& self, int start, int left) -> bool {
    if (!is_connected_without(g, chosen)) return false;
    if (left == 0) return true;
    for (int v = start; v < g.n(); ++v) {
      chosen.push_back(v);
      bool ok = self(self, v + 1, left - 1);
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return rec(rec, 0, k - 1);
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int j : g.incident(v)) {
        int w = g.edge(j).other(v);
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.n(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int j : g.incident(v)) {
      int w = g.edge(j).other(v);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

std::optional<int> unweighted_girth(const Graph& g) {
  int best = -1;
  for (int s = 0; s < g.n(); ++s) {
    std::vector<int> dist(g.n(), -1), parent_edge(g.n(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (best > 0 && 2 * dist[v] + 1 >= best) break;
      for (int j : g.incident(v)) {
        if (j == parent_edge[v]) continue;
        int w = g.edge(j).other(v);
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent_edge[w] = j;
          q.push(w);
        } else {
          int len = dist[v] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::optional<int> unweighted_diameter(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.n(); ++s) {
    auto d = bfs_distances(g, s);
    for (int x : d) {
      if (x < 0) return std::nullopt;
      best = std::max(best, x);
    }
  }
  return best;
}

}  // namespace extgraph
