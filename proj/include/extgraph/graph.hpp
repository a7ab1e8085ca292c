#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extgraph/rational.hpp"

namespace extgraph {

struct Edge {
  int u = 0;
  int v = 0;

  bool operator==(const Edge&) const = default;
  bool touches(int w) const { return u == w || v == w; }
  int other(int w) const { return w == u ? v : u; }
};

// Simple loopless undirected graph: vertices 0..n-1, edges indexed 0..m-1 in
// insertion order. Edge j keeps its index for the life of the value.
class Graph {
 public:
  Graph() = default;
  // Throws GraphError on loops, parallel edges or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int j) const { return edges_[j]; }

  int degree(int v) const { return static_cast<int>(incidence_[v].size()); }
  // Edge indices incident to v, ascending.
  const std::vector<int>& incident(int v) const { return incidence_[v]; }
  std::vector<int> neighbors(int v) const;

  bool has_edge(int u, int v) const;
  // Index of edge {u,v}, or -1.
  int edge_index(int u, int v) const;

  std::vector<int> degrees() const;
  // Common degree if regular (0 for the empty graph).
  std::optional<int> regular_degree() const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  std::uint64_t key(int u, int v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
  std::vector<std::pair<std::uint64_t, int>> sorted_keys_;
};

enum class WeightDomain {
  Full,               // sum of weights == m
  DegreePreserving,   // weighted degree == unweighted degree at every vertex
  Unconstrained,      // nonnegative weights, no normalization
};

const char* to_string(WeightDomain d);

// Nonnegative exact rational edge weights on a graph, validated against the
// stated domain.
class WeightPoint {
 public:
  WeightPoint() = default;
  // Throws DomainError if a weight is negative or the domain constraint fails.
  WeightPoint(Graph graph, std::vector<Rational> weights, WeightDomain domain);

  // All weights 1 (the point omega); valid in every domain.
  static WeightPoint unweighted(Graph graph, WeightDomain domain = WeightDomain::Full);

  const Graph& graph() const { return graph_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(int j) const { return weights_[j]; }
  WeightDomain domain() const { return domain_; }

  bool is_interior() const;
  bool is_unweighted() const;
  std::vector<Rational> weighted_degrees() const;
  std::vector<double> weights_as_double() const;

  // Same graph and domain, different weights (validated).
  WeightPoint with_weights(std::vector<Rational> weights) const;
  WeightPoint with_domain(WeightDomain domain) const;

 private:
  Graph graph_;
  std::vector<Rational> weights_;
  WeightDomain domain_ = WeightDomain::Full;
};

// Cyclic order of dart ids at every vertex. Dart 2j is edge j leaving edges[j].u,
// dart 2j+1 is edge j leaving edges[j].v.
struct RotationSystem {
  std::vector<std::vector<int>> darts;

  bool operator==(const RotationSystem&) const = default;
};

inline int dart_of(int edge, int side) { return 2 * edge + side; }
inline int dart_edge(int dart) { return dart / 2; }
inline int dart_side(int dart) { return dart % 2; }
inline int reverse_dart(int dart) { return dart ^ 1; }

// Throws DomainError unless every dart appears exactly once, at its tail vertex.
void validate_rotation(int n, const std::vector<Edge>& edges, const RotationSystem& rotation);

// Rotation induced by a straight-line drawing: darts sorted counterclockwise by
// the angle of the edge at each vertex.
RotationSystem rotation_from_layout(const Graph& g, const std::vector<std::pair<double, double>>& xy);

// --- edge-list text format -------------------------------------------------

// "n m" then m lines "u v [w]"; '#' starts a comment. Throws ParseError.
WeightPoint parse_graph(std::string_view text);
// Inverse of parse_graph; weights equal to 1 are omitted.
std::string emit_graph(const WeightPoint& w);
std::string emit_graph(const Graph& g);
std::string to_dot(const WeightPoint& w, std::string_view name = "G");

// --- named families ----------------------------------------------------------

// family: complete, complete_bipartite, cycle, path, moebius_ladder, hypercube,
// petersen, lcf, heawood, mcgee, tutte_coxeter. Throws DomainError.
Graph make_named(std::string_view family, const std::vector<int>& params = {});
Graph make_lcf(const std::vector<int>& code, int reps);
// Parses "name" or "name:p1,p2" or "lcf:c1,c2,...:reps".
Graph make_family(std::string_view spec);

// --- structural operations ---------------------------------------------------

// Subdivides e1 (new vertex n) and e2 (new vertex n+1) and joins the two new
// vertices. Remaining edges keep their order; the five new edges are appended.
Graph insert_edge(const Graph& g, int e1, int e2);

// Replaces every edge e by a path with counts[e] interior vertices (numbered in
// edge order, then path order, starting at n) and adds the matching edges.
Graph subdivide_and_match(const Graph& g, const std::vector<int>& counts,
                          const std::vector<std::pair<int, int>>& matching);
// Same operation on the two-vertex cubic multigraph (three parallel edges),
// which is not representable as a Graph.
Graph subdivide_and_match_g2(const std::vector<int>& counts,
                             const std::vector<std::pair<int, int>>& matching);

// (u1,u2),(u3,u4) -> (u1,u4),(u3,u2). The new edges take the slots of the old.
Graph edge_switch(const Graph& g, Edge a, Edge b);

Graph disjoint_union(const Graph& a, const Graph& b);

// --- basic structure -------------------------------------------------------

std::vector<int> component_labels(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);
// Connectivity after deleting the given vertices.
bool is_connected_without(const Graph& g, const std::vector<int>& removed);
// Brute force over vertex subsets of size < k.
bool is_k_vertex_connected(const Graph& g, int k);
// 2-coloring (0/1 per vertex) if bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, int source);
// Unweighted girth; nullopt for forests.
std::optional<int> unweighted_girth(const Graph& g);
std::optional<int> unweighted_diameter(const Graph& g);

}  // namespace extgraph
