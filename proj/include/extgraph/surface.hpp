#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "extgraph/graph.hpp"
#include "extgraph/rational.hpp"

namespace extgraph {

// Loops and parallel edges allowed. Used for duals of embedded graphs.
struct Multigraph {
  int n = 0;
  std::vector<Edge> edges;

  int m() const { return static_cast<int>(edges.size()); }
  bool is_simple() const;
  // Throws GraphError when the multigraph has loops or parallel edges.
  Graph to_graph() const;
  static Multigraph from_graph(const Graph& g);
};

// Laplacian with L_uv = -(number of u-v edges); loops contribute nothing.
Rational multigraph_tree_number(const Multigraph& g);

// A connected graph with a rotation system and its traced faces. Faces are
// dart sequences: after dart d = (u -> v) comes the successor of reverse(d) in
// the rotation at v.
struct EmbeddedGraph {
  Multigraph graph;
  RotationSystem rotation;
  std::vector<std::vector<int>> faces;
  std::vector<int> face_of_dart;
  int genus = 0;

  int euler_characteristic() const { return graph.n - graph.m() + static_cast<int>(faces.size()); }
};

// Validates the rotation, traces faces and computes the genus. Throws
// DomainError for malformed rotations or disconnected graphs.
EmbeddedGraph trace_faces(const Multigraph& g, const RotationSystem& rotation);
EmbeddedGraph trace_faces(const Graph& g, const RotationSystem& rotation);

// Darts in edge-index order at every vertex.
RotationSystem default_rotation(const Multigraph& g);
RotationSystem default_rotation(const Graph& g);

// "v: e1 e2 ..." per vertex, edges listed in cyclic order. A loop is listed
// twice; its first occurrence is the edge's first end. Throws ParseError.
RotationSystem parse_rotation(const Multigraph& g, std::string_view text);
RotationSystem parse_rotation(const Graph& g, std::string_view text);
std::string emit_rotation(const Multigraph& g, const RotationSystem& rotation);

// One dual vertex per face, dual edge j crosses primal edge j. The dual
// rotation lists, at each face, its darts in boundary order, so the dual is
// itself an embedding of the same genus.
EmbeddedGraph dual(const EmbeddedGraph& e);

struct TreeComplementReport {
  bool complement_spans_dual = false;
  int complement_size = 0;
  int edges_removed_to_tree = 0;  // complement edges minus (faces - 1)
  int bound = 0;                  // 2 g
};

// `tree` lists edge indices of a spanning tree of e.graph. Throws DomainError
// if it is not one.
TreeComplementReport tree_complement_check(const EmbeddedGraph& e, const std::vector<int>& tree);

// Spanning-tree entropy of the square lattice, computed twice: the double
// integral of log(4 - 2cos 2pi x - 2cos 2pi y) over the unit square, and
// 4G/pi from a series for Catalan's constant G.
struct LatticeEntropy {
  double exponent = 0.0;  // from the integral
  double value = 0.0;     // exp(exponent)
  double series_exponent = 0.0;
  double catalan = 0.0;
};

LatticeEntropy lattice_entropy_square();
double catalan_constant();

}  // namespace extgraph
