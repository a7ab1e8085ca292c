#pragma once

#include <vector>

#include "extgraph/graph.hpp"

namespace fixtures {

using extgraph::Graph;
using extgraph::make_family;

inline Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

// Two triangles joined by the bridge 2-3.
inline Graph bridged_triangles() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
}

// Hub 0, rim 1..5.
inline Graph wheel5() {
  std::vector<extgraph::Edge> e;
  for (int i = 1; i <= 5; ++i) e.push_back({0, i});
  for (int i = 1; i <= 5; ++i) e.push_back({i, i % 5 + 1});
  return Graph(6, e);
}

// Triangles 0-1-2 and 3-4-5 with rungs i -- i+3.
inline Graph prism() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

// K_{2,2,2}: antipodal pairs (0,1), (2,3), (4,5).
inline Graph octahedron() {
  std::vector<extgraph::Edge> e;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (j != i + 1 || i % 2 == 1) e.push_back({i, j});
  return Graph(6, e);
}

// 25 connected graphs used by the identity checks.
inline std::vector<Graph> identity_fixtures() {
  std::vector<Graph> out;
  for (const char* f : {"complete:3", "complete:4", "complete:5", "complete:6", "complete_bipartite:2,3",
                        "complete_bipartite:3,3", "complete_bipartite:3,4", "cycle:4", "cycle:5", "cycle:6", "cycle:8",
                        "path:5", "moebius_ladder:6", "moebius_ladder:8", "moebius_ladder:10", "hypercube:3",
                        "hypercube:4", "petersen", "heawood"})
    out.push_back(make_family(f));
  out.push_back(paw());
  out.push_back(bridged_triangles());
  out.push_back(wheel5());
  out.push_back(prism());
  out.push_back(octahedron());
  out.push_back(make_family("mcgee"));
  return out;
}

struct PlanarFixture {
  const char* name;
  Graph graph;
  extgraph::RotationSystem rotation;
};

// Straight-line planar drawings; the rotation is read off the drawing.
inline std::vector<PlanarFixture> planar_embeddings() {
  using L = std::vector<std::pair<double, double>>;
  std::vector<PlanarFixture> out;
  auto add = [&](const char* name, Graph g, const L& xy) {
    auto rot = extgraph::rotation_from_layout(g, xy);
    out.push_back({name, std::move(g), std::move(rot)});
  };
  add("K4", make_family("complete:4"), {{0, 0}, {0, 1}, {-1, -1}, {1, -1}});
  add("Q3", make_family("hypercube:3"), {{-2, -2}, {2, -2}, {-2, 2}, {2, 2}, {-1, -1}, {1, -1}, {-1, 1}, {1, 1}});
  add("C4", make_family("cycle:4"), {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  add("prism", prism(), {{0, 2}, {-2, -1}, {2, -1}, {0, 1}, {-1, -0.5}, {1, -0.5}});
  add("octahedron", octahedron(), {{0, 4}, {0, -1}, {-3.5, -2}, {0.87, 0.5}, {3.5, -2}, {-0.87, 0.5}});
  add("wheel5", wheel5(), {{0, 0}, {0, 2}, {1.9, 0.6}, {1.2, -1.6}, {-1.2, -1.6}, {-1.9, 0.6}});
  return out;
}

inline std::vector<Graph> regular_graphs() {
  std::vector<Graph> out;
  for (const char* f : {"complete:4", "complete:6", "complete_bipartite:3,3", "cycle:7", "moebius_ladder:8",
                        "hypercube:3", "hypercube:4", "petersen", "heawood", "mcgee", "tutte_coxeter"})
    out.push_back(make_family(f));
  out.push_back(prism());
  out.push_back(octahedron());
  return out;
}

}  // namespace fixtures
