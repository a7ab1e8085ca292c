#pragma once

#include <cstddef>
#include <vector>

#include "extgraph/graph.hpp"
#include "extgraph/rational.hpp"

namespace extgraph {

constexpr std::size_t kEnumerationCap = 1'000'000;

// Shortest cycles. Each systole is the ascending list of its edge indices;
// systoles are ordered by their smallest edge index, then discovery order.
struct CycleSet {
  Rational girth = 0;
  std::vector<std::vector<int>> systoles;

  // m x r 0/1 matrix, column i = systole i.
  std::vector<std::vector<int>> incidence(int m) const;
};

struct MeridianSet {
  Rational diameter = 0;
  std::vector<std::pair<int, int>> diametral_pairs;  // unordered, u < v
  std::vector<std::vector<int>> meridians;           // ascending edge indices
  std::vector<int> meridian_pair;                    // index into diametral_pairs

  std::vector<std::vector<int>> incidence(int m) const;
};

struct Cut {
  std::vector<int> side_a;  // vertices of the side not containing vertex n-1
  std::vector<int> cut_edges;
  Rational volume_a = 0;
  Rational volume_b = 0;
  Rational cut_weight = 0;
};

struct CutReport {
  Rational expansion = 0;  // c(G)
  Rational cheeger = 0;    // h(G)
  std::vector<Cut> expansion_cuts;
  std::vector<Cut> cheeger_cuts;
};

// With strict_interior, zero-weight edges are removed before the search;
// otherwise they take part with length 0.
// Throws DomainError for forests or when the systole count exceeds the cap.
CycleSet girth(const WeightPoint& w, bool strict_interior = false);

// Throws DomainError if disconnected or past the cap.
MeridianSet diameter(const WeightPoint& w, bool strict_interior = false);

constexpr int kMaxCutVertices = 24;

// Brute force over all 2^(n-1) - 1 bipartitions. Volumes are weighted-degree
// sums; bipartitions with an empty-volume side are skipped.
CutReport cut_constants(const WeightPoint& w);

// All-pairs exact shortest distances; -1 marks unreachable pairs.
std::vector<std::vector<Rational>> all_pairs_distances(const WeightPoint& w, bool strict_interior,
                                                       std::vector<std::vector<char>>* reachable = nullptr);

}  // namespace extgraph
