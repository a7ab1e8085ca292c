#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "extgraph/graph.hpp"
#include "extgraph/rational.hpp"

namespace extgraph {

// --- isomorphism ---------------------------------------------------------------

constexpr int kMaxCanonicalVertices = 64;

struct CanonicalForm {
  std::vector<int> labeling;  // labeling[v] = canonical position of v
  std::string bytes;          // n, then the relabeled upper-triangle adjacency bits
  long leaves = 0;            // search-tree leaves visited
};

// Distance-profile colouring, equitable refinement and individualization
// search with automorphism pruning. Throws DomainError for n > 64.
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// --- greedy insertion ----------------------------------------------------------

struct GreedyStep {
  Graph graph;
  std::optional<std::pair<int, int>> inserted;  // edge indices in the previous graph
  BigInt tau = 0;
  int girth = 0;
  int candidate_count = 0;
  int tied = 1;                      // candidates attaining the maximum tau
  int distinct_tied = 1;             // pairwise non-isomorphic graphs among them
  bool three_connected = false;
  bool three_connected_exhaustive = false;  // brute force (n <= 16) rather than spot checks
};

struct TieEvent {
  int step = 0;
  BigInt tau = 0;
  std::vector<std::pair<int, int>> candidates;
  int distinct_graphs = 0;
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;  // steps[0] is the start graph
  std::vector<TieEvent> ties;
  // true when some tie involved non-isomorphic graphs, i.e. the tie-break rule
  // picked the trajectory
  bool trajectory_tie() const;
};

struct GreedyOptions {
  int jobs = 1;
  std::function<void(const GreedyStep&)> on_step;  // called as steps complete
};

// Repeatedly inserts the edge pair maximizing tau (exact cofactor), breaking
// ties by the smallest canonical form of the result. Throws DomainError for an
// odd target, a target below start.n, or a start graph that is not cubic,
// simple and connected.
GreedyTrace greedy_sequence(const Graph& start, int target_n, const GreedyOptions& opts = {});

// Exhaustive re-check of one step: true iff no insertion into `before` beats
// `tau` (computed independently of the parallel path).
bool greedy_step_is_optimal(const Graph& before, const BigInt& tau);

// One JSON object per line; graphs embedded as edge-list text.
std::string trace_jsonl(const GreedyTrace& trace);
std::string step_dot(const GreedyStep& step, int index);

// --- edge switches -------------------------------------------------------------

struct SwitchScan {
  std::optional<std::pair<Edge, Edge>> best_switch;  // arguments for edge_switch
  BigInt tau_before = 0;
  BigInt tau_after = 0;
  BigInt delta_tau = 0;
  bool improving = false;
  int valid = 0;  // switches that keep the graph simple and connected
};

// Scans every pair of vertex-disjoint edges in both orientations; the first
// switch (scan order) with the largest tau wins.
SwitchScan edge_switch_scan(const Graph& g, int jobs = 1);

// Probabilistic check used above 16 vertices: deletes `trials` random vertex
// pairs (fixed seed) and checks connectivity.
bool spot_check_three_connected(const Graph& g, int trials = 256);

}  // namespace extgraph
