#include "extgraph/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "extgraph/errors.hpp"
#include "extgraph/exact_linalg.hpp"
#include "extgraph/spectral.hpp"

namespace extgraph {

// --- canonical form --------------------------------------------------------------

namespace {

using Colors = std::vector<int>;

// Renumbers keys to dense ranks 0..k-1 in sorted key order.
template <class Key>
Colors rank_keys(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Colors out(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v)
    out[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  return out;
}

int cell_count(const Colors& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1; }

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.n()), adj_(g.n(), 0) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= std::uint64_t{1} << e.v;
      adj_[e.v] |= std::uint64_t{1} << e.u;
    }
  }

  CanonicalForm run() {
    std::vector<std::vector<int>> profile(n_);
    for (int v = 0; v < n_; ++v) {
      auto d = bfs_distances(g_, v);
      std::vector<int> counts(n_ + 1, 0);
      for (int x : d) ++counts[x < 0 ? n_ : x];
      profile[v] = std::move(counts);
    }
    search(rank_keys(profile), {});
    CanonicalForm out;
    out.labeling = best_labeling_;
    out.bytes = best_;
    out.leaves = leaves_;
    return out;
  }

 private:
  Colors refine(Colors c) const {
    for (int cells = cell_count(c);;) {
      std::vector<std::vector<int>> sig(n_);
      for (int v = 0; v < n_; ++v) {
        sig[v].push_back(c[v]);
        std::vector<int> nb;
        for (int u : g_.neighbors(v)) nb.push_back(c[u]);
        std::sort(nb.begin(), nb.end());
        sig[v].insert(sig[v].end(), nb.begin(), nb.end());
      }
      c = rank_keys(sig);
      int now = cell_count(c);
      if (now == cells) return c;
      cells = now;
    }
  }

  std::string encode(const Colors& lab) const {
    std::vector<int> inv(n_);
    for (int v = 0; v < n_; ++v) inv[lab[v]] = v;
    std::string bytes(1, static_cast<char>(n_));
    unsigned char acc = 0;
    int bits = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        acc = static_cast<unsigned char>(acc << 1 | ((adj_[inv[i]] >> inv[j]) & 1));
        if (++bits == 8) {
          bytes.push_back(static_cast<char>(acc));
          acc = 0;
          bits = 0;
        }
      }
    if (bits) bytes.push_back(static_cast<char>(acc << (8 - bits)));
    return bytes;
  }

  bool same_orbit(int a, int b, const std::vector<int>& path) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) parent[find(v)] = find(gamma[v]);
    }
    return find(a) == find(b);
  }

  void search(Colors c, std::vector<int> path) {
    c = refine(std::move(c));
    const int cells = cell_count(c);
    if (cells == n_) {
      ++leaves_;
      std::string bytes = encode(c);
      if (best_.empty() || bytes < best_) {
        best_ = std::move(bytes);
        best_labeling_ = c;
      } else if (bytes == best_) {
        // gamma maps v to the vertex holding the same canonical position in the best leaf
        std::vector<int> inv(n_), gamma(n_);
        for (int v = 0; v < n_; ++v) inv[best_labeling_[v]] = v;
        for (int v = 0; v < n_; ++v) gamma[v] = inv[c[v]];
        automorphisms_.push_back(std::move(gamma));
      }
      return;
    }
    std::vector<int> size(cells, 0);
    for (int v = 0; v < n_; ++v) ++size[c[v]];
    const int target = static_cast<int>(std::find_if(size.begin(), size.end(), [](int s) { return s > 1; }) - size.begin());
    std::vector<int> done;
    for (int v = 0; v < n_; ++v) {
      if (c[v] != target) continue;
      if (std::any_of(done.begin(), done.end(), [&](int w) { return same_orbit(v, w, path); })) continue;
      Colors child(n_);
      for (int u = 0; u < n_; ++u) child[u] = 2 * c[u] + (c[u] == target && u != v ? 1 : 0);
      auto next = path;
      next.push_back(v);
      search(rank_keys(child), std::move(next));
      done.push_back(v);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint64_t> adj_;
  std::string best_;
  Colors best_labeling_;
  std::vector<std::vector<int>> automorphisms_;
  long leaves_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.n() > kMaxCanonicalVertices)
    throw DomainError("canonical form is limited to " + std::to_string(kMaxCanonicalVertices) + " vertices");
  if (g.n() == 0) return {{}, std::string(1, '\0'), 1};
  return Canonizer(g).run();
}

Graph canonical_graph(const Graph& g) {
  auto cf = canonical_form(g);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({cf.labeling[e.u], cf.labeling[e.v]});
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::minmax(a.u, a.v) < std::minmax(b.u, b.v);
  });
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  return Graph(g.n(), edges);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() > kMaxCanonicalVertices || b.n() > kMaxCanonicalVertices)
    throw DomainError("isomorphism test is limited to " + std::to_string(kMaxCanonicalVertices) + " vertices");
  if (a.n() != b.n() || a.m() != b.m()) return false;
  std::vector<int> da(a.n()), db(b.n());
  for (int v = 0; v < a.n(); ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  if (unweighted_girth(a) != unweighted_girth(b)) return false;
  return canonical_form(a).bytes == canonical_form(b).bytes;
}

// --- greedy insertion ----------------------------------------------------------

namespace {

BigInt tree_count_integer(const Graph& g) {
  const int n = g.n();
  if (n <= 1) return 1;
  DenseMatrix<BigInt> red(n - 1, n - 1, BigInt(0));
  for (const Edge& e : g.edges()) {
    if (e.u < n - 1) red(e.u, e.u) += 1;
    if (e.v < n - 1) red(e.v, e.v) += 1;
    if (e.u < n - 1 && e.v < n - 1) {
      red(e.u, e.v) -= 1;
      red(e.v, e.u) -= 1;
    }
  }
  return bareiss_determinant(std::move(red));
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(count, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex lock;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      try {
        for (std::size_t i; (i = next++) < count;) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> guard(lock);
        if (!failure) failure = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

GreedyStep describe(Graph g, std::optional<std::pair<int, int>> inserted, BigInt tau, int candidates) {
  GreedyStep s;
  s.girth = unweighted_girth(g).value_or(0);
  if (g.n() <= 16) {
    s.three_connected = is_k_vertex_connected(g, 3);
    s.three_connected_exhaustive = true;
  } else {
    s.three_connected = is_connected(g) && spot_check_three_connected(g);
  }
  s.graph = std::move(g);
  s.inserted = inserted;
  s.tau = std::move(tau);
  s.candidate_count = candidates;
  return s;
}

}  // namespace

bool GreedyTrace::trajectory_tie() const {
  return std::any_of(ties.begin(), ties.end(), [](const TieEvent& t) { return t.distinct_graphs > 1; });
}

bool spot_check_three_connected(const Graph& g, int trials) {
  if (g.n() < 4) return false;
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> pick(0, g.n() - 1);
  for (int t = 0; t < trials; ++t) {
    int a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (!is_connected_without(g, {a, b})) return false;
  }
  return true;
}

GreedyTrace greedy_sequence(const Graph& start, int target_n, const GreedyOptions& opts) {
  if (target_n % 2 != 0) throw DomainError("greedy target must be even");
  if (target_n < start.n()) throw DomainError("greedy target is smaller than the start graph");
  if (start.regular_degree() != 3) throw DomainError("greedy start graph must be cubic");
  if (!is_connected(start)) throw DomainError("greedy start graph must be connected");
  if (target_n > kMaxCanonicalVertices) throw DomainError("greedy target exceeds the canonical-form limit of 64 vertices");

  GreedyTrace trace;
  trace.steps.push_back(describe(start, std::nullopt, tree_count_integer(start), 0));
  if (opts.on_step) opts.on_step(trace.steps.back());
  while (trace.steps.back().graph.n() < target_n) {
    const Graph& g = trace.steps.back().graph;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < g.m(); ++i)
      for (int j = i + 1; j < g.m(); ++j) pairs.push_back({i, j});
    std::vector<BigInt> tau(pairs.size());
    parallel_for(pairs.size(), opts.jobs,
                 [&](std::size_t k) { tau[k] = tree_count_integer(insert_edge(g, pairs[k].first, pairs[k].second)); });
    const BigInt best = *std::max_element(tau.begin(), tau.end());
    std::vector<std::size_t> tied;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (tau[k] == best) tied.push_back(k);

    std::size_t chosen = tied.front();
    int distinct = 1;
    if (tied.size() > 1) {
      std::vector<std::string> forms(tied.size());
      parallel_for(tied.size(), opts.jobs, [&](std::size_t t) {
        forms[t] = canonical_form(insert_edge(g, pairs[tied[t]].first, pairs[tied[t]].second)).bytes;
      });
      std::size_t arg = 0;
      for (std::size_t t = 1; t < tied.size(); ++t)
        if (forms[t] < forms[arg]) arg = t;
      chosen = tied[arg];
      std::vector<std::string> uniq = forms;
      std::sort(uniq.begin(), uniq.end());
      distinct = static_cast<int>(std::unique(uniq.begin(), uniq.end()) - uniq.begin());
      TieEvent ev;
      ev.step = static_cast<int>(trace.steps.size());
      ev.tau = best;
      for (std::size_t k : tied) ev.candidates.push_back(pairs[k]);
      ev.distinct_graphs = distinct;
      trace.ties.push_back(std::move(ev));
    }
    GreedyStep step = describe(insert_edge(g, pairs[chosen].first, pairs[chosen].second), pairs[chosen], best,
                               static_cast<int>(pairs.size()));
    step.tied = static_cast<int>(tied.size());
    step.distinct_tied = distinct;
    if (step.tau <= trace.steps.back().tau) throw std::logic_error("tree number failed to increase along the greedy trace");
    trace.steps.push_back(std::move(step));
    if (opts.on_step) opts.on_step(trace.steps.back());
  }
  return trace;
}

bool greedy_step_is_optimal(const Graph& before, const BigInt& tau) {
  for (int i = 0; i < before.m(); ++i)
    for (int j = i + 1; j < before.m(); ++j) {
      Rational t = tree_number_exact(WeightPoint::unweighted(insert_edge(before, i, j), WeightDomain::Unconstrained),
                                     TreeMethod::Temperley);
      if (t > Rational(tau)) return false;
    }
  return true;
}

std::string trace_jsonl(const GreedyTrace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const GreedyStep& s = trace.steps[i];
    nlohmann::ordered_json j;
    j["step"] = i;
    j["n"] = s.graph.n();
    j["m"] = s.graph.m();
    j["inserted"] = s.inserted ? nlohmann::ordered_json::array({s.inserted->first, s.inserted->second})
                               : nlohmann::ordered_json(nullptr);
    j["tau"] = s.tau.get_str();
    j["girth"] = s.girth;
    j["candidates"] = s.candidate_count;
    j["tied"] = s.tied;
    j["distinct_tied"] = s.distinct_tied;
    j["three_connected"] = s.three_connected;
    j["three_connected_exhaustive"] = s.three_connected_exhaustive;
    for (const TieEvent& t : trace.ties)
      if (t.step == static_cast<int>(i)) {
        auto c = nlohmann::ordered_json::array();
        for (auto [a, b] : t.candidates) c.push_back({a, b});
        j["tie_candidates"] = c;
      }
    j["graph"] = emit_graph(s.graph);
    out << j.dump() << '\n';
  }
  return out.str();
}

std::string step_dot(const GreedyStep& step, int index) {
  return to_dot(WeightPoint::unweighted(step.graph, WeightDomain::Unconstrained), "S" + std::to_string(index));
}

// --- edge switches -------------------------------------------------------------

SwitchScan edge_switch_scan(const Graph& g, int jobs) {
  if (!is_connected(g)) throw DomainError("edge_switch_scan requires a connected graph");
  SwitchScan out;
  out.tau_before = tree_count_integer(g);
  std::vector<std::pair<Edge, Edge>> cands;
  for (int i = 0; i < g.m(); ++i)
    for (int j = i + 1; j < g.m(); ++j) {
      const Edge a = g.edge(i), b = g.edge(j);
      if (a.touches(b.u) || a.touches(b.v)) continue;
      for (const Edge& bb : {b, Edge{b.v, b.u}}) {
        if (g.has_edge(a.u, bb.v) || g.has_edge(bb.u, a.v)) continue;
        cands.push_back({a, bb});
      }
    }
  std::vector<std::optional<BigInt>> tau(cands.size());
  parallel_for(cands.size(), jobs, [&](std::size_t k) {
    Graph h = edge_switch(g, cands[k].first, cands[k].second);
    if (is_connected(h)) tau[k] = tree_count_integer(h);
  });
  for (std::size_t k = 0; k < cands.size(); ++k) {
    if (!tau[k]) continue;
    ++out.valid;
    if (!out.best_switch || *tau[k] > out.tau_after) {
      out.best_switch = cands[k];
      out.tau_after = *tau[k];
    }
  }
  if (out.best_switch) {
    out.delta_tau = out.tau_after - out.tau_before;
    out.improving = sgn(out.delta_tau) > 0;
  } else {
    out.tau_after = out.tau_before;
  }
  return out;
}

}  // namespace extgraph
