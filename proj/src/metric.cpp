#include "extgraph/metric.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>

#include "extgraph/errors.hpp"

namespace extgraph {

namespace {

struct Adj {
  int to;
  int edge;
};

std::vector<std::vector<Adj>> build_adjacency(const WeightPoint& w, bool strict_interior, int min_edge = 0) {
  const Graph& g = w.graph();
  std::vector<std::vector<Adj>> adj(g.n());
  for (int j = min_edge; j < g.m(); ++j) {
    if (strict_interior && w.weight(j) == 0) continue;
    const Edge& e = g.edge(j);
    adj[e.u].push_back({e.v, j});
    adj[e.v].push_back({e.u, j});
  }
  return adj;
}

// O(n^2) Dijkstra with exact distances; nullopt marks unreachable vertices.
std::vector<std::optional<Rational>> dijkstra(const std::vector<std::vector<Adj>>& adj, const WeightPoint& w,
                                              int source) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::optional<Rational>> dist(n);
  std::vector<char> done(n, 0);
  dist[source] = Rational(0);
  for (;;) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && dist[v] && (best < 0 || *dist[v] < *dist[best])) best = v;
    if (best < 0) break;
    done[best] = 1;
    for (const Adj& a : adj[best]) {
      if (done[a.to]) continue;
      Rational cand = *dist[best] + w.weight(a.edge);
      if (!dist[a.to] || cand < *dist[a.to]) dist[a.to] = std::move(cand);
    }
  }
  return dist;
}

// All simple source->target paths of weight `total` that only use edges lying
// on some shortest path (du[a] + x + dt[b] == total). Appends ascending edge
// index lists to `out`.
void enumerate_shortest_paths(const std::vector<std::vector<Adj>>& adj, const WeightPoint& w,
                              const std::vector<std::optional<Rational>>& du,
                              const std::vector<std::optional<Rational>>& dt, int source, int target,
                              const Rational& total, const std::vector<int>& prefix,
                              std::vector<std::vector<int>>& out, std::size_t cap) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> on_path(n, 0);
  std::vector<int> path = prefix;
  const std::size_t base = prefix.size();
  std::function<void(int)> dfs = [&](int v) {
    if (v == target) {
      std::vector<int> edges = path;
      std::sort(edges.begin(), edges.end());
      out.push_back(std::move(edges));
      if (out.size() > cap) throw DomainError("enumeration cap of " + std::to_string(cap) + " exceeded");
      return;
    }
    on_path[v] = 1;
    for (const Adj& a : adj[v]) {
      if (on_path[a.to] || !du[a.to] || !dt[a.to]) continue;
      if (*du[v] + w.weight(a.edge) != *du[a.to]) continue;
      if (*du[a.to] + *dt[a.to] != total) continue;
      path.push_back(a.edge);
      dfs(a.to);
      path.pop_back();
    }
    on_path[v] = 0;
  };
  dfs(source);
  path.resize(base);
}

std::vector<std::vector<int>> incidence_of(const std::vector<std::vector<int>>& sets, int m) {
  std::vector<std::vector<int>> mat(m, std::vector<int>(sets.size(), 0));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (int j : sets[i]) mat[j][i] = 1;
  return mat;
}

}  // namespace

std::vector<std::vector<int>> CycleSet::incidence(int m) const { return incidence_of(systoles, m); }
std::vector<std::vector<int>> MeridianSet::incidence(int m) const { return incidence_of(meridians, m); }

CycleSet girth(const WeightPoint& w, bool strict_interior) {
  const Graph& g = w.graph();
  // Every simple cycle has a smallest edge e = (u,v); the rest of it is a
  // simple u-v path through edges of larger index.
  std::vector<std::optional<Rational>> through(g.m());
  std::optional<Rational> best;
  for (int j = 0; j < g.m(); ++j) {
    if (strict_interior && w.weight(j) == 0) continue;
    auto adj = build_adjacency(w, strict_interior, j + 1);
    auto du = dijkstra(adj, w, g.edge(j).u);
    const auto& dv = du[g.edge(j).v];
    if (!dv) continue;
    through[j] = *dv + w.weight(j);
    if (!best || *through[j] < *best) best = through[j];
  }
  if (!best) throw DomainError("graph has no cycle");

  CycleSet out;
  out.girth = *best;
  for (int j = 0; j < g.m(); ++j) {
    if (!through[j] || *through[j] != *best) continue;
    auto adj = build_adjacency(w, strict_interior, j + 1);
    const int u = g.edge(j).u, v = g.edge(j).v;
    auto du = dijkstra(adj, w, u);
    auto dv = dijkstra(adj, w, v);
    enumerate_shortest_paths(adj, w, du, dv, u, v, *du[v], {j}, out.systoles, kEnumerationCap);
  }
  return out;
}

std::vector<std::vector<Rational>> all_pairs_distances(const WeightPoint& w, bool strict_interior,
                                                       std::vector<std::vector<char>>* reachable) {
  const Graph& g = w.graph();
  auto adj = build_adjacency(w, strict_interior);
  std::vector<std::vector<Rational>> d(g.n(), std::vector<Rational>(g.n(), Rational(-1)));
  if (reachable) reachable->assign(g.n(), std::vector<char>(g.n(), 0));
  for (int s = 0; s < g.n(); ++s) {
    auto ds = dijkstra(adj, w, s);
    for (int t = 0; t < g.n(); ++t) {
      if (!ds[t]) continue;
      d[s][t] = *ds[t];
      if (reachable) (*reachable)[s][t] = 1;
    }
  }
  return d;
}

MeridianSet diameter(const WeightPoint& w, bool strict_interior) {
  const Graph& g = w.graph();
  auto adj = build_adjacency(w, strict_interior);
  std::vector<std::vector<std::optional<Rational>>> dist(g.n());
  for (int s = 0; s < g.n(); ++s) {
    dist[s] = dijkstra(adj, w, s);
    for (int t = 0; t < g.n(); ++t)
      if (!dist[s][t]) throw DomainError("graph is disconnected");
  }
  MeridianSet out;
  for (int s = 0; s < g.n(); ++s)
    for (int t = s + 1; t < g.n(); ++t)
      if (*dist[s][t] > out.diameter) out.diameter = *dist[s][t];
  for (int s = 0; s < g.n(); ++s) {
    for (int t = s + 1; t < g.n(); ++t) {
      if (*dist[s][t] != out.diameter) continue;
      const int pair = static_cast<int>(out.diametral_pairs.size());
      out.diametral_pairs.emplace_back(s, t);
      enumerate_shortest_paths(adj, w, dist[s], dist[t], s, t, out.diameter, {}, out.meridians, kEnumerationCap);
      out.meridian_pair.resize(out.meridians.size(), pair);
    }
  }
  return out;
}

namespace {

template <class Int>
Int to_int(const BigInt& z);

template <>
__int128 to_int<__int128>(const BigInt& z) {
  return static_cast<__int128>(z.get_si());
}

template <>
BigInt to_int<BigInt>(const BigInt& z) {
  return z;
}

// Scaled integer weights; volumes and cut weights of every bipartition are
// sums of these, so all ratios can be compared by cross multiplication.
template <class Int>
CutReport scan_cuts(const WeightPoint& w, const BigInt& scale) {
  const Graph& g = w.graph();
  const int n = g.n();
  std::vector<Int> x(g.m());
  for (int j = 0; j < g.m(); ++j) x[j] = to_int<Int>(Rational(w.weight(j) * scale).get_num());
  std::vector<Int> deg(n, Int(0));
  Int total = 0;
  for (int j = 0; j < g.m(); ++j) {
    deg[g.edge(j).u] += x[j];
    deg[g.edge(j).v] += x[j];
  }
  for (int v = 0; v < n; ++v) total += deg[v];

  const std::uint32_t count = std::uint32_t(1) << (n - 1);
  std::uint32_t mask = 0;  // side A membership for vertices 0..n-2
  Int cut = 0, vol_a = 0;
  bool have_exp = false, have_ch = false;
  Int exp_num = 0, exp_den = 1, ch_num = 0, ch_den = 1;
  std::vector<std::uint32_t> exp_masks, ch_masks;

  for (std::uint32_t step = 1; step < count; ++step) {
    const int flip = __builtin_ctz(step);
    const std::uint32_t bit = std::uint32_t(1) << flip;
    const bool entering = !(mask & bit);
    for (int j : g.incident(flip)) {
      const int other = g.edge(j).other(flip);
      const bool other_in_a = other < n - 1 && (mask & (std::uint32_t(1) << other));
      if (entering == other_in_a) cut -= x[j];
      else cut += x[j];
    }
    mask ^= bit;
    if (entering) vol_a += deg[flip];
    else vol_a -= deg[flip];

    const Int vol_b = total - vol_a;
    if (vol_a == 0 || vol_b == 0) continue;

    const Int e_den = vol_a * vol_b;
    if (!have_exp || cut * exp_den < exp_num * e_den) {
      have_exp = true;
      exp_num = cut;
      exp_den = e_den;
      exp_masks.clear();
    }
    if (cut * exp_den == exp_num * e_den) exp_masks.push_back(mask);

    const Int c_den = vol_a < vol_b ? vol_a : vol_b;
    if (!have_ch || cut * ch_den < ch_num * c_den) {
      have_ch = true;
      ch_num = cut;
      ch_den = c_den;
      ch_masks.clear();
    }
    if (cut * ch_den == ch_num * c_den) ch_masks.push_back(mask);
    if (exp_masks.size() > kEnumerationCap || ch_masks.size() > kEnumerationCap)
      throw DomainError("more than " + std::to_string(kEnumerationCap) + " minimizing cuts");
  }
  if (!have_exp) throw DomainError("no bipartition with positive volume on both sides");

  auto big = [](const Int& v) {
    if constexpr (std::is_same_v<Int, BigInt>) return v;
    else return BigInt(static_cast<long>(v));
  };
  auto make_cut = [&](std::uint32_t msk) {
    Cut c;
    BigInt cut_w = 0, va = 0;
    for (int v = 0; v < n - 1; ++v)
      if (msk & (std::uint32_t(1) << v)) {
        c.side_a.push_back(v);
        va += big(deg[v]);
      }
    for (int j = 0; j < g.m(); ++j) {
      const Edge& e = g.edge(j);
      const bool a = e.u < n - 1 && (msk & (std::uint32_t(1) << e.u));
      const bool b = e.v < n - 1 && (msk & (std::uint32_t(1) << e.v));
      if (a != b) {
        c.cut_edges.push_back(j);
        cut_w += big(x[j]);
      }
    }
    c.cut_weight = Rational(cut_w, scale);
    c.volume_a = Rational(va, scale);
    c.volume_b = Rational(big(total) - va, scale);
    c.cut_weight.canonicalize();
    c.volume_a.canonicalize();
    c.volume_b.canonicalize();
    return c;
  };
  auto lex_less = [&](std::uint32_t a, std::uint32_t b) {
    // lexicographic order of the ascending vertex lists
    for (int v = 0; v < n - 1; ++v) {
      const bool ia = a & (std::uint32_t(1) << v), ib = b & (std::uint32_t(1) << v);
      if (ia != ib) return ia;
    }
    return false;
  };
  std::sort(exp_masks.begin(), exp_masks.end(), lex_less);
  std::sort(ch_masks.begin(), ch_masks.end(), lex_less);

  CutReport r;
  for (auto msk : exp_masks) r.expansion_cuts.push_back(make_cut(msk));
  for (auto msk : ch_masks) r.cheeger_cuts.push_back(make_cut(msk));
  const Cut& e0 = r.expansion_cuts.front();
  r.expansion = e0.cut_weight / (e0.volume_a * e0.volume_b);
  const Cut& c0 = r.cheeger_cuts.front();
  r.cheeger = c0.cut_weight / std::min(c0.volume_a, c0.volume_b);
  return r;
}

}  // namespace

CutReport cut_constants(const WeightPoint& w) {
  const Graph& g = w.graph();
  if (g.n() > kMaxCutVertices)
    throw DomainError("cut enumeration is limited to " + std::to_string(kMaxCutVertices) + " vertices");
  if (g.n() < 2) throw DomainError("cut constants need at least two vertices");
  if (!is_connected(g)) throw DomainError("graph is disconnected");
  const BigInt scale = lcm_of_denominators(w.weights());
  BigInt total = 0;
  for (const Rational& x : w.weights()) total += Rational(x * scale).get_num();
  // cross products are bounded by (2 total)^4
  if (mpz_sizeinbase(total.get_mpz_t(), 2) <= 29) return scan_cuts<__int128>(w, scale);
  return scan_cuts<BigInt>(w, scale);
}

}  // namespace extgraph
