// Copyright 2026 The Systole Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Exhaustive isomorph-free generation of small regular multigraphs with a
// girth filter, automorphism detection, signed-structure counting, and the
// log-domain evaluation of the asymptotic counting bounds.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "systole/logreal.hpp"
#include "systole/signed_graph.hpp"

namespace systole {

struct BudgetExceeded : std::runtime_error {
  std::int64_t produced;
  explicit BudgetExceeded(std::int64_t k)
      : std::runtime_error("generation budget exceeded after " + std::to_string(k) +
                           " graphs"),
        produced(k) {}
};

/// Undirected multigraph as a symmetric count matrix; adj[i][i] counts loops
/// once (each loop contributes 2 to the degree).
struct MultiGraph {
  int V = 0;
  std::vector<std::uint8_t> adj;  // V*V, symmetric

  explicit MultiGraph(int v = 0) : V(v), adj(v * v, 0) {}
  std::uint8_t& at(int i, int j) { return adj[i * V + j]; }
  std::uint8_t at(int i, int j) const { return adj[i * V + j]; }
  int degree(int i) const {
    int d = 0;
    for (int j = 0; j < V; ++j) d += at(i, j) * (i == j ? 2 : 1);
    return d;
  }
  friend bool operator<(const MultiGraph& a, const MultiGraph& b) { return a.adj < b.adj; }
  friend bool operator==(const MultiGraph& a, const MultiGraph& b) { return a.adj == b.adj; }
};

namespace detail {

inline bool is_connected(const MultiGraph& g) {
  if (g.V == 0) return true;
  std::vector<char> vis(g.V, 0);
  std::queue<int> q;
  q.push(0);
  vis[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w = 0; w < g.V; ++w)
      if ((g.at(u, w) > 0 || (u == w && g.at(u, u) > 0)) && !vis[w]) {
        vis[w] = 1;
        ++cnt;
        q.push(w);
      }
  }
  return cnt == g.V;
}

/// Distance from u to w in the current partial graph, or -1; used as the
/// incremental girth filter (adding (u,w) closes a cycle of length d+1).
inline int bfs_distance(const MultiGraph& g, int u, int w) {
  if (u == w) return 0;
  std::vector<int> dist(g.V, -1);
  std::queue<int> q;
  dist[u] = 0;
  q.push(u);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y = 0; y < g.V; ++y) {
      if (g.at(x, y) > 0 && x != y && dist[y] < 0) {
        dist[y] = dist[x] + 1;
        if (y == w) return dist[y];
        q.push(y);
      }
    }
  }
  return -1;
}

/// Permutation-invariant fingerprint: per-vertex distance profiles, local
/// multiplicities and triangle counts, sorted. Splits almost all non-
/// isomorphic pairs; exact isomorphism testing settles the rest.
inline std::vector<int> invariant_key(const MultiGraph& g) {
  const int V = g.V;
  std::vector<std::vector<int>> per_vertex(V);
  for (int v = 0; v < V; ++v) {
    std::vector<int> dist(V, -1);
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y = 0; y < V; ++y)
        if (g.at(x, y) > 0 && x != y && dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
    }
    std::vector<int> profile(V + 3, 0);
    for (int y = 0; y < V; ++y)
      if (dist[y] >= 0) ++profile[dist[y]];
    int tri = 0;
    for (int x = 0; x < V; ++x)
      for (int y = x + 1; y < V; ++y)
        if (x != v && y != v) tri += g.at(v, x) * g.at(x, y) * g.at(y, v);
    profile[V] = tri;
    profile[V + 1] = g.at(v, v);
    int par = 0;
    for (int y = 0; y < V; ++y)
      if (y != v && g.at(v, y) > 1) ++par;
    profile[V + 2] = par;
    per_vertex[v] = std::move(profile);
  }
  std::sort(per_vertex.begin(), per_vertex.end());
  std::vector<int> key;
  for (auto& p : per_vertex) key.insert(key.end(), p.begin(), p.end());
  return key;
}

inline bool iso_extend(const MultiGraph& a, const MultiGraph& b, std::vector<int>& map,
                       std::vector<char>& used, int k) {
  const int V = a.V;
  if (k == V) return true;
  for (int w = 0; w < V; ++w) {
    if (used[w]) continue;
    if (a.at(k, k) != b.at(w, w)) continue;
    bool ok = true;
    for (int j = 0; j < k && ok; ++j)
      if (a.at(k, j) != b.at(w, map[j])) ok = false;
    if (!ok) continue;
    used[w] = 1;
    map[k] = w;
    if (iso_extend(a, b, map, used, k + 1)) return true;
    used[w] = 0;
  }
  return false;
}

inline bool multigraph_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.V != b.V) return false;
  std::vector<int> map(a.V, -1);
  std::vector<char> used(a.V, 0);
  return iso_extend(a, b, map, used, 0);
}

inline void count_automorphisms_rec(const MultiGraph& g, std::vector<int>& map,
                                    std::vector<char>& used, int k, std::int64_t& count) {
  const int V = g.V;
  if (k == V) {
    ++count;
    return;
  }
  for (int w = 0; w < V; ++w) {
    if (used[w]) continue;
    if (g.at(k, k) != g.at(w, w)) continue;
    bool ok = true;
    for (int j = 0; j < k && ok; ++j)
      if (g.at(k, j) != g.at(w, map[j])) ok = false;
    if (!ok) continue;
    used[w] = 1;
    map[k] = w;
    count_automorphisms_rec(g, map, used, k + 1, count);
    used[w] = 0;
  }
}

}  // namespace detail

/// Isomorph-free exhaustive list of connected n-regular multigraphs on V
/// vertices with girth >= min_girth. Loops allowed only when min_girth <= 1,
/// parallel edges only when min_girth <= 2. Deterministic: serial generation
/// with sorted partner choices, fingerprint buckets, exact isomorphism
/// rejection inside buckets.
inline std::vector<MultiGraph> generate_regular(int n, int V, int min_girth,
                                                std::int64_t budget = 10'000'000) {
  if (n < 1 || V < 1 || (static_cast<std::int64_t>(n) * V) % 2 != 0)
    throw std::domain_error("generate_regular: nV must be even and positive");
  std::map<std::vector<int>, std::vector<MultiGraph>> buckets;
  std::int64_t produced = 0;
  MultiGraph g(V);

  std::function<void(int, int, int)> rec = [&](int v, int from, int max_used) {
    while (v < V && g.degree(v) == n) {
      ++v;
      from = v;
    }
    if (v == V) {
      if (!detail::is_connected(g)) return;
      auto key = detail::invariant_key(g);
      auto& bucket = buckets[key];
      for (const auto& rep : bucket)
        if (detail::multigraph_isomorphic(g, rep)) return;
      bucket.push_back(g);
      if (++produced > budget) throw BudgetExceeded(produced);
      return;
    }
    int deficit = n - g.degree(v);
    if (min_girth <= 1 && deficit >= 2 && from <= v) {
      g.at(v, v) += 1;
      rec(v, v, std::max(max_used, v));
      g.at(v, v) -= 1;
    }
    int hi = std::min(V - 1, max_used + 1);
    for (int w = std::max(from, v + 1); w <= hi; ++w) {
      if (g.degree(w) >= n) continue;
      if (g.at(v, w) > 0 && min_girth > 2) continue;
      if (min_girth > 2) {
        int d = detail::bfs_distance(g, v, w);
        if (d >= 0 && d + 1 < min_girth) continue;
      }
      g.at(v, w) += 1;
      g.at(w, v) += 1;
      rec(v, w, std::max(max_used, w));
      g.at(v, w) -= 1;
      g.at(w, v) -= 1;
    }
  };
  rec(0, 0, 0);
  std::vector<MultiGraph> out;
  for (auto& [key, bucket] : buckets)
    for (auto& g2 : bucket) out.push_back(std::move(g2));
  std::sort(out.begin(), out.end());
  return out;
}

/// True iff the automorphism group of the multigraph is trivial.
inline bool automorphism_trivial(const MultiGraph& g) {
  std::vector<int> map(g.V, -1);
  std::vector<char> used(g.V, 0);
  std::int64_t count = 0;
  detail::count_automorphisms_rec(g, map, used, 0, count);
  return count == 1;
}

inline std::int64_t automorphism_count(const MultiGraph& g) {
  std::vector<int> map(g.V, -1);
  std::vector<char> used(g.V, 0);
  std::int64_t count = 0;
  detail::count_automorphisms_rec(g, map, used, 0, count);
  return count;
}

// ---- signed structures -----------------------------------------------------------

struct SignedStructureCount {
  double log_count = 0;         // (n-2) V log 2 + V log((n-1)!)
  std::int64_t exact_small = -1;  // brute-force orbit count, V small only
};

namespace detail {

inline double log_factorial(int k) { return std::lgamma(static_cast<double>(k) + 1.0); }

/// Builds a SignedGraph from a multigraph with explicit slot assignments:
/// order[v] lists the incident edge ends of v in cyclic order, signs[v] the
/// per-corner signs.
struct EndList {
  // per vertex: list of (edge index, end index 0/1)
  std::vector<std::vector<std::pair<int, int>>> ends;
  std::vector<std::pair<int, int>> edge_vertices;
};

inline EndList end_list(const MultiGraph& g) {
  EndList el;
  el.ends.resize(g.V);
  for (int i = 0; i < g.V; ++i) {
    for (int j = i; j < g.V; ++j) {
      int mult = g.at(i, j);
      for (int m = 0; m < mult; ++m) {
        int e = static_cast<int>(el.edge_vertices.size());
        el.edge_vertices.emplace_back(i, j);
        el.ends[i].emplace_back(e, 0);
        el.ends[j].emplace_back(e, 1);
      }
    }
  }
  return el;
}

inline SignedGraph assemble_signed(int n, const EndList& el,
                                   const std::vector<std::vector<int>>& order,
                                   const std::vector<std::vector<int>>& signs) {
  SignedGraph sg;
  sg.n = n;
  sg.vertices.resize(el.ends.size());
  sg.edges.resize(el.edge_vertices.size());
  std::vector<int> end_seen(el.edge_vertices.size(), 0);
  for (int v = 0; v < static_cast<int>(el.ends.size()); ++v) {
    auto& vert = sg.vertices[v];
    vert.cyclic.resize(n);
    vert.signs = signs[v];
    for (int slot = 0; slot < n; ++slot) {
      auto [e, which] = el.ends[v][order[v][slot]];
      vert.cyclic[slot] = e;
      SignedGraph::EdgeEnd end{v, slot};
      if (end_seen[e]++ == 0)
        sg.edges[e].a = end;
      else
        sg.edges[e].b = end;
    }
  }
  return sg;
}

}  // namespace detail

/// Per-graph factor of the signed-structure count, as a natural log;
/// for V <= max_exact_vertices also the exact orbit count of signed
/// structures under vertex flips composed with relabelings (computed by
/// canonicalizing every structure, so the default cutoff is small).
inline SignedStructureCount count_signed_structures(const MultiGraph& g, int n,
                                                    int max_exact_vertices = 4) {
  SignedStructureCount out;
  const int V = g.V;
  out.log_count = (n - 2) * V * std::log(2.0) + V * detail::log_factorial(n - 1);
  if (V > max_exact_vertices) return out;
  for (int v = 0; v < V; ++v)
    if (g.degree(v) != n) throw std::domain_error("count_signed_structures: not n-regular");

  detail::EndList el = detail::end_list(g);
  // enumerate cyclic orders: fix slot 0 = end 0, permute the rest
  std::vector<std::vector<std::vector<int>>> orders_per_vertex(V);
  for (int v = 0; v < V; ++v) {
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<int> rest(base.begin() + 1, base.end());
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<int> ord;
      ord.push_back(0);
      ord.insert(ord.end(), rest.begin(), rest.end());
      orders_per_vertex[v].push_back(ord);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  // enumerate sign patterns with product -1: free choice on first n-1 corners
  std::vector<std::vector<std::vector<int>>> signs_per_vertex(V);
  for (int v = 0; v < V; ++v) {
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> sg(n, 1);
      int prod = 1;
      for (int i = 0; i < n - 1; ++i) {
        sg[i] = (mask & (1u << i)) ? -1 : 1;
        prod *= sg[i];
      }
      sg[n - 1] = -prod;
      signs_per_vertex[v].push_back(sg);
    }
  }
  std::set<std::vector<int>> orbit_keys;
  std::vector<int> order_idx(V, 0), sign_idx(V, 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == V) {
      std::vector<std::vector<int>> order(V), signs(V);
      for (int u = 0; u < V; ++u) {
        order[u] = orders_per_vertex[u][order_idx[u]];
        signs[u] = signs_per_vertex[u][sign_idx[u]];
      }
      SignedGraph sg = detail::assemble_signed(n, el, order, signs);
      orbit_keys.insert(canonical_signed_form(sg));
      return;
    }
    for (order_idx[v] = 0;
         order_idx[v] < static_cast<int>(orders_per_vertex[v].size()); ++order_idx[v])
      for (sign_idx[v] = 0;
           sign_idx[v] < static_cast<int>(signs_per_vertex[v].size()); ++sign_idx[v])
        rec(v + 1);
  };
  rec(0);
  out.exact_small = static_cast<std::int64_t>(orbit_keys.size());
  return out;
}

// ---- asymptotic bounds --------------------------------------------------------------

struct CountReport {
  int n = 0, w = 0;
  std::int64_t E = 0, V = 0;
  std::int64_t exact_graph_count = -1;   // filled by callers that generate
  std::int64_t asymmetric_count = -1;
  double signed_structures_per_graph_log = 0;
  double u_asymptotic = 0;       // Bollobas main term (value, may underflow)
  double u_asymptotic_log = 0;   // same in logs, always finite
  double girth_factor_log = 0;   // Wormald exponent: -sum_{i=3}^{w-1} (n-1)^i / 2i
  double alpha_log = 0;          // -sum_{i=1}^{w-1} (n-1)^i / 2i
  double s_lower_log = 0;        // alpha_log + log((2E)! 2^E) - log(E! V! (4n)^V)
};

namespace detail {

/// log of sum_{i=1}^{m} q^i / (2i) for q >= 2, stable for astronomically
/// large m: the tail is expanded around the leading term.
inline double log_power_sum(double q, std::int64_t m) {
  if (m <= 0) return -std::numeric_limits<double>::infinity();
  const double logq = std::log(q);
  if (m <= 200000) {
    LogReal acc = LogReal::zero();
    for (std::int64_t i = 1; i <= m; ++i)
      acc = acc + LogReal::from_log(i * logq - std::log(2.0 * i));
    return acc.log_abs;
  }
  // sum = q^m/(2m) * sum_{k=0}^{m-1} q^{-k} * m/(m-k); truncate when terms
  // fall below double resolution.
  double corr = 0.0;
  for (int k = 0; k < 120; ++k) {
    double term = std::exp(-k * logq) * (static_cast<double>(m) / (m - k));
    corr += term;
    if (term < 1e-20 * corr) break;
  }
  return m * logq - std::log(2.0 * m) + std::log(corr);
}

}  // namespace detail

/// alpha_n in log form: alpha_log(n, w) = -sum_{i=1}^{w-1} (n-1)^i / 2i.
inline double alpha_log(int n, std::int64_t w) {
  if (n < 3) throw std::domain_error("alpha_log: n >= 3 required");
  return -std::exp(detail::log_power_sum(static_cast<double>(n - 1), w - 1)) * 1.0;
}

/// Same, returned as the log-scale exponent without exponentiating when the
/// magnitude itself is what is needed.
inline double log_one_over_alpha(int n, std::int64_t w) {
  return detail::log_power_sum(static_cast<double>(n - 1), w - 1);
}

inline CountReport asymptotic_bounds(int n, std::int64_t E, int w) {
  if (n < 3) throw std::domain_error("asymptotic_bounds: n >= 3 required");
  if ((2 * E) % n != 0)
    throw std::domain_error("asymptotic_bounds: n must divide 2E");
  CountReport r;
  r.n = n;
  r.E = E;
  r.V = 2 * E / n;
  r.w = w;
  const double log2 = std::log(2.0);
  auto lf = [](double x) { return std::lgamma(x + 1.0); };
  const double V = static_cast<double>(r.V);
  r.signed_structures_per_graph_log = (n - 2) * V * log2 + V * detail::log_factorial(n - 1);
  // Bollobas: exp(-sum_{i=1}^{2} (n-1)^i/2i) (2E)!/(2^E E! V! (n!)^V)
  double head = -((n - 1) / 2.0 + (n - 1) * (n - 1) / 4.0);
  r.u_asymptotic_log = head + lf(2.0 * E) - E * log2 - lf(static_cast<double>(E)) -
                       lf(V) - V * detail::log_factorial(n);
  r.u_asymptotic = std::exp(r.u_asymptotic_log);
  // Wormald girth factor: empty sum for w <= 3
  {
    double s = 0.0;
    for (int i = 3; i <= w - 1; ++i) s += std::pow(n - 1.0, i) / (2.0 * i);
    r.girth_factor_log = -s;
  }
  r.alpha_log = -std::exp(detail::log_power_sum(n - 1.0, w - 1));
  r.s_lower_log = r.alpha_log + lf(2.0 * E) + E * log2 - lf(static_cast<double>(E)) -
                  lf(V) - V * std::log(4.0 * n);
  return r;
}

/// Super-exponential lower bound on the number of asymmetric examples in a
/// genus, in log form. The free constant beta is supplied by the caller;
/// only its existence is guaranteed, not a value.
inline double count_lower_bound_log(int n, std::int64_t g, double beta, std::int64_t w_n) {
  if (n < 3) throw std::domain_error("count_lower_bound_log: n >= 3 required");
  if ((2 * (g - 1)) % n != 0)
    throw std::domain_error("count_lower_bound_log: 2(g-1)/n must be integral");
  if (!(beta > 0)) throw std::domain_error("count_lower_bound_log: beta > 0 required");
  double a_log = -std::exp(detail::log_power_sum(n - 1.0, w_n - 1));
  return a_log + (1.0 - 2.0 / n) * g * std::log(beta * g);
}

}  // namespace systole
