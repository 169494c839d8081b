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

// Shared graph fixtures for the test suites.

#include <map>
#include <utility>
#include <vector>

#include "systole/signed_graph.hpp"

namespace test_graphs {

/// Two vertices joined by three parallel edges.
inline systole::SignedGraph theta(std::vector<int> signs_u, std::vector<int> signs_v) {
  systole::SignedGraph g;
  g.n = 3;
  g.vertices.resize(2);
  g.edges.resize(3);
  for (int e = 0; e < 3; ++e) {
    g.vertices[0].cyclic.push_back(e);
    g.vertices[1].cyclic.push_back(e);
    g.edges[e].a = {0, e};
    g.edges[e].b = {1, e};
  }
  g.vertices[0].signs = std::move(signs_u);
  g.vertices[1].signs = std::move(signs_v);
  return g;
}

/// Cycle of length V as a 2-regular signed graph, signs (+,-) everywhere.
inline systole::SignedGraph cycle_graph(int V) {
  systole::SignedGraph g;
  g.n = 2;
  g.vertices.resize(V);
  g.edges.resize(V);
  for (int e = 0; e < V; ++e) {
    g.edges[e].a = {e, 1};
    g.edges[e].b = {(e + 1) % V, 0};
  }
  for (int v = 0; v < V; ++v) {
    g.vertices[v].cyclic = {(v + V - 1) % V, v};
    g.vertices[v].signs = {1, -1};
  }
  return g;
}

/// Builds a signed graph from an edge list with slot-order cyclic orders and
/// signs (+,...,+,-) at every vertex.
inline systole::SignedGraph from_edges(int n, int V,
                                       const std::vector<std::pair<int, int>>& edges) {
  systole::SignedGraph g;
  g.n = n;
  g.vertices.resize(V);
  g.edges.resize(edges.size());
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    auto [u, v] = edges[e];
    int su = static_cast<int>(g.vertices[u].cyclic.size());
    g.vertices[u].cyclic.push_back(e);
    g.edges[e].a = {u, su};
    int sv = static_cast<int>(g.vertices[v].cyclic.size());
    g.vertices[v].cyclic.push_back(e);
    g.edges[e].b = {v, sv};
  }
  for (auto& vert : g.vertices) {
    vert.signs.assign(n, 1);
    vert.signs[n - 1] = -1;
  }
  return g;
}

/// Complete graph on m vertices as an (m-1)-regular signed graph.
inline systole::SignedGraph complete_signed(int m) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) edges.push_back({u, v});
  return from_edges(m - 1, m, edges);
}

inline systole::SignedGraph k4_signed() {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) edges.push_back({u, v});
  return from_edges(3, 4, edges);
}

inline systole::SignedGraph petersen_signed() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return from_edges(3, 10, edges);
}

/// The unique cubic graph of girth 7 on 24 vertices, in LCF form
/// [12, 7, -7]^8 over a Hamiltonian cycle.
inline systole::SignedGraph mcgee_signed() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 24; ++i) edges.push_back({i, (i + 1) % 24});
  const int lcf[3] = {12, 7, -7};
  for (int i = 0; i < 24; ++i) {
    int j = ((i + lcf[i % 3]) % 24 + 24) % 24;
    if (i < j) edges.push_back({i, j});
  }
  return from_edges(3, 24, edges);
}

/// The unique cubic graph of girth 8 on 30 vertices (the Levi graph of the
/// generalized quadrangle), in LCF form [-13, -9, 7, -7, 9, 13]^5.
inline systole::SignedGraph tutte_coxeter_signed() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 30; ++i) edges.push_back({i, (i + 1) % 30});
  const int lcf[6] = {-13, -9, 7, -7, 9, 13};
  for (int i = 0; i < 30; ++i) {
    int j = ((i + lcf[i % 6]) % 30 + 30) % 30;
    if (i < j) edges.push_back({i, j});
  }
  return from_edges(3, 30, edges);
}

/// Single edge on two vertices: the 1-regular signed graph.
inline systole::SignedGraph single_edge_signed() {
  systole::SignedGraph g;
  g.n = 1;
  g.vertices.resize(2);
  g.edges.resize(1);
  g.edges[0].a = {0, 0};
  g.edges[0].b = {1, 0};
  g.vertices[0].cyclic = {0};
  g.vertices[0].signs = {-1};
  g.vertices[1].cyclic = {0};
  g.vertices[1].signs = {-1};
  return g;
}

}  // namespace test_graphs
