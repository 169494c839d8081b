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

// The 4-regular ribbon graph induced by a signed graph: one 4-valent vertex
// per edge, opposite-pairing of neighbor edges, and a half twist wherever the
// corner sign is negative. Straight cycles are the rings; boundary walks of
// the band surface correspond to the seams of the glued-up surface.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "systole/signed_graph.hpp"

namespace systole {

struct RibbonGraph {
  // Vertex slots are cyclically ordered 0=left, 1=bottom, 2=right, 3=top.
  struct Dart {
    int vertex = -1;
    int slot = -1;
    friend bool operator==(const Dart&, const Dart&) = default;
    friend auto operator<=>(const Dart&, const Dart&) = default;
  };
  struct Edge {
    Dart a, b;
    bool twisted = false;
  };

  int num_vertices = 0;
  std::vector<Edge> edges;

  // dart indexing: 4 * vertex + slot
  int dart_count() const { return 4 * num_vertices; }
  int dart_id(const Dart& d) const { return 4 * d.vertex + d.slot; }
  Dart dart_of(int id) const { return {id / 4, id % 4}; }

  /// edge index at each dart; built on demand by finalize().
  std::vector<int> edge_at;

  void finalize() {
    edge_at.assign(dart_count(), -1);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      for (const Dart& d : {edges[e].a, edges[e].b}) {
        if (d.vertex < 0 || d.vertex >= num_vertices || d.slot < 0 || d.slot > 3)
          throw GraphError(GraphError::Kind::DanglingEdgeEnd, "ribbon dart out of range");
        int id = dart_id(d);
        if (edge_at[id] != -1)
          throw GraphError(GraphError::Kind::DanglingEdgeEnd, "ribbon dart used twice");
        edge_at[id] = e;
      }
    }
    for (int id = 0; id < dart_count(); ++id)
      if (edge_at[id] < 0)
        throw GraphError(GraphError::Kind::DegreeError, "ribbon vertex not 4-valent");
  }

  Dart partner(const Dart& d) const {
    const Edge& e = edges[edge_at[dart_id(d)]];
    return (e.a == d) ? e.b : e.a;
  }
  bool twisted_at(const Dart& d) const { return edges[edge_at[dart_id(d)]].twisted; }
  static Dart next(const Dart& d) { return {d.vertex, (d.slot + 1) % 4}; }
  static Dart prev(const Dart& d) { return {d.vertex, (d.slot + 3) % 4}; }
  static Dart opposite(const Dart& d) { return {d.vertex, (d.slot + 2) % 4}; }
};

/// Construction from a signed graph: ribbon vertex k = source edge k; the two
/// ends of source edge e attach its neighbors at u to (left, right) and its
/// neighbors at v to (bottom, top), predecessor first.
inline RibbonGraph to_ribbon(const SignedGraph& g) {
  validate(g);
  const int n = g.n;
  RibbonGraph r;
  r.num_vertices = static_cast<int>(g.edges.size());
  // One ribbon edge per corner (vertex, slot i) of the source graph, joining
  // the successor side of the edge at slot i to the predecessor side of the
  // edge at slot i+1.
  auto side_slots = [&](const SignedGraph::EdgeEnd& end,
                        int edge_index) -> std::pair<int, int> {
    // Returns (predecessor_slot, successor_slot) of the ribbon vertex for
    // this end: (left, right) for the end stored first, (bottom, top) for
    // the second.
    const auto& e = g.edges[edge_index];
    bool is_first = (e.a == end);
    return is_first ? std::make_pair(0, 2) : std::make_pair(1, 3);
  };
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    for (int i = 0; i < n; ++i) {
      int e1 = g.vertices[v].cyclic[i];
      int e2 = g.vertices[v].cyclic[(i + 1) % n];
      SignedGraph::EdgeEnd end1{v, i}, end2{v, (i + 1) % n};
      auto [pred1, succ1] = side_slots(end1, e1);
      auto [pred2, succ2] = side_slots(end2, e2);
      RibbonGraph::Edge redge;
      redge.a = {e1, succ1};   // successor side of e1 at v
      redge.b = {e2, pred2};   // predecessor side of e2 at v
      redge.twisted = g.vertices[v].signs[i] < 0;
      r.edges.push_back(redge);
    }
  }
  r.finalize();
  return r;
}

// ---- boundary walk ----------------------------------------------------------

/// Boundary components of the band surface. Lengths count corner gaps, so a
/// component of "length V" passes V vertices; the total over components is
/// 4 * num_vertices.
struct BoundaryData {
  std::vector<int> lengths;  // one entry per undirected boundary component
};

inline BoundaryData boundaries(const RibbonGraph& g) {
  // States: (dart, side) with side 0 = right, 1 = left, both inward-facing.
  const int D = g.dart_count();
  auto state_id = [&](const RibbonGraph::Dart& d, int side) {
    return 2 * g.dart_id(d) + side;
  };
  auto step = [&](int sid) {
    RibbonGraph::Dart d = g.dart_of(sid / 2);
    int side = sid % 2;
    RibbonGraph::Dart out = (side == 0) ? RibbonGraph::next(d) : RibbonGraph::prev(d);
    bool tw = g.twisted_at(out);
    RibbonGraph::Dart in = g.partner(out);
    int new_side = (side == 0) ? (tw ? 1 : 0) : (tw ? 0 : 1);
    return state_id(in, new_side);
  };
  // Reversal: the same gap traversed the other way.
  auto rev = [&](int sid) {
    RibbonGraph::Dart d = g.dart_of(sid / 2);
    int side = sid % 2;
    return (side == 0) ? state_id(RibbonGraph::next(d), 1)
                       : state_id(RibbonGraph::prev(d), 0);
  };
  std::vector<int> orbit_of(2 * D, -1);
  std::vector<int> orbit_len;
  for (int s = 0; s < 2 * D; ++s) {
    if (orbit_of[s] >= 0) continue;
    int id = static_cast<int>(orbit_len.size());
    int len = 0;
    int cur = s;
    do {
      orbit_of[cur] = id;
      cur = step(cur);
      ++len;
    } while (cur != s);
    orbit_len.push_back(len);
  }
  // Pair each orbit with its reverse and report one of the two.
  BoundaryData out;
  std::vector<char> reported(orbit_len.size(), 0);
  for (int s = 0; s < 2 * D; ++s) {
    int a = orbit_of[s], b = orbit_of[rev(s)];
    if (reported[a] || reported[b]) continue;
    reported[a] = reported[b] = 1;
    out.lengths.push_back(orbit_len[a]);
  }
  std::sort(out.lengths.begin(), out.lengths.end());
  return out;
}

// ---- straight cycles (rings) -------------------------------------------------

struct StraightCycle {
  std::vector<RibbonGraph::Dart> entries;  // entry dart at each visited vertex
  bool moebius = false;                    // odd number of half twists
};

/// All straight cycles: enter a vertex, leave through the opposite slot.
/// Each cycle is reported once (direction canonicalized).
inline std::vector<StraightCycle> straight_cycles(const RibbonGraph& g) {
  const int D = g.dart_count();
  std::vector<char> used(D, 0);
  std::vector<StraightCycle> out;
  for (int start = 0; start < D; ++start) {
    if (used[start]) continue;
    StraightCycle cyc;
    RibbonGraph::Dart d = g.dart_of(start);
    int twists = 0;
    RibbonGraph::Dart cur = d;
    do {
      used[g.dart_id(cur)] = 1;
      cyc.entries.push_back(cur);
      RibbonGraph::Dart out_dart = RibbonGraph::opposite(cur);
      used[g.dart_id(out_dart)] = 1;
      twists += g.twisted_at(out_dart) ? 1 : 0;
      cur = g.partner(out_dart);
    } while (!(cur == d));
    cyc.moebius = (twists % 2) == 1;
    out.push_back(std::move(cyc));
  }
  return out;
}

// ---- canonical form ----------------------------------------------------------

namespace detail {

/// BFS serialization of a connected ribbon graph from a root dart with a
/// chosen flip of the root vertex. The flip of every other vertex is gauged
/// so its entry edge becomes untwisted (a spanning-tree twist gauge); the
/// emitted key is then a complete invariant given the root choice. Twists on
/// loops are gauge-invariant and emitted as stored.
inline std::vector<int> ribbon_serialize(const RibbonGraph& g,
                                         const RibbonGraph::Dart& root,
                                         bool root_flip) {
  std::vector<int> dart_label(g.dart_count(), -1);
  std::vector<signed char> flip(g.num_vertices, -1);
  std::vector<int> order;
  order.reserve(g.dart_count());
  auto visit = [&](int v, int anchor_slot, int f) {
    flip[v] = static_cast<signed char>(f);
    for (int i = 0; i < 4; ++i) {
      int slot = f ? (anchor_slot - i + 8) % 4 : (anchor_slot + i) % 4;
      int id = g.dart_id({v, slot});
      dart_label[id] = static_cast<int>(order.size());
      order.push_back(id);
    }
  };
  visit(root.vertex, root.slot, root_flip ? 1 : 0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    RibbonGraph::Dart d = g.dart_of(order[head]);
    RibbonGraph::Dart far = g.partner(d);
    if (dart_label[g.dart_id(far)] >= 0) continue;
    int entry_twist = static_cast<int>(g.twisted_at(d)) ^ (flip[d.vertex] == 1);
    visit(far.vertex, far.slot, entry_twist);
  }
  if (static_cast<int>(order.size()) != g.dart_count()) return {};  // disconnected
  std::vector<int> key;
  key.reserve(2 * g.dart_count());
  for (int id : order) {
    RibbonGraph::Dart d = g.dart_of(id);
    RibbonGraph::Dart far = g.partner(d);
    int tw = static_cast<int>(g.twisted_at(d)) ^ (flip[d.vertex] == 1) ^
             (flip[far.vertex] == 1);
    key.push_back(dart_label[g.dart_id(far)]);
    key.push_back(tw);
  }
  return key;
}

}  // namespace detail

/// Canonical key of a connected ribbon graph under vertex relabeling,
/// per-vertex reversal (with the induced twist toggles), and rotation.
inline std::vector<int> canonical_ribbon_form(const RibbonGraph& g) {
  std::vector<int> best;
  for (int v = 0; v < g.num_vertices; ++v)
    for (int s = 0; s < 4; ++s)
      for (int flip = 0; flip < 2; ++flip) {
        std::vector<int> key = detail::ribbon_serialize(g, {v, s}, flip == 1);
        if (!key.empty() && (best.empty() || key < best)) best = key;
      }
  return best;
}

// ---- n = 2 classification ------------------------------------------------------

/// A ribbon graph all of whose straight cycles are twisted bigons, built as a
/// cycle of V vertices; the two free dart pairs of the cut open chain are
/// closed in one of the four admissible ways.
struct N2Classification {
  int class_count = 0;
  std::vector<RibbonGraph> representatives;           // one per class
  std::vector<std::vector<int>> boundary_profiles;    // sorted lengths per class
};

namespace detail {

/// The cut chain: vertices 0..V-1; bigon between k and k+1 attaches at slots
/// {1,3} of k and {0,2} of k+1, one edge twisted. Free darts: (0,0),(0,2),
/// (V-1,1),(V-1,3).
inline RibbonGraph n2_chain(int V) {
  RibbonGraph r;
  r.num_vertices = V;
  for (int k = 0; k + 1 < V; ++k) {
    r.edges.push_back({{k, 1}, {k + 1, 0}, false});
    r.edges.push_back({{k, 3}, {k + 1, 2}, true});
  }
  return r;
}

}  // namespace detail

inline N2Classification n2_classify(int V) {
  if (V < 2) throw std::domain_error("n2_classify: V >= 2 required");
  std::vector<RibbonGraph> closures;
  for (int pairing = 0; pairing < 2; ++pairing) {
    for (int twist_on_first = 0; twist_on_first < 2; ++twist_on_first) {
      RibbonGraph r = detail::n2_chain(V);
      RibbonGraph::Dart a1{0, 0}, a2{0, 2};
      RibbonGraph::Dart b1{V - 1, 1}, b2{V - 1, 3};
      RibbonGraph::Dart t1 = pairing ? b2 : b1;
      RibbonGraph::Dart t2 = pairing ? b1 : b2;
      r.edges.push_back({a1, t1, twist_on_first == 1});
      r.edges.push_back({a2, t2, twist_on_first == 0});
      r.finalize();
      closures.push_back(std::move(r));
    }
  }
  // sanity: every straight cycle must be a Moebius bigon
  for (const auto& g : closures) {
    for (const auto& cyc : straight_cycles(g)) {
      if (cyc.entries.size() != 2 || !cyc.moebius)
        throw std::runtime_error("n2_classify: closure is not made of Moebius bigons");
    }
  }
  N2Classification out;
  std::map<std::vector<int>, int> seen;
  for (auto& g : closures) {
    std::vector<int> key = canonical_ribbon_form(g);
    if (seen.emplace(key, 1).second) {
      out.representatives.push_back(g);
      out.boundary_profiles.push_back(boundaries(g).lengths);
    }
  }
  out.class_count = static_cast<int>(out.representatives.size());
  return out;
}

}  // namespace systole
