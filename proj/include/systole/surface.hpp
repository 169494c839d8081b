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

// Combinatorial model of the closed surface obtained by inflating each
// ribbon-graph vertex to a four-holed sphere (a cross of two right-angled
// octagons). The surface is stored as an octagon complex; systoles are closed
// chains of chords with crossing points at fixed rational positions on the
// octagon sides, and intersection numbers are computed by chord interleaving
// plus shared-point counting. All metric data lives in RingGeometry.
//
// Crossing positions use integer "levels" 0..2n on each glued side pair:
// corners at 0 and 2n, the diagonal a/b-curves at even levels 2k, and the
// transverse surgery curves at odd levels (they collide with the a/b grid at
// the window middle when n is odd, which is an exact property of the
// geometry, not an approximation).

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "systole/angles.hpp"
#include "systole/ribbon.hpp"
#include "systole/ring.hpp"
#include "systole/signed_graph.hpp"

namespace systole {

struct SurfaceError : std::runtime_error {
  enum class Kind { EvenTwistRing, UnmatchedSlot, ItineraryNotClosed, Degenerate };
  Kind kind;
  SurfaceError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

class SurfaceModel {
 public:
  // Octagon ids: 2*cross + 0 (front) or + 1 (back).
  // Local side indices run counterclockwise; ports alternate with seams.
  //   front: 0=L 1=sLT 2=T 3=sTR 4=R 5=sRB 6=B 7=sBL
  //   back:  0=L 1=sBL 2=B 3=sRB 4=R 5=sTR 6=T 7=sLT
  // Ribbon slots: 0=left 1=bottom 2=right 3=top.

  int n = 0;
  RibbonGraph source;
  int num_crosses = 0;
  int genus = 0;

  struct SideRef {
    int oct = -1;
    int side = -1;
    friend bool operator==(const SideRef&, const SideRef&) = default;
    friend auto operator<=>(const SideRef&, const SideRef&) = default;
  };

  std::vector<std::array<SideRef, 2>> side_pairs;  // [0] is the canonical view
  std::vector<int> pair_at;                        // oct*8+side -> pair id
  std::vector<int> vertex_of_corner;               // oct*8+corner -> vertex id
  int num_corner_vertices = 0;

  struct RingStep {
    int oct = -1;
    int entry_side = -1, exit_side = -1;
    int entry_pair = -1;
    bool entry_canonical = false;  // entry view == canonical view of entry_pair
  };
  struct Ring {
    std::vector<RingStep> steps;  // length 2n
  };
  std::vector<Ring> rings;

  static int port_side_index(bool back, int slot) {
    // front: L=0 B=6 R=4 T=2 ; back: L=0 B=2 R=4 T=6
    static constexpr int kFront[4] = {0, 6, 4, 2};
    static constexpr int kBack[4] = {0, 2, 4, 6};
    return back ? kBack[slot] : kFront[slot];
  }
  static int slot_of_port_side(bool back, int side) {
    for (int s = 0; s < 4; ++s)
      if (port_side_index(back, s) == side) return s;
    return -1;
  }
  static bool is_port_side(int side) { return side % 2 == 0; }

  int oct_of(int cross, bool back) const { return 2 * cross + (back ? 1 : 0); }
  static bool oct_is_back(int oct) { return oct % 2 == 1; }
  static int cross_of(int oct) { return oct / 2; }

  int pair_id(int oct, int side) const { return pair_at[oct * 8 + side]; }
  int vertex_id(int oct, int corner) const { return vertex_of_corner[oct * 8 + corner]; }

  /// Level conversion between the two views of a glued side pair.
  int to_canonical_level(int pair, int oct, int side, int level) const {
    SideRef me{oct, side};
    return (side_pairs[pair][0] == me) ? level : 2 * n - level;
  }
};

// ---- curves ------------------------------------------------------------------

struct Curve {
  enum class Kind { A, B, C, F };
  Kind kind = Kind::A;
  int ring = -1;     // A/B: ring id
  int index = -1;    // A/B: strip position; C: central cross; F: f-circle tag
  int variant = -1;  // C: 0..3

  // Global crossing-point ids for shared-point detection. Edge points encode
  // (pair, canonical level); vertex points encode corner classes.
  std::vector<std::int64_t> point_ids;

  // One chord per traversed octagon, endpoints as cyclic boundary keys
  // (side * 2n + local level, corners unified to the following side's 0).
  struct Chord {
    int oct = -1;
    int key_a = 0, key_b = 0;
  };
  std::vector<Chord> chords;
};

namespace detail {

inline std::int64_t edge_point_id(int pair, int level) {
  return static_cast<std::int64_t>(pair) * 4096 + level;
}
inline std::int64_t vertex_point_id(int vid) {
  return -1 - static_cast<std::int64_t>(vid);
}

/// Boundary key of an interior side point.
inline int side_key(int n, int side, int level) { return side * 2 * n + level; }
/// Boundary key of corner i (between sides i and i+1): the level-0 end of
/// side i+1.
inline int corner_key(int n, int corner) { return ((corner + 1) % 8) * 2 * n; }

}  // namespace detail

// ---- construction --------------------------------------------------------------

inline SurfaceModel build_surface(int n, const RibbonGraph& ribbon) {
  if (n < 1) throw std::domain_error("build_surface: n >= 1 required");
  if (n > 1000)
    throw std::domain_error("build_surface: crossing-point ids support n <= 1000");
  SurfaceModel s;
  s.n = n;
  s.source = ribbon;
  s.source.finalize();
  s.num_crosses = ribbon.num_vertices;
  const int C = s.num_crosses;
  s.pair_at.assign(16 * C, -1);

  auto add_pair = [&](SurfaceModel::SideRef x, SurfaceModel::SideRef y) {
    if (y < x) std::swap(x, y);
    int id = static_cast<int>(s.side_pairs.size());
    s.side_pairs.push_back({x, y});
    for (const auto& r : {x, y}) {
      int& slot = s.pair_at[r.oct * 8 + r.side];
      if (slot != -1)
        throw SurfaceError(SurfaceError::Kind::UnmatchedSlot,
                           "side glued twice at octagon " + std::to_string(r.oct));
      slot = id;
    }
    return id;
  };

  // Port gluings from ribbon edges: front of one cross meets front of the
  // other when the edge is untwisted, front meets back otherwise.
  for (const auto& e : s.source.edges) {
    for (int from_back = 0; from_back < 2; ++from_back) {
      bool to_back = e.twisted ? !from_back : static_cast<bool>(from_back);
      SurfaceModel::SideRef x{s.oct_of(e.a.vertex, from_back),
                              SurfaceModel::port_side_index(from_back, e.a.slot)};
      SurfaceModel::SideRef y{s.oct_of(e.b.vertex, to_back),
                              SurfaceModel::port_side_index(to_back, e.b.slot)};
      add_pair(x, y);
    }
  }
  // Seam gluings inside each cross: seam side indices pair front k <-> back 8-k.
  for (int c = 0; c < C; ++c) {
    for (int k = 1; k < 8; k += 2) {
      SurfaceModel::SideRef x{s.oct_of(c, false), k};
      SurfaceModel::SideRef y{s.oct_of(c, true), 8 - k};
      add_pair(x, y);
    }
  }
  for (int i = 0; i < 16 * C; ++i)
    if (s.pair_at[i] < 0)
      throw SurfaceError(SurfaceError::Kind::UnmatchedSlot, "unglued octagon side");

  // Corner classes: gluing a side pair identifies the param-1 corner of one
  // view with the param-0 corner of the other.
  {
    std::vector<int> uf(8 * 2 * C);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    auto unite = [&](int a, int b) { uf[find(a)] = find(b); };
    for (const auto& pr : s.side_pairs) {
      auto [x, y] = pr;
      int cx0 = x.oct * 8 + (x.side + 7) % 8;  // param-0 corner of x view
      int cx1 = x.oct * 8 + x.side;            // param-1 corner
      int cy0 = y.oct * 8 + (y.side + 7) % 8;
      int cy1 = y.oct * 8 + y.side;
      unite(cx0, cy1);
      unite(cx1, cy0);
    }
    std::map<int, int> relabel;
    s.vertex_of_corner.assign(16 * C, -1);
    for (int i = 0; i < 16 * C; ++i) {
      int r = find(i);
      auto [it, fresh] = relabel.emplace(r, static_cast<int>(relabel.size()));
      s.vertex_of_corner[i] = it->second;
    }
    s.num_corner_vertices = static_cast<int>(relabel.size());
    // Every corner class of a closed gluing has exactly four corners.
    std::vector<int> count(s.num_corner_vertices, 0);
    for (int i = 0; i < 16 * C; ++i) ++count[s.vertex_of_corner[i]];
    for (int c : count)
      if (c != 4)
        throw SurfaceError(SurfaceError::Kind::UnmatchedSlot,
                           "corner class of size " + std::to_string(c));
  }

  // Euler characteristic of the complex: octagons - side pairs + vertices.
  {
    int F = 2 * C;
    int E = static_cast<int>(s.side_pairs.size());
    int V = s.num_corner_vertices;
    int chi = V - E + F;
    if (chi % 2 != 0 || chi > 0)
      throw SurfaceError(SurfaceError::Kind::UnmatchedSlot, "inconsistent Euler characteristic");
    s.genus = (2 - chi) / 2;
  }

  // Rings: walk straight through opposite ports; each octagon carries one
  // horizontal and one vertical traversal.
  {
    std::vector<char> seen(2 * C * 2, 0);  // oct * 2 + axis, axis = slot % 2
    for (int oct0 = 0; oct0 < 2 * C; ++oct0) {
      for (int axis = 0; axis < 2; ++axis) {
        if (seen[oct0 * 2 + axis]) continue;
        SurfaceModel::Ring ring;
        int oct = oct0;
        int entry_slot = axis;  // slot 0 = left or 1 = bottom
        int guard = 0;
        do {
          if (++guard > 8 * C + 8)
            throw SurfaceError(SurfaceError::Kind::EvenTwistRing, "ring walk does not close");
          bool back = SurfaceModel::oct_is_back(oct);
          int cross = SurfaceModel::cross_of(oct);
          SurfaceModel::RingStep step;
          step.oct = oct;
          step.entry_side = SurfaceModel::port_side_index(back, entry_slot);
          int exit_slot = (entry_slot + 2) % 4;
          step.exit_side = SurfaceModel::port_side_index(back, exit_slot);
          step.entry_pair = s.pair_id(oct, step.entry_side);
          step.entry_canonical =
              (s.side_pairs[step.entry_pair][0] ==
               SurfaceModel::SideRef{oct, step.entry_side});
          seen[oct * 2 + entry_slot % 2] = 1;
          ring.steps.push_back(step);
          // advance through the exit gluing
          RibbonGraph::Dart out{cross, exit_slot};
          RibbonGraph::Dart in = s.source.partner(out);
          bool tw = s.source.twisted_at(out);
          bool next_back = tw ? !back : back;
          oct = s.oct_of(in.vertex, next_back);
          entry_slot = in.slot;
        } while (!(oct == oct0 && entry_slot == axis));
        if (static_cast<int>(ring.steps.size()) % 2 != 0)
          throw SurfaceError(SurfaceError::Kind::EvenTwistRing, "odd ring walk length");
        if (static_cast<int>(ring.steps.size()) != 2 * n)
          throw SurfaceError(
              SurfaceError::Kind::EvenTwistRing,
              "ring closes after " + std::to_string(ring.steps.size()) +
                  " octagons instead of " + std::to_string(2 * n) +
                  " (even number of half twists, or wrong regularity)");
        s.rings.push_back(std::move(ring));
      }
    }
  }
  return s;
}

inline SurfaceModel build_surface(const SignedGraph& g) {
  return build_surface(g.n, to_ribbon(g));
}

// ---- curve construction ---------------------------------------------------------

namespace detail {

/// Entry-view level -> boundary key inside the entered octagon.
inline int entry_key(const SurfaceModel& s, const SurfaceModel::RingStep& st, int level) {
  return side_key(s.n, st.entry_side, level);
}

struct LegCrossing {
  int pair = -1;
  int oct_in = -1;          // octagon entered
  int side_in = -1;         // its local side index
  int oct_out = -1;         // octagon exited
  int side_out = -1;        // local side in the exited octagon
  int entry_level = -1;     // level in the entered octagon's view
};

/// Walks `count` port crossings from `oct`, exiting first through local side
/// `exit_side`. Entry levels are filled by the caller.
inline std::vector<LegCrossing> walk_leg(const SurfaceModel& s, int oct, int exit_side,
                                         int count) {
  std::vector<LegCrossing> out;
  int cur = oct;
  int side = exit_side;
  for (int k = 0; k < count; ++k) {
    LegCrossing cr;
    cr.oct_out = cur;
    cr.side_out = side;
    cr.pair = s.pair_id(cur, side);
    const auto& pr = s.side_pairs[cr.pair];
    SurfaceModel::SideRef me{cur, side};
    SurfaceModel::SideRef other = (pr[0] == me) ? pr[1] : pr[0];
    cr.oct_in = other.oct;
    cr.side_in = other.side;
    out.push_back(cr);
    // continue straight: exit through the opposite port
    bool back = SurfaceModel::oct_is_back(cr.oct_in);
    int slot = SurfaceModel::slot_of_port_side(back, cr.side_in);
    int exit_slot = (slot + 2) % 4;
    cur = cr.oct_in;
    side = SurfaceModel::port_side_index(back, exit_slot);
  }
  return out;
}

}  // namespace detail

/// All systoles: 2n diagonal curves of each orientation per ring and four
/// surgery curves per cross (two special curves for n = 1, where they run
/// along the seams and carry no chord itinerary, as do the two boundary
/// f-circles that are systoles there).
inline std::vector<Curve> enumerate_systoles(const SurfaceModel& s);

namespace detail {

inline Curve make_ab_curve(const SurfaceModel& s, int ring_id, int j, bool is_b) {
  const int n = s.n;
  const auto& steps = s.rings[ring_id].steps;
  const int m = 2 * n;
  auto step_at = [&](int idx) -> const SurfaceModel::RingStep& {
    return steps[((idx % m) + m) % m];
  };
  Curve c;
  c.kind = is_b ? Curve::Kind::B : Curve::Kind::A;
  c.ring = ring_id;
  c.index = j;
  const int dir = is_b ? -1 : +1;
  // start vertex: level-0 corner of the entry side of step j
  const auto& st0 = step_at(j);
  int start_corner = st0.oct * 8 + (st0.entry_side + 7) % 8;
  int start_vid = s.vertex_of_corner[start_corner];
  c.point_ids.push_back(vertex_point_id(start_vid));
  for (int k = 1; k < n; ++k) {
    const auto& st = step_at(j + dir * k);
    int level = 2 * k;
    int canon = s.to_canonical_level(st.entry_pair, st.oct, st.entry_side, level);
    c.point_ids.push_back(edge_point_id(st.entry_pair, canon));
  }
  // end vertex: level-2n corner of the entry side of step j +- n; must close.
  const auto& stn = step_at(j + dir * n);
  int end_corner = stn.oct * 8 + stn.entry_side;
  int end_vid = s.vertex_of_corner[end_corner];
  if (end_vid != start_vid)
    throw SurfaceError(SurfaceError::Kind::ItineraryNotClosed,
                       "diagonal curve does not close up");
  // chords
  for (int k = 0; k < n; ++k) {
    // octagon between crossings k and k+1 along the travel direction
    const SurfaceModel::RingStep& oct_step = step_at(j + dir * k + (dir < 0 ? -1 : 0));
    Curve::Chord ch;
    ch.oct = oct_step.oct;
    // near endpoint (crossing k) seen from this octagon
    if (k == 0) {
      // corner: the start vertex as a corner of this octagon
      int corner = (dir > 0) ? (oct_step.entry_side + 7) % 8   // param-0 of entry
                             : oct_step.exit_side;             // param-1 of exit
      ch.key_a = corner_key(n, (corner + 0) % 8);
    } else {
      int level = 2 * k;
      ch.key_a = (dir > 0) ? side_key(n, oct_step.entry_side, level)
                           : side_key(n, oct_step.exit_side, 2 * n - level);
    }
    // far endpoint (crossing k+1) seen from this octagon; the closing corner
    // is the param-0 end of the exit side (rising) or the param-1 end of the
    // entry side (falling)
    if (k == n - 1) {
      int corner = (dir > 0) ? (oct_step.exit_side + 7) % 8 : oct_step.entry_side;
      ch.key_b = corner_key(n, corner);
    } else {
      int level = 2 * (k + 1);
      ch.key_b = (dir > 0) ? side_key(n, oct_step.exit_side, 2 * n - level)
                           : side_key(n, oct_step.entry_side, level);
    }
    c.chords.push_back(ch);
  }
  return c;
}

inline Curve make_c_curve(const SurfaceModel& s, int cross, int variant) {
  const int n = s.n;
  // Quadrant (sideA, sideB) of the front octagon: adjacent port sides.
  static constexpr int kSideA[4] = {0, 2, 4, 6};
  const int oct0 = 2 * cross;  // front octagon
  int sideA = kSideA[variant];
  int sideB = (sideA + 2) % 8;
  Curve c;
  c.kind = Curve::Kind::C;
  c.index = cross;
  c.variant = variant;

  auto legA = walk_leg(s, oct0, sideA, n);
  auto legB = walk_leg(s, oct0, sideB, n);
  if (legA.back().oct_in != legB.back().oct_in)
    throw SurfaceError(SurfaceError::Kind::ItineraryNotClosed,
                       "surgery curve legs do not meet");
  int oct_far = legA.back().oct_in;
  if (SurfaceModel::cross_of(oct_far) != cross)
    throw SurfaceError(SurfaceError::Kind::ItineraryNotClosed,
                       "surgery curve far turn is not over the central cross");
  if ((legA.back().side_in - legB.back().side_in + 8) % 4 != 2)
    throw SurfaceError(SurfaceError::Kind::Degenerate,
                       "surgery curve legs meet along the same axis");

  // Entry levels. The first crossing of leg A leaves the front octagon next
  // to the corner it shares with sideB, i.e. at the param-1 end of sideA
  // (sideB follows sideA counterclockwise); mirrored for leg B.
  auto fill_levels = [&](std::vector<LegCrossing>& leg, bool high_at_exit) {
    for (int k = 1; k <= n; ++k) {
      int kappa = std::min(k, n + 1 - k);
      bool mid = (n % 2 == 1) && (2 * k == n + 1);
      int level_high = mid ? n + 1 : 2 * n + 1 - 2 * kappa;
      int level = high_at_exit ? level_high : 2 * n - level_high;
      leg[k - 1].entry_level = level;
    }
  };
  // Leg A exits sideA at its param-1 end (toward the seam before sideB),
  // so the entry level of its first crossing is 2n - (2n-1) = 1: low side.
  // Leg B exits sideB at its param-0 end (same shared corner), entry level
  // 2n - 1: high side.
  fill_levels(legA, /*high_at_exit=*/false);
  fill_levels(legB, /*high_at_exit=*/true);

  // crossing points
  for (const auto& cr : legA) {
    int canon = s.to_canonical_level(cr.pair, cr.oct_in, cr.side_in, cr.entry_level);
    c.point_ids.push_back(edge_point_id(cr.pair, canon));
  }
  for (auto it = legB.rbegin(); it != legB.rend(); ++it) {
    int canon = s.to_canonical_level(it->pair, it->oct_in, it->side_in, it->entry_level);
    c.point_ids.push_back(edge_point_id(it->pair, canon));
  }

  // chords: central turn, legA straights, far turn, legB straights
  {
    Curve::Chord ch;
    ch.oct = oct0;
    ch.key_a = side_key(n, sideA, 2 * n - legA[0].entry_level);
    ch.key_b = side_key(n, sideB, 2 * n - legB[0].entry_level);
    c.chords.push_back(ch);
  }
  for (int k = 1; k < n; ++k) {
    Curve::Chord ch;
    ch.oct = legA[k - 1].oct_in;
    ch.key_a = side_key(n, legA[k - 1].side_in, legA[k - 1].entry_level);
    ch.key_b = side_key(n, legA[k].side_out, 2 * n - legA[k].entry_level);
    c.chords.push_back(ch);
  }
  {
    Curve::Chord ch;
    ch.oct = oct_far;
    ch.key_a = side_key(n, legA.back().side_in, legA.back().entry_level);
    ch.key_b = side_key(n, legB.back().side_in, legB.back().entry_level);
    c.chords.push_back(ch);
  }
  for (int k = n - 1; k >= 1; --k) {
    Curve::Chord ch;
    ch.oct = legB[k - 1].oct_in;
    ch.key_a = side_key(n, legB[k - 1].side_in, legB[k - 1].entry_level);
    ch.key_b = side_key(n, legB[k].side_out, 2 * n - legB[k].entry_level);
    c.chords.push_back(ch);
  }
  return c;
}

}  // namespace detail

inline std::vector<Curve> enumerate_systoles(const SurfaceModel& s) {
  std::vector<Curve> out;
  const int n = s.n;
  for (int r = 0; r < static_cast<int>(s.rings.size()); ++r) {
    for (int j = 0; j < 2 * n; ++j) out.push_back(detail::make_ab_curve(s, r, j, false));
    for (int j = 0; j < 2 * n; ++j) out.push_back(detail::make_ab_curve(s, r, j, true));
  }
  if (n == 1) {
    // Two surgery curves along opposite seam pairs and two boundary circles;
    // they carry no chord itinerary in this model.
    for (int v = 0; v < 2; ++v) {
      Curve c;
      c.kind = Curve::Kind::C;
      c.index = 0;
      c.variant = v;
      out.push_back(c);
    }
    for (int v = 0; v < 2; ++v) {
      Curve c;
      c.kind = Curve::Kind::F;
      c.index = v;
      out.push_back(c);
    }
    return out;
  }
  for (int cross = 0; cross < s.num_crosses; ++cross)
    for (int variant = 0; variant < 4; ++variant)
      out.push_back(detail::make_c_curve(s, cross, variant));
  return out;
}

// ---- intersections ---------------------------------------------------------------

namespace detail {

/// Exactly one of x, y lies in the open cyclic interval (a, b) mod size.
inline bool interleaved(int a, int b, int x, int y, int size) {
  auto in = [&](int p) {
    int rel_b = ((b - a) % size + size) % size;
    int rel_p = ((p - a) % size + size) % size;
    return rel_p > 0 && rel_p < rel_b;
  };
  return in(x) != in(y);
}

}  // namespace detail

/// Geometric intersection number of two distinct systoles: shared crossing
/// points plus chord interleavings inside common octagons.
inline int intersection_number(const SurfaceModel& s, const Curve& c1, const Curve& c2) {
  if (c1.chords.empty() || c2.chords.empty())
    throw std::invalid_argument(
        "intersection_number: curve without an itinerary (n = 1 seam curves)");
  int count = 0;
  {
    std::vector<std::int64_t> p1 = c1.point_ids, p2 = c2.point_ids;
    std::sort(p1.begin(), p1.end());
    std::sort(p2.begin(), p2.end());
    std::vector<std::int64_t> shared;
    std::set_intersection(p1.begin(), p1.end(), p2.begin(), p2.end(),
                          std::back_inserter(shared));
    count += static_cast<int>(shared.size());
  }
  const int size = 16 * s.n;
  for (const auto& x : c1.chords)
    for (const auto& y : c2.chords) {
      if (x.oct != y.oct) continue;
      if (x.key_a == y.key_a || x.key_a == y.key_b || x.key_b == y.key_a ||
          x.key_b == y.key_b)
        continue;  // shared endpoint: handled through point ids
      if (detail::interleaved(x.key_a, x.key_b, y.key_a, y.key_b, size)) ++count;
    }
  return count;
}

/// Full pairwise intersection matrix (upper triangle), suitable for the
/// profile scans.
inline std::vector<std::vector<int>> intersection_matrix(const SurfaceModel& s,
                                                         const std::vector<Curve>& curves) {
  const int N = static_cast<int>(curves.size());
  std::vector<std::vector<int>> m(N, std::vector<int>(N, 0));
  // shared points
  std::map<std::int64_t, std::vector<int>> at_point;
  for (int i = 0; i < N; ++i)
    for (std::int64_t p : curves[i].point_ids) at_point[p].push_back(i);
  for (const auto& [p, ids] : at_point)
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        ++m[ids[a]][ids[b]];
        ++m[ids[b]][ids[a]];
      }
  // interleavings, octagon by octagon
  struct Entry {
    int curve;
    int key_a, key_b;
  };
  std::map<int, std::vector<Entry>> by_oct;
  for (int i = 0; i < N; ++i)
    for (const auto& ch : curves[i].chords)
      by_oct[ch.oct].push_back({i, ch.key_a, ch.key_b});
  const int size = 16 * s.n;
  for (const auto& [oct, entries] : by_oct)
    for (std::size_t a = 0; a < entries.size(); ++a)
      for (std::size_t b = a + 1; b < entries.size(); ++b) {
        const auto& x = entries[a];
        const auto& y = entries[b];
        if (x.curve == y.curve) continue;
        if (x.key_a == y.key_a || x.key_a == y.key_b || x.key_b == y.key_a ||
            x.key_b == y.key_b)
          continue;
        if (detail::interleaved(x.key_a, x.key_b, y.key_a, y.key_b, size)) {
          ++m[x.curve][y.curve];
          ++m[y.curve][x.curve];
        }
      }
  return m;
}

/// CSV rows (kind, anchor, itinerary length) for the enumerated curves.
inline std::string curves_csv(const std::vector<Curve>& curves) {
  std::string out = "kind,anchor,steps\n";
  for (const Curve& c : curves) {
    char kind = 'a';
    std::string anchor;
    switch (c.kind) {
      case Curve::Kind::A: kind = 'a'; anchor = "r" + std::to_string(c.ring) + ":" + std::to_string(c.index); break;
      case Curve::Kind::B: kind = 'b'; anchor = "r" + std::to_string(c.ring) + ":" + std::to_string(c.index); break;
      case Curve::Kind::C: kind = 'c'; anchor = "x" + std::to_string(c.index) + ":" + std::to_string(c.variant); break;
      case Curve::Kind::F: kind = 'f'; anchor = std::to_string(c.index); break;
    }
    out += kind;
    out += ',' + anchor + ',' + std::to_string(c.chords.size()) + "\n";
  }
  return out;
}

// ---- certification -----------------------------------------------------------------

struct Certificate {
  int n = 0;
  std::string graph_summary;
  double t_n = 0, L_n = 0;
  int genus = 0;
  std::int64_t systole_count = 0;
  int girth = 0;  // kInfiniteGirth for forests
  double girth_threshold = 0;
  double log_girth_threshold = 0;
  double gersh_margin = 0;
  double da_dt = 0, dc_dt = 0;
  double angle_slack = 0;
  bool pass = false;
  std::vector<std::string> failures;
};

inline Certificate certify(int n, const SignedGraph& g) {
  validate(g);
  if (g.n != n)
    throw GraphError(GraphError::Kind::SizeMismatch, "graph regularity differs from n");
  Certificate cert;
  cert.n = n;
  cert.graph_summary = std::to_string(g.vertices.size()) + " vertices, " +
                       std::to_string(g.edges.size()) + " edges, " +
                       std::to_string(n) + "-regular";
  TnSolution sol = solve_tn(n);
  cert.t_n = sol.t_n;
  cert.L_n = sol.L_n;
  cert.girth_threshold = sol.girth_threshold;
  cert.log_girth_threshold = sol.log_girth_threshold;
  SurfaceModel s = build_surface(g);
  cert.genus = s.genus;
  cert.systole_count = static_cast<std::int64_t>(enumerate_systoles(s).size());
  cert.girth = girth(g);
  GershgorinCertificate gc = gershgorin_certify(n);
  cert.gersh_margin = gc.margin;
  cert.angle_slack = gc.margin;  // the slack and the column margin coincide
  cert.da_dt = sol.geometry.da_dt;
  cert.dc_dt = sol.geometry.dc_dt;
  bool girth_ok = (cert.girth == kInfiniteGirth) ||
                  (std::log(static_cast<double>(cert.girth)) > cert.log_girth_threshold);
  if (!girth_ok)
    cert.failures.push_back("girth " + std::to_string(cert.girth) +
                            " does not exceed threshold");
  if (!(cert.gersh_margin > 0)) cert.failures.push_back("Gershgorin margin not positive");
  if (!(cert.angle_slack > 0)) cert.failures.push_back("angle slack not positive");
  if (n >= 2) {
    if (!(sol.geometry.da_dt_log.sign > 0))
      cert.failures.push_back("da/dt not positive at t_n");
    if (!(sol.geometry.dc_dt_log.sign < 0))
      cert.failures.push_back("dc/dt not negative at t_n");
  }
  cert.pass = cert.failures.empty();
  return cert;
}

}  // namespace systole
