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

// Independent geometry engine on the hyperboloid sheet
//   {x : <x,x> = 1, x0 > 0},  <p,q> = p0 q0 - p1 q1 - p2 q2.
// Figures are built from explicit coordinates and re-measured with the
// Minkowski distance, so lengths obtained here never evaluate the chained
// closed-form identities they are used to check.

#include <array>
#include <cmath>
#include <stdexcept>

#include "systole/hyptrig.hpp"

namespace systole::oracle {

struct HypPoint {
  double x0 = 1, x1 = 0, x2 = 0;
};

inline double minkowski(const HypPoint& p, const HypPoint& q) {
  return p.x0 * q.x0 - p.x1 * q.x1 - p.x2 * q.x2;
}

/// Projects a near-sheet vector back onto the hyperboloid.
inline HypPoint renormalize(HypPoint p) {
  double s = p.x0 * p.x0 - p.x1 * p.x1 - p.x2 * p.x2;
  if (!(s > 0.0)) throw std::domain_error("renormalize: not a timelike vector");
  double r = 1.0 / std::sqrt(s);
  return {p.x0 * r, p.x1 * r, p.x2 * r};
}

inline HypPoint make_point(double x0, double x1, double x2) {
  HypPoint p{x0, x1, x2};
  if (std::abs(minkowski(p, p) - 1.0) > 1e-9 || x0 < 1.0 - 1e-12)
    throw std::domain_error("make_point: not on the upper sheet");
  return renormalize(p);
}

inline double distance(const HypPoint& p, const HypPoint& q) {
  double c = minkowski(p, q);
  return acosh1p(std::max(0.0, c - 1.0));
}

/// Point at arc length s from (1,0,0) along the unit direction angle phi.
inline HypPoint point_at(double s, double phi) {
  return {std::cosh(s), std::sinh(s) * std::cos(phi), std::sinh(s) * std::sin(phi)};
}

/// Spacelike polar vector of a geodesic line, normalized to <v,v> = -1.
struct GeodesicLine {
  double v0 = 0, v1 = 0, v2 = 0;
};

inline GeodesicLine line_through(const HypPoint& p, const HypPoint& q) {
  // Minkowski cross product: <w,p> = <w,q> = 0.
  double c0 = p.x1 * q.x2 - p.x2 * q.x1;
  double c1 = p.x2 * q.x0 - p.x0 * q.x2;
  double c2 = p.x0 * q.x1 - p.x1 * q.x0;
  GeodesicLine w{c0, -c1, -c2};
  double s = -(w.v0 * w.v0 - w.v1 * w.v1 - w.v2 * w.v2);
  if (!(s > 0.0)) throw std::domain_error("line_through: coincident points");
  double r = 1.0 / std::sqrt(s);
  return {w.v0 * r, w.v1 * r, w.v2 * r};
}

/// Line orthogonal to the x1-axis geodesic at arc parameter s0.
inline GeodesicLine perpendicular_at_x(double s0) {
  return {std::sinh(s0), std::cosh(s0), 0.0};
}
/// Line orthogonal to the x2-axis geodesic at arc parameter s0.
inline GeodesicLine perpendicular_at_y(double s0) {
  return {std::sinh(s0), 0.0, std::cosh(s0)};
}

inline double line_pairing(const GeodesicLine& a, const GeodesicLine& b) {
  return a.v0 * b.v0 - a.v1 * b.v1 - a.v2 * b.v2;
}

/// Intersection point of two crossing geodesics.
inline HypPoint line_intersection(const GeodesicLine& a, const GeodesicLine& b) {
  double c0 = a.v1 * b.v2 - a.v2 * b.v1;
  double c1 = a.v2 * b.v0 - a.v0 * b.v2;
  double c2 = a.v0 * b.v1 - a.v1 * b.v0;
  HypPoint p{c0, -c1, -c2};
  if (p.x0 < 0) p = {-p.x0, -p.x1, -p.x2};
  return renormalize(p);
}

/// Distance between two disjoint geodesics (length of the common
/// perpendicular); throws when the lines meet.
inline double line_distance(const GeodesicLine& a, const GeodesicLine& b) {
  double c = std::abs(line_pairing(a, b));
  if (c <= 1.0) throw geometric_error("line_distance: lines intersect");
  return acosh1p(c - 1.0);
}

/// Interior angle at the apex q of the geodesic triangle p-q-r, measured
/// between the tangent directions toward p and r.
inline double angle_at(const HypPoint& q, const HypPoint& p, const HypPoint& r) {
  auto tangent_toward = [&](const HypPoint& target) {
    double c = minkowski(q, target);
    // u = (target - c q) / sinh d  is the unit tangent at q toward target.
    std::array<double, 3> u = {target.x0 - c * q.x0, target.x1 - c * q.x1,
                               target.x2 - c * q.x2};
    double n2 = -(u[0] * u[0] - u[1] * u[1] - u[2] * u[2]);
    double r2 = 1.0 / std::sqrt(n2);
    return std::array<double, 3>{u[0] * r2, u[1] * r2, u[2] * r2};
  };
  auto up = tangent_toward(p);
  auto ur = tangent_toward(r);
  double c = -(up[0] * ur[0] - up[1] * ur[1] - up[2] * ur[2]);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

struct TriangleMeasurement {
  double hyp = 0, alpha = 0, beta = 0;
};

/// Places a right triangle with the right angle at (1,0,0), legs along the
/// two coordinate-axis geodesics, and measures everything back.
inline TriangleMeasurement measure_triangle(double leg_a, double leg_b) {
  detail::require_finite_positive(leg_a, "measure_triangle leg_a");
  detail::require_finite_positive(leg_b, "measure_triangle leg_b");
  HypPoint corner = make_point(1, 0, 0);
  HypPoint pa = point_at(leg_a, 0.0);
  HypPoint pb = point_at(leg_b, M_PI / 2);
  TriangleMeasurement m;
  m.hyp = distance(pa, pb);
  m.alpha = angle_at(pb, pa, corner);  // angle opposite to leg_a
  m.beta = angle_at(pa, pb, corner);   // angle opposite to leg_b
  return m;
}

/// Right-angled pentagon from the two sides adjacent to the right angle at
/// the origin: erects perpendiculars at the far endpoints and measures their
/// common perpendicular, which is the side opposite the origin corner.
inline double measure_pentagon(double side_a, double side_b) {
  detail::require_finite_positive(side_a, "measure_pentagon side_a");
  detail::require_finite_positive(side_b, "measure_pentagon side_b");
  GeodesicLine la = perpendicular_at_x(side_a);
  // Reflect the configuration so side_b runs along the x2-axis geodesic.
  GeodesicLine lb = perpendicular_at_y(side_b);
  return line_distance(la, lb);
}

/// Polar of the geodesic through the point at arc s on the x-axis geodesic,
/// leaving at angle phi from the axis (into the x2 > 0 half). The cross
/// product collapses to a closed form, which avoids the cancellation of
/// cosh^2 - sinh^2 at large s.
inline GeodesicLine line_at_angle(double s, double phi) {
  return {std::sin(phi) * std::sinh(s), std::sin(phi) * std::cosh(s), -std::cos(phi)};
}

/// Closes the quadrilateral with three right angles and one angle pi/4, one
/// side of length t between two of the right angles. Returns (u, sigma):
/// u is the side adjacent to the pi/4 corner along the base axis, sigma twice
/// the side opposite that corner. Solved by shooting: find the base point
/// whose pi/4-ray meets the far perpendicular orthogonally.
struct SeamMeasurement {
  double u = 0, sigma = 0;
};

inline SeamMeasurement measure_seam(double t) {
  detail::require_finite_positive(t, "measure_seam t");
  GeodesicLine far = perpendicular_at_y(t);
  // The closing ray leaves the base axis at angle pi/4 measured against the
  // side running back toward the corner, i.e. at 3 pi/4 from the outward
  // direction.
  auto defect = [&](double s) {
    return line_pairing(line_at_angle(s, 3 * M_PI / 4), far);
  };
  double lo = 1e-9, hi = 60.0;
  if (!(defect(lo) * defect(hi) < 0))
    throw geometric_error("measure_seam: closing ray not bracketed");
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (defect(lo) * defect(mid) <= 0 ? hi : lo) = mid;
  }
  SeamMeasurement out;
  out.u = 0.5 * (lo + hi);
  // Foot of the closing ray on the far perpendicular vs. the t-side endpoint.
  GeodesicLine ray = line_at_angle(out.u, 3 * M_PI / 4);
  HypPoint foot = line_intersection(ray, far);
  HypPoint v2 = point_at(t, M_PI / 2);
  out.sigma = 2.0 * distance(foot, v2);
  return out;
}

struct RingMeasurement {
  double a = 0, c = 0, e = 0, sigma = 0;
};

/// Re-measures the closed-geodesic lengths of the genus-one piece built from
/// n four-holed spheres with boundary length 4t, using only coordinate
/// constructions (quadrilateral shooting, right triangle, perpendicular
/// pentagon).
inline RingMeasurement measure_ring_curves(int n, double t) {
  if (n < 1) throw std::domain_error("measure_ring_curves: n >= 1 required");
  detail::require_finite_positive(t, "measure_ring_curves t");
  RingMeasurement m;
  SeamMeasurement seam = measure_seam(t);
  m.sigma = seam.sigma;
  m.e = 4.0 * n * seam.u;
  // a-curve: isoceles triangle with base e/2 along a geodesic and apex at
  // height t above the midpoint; a/2 is the hypotenuse between apex and a
  // base endpoint at arc e/4.
  HypPoint apex = point_at(t, M_PI / 2);
  HypPoint base_end = point_at(m.e / 4.0, 0.0);
  m.a = 2.0 * distance(apex, base_end);
  // c-curve: pentagon with two adjacent sides e/4 meeting at a right angle;
  // c/2 is the opposite side, the common perpendicular of the two far
  // perpendiculars.
  GeodesicLine l1 = perpendicular_at_x(m.e / 4.0);
  GeodesicLine l2 = perpendicular_at_y(m.e / 4.0);
  m.c = 2.0 * line_distance(l1, l2);
  return m;
}

/// Total interior angle sum and area of the coordinate pentagon with sides
/// a, b adjacent to the origin corner (Gauss-Bonnet health check).
struct PentagonGaussBonnet {
  double angle_sum = 0, area = 0;
};

inline PentagonGaussBonnet pentagon_gauss_bonnet(double side_a, double side_b) {
  // Vertices: origin corner, two leg endpoints, two feet of the common
  // perpendicular.
  HypPoint v0 = make_point(1, 0, 0);
  HypPoint v1 = point_at(side_a, 0.0);
  HypPoint v4 = point_at(side_b, M_PI / 2);
  GeodesicLine la = perpendicular_at_x(side_a);
  GeodesicLine lb = perpendicular_at_y(side_b);
  GeodesicLine cp;
  {
    // polar of the common perpendicular of la, lb
    double c0 = la.v1 * lb.v2 - la.v2 * lb.v1;
    double c1 = la.v2 * lb.v0 - la.v0 * lb.v2;
    double c2 = la.v0 * lb.v1 - la.v1 * lb.v0;
    cp = {c0, -c1, -c2};
    double s = -(cp.v0 * cp.v0 - cp.v1 * cp.v1 - cp.v2 * cp.v2);
    double r = 1.0 / std::sqrt(s);
    cp = {cp.v0 * r, cp.v1 * r, cp.v2 * r};
  }
  HypPoint v2 = line_intersection(la, cp);
  HypPoint v3 = line_intersection(lb, cp);
  std::array<HypPoint, 5> v{v0, v1, v2, v3, v4};
  PentagonGaussBonnet out;
  for (int i = 0; i < 5; ++i) {
    const HypPoint& prev = v[(i + 4) % 5];
    const HypPoint& next = v[(i + 1) % 5];
    out.angle_sum += angle_at(v[i], prev, next);
  }
  out.area = (5 - 2) * M_PI - out.angle_sum;
  return out;
}

}  // namespace systole::oracle
