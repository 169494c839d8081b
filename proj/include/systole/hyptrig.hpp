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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "systole/logreal.hpp"

namespace systole {

struct geometric_error : std::domain_error {
  using std::domain_error::domain_error;
};

namespace detail {
inline void require_finite_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error(std::string(what) + ": must be finite and positive");
}
}  // namespace detail

// ---- numerically stable scalar kernels -----------------------------------

/// arccosh(1 + x) without cancellation for small x.
inline double acosh1p(double x) {
  if (x < 0.0) throw std::domain_error("acosh1p: negative argument");
  if (x == 0.0) return 0.0;
  return std::log1p(x + std::sqrt(2.0 * x + x * x));
}

/// log(cosh x), safe for any magnitude.
inline double log_cosh(double x) {
  double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

/// log(sinh x) for x > 0, safe for any magnitude.
inline double log_sinh(double x) {
  if (x <= 0.0) throw std::domain_error("log_sinh: nonpositive argument");
  if (x > 20.0) return x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0);
  return std::log(std::sinh(x));
}

/// log(tanh x) for x > 0.
inline double log_tanh(double x) {
  if (x <= 0.0) throw std::domain_error("log_tanh: nonpositive argument");
  if (x > 20.0) return std::log1p(-2.0 / (std::exp(2.0 * x) + 1.0));
  return std::log(std::tanh(x));
}

/// arccosh(y) where y is given as log(y); exact in the large-argument regime
/// where y itself would overflow. Requires log_y >= 0.
inline double acosh_from_log(double log_y) {
  if (log_y < 0.0) throw std::domain_error("acosh_from_log: argument below 1");
  if (log_y > 20.0) {
    // arccosh(y) = log(2y) - 1/(4y^2) - ...; correction below double epsilon
    return log_y + std::log(2.0) - 0.25 * std::exp(-2.0 * log_y);
  }
  double y = std::exp(log_y);
  return acosh1p(y - 1.0);
}

// ---- domain types ----------------------------------------------------------

/// Hyperbolic right triangle with legs a, b, hypotenuse c and the angles
/// opposite to the respective legs.
struct RightTriangle {
  double leg_a = 0, leg_b = 0, hyp_c = 0;
  double angle_alpha = 0, angle_beta = 0;
};

/// Right-angled pentagon determined by the two sides a, b whose sinh-product
/// gives cosh of the opposite side c.  angle_alpha/angle_beta are the
/// remaining two sides (the pair flanking c), which satisfy the coth-product
/// identity; alpha is the one adjacent to b, beta the one adjacent to a.
struct RightPentagon {
  double side_a = 0, side_b = 0, side_c = 0;
  double angle_alpha = 0, angle_beta = 0;
};

// ---- operations ------------------------------------------------------------

/// Hypotenuse of a right triangle from the two legs.
inline double rt_hypotenuse(double leg_a, double leg_b) {
  detail::require_finite_positive(leg_a, "rt_hypotenuse leg_a");
  detail::require_finite_positive(leg_b, "rt_hypotenuse leg_b");
  double lc = log_cosh(leg_a) + log_cosh(leg_b);
  if (lc > std::log(1e15)) return acosh_from_log(lc);
  double p = std::cosh(leg_a) * std::cosh(leg_b);
  return acosh1p(p - 1.0);
}

/// Angle beta from leg b and the opposite-ish angle alpha.
inline double rt_angle_beta(double leg_b, double angle_alpha) {
  if (!(leg_b >= 0.0) || !std::isfinite(leg_b))
    throw std::domain_error("rt_angle_beta: leg_b must be finite and >= 0");
  double x = std::cosh(leg_b) * std::sin(angle_alpha);
  if (!(x > 0.0) || !(x < 1.0))
    throw geometric_error("rt_angle_beta: cosh(b) sin(alpha) outside (0,1)");
  return std::acos(x);
}

/// Side of a right-angled pentagon opposite to sides a and b.
/// Evaluation is symmetrized so pentagon_side(a,b) == pentagon_side(b,a)
/// bit for bit.
inline double pentagon_side(double side_a, double side_b) {
  detail::require_finite_positive(side_a, "pentagon_side side_a");
  detail::require_finite_positive(side_b, "pentagon_side side_b");
  double lo = std::min(side_a, side_b), hi = std::max(side_a, side_b);
  double ls = log_sinh(lo) + log_sinh(hi);
  if (ls > std::log(1e15)) return acosh_from_log(ls);
  double p = std::sinh(lo) * std::sinh(hi);
  if (p < 1.0) throw geometric_error("pentagon_side: sinh(a) sinh(b) < 1, no pentagon");
  return acosh1p(p - 1.0);
}

inline RightTriangle solve_right_triangle(double leg_a, double leg_b) {
  RightTriangle t;
  t.leg_a = leg_a;
  t.leg_b = leg_b;
  t.hyp_c = rt_hypotenuse(leg_a, leg_b);
  t.angle_alpha = std::asin(std::sinh(leg_a) / std::sinh(t.hyp_c));
  t.angle_beta = std::asin(std::sinh(leg_b) / std::sinh(t.hyp_c));
  return t;
}

inline RightPentagon solve_right_pentagon(double side_a, double side_b) {
  RightPentagon p;
  p.side_a = side_a;
  p.side_b = side_b;
  p.side_c = pentagon_side(side_a, side_b);
  if (p.side_c == 0.0)
    throw geometric_error("solve_right_pentagon: degenerate pentagon");
  p.angle_alpha = std::asinh(std::cosh(side_a) / std::sinh(p.side_c));
  p.angle_beta = std::asinh(std::cosh(side_b) / std::sinh(p.side_c));
  return p;
}

}  // namespace systole
