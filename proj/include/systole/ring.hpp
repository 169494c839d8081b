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

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "systole/hyptrig.hpp"
#include "systole/logreal.hpp"

namespace systole {

/// All lengths and derivatives of the genus-one ring piece at parameter t.
/// Every cross boundary (f-curve) has length 4t; sigma is the seam length,
/// u the half-pentagon side, e the core geodesic, a the common length of the
/// diagonal systole candidates, c the transverse surgery curve.
struct RingGeometry {
  int n = 0;
  double t = 0;
  double sigma = 0, u = 0;
  double e_len = 0, a_len = 0, c_len = 0;
  double da_dt = 0, dc_dt = 0, de_dt = 0;
  // Log-domain companions; sigma and the derivatives underflow for large n*t
  // while their logs stay finite.
  double log_sigma = 0;
  LogReal de_dt_log, da_dt_log, dc_dt_log;
};

struct TnSolution {
  int n = 0;
  double t_n = 0;
  double residual = 0;  // log-scale residual of the defining equation
  RingGeometry geometry;
  double girth_threshold = 0;      // a(t_n) / sigma(t_n)
  double log_girth_threshold = 0;  // always finite
  std::int64_t w_n = 0;            // least integer strictly above; 0 if > 2^62
  double L_n = 0;                  // = a(t_n)
};

namespace detail {

inline double coth(double t) { return 1.0 / std::tanh(t); }

/// u(t) = arcsinh(coth t), the half-pentagon side.
inline double half_pentagon_side(double t) { return std::asinh(coth(t)); }

/// du/dt = -1 / (sinh^2 t * sqrt(coth^2 t + 1)); equals e'(t)/(4n).
inline double half_pentagon_side_deriv(double t) {
  double c = coth(t);
  return -1.0 / (std::sinh(t) * std::sinh(t) * std::sqrt(c * c + 1.0));
}

inline double log_abs_u_deriv(double t) {
  double c = coth(t);
  return -2.0 * log_sinh(t) - 0.5 * std::log(c * c + 1.0);
}

}  // namespace detail

inline RingGeometry ring_geometry(int n, double t) {
  if (n < 1) throw std::domain_error("ring_geometry: n >= 1 required");
  detail::require_finite_positive(t, "ring_geometry t");
  RingGeometry g;
  g.n = n;
  g.t = t;
  g.u = detail::half_pentagon_side(t);
  g.e_len = 4.0 * n * g.u;
  const double x = n * g.u;  // e/4
  const double lc_t = log_cosh(t), ls_t = log_sinh(t);
  const double lc_x = log_cosh(x), ls_x = log_sinh(x);

  // sigma via sinh(sigma/2) = 1/(sqrt(2) sinh t); exact difference form, no
  // cancellation for large t.
  double q = std::exp(-0.5 * std::log(2.0) - ls_t);
  g.sigma = 2.0 * std::asinh(q);
  g.log_sigma = (g.sigma > 0.0) ? std::log(g.sigma)
                                : 0.5 * std::log(2.0) - ls_t;

  g.a_len = 2.0 * acosh_from_log(lc_t + lc_x);
  g.c_len = 2.0 * acosh_from_log(2.0 * ls_x);

  // e'(t) = 4n u'(t) < 0.
  g.de_dt_log = LogReal{-1, std::log(4.0 * n) + detail::log_abs_u_deriv(t)};
  g.de_dt = g.de_dt_log.to_double();

  // From cosh(a/2) = cosh t cosh x:
  //   a'/2 = [sinh t cosh x + cosh t sinh x * (e'/4)] / sinh(a/2).
  const double ls_a2 = log_sinh(g.a_len / 2.0);
  LogReal term1 = LogReal::from_log(ls_t + lc_x - ls_a2);
  LogReal term2{-1, lc_t + ls_x + (g.de_dt_log.log_abs - std::log(4.0)) - ls_a2};
  LogReal half_da = term1 + term2;
  g.da_dt_log = LogReal{half_da.sign, half_da.log_abs + std::log(2.0)};
  g.da_dt = g.da_dt_log.to_double();

  // From cosh(c/2) = sinh^2 x:
  //   c'/2 = sinh(2x) * (e'/4) / sinh(c/2).
  const double ls_c2 = log_sinh(g.c_len / 2.0);
  const double ls_2x = log_sinh(2.0 * x);
  g.dc_dt_log = LogReal{-1, (g.de_dt_log.log_abs - std::log(4.0)) + ls_2x - ls_c2 +
                                std::log(2.0)};
  g.dc_dt = g.dc_dt_log.to_double();
  return g;
}

namespace detail {

/// Log form of the defining equation: zero iff a(t) = c(t).
/// g(t) = log cosh t - log tanh(e/4) - log sinh(e/4); increasing in t.
inline double tn_equation(int n, double t) {
  double x = n * half_pentagon_side(t);
  return log_cosh(t) - log_tanh(x) - log_sinh(x);
}

inline double tn_equation_deriv(int n, double t) {
  double x = n * half_pentagon_side(t);
  double dx = n * half_pentagon_side_deriv(t);
  double coth_x = (x > 20.0) ? 1.0 : 1.0 / std::tanh(x);
  double d_logtanh = (x > 20.0) ? 0.0 : 2.0 / std::sinh(2.0 * x);
  return std::tanh(t) - dx * (coth_x + d_logtanh);
}

}  // namespace detail

inline TnSolution solve_tn(int n) {
  if (n < 1) throw std::domain_error("solve_tn: n >= 1 required");
  const double lambda = std::asinh(1.0);
  double lo = 0.5, hi = n * lambda + 2.0;
  if (!(detail::tn_equation(n, lo) < 0.0 && detail::tn_equation(n, hi) > 0.0))
    throw std::runtime_error("solve_tn: bracket invalid");
  while (hi - lo > 1e-8) {
    double mid = 0.5 * (lo + hi);
    (detail::tn_equation(n, mid) < 0.0 ? lo : hi) = mid;
  }
  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    double f = detail::tn_equation(n, t);
    double df = detail::tn_equation_deriv(n, t);
    double step = f / df;
    t -= step;
    if (std::abs(step) < 1e-15 * t) break;
  }
  TnSolution s;
  s.n = n;
  s.t_n = t;
  s.residual = detail::tn_equation(n, t);
  s.geometry = ring_geometry(n, t);
  s.L_n = s.geometry.a_len;
  s.log_girth_threshold = std::log(s.geometry.a_len) - s.geometry.log_sigma;
  s.girth_threshold = (s.geometry.sigma > 0.0)
                          ? s.geometry.a_len / s.geometry.sigma
                          : std::numeric_limits<double>::infinity();
  if (s.log_girth_threshold < std::log(4.0e18)) {
    s.w_n = static_cast<std::int64_t>(std::floor(s.girth_threshold)) + 1;
  } else {
    s.w_n = 0;  // beyond exact integer range; use log_girth_threshold
  }
  return s;
}

struct GirthThreshold {
  double threshold = 0;
  double log_threshold = 0;
  std::int64_t w_n = 0;
};

/// Minimal admissible girth data: a graph certifies its surface only when
/// girth is strictly larger than the threshold, so w_n = floor(threshold)+1.
inline GirthThreshold girth_threshold(int n) {
  TnSolution s = solve_tn(n);
  return GirthThreshold{s.girth_threshold, s.log_girth_threshold, s.w_n};
}

struct SnCheck {
  double s_n = 0;
  double c_at_sn = 0;
};

/// The crossing point a(s) = 4s, with the inequalities s_n > 1 and
/// c(s_n) > 4 s_n asserted.
inline SnCheck sn_check(int n) {
  if (n < 2) throw std::domain_error("sn_check: n >= 2 required");
  auto h = [n](double t) { return ring_geometry(n, t).a_len - 4.0 * t; };
  double t_n = solve_tn(n).t_n;
  double lo = 0.8, hi = t_n;
  if (!(h(lo) > 0.0 && h(hi) < 0.0))
    throw std::runtime_error("sn_check: root not bracketed");
  while (hi - lo > 1e-8) {
    double mid = 0.5 * (lo + hi);
    (h(mid) > 0.0 ? lo : hi) = mid;
  }
  double s = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    RingGeometry g = ring_geometry(n, s);
    double f = g.a_len - 4.0 * s;
    double df = g.da_dt - 4.0;
    double step = f / df;
    s -= step;
    if (std::abs(step) < 1e-15 * s) break;
  }
  SnCheck out;
  out.s_n = s;
  out.c_at_sn = ring_geometry(n, s).c_len;
  if (!(out.s_n > 1.0))
    throw std::runtime_error("sn_check: expected s_n > 1");
  if (!(out.c_at_sn > 4.0 * out.s_n))
    throw std::runtime_error("sn_check: expected c(s_n) > 4 s_n");
  return out;
}

}  // namespace systole
