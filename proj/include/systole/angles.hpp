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

// Intersection angles of the diagonal systoles in the ring at t_n, the
// cosine matrices of twist-derivatives, and the diagonal-dominance
// certificate for their invertibility.

#include <algorithm>
#include <cmath>
#include <vector>

#include "systole/linalg.hpp"
#include "systole/ring.hpp"

namespace systole {

struct AngleData {
  int n = 0;
  double theta = 0;                // angle from the core geodesic e to any a_j
  double log_sin_theta = 0;
  double u = 0;                    // e / 4n of the underlying ring
  std::vector<double> phi;         // phi_1..phi_2n, counter-clockwise a_j -> b_1
  std::vector<double> cos_phi;     // cos(phi_j), exact in the tails
};

inline AngleData angles(const TnSolution& sol) {
  AngleData d;
  d.n = sol.n;
  const int n = sol.n;
  d.u = sol.geometry.u;  // = e / 4n
  const double u = d.u;
  // sin(theta) = sinh(t_n) / sinh(a/2): altitude right triangle with legs
  // t_n and e/4 and hypotenuse a/2.
  const double ls_a2 = log_sinh(sol.geometry.a_len / 2.0);
  d.log_sin_theta = log_sinh(sol.t_n) - ls_a2;
  d.theta = std::asin(std::exp(d.log_sin_theta));
  d.phi.resize(2 * n);
  d.cos_phi.resize(2 * n);
  const double lc_t = log_cosh(sol.t_n), ls_t = log_sinh(sol.t_n);
  const double lc_nu = log_cosh(n * u);
  for (int j = 1; j <= 2 * n; ++j) {
    int k = std::abs(n + 1 - j);
    // cos(phi_j) + 1 = 2 sin^2(theta) cosh^2(k u), evaluated in logs so the
    // huge cosh and the tiny sin^2 never meet as raw doubles.
    double lg = std::log(2.0) + 2.0 * d.log_sin_theta + 2.0 * log_cosh(k * u);
    d.cos_phi[j - 1] = std::expm1(lg);
    double cp = d.cos_phi[j - 1];
    if (cp < -0.9) {
      // phi near pi: pi - 2 asin(sin theta cosh(k u))
      double q = std::exp(d.log_sin_theta + log_cosh(k * u));
      d.phi[j - 1] = M_PI - 2.0 * std::asin(q);
    } else if (cp > 0.9) {
      // phi near 0: sin^2(phi/2) = [cosh^2 t cosh^2(nu) - 1 - sinh^2 t
      // cosh^2(ku)] / sinh^2(a/2); for k = n the bracket is sinh^2(nu).
      LogReal num;
      if (k == n) {
        num = LogReal::from_log(2.0 * log_sinh(n * u));
      } else {
        num = LogReal::from_log(2.0 * (lc_t + lc_nu)) - LogReal::one() -
              LogReal::from_log(2.0 * (ls_t + log_cosh(k * u)));
      }
      LogReal s2 = num / LogReal::from_log(2.0 * ls_a2);
      if (!(s2.sign > 0))
        throw std::runtime_error("angles: lost positivity of sin^2(phi/2)");
      d.phi[j - 1] = 2.0 * std::asin(std::sqrt(s2.to_double()));
    } else {
      d.phi[j - 1] = std::acos(cp);
    }
  }
  return d;
}

inline AngleData angles(int n) { return angles(solve_tn(n)); }

struct CosineMatrix {
  int n = 0;
  Matrix A;             // 2n x 2n, circulant extension of (cos phi_1..cos phi_2n)
  Matrix M;             // 4n x 4n block diagonal (A, -A^T)
  double gersh_margin = 0;
  double det_A = 0;
  double det_M = 0;
  double row_sum = 0;
};

struct AngleInequalities {
  double angle_slack = 0;  // (cos phi_1 + 1) - sum_{j>=2} (cos phi_j + 1)
  double row_sum = 0;     // sum_j cos phi_j
};

inline AngleInequalities angle_inequalities(const AngleData& d) {
  const int n = d.n;
  const double u = d.u;
  // All terms share the factor 2 sin^2(theta); sum cosh^2(k u) in the log
  // domain and reattach the factor at the end.
  LogReal head = LogReal::from_log(2.0 * log_cosh(n * u));
  LogReal tail = LogReal::zero();
  for (int j = 2; j <= 2 * n; ++j) {
    double k = std::abs(n + 1 - j);
    tail = tail + LogReal::from_log(2.0 * log_cosh(k * u));
  }
  LogReal factor = LogReal::from_log(std::log(2.0) + 2.0 * d.log_sin_theta);
  AngleInequalities out;
  out.angle_slack = (factor * (head - tail)).to_double();
  out.row_sum = (factor * (head + tail)).to_double() - 2.0 * n;
  return out;
}

inline AngleInequalities angle_inequalities(int n) {
  return angle_inequalities(angles(n));
}

inline CosineMatrix build_matrices(const AngleData& d) {
  const int n = d.n;
  CosineMatrix m;
  m.n = n;
  m.A = Matrix(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j)
      m.A(i, j) = d.cos_phi[((j - i) % (2 * n) + 2 * n) % (2 * n)];
  m.M = Matrix(4 * n, 4 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) {
      m.M(i, j) = m.A(i, j);
      m.M(2 * n + i, 2 * n + j) = -m.A(j, i);
    }
  m.det_A = lu_det(m.A);
  m.det_M = lu_det(m.M);
  AngleInequalities ineq = angle_inequalities(d);
  m.gersh_margin = ineq.angle_slack;
  m.row_sum = ineq.row_sum;
  return m;
}

inline CosineMatrix build_matrices(int n) { return build_matrices(angles(n)); }

struct GershgorinCertificate {
  bool invertible = false;
  double margin = 0;
  double row_sum = 0;
};

/// Column-dominance certificate for A + J (J all ones): every column of
/// A + J has positive entries and its diagonal exceeds the sum of the rest
/// by `margin`. Together with a nonzero constant row sum this certifies that
/// A itself is invertible.
inline GershgorinCertificate gershgorin_certify(int n) {
  AngleInequalities ineq = angle_inequalities(n);
  GershgorinCertificate cert;
  cert.margin = ineq.angle_slack;
  cert.row_sum = ineq.row_sum;
  cert.invertible = cert.margin > 0.0 && cert.row_sum != 0.0;
  return cert;
}

}  // namespace systole
