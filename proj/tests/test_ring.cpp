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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "systole/ring.hpp"

using namespace systole;
using Catch::Approx;

namespace {
constexpr double kLambda = 0.881373587019543;  // log(1 + sqrt 2)

double fd(double (*f)(int, double), int n, double t, double h) {
  return (f(n, t + h) - f(n, t - h)) / (2 * h);
}
double a_of(int n, double t) { return ring_geometry(n, t).a_len; }
double c_of(int n, double t) { return ring_geometry(n, t).c_len; }
double e_of(int n, double t) { return ring_geometry(n, t).e_len; }
}  // namespace

TEST_CASE("ring geometry identities") {
  for (int n : {1, 2, 3, 5, 8}) {
    for (double t : {0.5, 0.9, 1.745752, 3.0}) {
      RingGeometry g = ring_geometry(n, t);
      REQUIRE(std::cosh(g.sigma) ==
              Approx(1.0 / (std::tanh(t) * std::tanh(t))).epsilon(1e-12));
      REQUIRE(std::cosh(g.sigma) == Approx(std::sinh(g.u) * std::sinh(g.u)).epsilon(1e-12));
      REQUIRE(g.e_len == Approx(4.0 * n * std::asinh(1.0 / std::tanh(t))).epsilon(1e-12));
      REQUIRE(std::cosh(g.a_len / 2) ==
              Approx(std::cosh(t) * std::cosh(g.e_len / 4)).epsilon(1e-12));
      REQUIRE(std::cosh(g.c_len / 2) ==
              Approx(std::sinh(g.e_len / 4) * std::sinh(g.e_len / 4)).epsilon(1e-12));
      REQUIRE(g.de_dt < 0);
      REQUIRE(g.dc_dt < 0);
    }
  }
}

TEST_CASE("ring geometry examples") {
  RingGeometry g2 = ring_geometry(2, 1.745752);
  REQUIRE(g2.sigma == Approx(0.503760).margin(5e-6));
  REQUIRE(g2.a_len == Approx(5.909039).margin(5e-6));
  REQUIRE(g2.e_len == Approx(7.4008492).margin(1e-6));
  RingGeometry g1 = ring_geometry(1, 0.7642854);
  REQUIRE(g1.a_len == Approx(4 * 0.7642854).margin(1e-5));
  REQUIRE(g1.c_len == Approx(g1.a_len).margin(1e-5));
}

TEST_CASE("ring geometry never fails across the parameter range") {
  for (double t : {1e-6, 1e-3, 0.1, 1.0, 10.0, 100.0, 1000.0}) {
    RingGeometry g = ring_geometry(3, t);
    REQUIRE(std::isfinite(g.e_len));
    REQUIRE(std::isfinite(g.a_len));
    REQUIRE(std::isfinite(g.c_len));
    REQUIRE(std::isfinite(g.log_sigma));
  }
  RingGeometry big = ring_geometry(1000, 800.0);
  REQUIRE(std::isfinite(big.a_len));
  REQUIRE(std::isfinite(big.log_sigma));
  REQUIRE(big.da_dt_log.sign != 0);
}

TEST_CASE("solve_tn reproduces the table") {
  TnSolution s1 = solve_tn(1);
  REQUIRE(s1.t_n == Approx(std::acosh(1.0 + std::sqrt(2.0)) / 2).epsilon(1e-12));
  REQUIRE(s1.L_n == Approx(2 * std::acosh(1.0 + std::sqrt(2.0))).epsilon(1e-10));
  TnSolution s2 = solve_tn(2);
  REQUIRE(s2.t_n == Approx(1.745752).margin(5e-7));
  REQUIRE(s2.geometry.a_len == Approx(5.909039).margin(5e-6));
  REQUIRE(s2.geometry.sigma == Approx(0.503760).margin(5e-6));
  REQUIRE(s2.girth_threshold == Approx(11.729861).margin(5e-6));
  REQUIRE(s2.w_n == 12);
  TnSolution s3 = solve_tn(3);
  REQUIRE(s3.t_n == Approx(2.645975).margin(5e-7));
  REQUIRE(s3.girth_threshold == Approx(45.979325).margin(5e-6));
  REQUIRE(s3.w_n == 46);
  TnSolution s4 = solve_tn(4);
  REQUIRE(s4.girth_threshold == Approx(153.048057).margin(5e-6));
  REQUIRE(s4.w_n == 154);
  REQUIRE(std::abs(s2.residual) < 1e-12);
  REQUIRE(std::abs(s3.residual) < 1e-12);
}

TEST_CASE("t_10 asymptotic check") {
  TnSolution s = solve_tn(10);
  REQUIRE(std::abs(s.t_n - 10 * kLambda) < 0.01);
  REQUIRE(std::abs(s.residual) < 1e-12);
}

TEST_CASE("a(t_n) = c(t_n) and the inequalities") {
  for (int n = 1; n <= 30; ++n) {
    TnSolution s = solve_tn(n);
    REQUIRE(std::abs(s.geometry.a_len - s.geometry.c_len) <
            1e-10 * s.geometry.a_len);
    if (n >= 2) {
      REQUIRE(s.geometry.a_len < 4 * s.t_n);
      REQUIRE(s.geometry.a_len < s.geometry.e_len);
      REQUIRE(s.t_n > 1.0);
      REQUIRE(s.geometry.da_dt > 0);
    }
    REQUIRE(s.geometry.dc_dt_log.sign < 0);
  }
}

namespace {
// Independent oracle for the derivatives at t_n, n = 2..30: symbolic
// differentiation evaluated at 50 digits. Double-precision central
// differences with h = 1e-6 can only resolve dc/dt and de/dt up to n ~ 10
// (the decrement of c over 2h falls below one ulp of c afterwards), so the
// direct FD comparison runs in that range and the frozen values carry the
// check to n = 30.
struct DerivRow { int n; double da, dc, de; };
constexpr DerivRow kDerivTable[] = {
    {2, 1.5521006185915625, -0.75050312820049618, -0.71043544699308723},
    {3, 1.8953360911170875, -0.17335362180021404, -0.17165118932663425},
    {4, 1.9770241743468899, -0.039203237267972711, -0.039135781570569455},
    {5, 1.9952055239335598, -0.0084064925277473352, -0.0084039969624720272},
    {6, 1.9990324200191551, -0.0017313380110063696, -0.0017312497134078644},
    {7, 1.9998091985168016, -0.00034659852146886782, -0.0003465954878209371},
    {8, 1.9999630143979908, -6.7964200831124315e-5, -6.7964098762363064e-5},
    {9, 1.9999929254077964, -1.3118505126252067e-5, -1.3118501745987037e-5},
    {10, 1.999998661146034, -2.5008699728058081e-6, -2.5008698622434843e-6},
    {11, 1.9999997488348085, -4.719897413850256e-7, -4.7198973780490686e-7},
    {12, 1.9999999532259244, -8.8342518532349428e-8, -8.834251841737975e-8},
    {13, 1.9999999913432881, -1.6420278435616991e-8, -1.6420278431950567e-8},
    {14, 1.9999999984063863, -3.0339878048619356e-9, -3.0339878047457039e-9},
    {15, 1.999999999707988, -5.5773215506772944e-10, -5.577321550640635e-10},
    {16, 1.9999999999467089, -1.0207115677280962e-10, -1.0207115677269451e-10},
    {17, 1.9999999999903094, -1.8607181963785569e-11, -1.8607181963781968e-11},
    {18, 1.9999999999982435, -3.3802811046072649e-12, -3.3802811046071527e-12},
    {19, 1.9999999999996825, -6.1218480096634589e-13, -6.121848009663424e-13},
    {20, 1.9999999999999428, -1.1056242788261869e-13, -1.1056242788261858e-13},
    {21, 1.9999999999999897, -1.9917989329206397e-14, -1.9917989329206394e-14},
    {22, 1.9999999999999982, -3.5801193984145933e-15, -3.5801193984145932e-15},
    {23, 1.9999999999999997, -6.4217189616238382e-16, -6.4217189616238381e-16},
    {24, 1.9999999999999999, -1.1496968205054392e-16, -1.1496968205054392e-16},
    {25, 2.0, -2.0547582204612666e-17, -2.0547582204612666e-17},
    {26, 2.0, -3.6664240686937898e-18, -3.6664240686937898e-18},
    {27, 2.0, -6.5325349318731828e-19, -6.5325349318731828e-19},
    {28, 2.0, -1.1623171269188196e-19, -1.1623171269188196e-19},
    {29, 2.0, -2.0654430897300255e-20, -2.0654430897300255e-20},
    {30, 2.0, -3.6659380301182072e-21, -3.6659380301182072e-21},
};
}  // namespace

TEST_CASE("analytic derivatives agree with finite differences") {
  // h = 1e-6 resolves the c and e decrements up to n ~ 7 in doubles;
  // da/dt stays order one, so its window extends to n = 30.
  for (int n = 2; n <= 6; ++n) {
    TnSolution s = solve_tn(n);
    double t = s.t_n, h = 1e-6;
    RingGeometry g = s.geometry;
    double fa = fd(a_of, n, t, h);
    double fc = fd(c_of, n, t, h);
    double fe = fd(e_of, n, t, h);
    REQUIRE(std::abs(g.da_dt - fa) < 1e-5 * std::abs(g.da_dt));
    REQUIRE(std::abs(g.dc_dt - fc) < 1e-5 * std::abs(g.dc_dt));
    REQUIRE(std::abs(g.de_dt - fe) < 1e-5 * std::abs(g.de_dt));
  }
  for (int n = 2; n <= 30; ++n) {
    TnSolution s = solve_tn(n);
    RingGeometry g = s.geometry;
    double fa = fd(a_of, n, s.t_n, 1e-6);
    REQUIRE(std::abs(g.da_dt - fa) < 1e-5 * std::abs(g.da_dt));
  }
}

TEST_CASE("analytic derivatives match the high-precision oracle to n = 30") {
  for (const auto& row : kDerivTable) {
    RingGeometry g = solve_tn(row.n).geometry;
    REQUIRE(g.da_dt == Approx(row.da).epsilon(1e-10));
    REQUIRE(g.dc_dt == Approx(row.dc).epsilon(1e-9));
    REQUIRE(g.de_dt == Approx(row.de).epsilon(1e-9));
  }
}

TEST_CASE("monotonicity sweeps") {
  // c strictly decreasing on [0.5, 2 t_n]; beyond t_n + 1 the decrements of
  // c(t) fall below double resolution, so ties are tolerated there.
  for (int n = 2; n <= 10; ++n) {
    double tn = solve_tn(n).t_n;
    const int grid = 10000;
    double prev = c_of(n, 0.5);
    for (int i = 1; i <= grid; ++i) {
      double t = 0.5 + (2 * tn - 0.5) * i / grid;
      double cur = c_of(n, t);
      if (t <= tn + 1.0)
        REQUIRE(cur < prev);
      else
        REQUIRE(cur <= prev);
      prev = cur;
    }
    REQUIRE(c_of(n, 2 * tn) < c_of(n, 0.5));
  }
  // cosh(a/2)/cosh(2t) strictly decreasing
  for (int n : {2, 5}) {
    const int grid = 10000;
    auto ratio = [n](double t) {
      RingGeometry g = ring_geometry(n, t);
      return std::exp(log_cosh(g.a_len / 2) - log_cosh(2 * t));
    };
    double prev = ratio(0.5);
    for (int i = 1; i <= grid; ++i) {
      double t = 0.5 + 3.5 * i / grid;
      double cur = ratio(t);
      REQUIRE(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("sigma lower bound in the log domain") {
  for (int n = 8; n <= 40; ++n) {
    TnSolution s = solve_tn(n);
    REQUIRE(s.geometry.log_sigma >= -n * kLambda);
  }
}

TEST_CASE("a(t_n) approaches its linear asymptote monotonically") {
  double prev = 1e9;
  for (int n = 4; n <= 40; ++n) {
    TnSolution s = solve_tn(n);
    double gap = s.geometry.a_len - (4 * n * kLambda - 2 * std::log(2.0));
    REQUIRE(gap > -1e-9);
    REQUIRE(gap < prev + 1e-12);
    prev = gap;
  }
}

TEST_CASE("solver stays finite at extreme levels") {
  for (int n : {100, 10000, 1000000}) {
    TnSolution s = solve_tn(n);
    REQUIRE(std::isfinite(s.t_n));
    REQUIRE(std::abs(s.residual) < 1e-12);
    REQUIRE(std::isfinite(s.log_girth_threshold));
    REQUIRE(std::isfinite(s.L_n));
    REQUIRE(std::abs(s.t_n - n * kLambda) < 0.01);
  }
}

TEST_CASE("sn_check") {
  SnCheck s2 = sn_check(2);
  REQUIRE(s2.s_n == Approx(1.34762179408848909).margin(1e-6));
  REQUIRE(s2.s_n > 1.0);
  REQUIRE(s2.s_n < solve_tn(2).t_n);
  REQUIRE(s2.c_at_sn > 4 * s2.s_n);
  SnCheck s3 = sn_check(3);
  RingGeometry g = ring_geometry(3, s3.s_n);
  REQUIRE(g.a_len == Approx(4 * s3.s_n).epsilon(1e-10));
}
