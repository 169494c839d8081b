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
#include <random>

#include "systole/hyptrig.hpp"
#include "systole/oracle.hpp"
#include "systole/ring.hpp"

using namespace systole;
using Catch::Approx;

TEST_CASE("hyperboloid points and distances") {
  auto p = oracle::make_point(1, 0, 0);
  auto q = oracle::point_at(1.3, 0.4);
  REQUIRE(oracle::minkowski(q, q) == Approx(1.0).margin(1e-12));
  REQUIRE(oracle::distance(p, q) == Approx(1.3).epsilon(1e-12));
  REQUIRE(oracle::distance(q, p) == Approx(1.3).epsilon(1e-12));
  REQUIRE_THROWS_AS(oracle::make_point(1, 1, 1), std::domain_error);
}

TEST_CASE("measured triangles match the closed forms") {
  auto m = oracle::measure_triangle(1.0, 1.0);
  REQUIRE(m.hyp == Approx(1.5133740065965039598).margin(1e-9));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.2, 5.0);
  for (int i = 0; i < 1000; ++i) {
    double a = u(rng), b = u(rng);
    auto t = oracle::measure_triangle(a, b);
    REQUIRE(t.hyp == Approx(rt_hypotenuse(a, b)).margin(1e-9));
    // angles satisfy cos(beta) = cosh(b) sin(alpha)
    REQUIRE(std::cos(t.beta) == Approx(std::cosh(b) * std::sin(t.alpha)).margin(1e-9));
  }
  auto s1 = oracle::measure_triangle(0.8, 2.2);
  auto s2 = oracle::measure_triangle(2.2, 0.8);
  REQUIRE(s1.hyp == Approx(s2.hyp).margin(1e-12));
}

TEST_CASE("measured pentagons match the closed forms") {
  REQUIRE(oracle::measure_pentagon(1.0, 1.0) ==
          Approx(0.84745058129585137309).margin(1e-9));
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.95, 5.0);
  for (int i = 0; i < 1000; ++i) {
    double a = u(rng), b = u(rng);
    if (std::sinh(a) * std::sinh(b) <= 1.0) continue;
    REQUIRE(oracle::measure_pentagon(a, b) == Approx(pentagon_side(a, b)).margin(1e-9));
  }
}

TEST_CASE("Bolza right triangle from coordinates") {
  double t1 = std::acosh(1.0 + std::sqrt(2.0)) / 2.0;
  double u1 = std::asinh(1.0 / std::tanh(t1));
  auto m = oracle::measure_triangle(t1, u1);
  REQUIRE(m.hyp == Approx(std::acosh(1.0 + std::sqrt(2.0))).margin(1e-9));
}

TEST_CASE("ring curves re-measured for small n") {
  for (int n = 1; n <= 6; ++n) {
    TnSolution sol = solve_tn(n);
    auto m = oracle::measure_ring_curves(n, sol.t_n);
    REQUIRE(m.a == Approx(sol.geometry.a_len).margin(1e-9));
    REQUIRE(m.c == Approx(sol.geometry.c_len).margin(1e-9));
    REQUIRE(m.e == Approx(sol.geometry.e_len).margin(1e-8));
    REQUIRE(m.sigma == Approx(sol.geometry.sigma).margin(1e-8));
    REQUIRE(std::abs(m.a - m.c) < 1e-6);
  }
  // Table values
  auto m2 = oracle::measure_ring_curves(2, 1.745752);
  REQUIRE(m2.a == Approx(5.909039).margin(5e-6));
  auto m3 = oracle::measure_ring_curves(3, 2.645975);
  REQUIRE(m3.a == Approx(9.256205).margin(5e-6));
  auto m1 = oracle::measure_ring_curves(1, std::acosh(1.0 + std::sqrt(2.0)) / 2.0);
  REQUIRE(m1.a == Approx(3.0571358).margin(1e-6));
}

TEST_CASE("Gauss-Bonnet sanity for the coordinate pentagon") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(1.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    double a = u(rng), b = u(rng);
    auto gb = oracle::pentagon_gauss_bonnet(a, b);
    REQUIRE(gb.area > 0.0);
    REQUIRE(gb.angle_sum == Approx(5.0 * M_PI / 2.0).margin(1e-9));
    REQUIRE(gb.angle_sum + gb.area == Approx(3.0 * M_PI).margin(1e-9));
  }
}
