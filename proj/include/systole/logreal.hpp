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
#include <limits>
#include <stdexcept>

namespace systole {

/// Sign/log representation of a real number. Keeps quantities like
/// cosh(e/4) finite for arbitrarily large n, where the plain double
/// would overflow around n ~ 800.
struct LogReal {
  int sign = 0;          // -1, 0, +1
  double log_abs = 0.0;  // natural log of |value|; ignored when sign == 0

  LogReal() = default;
  LogReal(int s, double l) : sign(s), log_abs(l) {}

  static LogReal zero() { return LogReal{0, 0.0}; }
  static LogReal one() { return LogReal{1, 0.0}; }

  static LogReal from_double(double x) {
    if (x == 0.0) return zero();
    return LogReal{x > 0 ? 1 : -1, std::log(std::abs(x))};
  }

  /// Value exp(l) > 0 given directly in the log domain.
  static LogReal from_log(double l, int s = 1) { return LogReal{s, l}; }

  double to_double() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_abs);
  }

  bool is_zero() const { return sign == 0; }

  LogReal operator-() const { return LogReal{-sign, log_abs}; }

  friend LogReal operator*(const LogReal& a, const LogReal& b) {
    if (a.sign == 0 || b.sign == 0) return zero();
    return LogReal{a.sign * b.sign, a.log_abs + b.log_abs};
  }

  friend LogReal operator/(const LogReal& a, const LogReal& b) {
    if (b.sign == 0) throw std::domain_error("LogReal: division by zero");
    if (a.sign == 0) return zero();
    return LogReal{a.sign * b.sign, a.log_abs - b.log_abs};
  }

  friend LogReal operator+(const LogReal& a, const LogReal& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    if (a.sign == b.sign) {
      // log(|a| + |b|) = max + log1p(exp(min - max))
      double hi = a.log_abs, lo = b.log_abs;
      if (lo > hi) std::swap(hi, lo);
      return LogReal{a.sign, hi + std::log1p(std::exp(lo - hi))};
    }
    if (a.log_abs == b.log_abs) return zero();
    const LogReal& big = (a.log_abs > b.log_abs) ? a : b;
    const LogReal& small = (a.log_abs > b.log_abs) ? b : a;
    double diff = std::expm1(small.log_abs - big.log_abs);  // in (-1, 0)
    return LogReal{big.sign, big.log_abs + std::log(-diff)};
  }

  friend LogReal operator-(const LogReal& a, const LogReal& b) { return a + (-b); }

  friend bool operator<(const LogReal& a, const LogReal& b) {
    if (a.sign != b.sign) return a.sign < b.sign;
    if (a.sign == 0) return false;
    if (a.sign > 0) return a.log_abs < b.log_abs;
    return a.log_abs > b.log_abs;
  }
  friend bool operator>(const LogReal& a, const LogReal& b) { return b < a; }
};

inline LogReal sqrt(const LogReal& a) {
  if (a.sign < 0) throw std::domain_error("LogReal: sqrt of negative");
  if (a.sign == 0) return LogReal::zero();
  return LogReal{1, 0.5 * a.log_abs};
}

}  // namespace systole
