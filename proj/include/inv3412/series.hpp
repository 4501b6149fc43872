// Copyright 2026 The inv3412 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Truncated power series with exact rational coefficients, and the bridge
// from closed forms in Q(x)[w] to Taylor coefficients at 0.

#include <algorithm>
#include <string>
#include <vector>

#include "inv3412/errors.hpp"
#include "inv3412/poly.hpp"
#include "inv3412/quadext.hpp"
#include "inv3412/ratfunc.hpp"

namespace inv3412 {

inline constexpr int kDefaultSeriesOrder = 40;

// Coefficients of x^0..x^order; everything above `order` is unknown.
class SeriesQ {
 public:
  SeriesQ() = default;
  explicit SeriesQ(int order) : c_(static_cast<size_t>(order) + 1) {}
  SeriesQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}  // NOLINT

  static SeriesQ from_poly(const Poly& p, int order) {
    SeriesQ s(order);
    for (int i = 0; i <= order; ++i) s.c_[i] = p.coeff(i);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  Rational& operator[](int i) { return c_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  SeriesQ truncated(int order) const {
    SeriesQ s(std::min(order, this->order()));
    std::copy_n(c_.begin(), s.c_.size(), s.c_.begin());
    return s;
  }

  bool all_integers() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rational& q) { return q.get_den() == 1; });
  }

  friend SeriesQ operator+(const SeriesQ& a, const SeriesQ& b) {
    SeriesQ s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) s[i] = a[i] + b[i];
    return s;
  }
  friend SeriesQ operator-(const SeriesQ& a, const SeriesQ& b) {
    SeriesQ s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) s[i] = a[i] - b[i];
    return s;
  }
  friend SeriesQ operator*(const SeriesQ& a, const SeriesQ& b) {
    SeriesQ s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= s.order(); ++j) s[i + j] += a[i] * b[j];
    }
    return s;
  }
  friend SeriesQ operator*(const Rational& k, const SeriesQ& a) {
    SeriesQ s = a;
    for (auto& c : s.c_) c *= k;
    return s;
  }

  // Multiplicative inverse; needs a nonzero constant term.
  SeriesQ inverse() const {
    if (c_.empty() || c_[0] == 0) {
      throw ArithmeticError("series with zero constant term is not invertible");
    }
    SeriesQ s(order());
    const Rational inv0 = 1 / c_[0];
    s[0] = inv0;
    for (int k = 1; k <= order(); ++k) {
      Rational acc = 0;
      for (int j = 1; j <= k; ++j) acc += c_[j] * s[k - j];
      s[k] = -acc * inv0;
    }
    return s;
  }

  friend bool operator==(const SeriesQ&, const SeriesQ&) = default;

 private:
  std::vector<Rational> c_;
};

// The square root of delta with constant term 1, from the coefficient
// recurrence 2 s_k = d_k - sum_{0<j<k} s_j s_{k-j}.
inline SeriesQ sqrt_series(const Poly& delta, int order) {
  if (delta.coeff(0) != 1) {
    throw ArgumentError("sqrt_series needs constant term 1, got " +
                        delta.to_string());
  }
  SeriesQ s(order);
  s[0] = 1;
  for (int k = 1; k <= order; ++k) {
    Rational acc = delta.coeff(k);
    for (int j = 1; j < k; ++j) acc -= s[j] * s[k - j];
    s[k] = acc / 2;
  }
  return s;
}

// Taylor coefficients of x^shift * f up to x^order. Throws if that product
// still has a pole at 0.
inline SeriesQ series_of(const RatFunc& f, int order, int shift = 0) {
  if (f.is_zero()) return SeriesQ(order);
  const int dv = f.den().valuation();
  if (f.num().valuation() + shift < dv) {
    throw ArithmeticError("pole at 0 in " + f.to_string());
  }
  // x^shift num / den = x^(shift - dv) num / (den / x^dv)
  const Poly reduced_den = f.den().shifted(-dv);
  const Poly num = f.num().shifted(shift - dv);
  return SeriesQ::from_poly(num, order) *
         SeriesQ::from_poly(reduced_den, order).inverse();
}

inline constexpr int kMaxPoleOrder = 4;

// Taylor coefficients of u = a + b*w at 0, where w is the branch of
// sqrt(D) with w(0) = 1. a and b may carry poles of order up to
// `max_pole` provided they cancel in the sum.
inline SeriesQ quadext_to_series(const QuadExt& u, int order,
                                 int max_pole = kMaxPoleOrder) {
  const int pole = std::max({0, -u.a().valuation(), -u.b().valuation()});
  if (pole > max_pole) {
    throw ArithmeticError("pole of order " + std::to_string(pole) +
                          " exceeds the bound " + std::to_string(max_pole));
  }
  const int extended = order + pole;
  SeriesQ total = series_of(u.a(), extended, pole);
  if (!u.b().is_zero()) {
    total = total + series_of(u.b(), extended, pole) *
                        sqrt_series(u.disc(), extended);
  }
  for (int i = 0; i < pole; ++i) {
    if (total[i] != 0) {
      throw ArithmeticError("closed form has a pole of order " +
                            std::to_string(pole - i) + " at 0");
    }
  }
  SeriesQ out(order);
  for (int i = 0; i <= order; ++i) out[i] = total[i + pole];
  return out;
}

}  // namespace inv3412
