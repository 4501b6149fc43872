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

// Dense univariate polynomials over Q (ascending coefficients) with exact
// division and monic gcd.

#include <gmpxx.h>

#include <algorithm>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "inv3412/errors.hpp"

namespace inv3412 {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

class Poly {
 public:
  Poly() = default;

  Poly(std::initializer_list<long> ascending) {
    coeffs_.reserve(ascending.size());
    for (long c : ascending) coeffs_.emplace_back(c);
    trim();
  }

  explicit Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
    trim();
  }

  static Poly constant(const Rational& c) { return Poly(std::vector{c}); }

  static Poly monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
  }

  static Poly x() { return monomial(1, 1); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Rational coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i]
                                                           : Rational(0);
  }
  const Rational& lead() const { return coeffs_.back(); }
  std::span<const Rational> coeffs() const { return coeffs_; }

  // Lowest degree with a nonzero coefficient; 0 for the zero polynomial.
  int valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return static_cast<int>(i);
    }
    return 0;
  }

  // Multiplies by x^k (k >= 0) or divides by x^-k (k < 0, exact).
  Poly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    if (k > 0) {
      std::vector<Rational> v(static_cast<size_t>(k));
      v.insert(v.end(), coeffs_.begin(), coeffs_.end());
      return Poly(std::move(v));
    }
    if (-k > valuation()) throw ArithmeticError("inexact division by x^k");
    return Poly(std::vector<Rational>(coeffs_.begin() - k, coeffs_.end()));
  }

  Rational eval(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * at + *it;
    }
    return acc;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * Rational(1 / lead());
  }

  Poly pow(unsigned e) const {
    Poly result = constant(1);
    Poly base = *this;
    while (e > 0) {
      if (e & 1u) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  Poly operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Poly(std::move(v));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (size_t j = 0; j < b.coeffs_.size(); ++j) {
        v[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(v));
  }

  friend Poly operator*(const Poly& a, const Rational& k) {
    if (k == 0) return {};
    Poly out = a;
    for (auto& c : out.coeffs_) c *= k;
    return out;
  }
  friend Poly operator*(const Rational& k, const Poly& a) { return a * k; }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Quotient and remainder; throws on division by zero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quot(static_cast<size_t>(a.degree() - b.degree() + 1));
    const Rational inv_lead = 1 / b.lead();
    const int db = b.degree();
    for (int k = a.degree() - db; k >= 0; --k) {
      Rational q = rem[static_cast<size_t>(k + db)] * inv_lead;
      if (q == 0) continue;
      for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k + j)] -= q * b.coeffs_[j];
      quot[static_cast<size_t>(k)] = std::move(q);
    }
    rem.resize(static_cast<size_t>(db));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
  }

  // Exact quotient; throws if b does not divide a.
  static Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw ArithmeticError("inexact polynomial division");
    return q;
  }

  // Monic gcd; gcd(0, 0) = 0.
  friend Poly gcd(Poly a, Poly b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
      if (b.is_constant()) return constant(1);
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  // Human-readable form with rational coefficients, ascending degree.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

// p = scale * (sum of integer coefficients z_i x^i) with the z_i coprime and
// the leading z positive.
struct IntegerForm {
  Rational scale;
  std::vector<Integer> coeffs;
};

inline IntegerForm integer_form(const Poly& p) {
  IntegerForm out{Rational(0), {}};
  if (p.is_zero()) return out;
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer z = c.get_num() * (den_lcm / c.get_den());
    out.coeffs.push_back(z);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
  }
  if (out.coeffs.back() < 0) content = -content;
  for (auto& z : out.coeffs) z /= content;
  out.scale = Rational(content, den_lcm);
  out.scale.canonicalize();
  return out;
}

// Integer coefficients rendered as "1 - 2*x - 3*x^2".
inline std::string format_integer_poly(std::span<const Integer> coeffs,
                                       const std::string& var = "x") {
  std::string out;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    const Integer& z = coeffs[i];
    if (z == 0) continue;
    const bool negative = z < 0;
    Integer mag = abs(z);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (i == 0 || !unit) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

inline std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  IntegerForm form = integer_form(*this);
  const std::string body = format_integer_poly(form.coeffs, var);
  if (form.scale == 1) return body;
  return "(" + form.scale.get_str() + ")*(" + body + ")";
}

}  // namespace inv3412
