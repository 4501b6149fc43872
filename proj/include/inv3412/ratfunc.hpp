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

// Reduced rational functions over Q: gcd(num, den) = 1, den monic.

#include <string>
#include <utility>

#include "inv3412/errors.hpp"
#include "inv3412/poly.hpp"

namespace inv3412 {

class RatFunc {
 public:
  RatFunc() : den_(Poly::constant(1)) {}
  RatFunc(const Poly& p) : num_(p), den_(Poly::constant(1)) {}  // NOLINT
  RatFunc(long c) : RatFunc(Poly{c}) {}                          // NOLINT
  RatFunc(const Rational& c) : RatFunc(Poly::constant(c)) {}     // NOLINT

  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  // Order at 0: valuation(num) - valuation(den).
  int valuation() const {
    if (is_zero()) return 0;
    return num_.valuation() - den_.valuation();
  }

  RatFunc operator-() const { return from_reduced(-num_, den_); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    // With g = gcd(b1, b2) the sum only needs reducing by gcd(num, g).
    const Poly g = gcd(a.den_, b.den_);
    const Poly da = Poly::exact_div(a.den_, g);
    const Poly db = Poly::exact_div(b.den_, g);
    Poly num = a.num_ * db + b.num_ * da;
    Poly den = da * b.den_;
    if (g.is_constant()) return from_reduced(std::move(num), std::move(den));
    const Poly h = gcd(num, g);
    if (h.is_constant()) return from_reduced(std::move(num), std::move(den));
    return from_reduced(Poly::exact_div(num, h), Poly::exact_div(den, h));
  }

  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return a + (-b);
  }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const Poly g1 = gcd(a.num_, b.den_);
    const Poly g2 = gcd(b.num_, a.den_);
    Poly an = Poly::exact_div(a.num_, g1), bd = Poly::exact_div(b.den_, g1);
    Poly bn = Poly::exact_div(b.num_, g2), ad = Poly::exact_div(a.den_, g2);
    return from_reduced(an * bn, ad * bd);
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    return a * b.inverse();
  }

  RatFunc inverse() const {
    if (is_zero()) throw ArithmeticError("rational function division by zero");
    return from_reduced(den_, num_);
  }

  // Integer powers, negative allowed for nonzero values.
  RatFunc pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return from_reduced(num_.pow(static_cast<unsigned>(e)),
                        den_.pow(static_cast<unsigned>(e)));
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  // num and den already coprime; only the leading coefficient is fixed up.
  static RatFunc from_reduced(Poly num, Poly den) {
    RatFunc out;
    out.num_ = std::move(num);
    out.den_ = std::move(den);
    out.make_monic();
    return out;
  }

  void normalize() {
    if (den_.is_zero()) throw ArithmeticError("zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::constant(1);
      return;
    }
    const Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = Poly::exact_div(num_, g);
      den_ = Poly::exact_div(den_, g);
    }
    make_monic();
  }

  void make_monic() {
    if (num_.is_zero()) {
      den_ = Poly::constant(1);
      return;
    }
    if (den_.lead() != 1) {
      const Rational k = 1 / den_.lead();
      num_ = num_ * k;
      den_ = den_ * k;
    }
  }

  Poly num_;
  Poly den_;
};

}  // namespace inv3412
