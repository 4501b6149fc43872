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

// Elements a + b*w of Q(x)[w]/(w^2 - D(x)) for a fixed square-free
// discriminant D. Square-freeness makes (a, b) a canonical representation,
// so equality is componentwise.

#include <string>
#include <utility>

#include "inv3412/errors.hpp"
#include "inv3412/poly.hpp"
#include "inv3412/ratfunc.hpp"

namespace inv3412 {

class QuadExt {
 public:
  QuadExt() = default;
  explicit QuadExt(Poly disc) : disc_(std::move(disc)) {}
  QuadExt(RatFunc a, RatFunc b, Poly disc)
      : a_(std::move(a)), b_(std::move(b)), disc_(std::move(disc)) {}

  // The generator w itself.
  static QuadExt root(const Poly& disc) { return QuadExt(RatFunc(0), RatFunc(1), disc); }
  static QuadExt scalar(const RatFunc& a, const Poly& disc) {
    return QuadExt(a, RatFunc(0), disc);
  }

  const RatFunc& a() const { return a_; }
  const RatFunc& b() const { return b_; }
  const Poly& disc() const { return disc_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadExt conjugate() const { return QuadExt(a_, -b_, disc_); }

  // a^2 - b^2 D, the product with the conjugate.
  RatFunc norm() const { return a_ * a_ - b_ * b_ * RatFunc(disc_); }

  QuadExt inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero in quadratic extension");
    const RatFunc n_inv = norm().inverse();
    return QuadExt(a_ * n_inv, -(b_ * n_inv), disc_);
  }

  // u / w for the generator w.
  QuadExt divided_by_root() const {
    return QuadExt(b_, a_ / RatFunc(disc_), disc_);
  }

  QuadExt operator-() const { return QuadExt(-a_, -b_, disc_); }

  friend QuadExt operator+(const QuadExt& u, const QuadExt& v) {
    check_same_field(u, v);
    return QuadExt(u.a_ + v.a_, u.b_ + v.b_, u.disc_);
  }
  friend QuadExt operator-(const QuadExt& u, const QuadExt& v) {
    return u + (-v);
  }

  friend QuadExt operator*(const QuadExt& u, const QuadExt& v) {
    check_same_field(u, v);
    if (u.b_.is_zero()) return QuadExt(u.a_ * v.a_, u.a_ * v.b_, u.disc_);
    if (v.b_.is_zero()) return QuadExt(u.a_ * v.a_, u.b_ * v.a_, u.disc_);
    return QuadExt(u.a_ * v.a_ + u.b_ * v.b_ * RatFunc(u.disc_),
                   u.a_ * v.b_ + u.b_ * v.a_, u.disc_);
  }

  friend QuadExt operator*(const RatFunc& k, const QuadExt& u) {
    return QuadExt(k * u.a_, k * u.b_, u.disc_);
  }
  friend QuadExt operator*(const QuadExt& u, const RatFunc& k) { return k * u; }

  friend QuadExt operator/(const QuadExt& u, const QuadExt& v) {
    return u * v.inverse();
  }

  QuadExt pow(unsigned e) const {
    QuadExt result = scalar(RatFunc(1), disc_);
    QuadExt base = *this;
    while (e > 0) {
      if (e & 1u) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

  friend bool operator==(const QuadExt& u, const QuadExt& v) {
    return u.disc_ == v.disc_ && u.a_ == v.a_ && u.b_ == v.b_;
  }

  std::string to_string() const {
    return "(" + a_.to_string() + ") + (" + b_.to_string() + ")*w";
  }

 private:
  static void check_same_field(const QuadExt& u, const QuadExt& v) {
    if (!(u.disc_ == v.disc_)) {
      throw ArgumentError("mixing quadratic extensions with discriminants " +
                          u.disc_.to_string() + " and " + v.disc_.to_string());
    }
  }

  RatFunc a_;
  RatFunc b_;
  Poly disc_;
};

}  // namespace inv3412
