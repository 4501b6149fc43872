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

// Parser for polynomial expressions in x with integer coefficients, e.g.
// "(x-1)(2x^2-2x+1)(1+x)^2" or "-4*x^13 - 14*x^11 + 5". Multiplication may
// be written with '*' or by juxtaposition.

#include <cctype>
#include <string>
#include <string_view>

#include "inv3412/errors.hpp"
#include "inv3412/poly.hpp"

namespace inv3412 {

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return p;
  }

 private:
  Poly expr() {
    Poly acc = term();
    for (;;) {
      skip();
      if (peek() == '+') {
        ++pos_;
        acc += term();
      } else if (peek() == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (c == '(' || c == 'x' || std::isdigit(static_cast<unsigned char>(c))) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    skip();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    if (peek() == '+') {
      ++pos_;
      return factor();
    }
    Poly base = primary();
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      const long e = number();
      if (e < 0) fail("negative exponent");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly primary() {
    skip();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      return Poly::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return Poly::constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    fail("unexpected character");
    return {};
  }

  long number() {
    size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ArgumentError("polynomial parse error (" + what + ") at offset " +
                        std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace detail

inline Poly parse_poly(std::string_view text) {
  return detail::PolyParser(text).parse();
}

}  // namespace inv3412
