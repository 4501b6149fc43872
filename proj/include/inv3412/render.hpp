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

// Text forms of closed generating functions.
//
// canonical: (N)/(D) + (N)/(D)*sqrt(delta)^(e) with integer coefficients,
//   e = 1 - 2k where delta^k is the largest power dividing the denominator
//   of the w-part. Readable by common computer-algebra systems.
// paper: 1/(2x^2) F(x) + 1/(2x^2) G(x) sqrt(delta)^(1-2r), with the
//   denominators of F and G written as powers of (1-x^2), (1-x), (1+x),
//   (1+x^2) on the left-hand side. Falls back to canonical when a
//   denominator has any other factor.

#include <string>
#include <variant>
#include <vector>

#include "inv3412/genfun.hpp"
#include "inv3412/poly.hpp"
#include "inv3412/quadext.hpp"
#include "inv3412/ratfunc.hpp"

namespace inv3412 {

enum class RenderStyle { kCanonical, kPaper };

struct Rendered {
  std::string text;
  bool fell_back = false;  // paper style requested but not possible
  std::string warning;
};

namespace detail {

inline std::vector<Integer> scaled(const std::vector<Integer>& coeffs,
                                   const Integer& k) {
  std::vector<Integer> out;
  for (const auto& z : coeffs) out.push_back(z * k);
  return out;
}

inline int lowest_nonzero_sign(const std::vector<Integer>& coeffs) {
  for (const auto& z : coeffs) {
    if (z != 0) return sgn(z);
  }
  return 0;
}

// Integer numerator and denominator of f, denominator's lowest term
// positive.
inline std::pair<std::vector<Integer>, std::vector<Integer>> integer_fraction(
    const RatFunc& f) {
  const IntegerForm num = integer_form(f.num());
  const IntegerForm den = integer_form(f.den());
  Rational q = num.scale / den.scale;
  Integer top = q.get_num(), bottom = q.get_den();
  if (lowest_nonzero_sign(den.coeffs) < 0) {
    top = -top;
    bottom = -bottom;
  }
  return {scaled(num.coeffs, top), scaled(den.coeffs, bottom)};
}

inline std::string canonical_ratfunc(const RatFunc& f) {
  if (f.is_zero()) return "0";
  const auto [num, den] = integer_fraction(f);
  const std::string top = "(" + format_integer_poly(num) + ")";
  if (den.size() == 1 && den[0] == 1) return top;
  return top + "/(" + format_integer_poly(den) + ")";
}

// Coefficient signs kept as they are; a positive rational scale is pulled
// out when the coefficients are not coprime integers.
inline std::string poly_text(const Poly& p) {
  if (p.is_zero()) return "0";
  IntegerForm form = integer_form(p);
  if (form.scale < 0) {
    form.scale = -form.scale;
    for (auto& z : form.coeffs) z = -z;
  }
  const std::string body = format_integer_poly(form.coeffs);
  if (form.scale == 1) return body;
  return "(" + form.scale.get_str() + ")*(" + body + ")";
}

inline std::string sqrt_text(const Poly& disc) {
  return "sqrt(" + poly_text(disc) + ")";
}

// Largest k with disc^k dividing the denominator of f.
inline int disc_power(const RatFunc& f, const Poly& disc) {
  int k = 0;
  Poly den = f.den();
  while (den.degree() >= disc.degree()) {
    auto [q, r] = Poly::divmod(den, disc);
    if (!r.is_zero()) break;
    den = q;
    ++k;
  }
  return k;
}

struct FactoredDen {
  int one_minus_x2 = 0, one_minus_x = 0, one_plus_x = 0, one_plus_x2 = 0;
  Rational unit = 1;
  bool complete = false;
};

inline FactoredDen factor_den(const Poly& den) {
  FactoredDen out;
  Poly rest = den;
  auto strip = [&](const Poly& factor, int& count) {
    while (rest.degree() >= factor.degree()) {
      auto [q, r] = Poly::divmod(rest, factor);
      if (!r.is_zero()) break;
      rest = q;
      ++count;
    }
  };
  strip(Poly{1, -1}, out.one_minus_x);
  strip(Poly{1, 1}, out.one_plus_x);
  strip(Poly{1, 0, 1}, out.one_plus_x2);
  out.one_minus_x2 = std::min(out.one_minus_x, out.one_plus_x);
  out.one_minus_x -= out.one_minus_x2;
  out.one_plus_x -= out.one_minus_x2;
  out.complete = rest.is_constant();
  if (out.complete) out.unit = rest.coeff(0);
  return out;
}

inline std::string power_factor(const std::string& base, int e) {
  if (e == 0) return "";
  return "(" + base + ")" + (e == 1 ? "" : "^" + std::to_string(e)) + "*";
}

// "(1-x^2)*(1+x)^2*F_r(x) = numerator", or "F_r(x) = numerator".
inline std::string paper_line(const std::string& name, const RatFunc& f,
                              const FactoredDen& fd) {
  std::string lhs = power_factor("1-x^2", fd.one_minus_x2) +
                    power_factor("1-x", fd.one_minus_x) +
                    power_factor("1+x", fd.one_plus_x) +
                    power_factor("1+x^2", fd.one_plus_x2) + name;
  const Poly rhs = f.num() * Poly::constant(Rational(1) / fd.unit);
  return lhs + " = " + poly_text(rhs);
}

inline std::string series_name(GFKind kind, int r) {
  return std::string(to_string(kind)) + "_" + std::to_string(r) + "(x)";
}

}  // namespace detail

inline std::string render_canonical(const QuadExt& u) {
  const std::string rational = detail::canonical_ratfunc(u.a());
  if (u.b().is_zero()) return rational;
  const int k = detail::disc_power(u.b(), u.disc());
  const RatFunc b = u.b() * RatFunc(u.disc()).pow(k);
  const std::string root = detail::canonical_ratfunc(b) + "*" +
                           detail::sqrt_text(u.disc()) + "^(" +
                           std::to_string(1 - 2 * k) + ")";
  if (u.a().is_zero()) return root;
  return rational + " + " + root;
}

// Paper-style text for I_r or N_r: the F/G (or P/Q) pair.
inline Rendered render_paper(const QuadExt& u, GFKind kind, int r) {
  const RatFunc two_x2(Poly{0, 0, 2});
  const RatFunc f = u.a() * two_x2;
  const RatFunc g = u.b() * two_x2 * RatFunc(u.disc()).pow(r);
  const auto ff = detail::factor_den(f.den());
  const auto gf = detail::factor_den(g.den());
  const std::string name = detail::series_name(kind, r);
  if (!ff.complete || !gf.complete) {
    return {name + " = " + render_canonical(u), true,
            "paper-style factoring impossible for " + name +
                "; printed in canonical form"};
  }
  const bool signed_kind = kind == GFKind::kN;
  const std::string fn = (signed_kind ? "P_" : "F_") + std::to_string(r) + "(x)";
  const std::string gn = (signed_kind ? "Q_" : "G_") + std::to_string(r) + "(x)";
  std::string text = name + " = " + fn + "/(2*x^2) + " + gn + "/(2*x^2)*" +
                     detail::sqrt_text(u.disc()) + "^(" +
                     std::to_string(1 - 2 * r) + ")\n";
  text += "  " + detail::paper_line(fn, f, ff) + "\n";
  text += "  " + detail::paper_line(gn, g, gf);
  return {text, false, {}};
}

inline Rendered render_closed(const GFResult& g, RenderStyle style) {
  const std::string name = detail::series_name(g.kind, g.r);
  if (const auto* u = std::get_if<QuadExt>(&g.closed)) {
    if (style == RenderStyle::kPaper) return render_paper(*u, g.kind, g.r);
    return {name + " = " + render_canonical(*u), false, {}};
  }
  const auto& eo = std::get<EvenOddClosed>(g.closed);
  const std::string op = eo.n_sign > 0 ? " + " : " - ";
  if (style == RenderStyle::kCanonical) {
    return {name + " = ((" + render_canonical(eo.i_part) + ")" + op + "(" +
                render_canonical(eo.n_part) + "))/2",
            false, {}};
  }
  const Rendered i = render_paper(eo.i_part, GFKind::kI, g.r);
  const Rendered n = render_paper(eo.n_part, GFKind::kN, g.r);
  Rendered out;
  out.text = name + " = (" + detail::series_name(GFKind::kI, g.r) + op +
             detail::series_name(GFKind::kN, g.r) + ")/2\n" + i.text + "\n" + n.text;
  out.fell_back = i.fell_back || n.fell_back;
  out.warning = i.warning.empty() ? n.warning : i.warning;
  return out;
}

// Canonical text of just the closed form, without the "name =" prefix.
inline std::string closed_expression(const GFResult& g) {
  if (const auto* u = std::get_if<QuadExt>(&g.closed)) return render_canonical(*u);
  const auto& eo = std::get<EvenOddClosed>(g.closed);
  return "((" + render_canonical(eo.i_part) + ")" + (eo.n_sign > 0 ? " + " : " - ") +
         "(" + render_canonical(eo.n_part) + "))/2";
}

}  // namespace inv3412
