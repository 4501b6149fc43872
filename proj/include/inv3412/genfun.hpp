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

// Generating functions I_r (all involutions with exactly r occurrences of
// 3412) and N_r (the same, signed by inversion parity), solved exactly in
// Q(x)[w] from the kernel-shape recursion:
//
//   I_r = x I_r + x^2 sum_{a+b=r} I_a I_b
//         + sum_shapes x^s / ((1-x^2)^d (1-x)^dd) * sum_{r_1+..+r_f = r-c} prod I_{r_j}
//
//   N_r = x N_r - x^2 sum_{a+b=r} N_a N_b
//         + sum_shapes (-1)^parity x^s (1+x)^dd / (1+x^2)^(d+dd) * (same with N)
//
// The first two terms are the base shapes 1 and 21. Since 1 - x - 2x^2 I_0
// equals w = sqrt(1-2x-3x^2) (and 1 - x + 2x^2 N_0 equals sqrt(1-2x+5x^2)),
// each I_r / N_r for r >= 1 is a division by the generator. E_r and O_r are
// (I_r + N_r)/2 and (I_r - N_r)/2.

#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "inv3412/cells.hpp"
#include "inv3412/errors.hpp"
#include "inv3412/poly.hpp"
#include "inv3412/quadext.hpp"
#include "inv3412/ratfunc.hpp"
#include "inv3412/series.hpp"

namespace inv3412 {

enum class GFKind { kI, kN, kE, kO };

inline const char* to_string(GFKind k) {
  switch (k) {
    case GFKind::kI: return "I";
    case GFKind::kN: return "N";
    case GFKind::kE: return "E";
    case GFKind::kO: return "O";
  }
  return "?";
}

// 1 - 2x - 3x^2, the discriminant for I_r.
inline Poly discriminant_i() { return Poly{1, -2, -3}; }
// 1 - 2x + 5x^2, the discriminant for N_r.
inline Poly discriminant_n() { return Poly{1, -2, 5}; }

inline Poly discriminant(GFKind kind) {
  if (kind == GFKind::kI) return discriminant_i();
  if (kind == GFKind::kN) return discriminant_n();
  throw ArgumentError("E and O do not live in a single quadratic extension");
}

namespace detail {
inline RatFunc x_pow(int k) { return RatFunc(Poly::monomial(1, k)); }
}  // namespace detail

// (1 - x - w) / (2x^2), the branch with I_0(0) = 1.
inline QuadExt I0_closed() {
  const RatFunc half_inv_x2(Poly{1}, Poly{0, 0, 2});
  return QuadExt(RatFunc(Poly{1, -1}) * half_inv_x2, -half_inv_x2,
                 discriminant_i());
}

// (x - 1 + u) / (2x^2), the branch with N_0(0) = 1.
inline QuadExt N0_closed() {
  const RatFunc half_inv_x2(Poly{1}, Poly{0, 0, 2});
  return QuadExt(RatFunc(Poly{-1, 1}) * half_inv_x2, half_inv_x2,
                 discriminant_n());
}

// The cell weight of a shape: x^s / ((1-x^2)^d (1-x)^dd) for I, and
// (-1)^parity x^s (1+x)^dd / (1+x^2)^(d+dd) for N.
inline RatFunc shape_weight(const ShapeRecord& rec, GFKind kind) {
  if (kind == GFKind::kI) {
    const Poly den = Poly{1, 0, -1}.pow(static_cast<unsigned>(rec.d)) *
                     Poly{1, -1}.pow(static_cast<unsigned>(rec.dd));
    return RatFunc(Poly::monomial(1, rec.s), den);
  }
  if (kind == GFKind::kN) {
    const Rational sign = rec.parity21 ? -1 : 1;
    const Poly num = Poly::monomial(sign, rec.s) *
                     Poly{1, 1}.pow(static_cast<unsigned>(rec.dd));
    const Poly den = Poly{1, 0, 1}.pow(static_cast<unsigned>(rec.d + rec.dd));
    return RatFunc(num, den);
  }
  throw ArgumentError("shape weights are defined for I and N only");
}

// Sums over ordered compositions r_1 + ... + r_f = k of prod T_{r_j}, i.e.
// the t^k coefficient of (sum_j T_j t^j)^f, memoised by (f, k).
class CompositionSums {
 public:
  explicit CompositionSums(Poly disc) : disc_(std::move(disc)) {}

  // `table` must hold T_0..T_k; entries are cached, so the table may only
  // grow between calls.
  const QuadExt& get(int f, int k, std::span<const QuadExt> table) {
    if (f < 0 || k < 0) throw ArgumentError("negative composition request");
    if (static_cast<int>(table.size()) <= k) {
      throw ArgumentError("composition table too short");
    }
    const auto key = std::make_pair(f, k);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    QuadExt value;
    if (f == 0) {
      value = QuadExt::scalar(RatFunc(k == 0 ? 1 : 0), disc_);
    } else if (f == 1) {
      value = table[static_cast<size_t>(k)];
    } else {
      // split f = h + (f - h) with h = f / 2
      const int h = f / 2;
      value = QuadExt::scalar(RatFunc(0), disc_);
      for (int j = 0; j <= k; ++j) {
        const QuadExt left = get(h, j, table);
        const QuadExt right = get(f - h, k - j, table);
        if (left.is_zero() || right.is_zero()) continue;
        value = value + left * right;
      }
    }
    return cache_.emplace(key, std::move(value)).first->second;
  }

 private:
  Poly disc_;
  std::map<std::pair<int, int>, QuadExt> cache_;
};

// Contribution of one kernel shape to I_r (kind I) or N_r (kind N):
// weight * sum over compositions of r - c into f parts. `table` holds the
// already solved I_0..I_{r-c} (or N_0..).
inline QuadExt shape_contribution(const ShapeRecord& rec, int r,
                                  std::span<const QuadExt> table, GFKind kind) {
  if (rec.c > r) {
    throw ArgumentError("shape " + rec.shape.to_string() + " has capacity " +
                        std::to_string(rec.c) + " > r = " + std::to_string(r));
  }
  CompositionSums sums(discriminant(kind));
  return shape_weight(rec, kind) * sums.get(rec.f, r - rec.c, table);
}

// Solves I_r or N_r (r >= 1) from the lower table entries. Shapes with the
// same (c, f) share their composition sum, so their weights are added
// first.
inline QuadExt solve_next(GFKind kind, int r, std::span<const QuadExt> lower,
                          const ShapeCatalog& catalog, CompositionSums& sums) {
  if (kind != GFKind::kI && kind != GFKind::kN) {
    throw ArgumentError("solve_next handles I and N");
  }
  if (r < 1) throw ArgumentError("solve_next needs r >= 1");
  if (static_cast<int>(lower.size()) < r) {
    throw ArgumentError("lower table must hold entries 0..r-1");
  }
  if (catalog.r < r) {
    throw ArgumentError("shape catalog covers r <= " +
                        std::to_string(catalog.r) + ", need " +
                        std::to_string(r));
  }
  const Poly disc = discriminant(kind);
  const std::span<const QuadExt> table = lower.first(static_cast<size_t>(r));

  std::map<std::pair<int, int>, RatFunc> weights;  // (c, f) -> summed weight
  for (const auto& rec : catalog.shapes) {
    if (rec.c > r) continue;
    auto [it, inserted] = weights.try_emplace({rec.c, rec.f}, RatFunc(0));
    it->second += shape_weight(rec, kind);
  }
  QuadExt rhs = QuadExt::scalar(RatFunc(0), disc);
  for (const auto& [key, weight] : weights) {
    const auto [c, f] = key;
    if (weight.is_zero()) continue;
    rhs += weight * sums.get(f, r - c, table);
  }
  QuadExt cross = QuadExt::scalar(RatFunc(0), disc);
  for (int a = 1; a < r; ++a) cross += table[a] * table[r - a];
  const RatFunc x2 = detail::x_pow(2);
  rhs += (kind == GFKind::kI ? x2 : -x2) * cross;
  return rhs.divided_by_root();
}

// I_r and N_r closed forms of E_r = (I_r + N_r)/2 and O_r = (I_r - N_r)/2.
struct EvenOddClosed {
  QuadExt i_part;
  QuadExt n_part;
  int n_sign = 1;  // +1 for E, -1 for O
};

using ClosedForm = std::variant<QuadExt, EvenOddClosed>;

struct GFResult {
  int r = 0;
  GFKind kind = GFKind::kI;
  ClosedForm closed;
  SeriesQ series;
};

// Sequential in r; I and N are independent.
class GeneratingFunctions {
 public:
  explicit GeneratingFunctions(ShapeCatalog catalog,
                               int order = kDefaultSeriesOrder)
      : catalog_(std::move(catalog)),
        order_(order),
        i_sums_(discriminant_i()),
        n_sums_(discriminant_n()) {
    i_table_.push_back(I0_closed());
    n_table_.push_back(N0_closed());
  }

  int order() const { return order_; }
  int max_r() const { return catalog_.r; }
  const ShapeCatalog& catalog() const { return catalog_; }

  const QuadExt& closed(GFKind kind, int r) {
    if (r < 0 || r > catalog_.r) {
      throw ArgumentError("r = " + std::to_string(r) + " outside 0.." +
                          std::to_string(catalog_.r));
    }
    auto& table = kind == GFKind::kI ? i_table_ : n_table_;
    auto& sums = kind == GFKind::kI ? i_sums_ : n_sums_;
    if (kind != GFKind::kI && kind != GFKind::kN) {
      throw ArgumentError("closed() handles I and N; use result() for E/O");
    }
    while (static_cast<int>(table.size()) <= r) {
      const int next = static_cast<int>(table.size());
      table.push_back(solve_next(kind, next, table, catalog_, sums));
    }
    return table[static_cast<size_t>(r)];
  }

  const SeriesQ& series(GFKind kind, int r) {
    auto& cache = kind == GFKind::kI ? i_series_ : n_series_;
    if (kind != GFKind::kI && kind != GFKind::kN) {
      throw ArgumentError("series() handles I and N; use result() for E/O");
    }
    if (auto it = cache.find(r); it != cache.end()) return it->second;
    return cache.emplace(r, quadext_to_series(closed(kind, r), order_))
        .first->second;
  }

  GFResult result(GFKind kind, int r) {
    GFResult out;
    out.r = r;
    out.kind = kind;
    if (kind == GFKind::kI || kind == GFKind::kN) {
      out.closed = closed(kind, r);
      out.series = series(kind, r);
      return out;
    }
    const int sign = kind == GFKind::kE ? 1 : -1;
    out.closed = EvenOddClosed{closed(GFKind::kI, r), closed(GFKind::kN, r), sign};
    const SeriesQ& si = series(GFKind::kI, r);
    const SeriesQ& sn = series(GFKind::kN, r);
    out.series = Rational(1, 2) * (sign > 0 ? si + sn : si - sn);
    return out;
  }

  std::pair<GFResult, GFResult> even_odd(int r) {
    return {result(GFKind::kE, r), result(GFKind::kO, r)};
  }

 private:
  ShapeCatalog catalog_;
  int order_;
  std::vector<QuadExt> i_table_, n_table_;
  CompositionSums i_sums_, n_sums_;
  std::map<int, SeriesQ> i_series_, n_series_;
};

}  // namespace inv3412
