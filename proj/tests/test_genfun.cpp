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

#include <gtest/gtest.h>

#include <functional>

#include "inv3412/genfun.hpp"
#include "inv3412/oracle.hpp"
#include "inv3412/render.hpp"
#include "test_support.hpp"

namespace inv3412 {
namespace {

const Poly kDeltaI{1, -2, -3};
const Poly kDeltaN{1, -2, 5};

RatFunc rf(const Poly& num, const Poly& den = Poly{1}) { return RatFunc(num, den); }
RatFunc xpow(int k) { return rf(Poly::monomial(1, k)); }

class Pipeline : public ::testing::Test {
 protected:
  static GeneratingFunctions& gf() {
    static GeneratingFunctions instance(shape_catalog(5, 2), 30);
    return instance;
  }
};

TEST_F(Pipeline, MotzkinHead) {
  const auto m = testing::motzkin(30);
  const SeriesQ& s = gf().series(GFKind::kI, 0);
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(s[n], m[n]) << "n=" << n;
  EXPECT_EQ(s[12], 15511);
}

TEST_F(Pipeline, BaseFunctionalEquations) {
  const QuadExt i0 = I0_closed(), n0 = N0_closed();
  const QuadExt one_i = QuadExt::scalar(RatFunc(1), kDeltaI);
  const QuadExt one_n = QuadExt::scalar(RatFunc(1), kDeltaN);
  EXPECT_EQ(i0 - one_i, xpow(1) * i0 + xpow(2) * (i0 * i0));
  EXPECT_EQ(n0 - one_n, xpow(1) * n0 - xpow(2) * (n0 * n0));
  // branch identities
  EXPECT_EQ(one_i - xpow(1) * one_i - xpow(2) * (RatFunc(2) * i0), QuadExt::root(kDeltaI));
  EXPECT_EQ(one_n - xpow(1) * one_n + xpow(2) * (RatFunc(2) * n0), QuadExt::root(kDeltaN));
  EXPECT_EQ(gf().series(GFKind::kN, 0)[4], -3);
  EXPECT_EQ(gf().series(GFKind::kI, 0)[0], 1);
  EXPECT_EQ(gf().series(GFKind::kN, 0)[0], 1);
}

TEST_F(Pipeline, ShapeContributions) {
  const QuadExt i0 = I0_closed();
  const auto& catalog = gf().catalog();
  const ShapeRecord& s3412 = catalog.shapes.at(0);
  ASSERT_EQ(s3412.shape, Involution::parse("3412"));
  std::vector<QuadExt> table{i0, gf().closed(GFKind::kI, 1)};
  EXPECT_EQ(shape_contribution(s3412, 1, table, GFKind::kI),
            rf(Poly::monomial(1, 4), Poly{1, -1}) * (i0 * i0 * i0));
  for (int r = 1; r <= 3; ++r) {
    const ShapeRecord psi = make_shape_record(psi_shape(r));
    const QuadExt expected = rf(Poly::monomial(1, 2 * r + 2), Poly{1, -1}.pow(r)) *
                             i0.pow(static_cast<unsigned>(r + 2));
    EXPECT_EQ(shape_contribution(psi, r, std::span(&i0, 1), GFKind::kI), expected);
  }
  const ShapeRecord s351624 = make_shape_record(Involution::parse("351624"));
  EXPECT_EQ(shape_contribution(s351624, 3, table, GFKind::kI),
            rf(Poly::monomial(4, 6), Poly{1, -2, 1}) * (i0 * i0 * i0 * table[1]));
  EXPECT_THROW(shape_contribution(s351624, 1, table, GFKind::kI), ArgumentError);
}

TEST_F(Pipeline, I1MatchesPrintedClosedForm) {
  const QuadExt w = QuadExt::root(kDeltaI);
  const QuadExt expected =
      QuadExt::scalar(rf(Poly{-1, 2}, Poly{0, 0, 2} * Poly{1, -1}), kDeltaI) +
      rf(Poly{1, -2, -2}, Poly{0, 0, 2}) * w.inverse();
  EXPECT_EQ(gf().closed(GFKind::kI, 1), expected);
  const std::vector<long> head{0, 0, 0, 0, 1, 5, 20, 70, 231};
  for (size_t n = 0; n < head.size(); ++n) {
    EXPECT_EQ(gf().series(GFKind::kI, 1)[static_cast<int>(n)], head[n]);
  }
}

TEST_F(Pipeline, N1MatchesPrintedPolynomials) {
  // (x^2+1) P1 = (x+1)(2x^2-2x+1), (x^2+1) Q1 = (x^2-1)(4x^2-2x+1)
  const Poly x2p1{1, 0, 1};
  const RatFunc p1 = rf(Poly{1, 1} * Poly{1, -2, 2}, x2p1);
  const RatFunc q1 = rf(Poly{-1, 0, 1} * Poly{1, -2, 4}, x2p1);
  const RatFunc inv2x2 = rf(Poly{1}, Poly{0, 0, 2});
  const QuadExt expected(p1 * inv2x2, q1 * inv2x2 * rf(Poly{1}, kDeltaN), kDeltaN);
  EXPECT_EQ(gf().closed(GFKind::kN, 1), expected);
  EXPECT_EQ(gf().series(GFKind::kN, 1)[4], 1);
}

TEST_F(Pipeline, PrintedClosedFormsUpToTwo) {
  for (int r = 0; r <= 2; ++r) {
    for (GFKind kind : {GFKind::kI, GFKind::kN}) {
      const auto printed = printed_closed_form(kind, r);
      ASSERT_TRUE(printed.has_value());
      EXPECT_EQ(gf().closed(kind, r), *printed) << to_string(kind) << r;
    }
  }
  EXPECT_EQ(gf().series(GFKind::kI, 2)[12], 9375);
}

// Independent assembly: explicit compositions instead of the memoised sums.
QuadExt explicit_rhs(GFKind kind, int r, const std::vector<QuadExt>& t,
                     const ShapeCatalog& catalog) {
  const Poly disc = discriminant(kind);
  QuadExt total = QuadExt::scalar(RatFunc(0), disc);
  for (const auto& rec : catalog.shapes) {
    if (rec.c > r) continue;
    QuadExt sum = QuadExt::scalar(RatFunc(0), disc);
    std::vector<int> parts(static_cast<size_t>(rec.f), 0);
    std::function<void(int, int)> walk = [&](int j, int left) {
      if (j == rec.f) {
        if (left != 0) return;
        QuadExt prod = QuadExt::scalar(RatFunc(1), disc);
        for (int p : parts) prod = prod * t[static_cast<size_t>(p)];
        sum = sum + prod;
        return;
      }
      for (int p = 0; p <= left; ++p) {
        parts[static_cast<size_t>(j)] = p;
        walk(j + 1, left - p);
      }
    };
    walk(0, r - rec.c);
    total = total + shape_weight(rec, kind) * sum;
  }
  for (int a = 1; a < r; ++a) {
    total = total + (kind == GFKind::kI ? xpow(2) : -xpow(2)) * (t[a] * t[r - a]);
  }
  return total;
}

TEST_F(Pipeline, DefiningIdentities) {
  for (GFKind kind : {GFKind::kI, GFKind::kN}) {
    std::vector<QuadExt> t;
    for (int r = 0; r <= 5; ++r) t.push_back(gf().closed(kind, r));
    for (int r = 1; r <= 5; ++r) {
      const QuadExt lhs = QuadExt::root(discriminant(kind)) * t[r];
      EXPECT_EQ(lhs, explicit_rhs(kind, r, t, gf().catalog())) << to_string(kind) << r;
    }
  }
}

TEST_F(Pipeline, ClosedFormStructure) {
  for (GFKind kind : {GFKind::kI, GFKind::kN}) {
    for (int r = 0; r <= 5; ++r) {
      const QuadExt& u = gf().closed(kind, r);
      const RatFunc g = u.b() * xpow(2) * RatFunc(u.disc()).pow(r);
      EXPECT_EQ(gcd(g.den(), u.disc()).degree(), 0) << to_string(kind) << r;
      const Rendered paper = render_paper(u, kind, r);
      EXPECT_FALSE(paper.fell_back) << paper.warning;
    }
  }
}

TEST_F(Pipeline, SeriesAreCounts) {
  for (int r = 0; r <= 5; ++r) {
    const auto [e, o] = gf().even_odd(r);
    const SeriesQ& i = gf().series(GFKind::kI, r);
    EXPECT_EQ(e.series + o.series, i);
    for (const SeriesQ* s : {&i, &e.series, &o.series}) {
      EXPECT_TRUE(s->all_integers());
      for (int n = 0; n <= s->order(); ++n) EXPECT_GE((*s)[n], 0);
    }
    EXPECT_TRUE(gf().series(GFKind::kN, r).all_integers());
    if (r >= 1) EXPECT_EQ(i[0], 0);
  }
}

TEST_F(Pipeline, AgreesWithNaiveCounts) {
  for (int n = 0; n <= 9; ++n) {
    std::vector<int> all(6, 0), sign(6, 0);
    for (const auto& v : testing::naive_involutions(n)) {
      const int k = testing::naive_count(v);
      if (k > 5) continue;
      ++all[k];
      sign[k] += testing::naive_inversions(v) % 2 ? -1 : 1;
    }
    for (int r = 0; r <= 5; ++r) {
      EXPECT_EQ(gf().series(GFKind::kI, r)[n], all[r]) << "r=" << r << " n=" << n;
      EXPECT_EQ(gf().series(GFKind::kN, r)[n], sign[r]) << "r=" << r << " n=" << n;
    }
  }
}

TEST_F(Pipeline, EvenZeroClosedForm) {
  // E_0 = (sqrt(1-2x+5x^2) - sqrt(1-2x-3x^2)) / (4x^2)
  const int order = 30;
  const SeriesQ diff = sqrt_series(kDeltaN, order + 2) - sqrt_series(kDeltaI, order + 2);
  const GFResult e0 = gf().result(GFKind::kE, 0);
  for (int n = 0; n <= order; ++n) EXPECT_EQ(e0.series[n], diff[n + 2] / 4) << n;
  EXPECT_EQ(diff[0], 0);
  EXPECT_EQ(diff[1], 0);
  EXPECT_TRUE(std::holds_alternative<EvenOddClosed>(e0.closed));
}

TEST_F(Pipeline, RangeChecks) {
  EXPECT_THROW(gf().closed(GFKind::kI, 6), ArgumentError);
  EXPECT_THROW(gf().closed(GFKind::kE, 1), ArgumentError);
  EXPECT_THROW(discriminant(GFKind::kO), ArgumentError);
  std::vector<QuadExt> lower{I0_closed()};
  CompositionSums sums(kDeltaI);
  EXPECT_THROW(solve_next(GFKind::kI, 2, lower, gf().catalog(), sums), ArgumentError);
  EXPECT_THROW(solve_next(GFKind::kI, 0, lower, gf().catalog(), sums), ArgumentError);
}

TEST(PipelineFault, DroppedDiagonalCellShowsAtFive) {
  ShapeCatalog catalog = shape_catalog(1);
  CellGrid grid = catalog.shapes[0].grid;
  grid.set(2, 2, CellClass::kInfeasible);
  catalog.shapes[0] = shape_record_with_grid(catalog.shapes[0].shape, grid);
  ASSERT_EQ(catalog.shapes[0].dd, 0);
  // x^4/(1-x) I0^3 becomes x^4 I0^3
  GeneratingFunctions gf(catalog, 12);
  const BruteTables brute = brute_tables(12, 1, 2);
  const auto report = verify_series_vs_brute(gf, brute, 1, 12);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.mismatches.front().table, "I");
  EXPECT_EQ(report.mismatches.front().r, 1);
  EXPECT_EQ(report.mismatches.front().n, 5);
}

}  // namespace
}  // namespace inv3412
