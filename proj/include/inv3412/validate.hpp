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

// Exhaustive validation of cell classifications. For a shape rho every
// involution pi of length s(rho)..n_max whose kernel shape is rho is
// decomposed into cells, and the labels are checked against what actually
// occurs:
//   - populated cells are feasible;
//   - off-diagonal contents are strictly decreasing and mirror in size;
//   - diagonal-decreasing contents are strictly decreasing;
//   - two decreasing cells of one row: the left one holds the larger values;
//   - every free cell shows an ascent somewhere, and every feasible cell is
//     populated somewhere (needs n_max >= s + 2);
//   - the number of pi with no occurrences outside the kernel equals
//     [x^n] x^s / ((1-x^2)^d (1-x)^dd) * M(x)^f.
// In addition each feasible cell is filled with a small witness (an ascent
// for free cells, a 2-cycle for diagonal-decreasing ones, a mirrored pair
// otherwise) and the result must keep kernel rho and capacity c.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "inv3412/cells.hpp"
#include "inv3412/enumerate.hpp"
#include "inv3412/errors.hpp"
#include "inv3412/kernel.hpp"
#include "inv3412/perm.hpp"

namespace inv3412 {

struct ClassificationViolation {
  std::string check;
  std::optional<Involution> witness;
  std::string detail;
};

inline std::string describe(const ClassificationViolation& v) {
  std::string out = v.check + ": " + v.detail;
  if (v.witness) out += " [pi = " + v.witness->to_string() + "]";
  return out;
}

struct ValidationReport {
  Involution shape;
  int n_max = 0;
  std::int64_t scanned = 0;  // involutions with kernel shape rho
  std::vector<ClassificationViolation> violations;

  bool ok() const { return violations.empty(); }
};

inline constexpr size_t kMaxViolationsPerShape = 8;

namespace detail {

// Motzkin numbers M_0..M_n.
inline std::vector<std::int64_t> motzkin_numbers(int n) {
  std::vector<std::int64_t> m(static_cast<size_t>(n + 1), 0);
  m[0] = 1;
  for (int k = 1; k <= n; ++k) {
    std::int64_t v = m[k - 1];
    for (int j = 0; j + 2 <= k; ++j) v += m[j] * m[k - 2 - j];
    m[k] = v;
  }
  return m;
}

inline std::vector<std::int64_t> truncated_product(
    const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Coefficients 0..n_max of x^s / ((1-x^2)^d (1-x)^dd) * M(x)^f.
inline std::vector<std::int64_t> census_series(const ShapeRecord& rec, int n_max) {
  const auto len = static_cast<size_t>(n_max + 1);
  std::vector<std::int64_t> out(len, 0);
  if (rec.s <= n_max) out[static_cast<size_t>(rec.s)] = 1;
  std::vector<std::int64_t> geo1(len, 1), geo2(len, 0);
  for (size_t k = 0; k < len; k += 2) geo2[k] = 1;
  for (int k = 0; k < rec.dd; ++k) out = truncated_product(out, geo1);
  for (int k = 0; k < rec.d; ++k) out = truncated_product(out, geo2);
  const auto motzkin = motzkin_numbers(n_max);
  for (int k = 0; k < rec.f; ++k) out = truncated_product(out, motzkin);
  return out;
}

inline bool strictly_decreasing(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::less_equal<>()) == v.end();
}

inline bool has_ascent(const std::vector<int>& v) {
  // values in position order
  for (size_t i = 0; i < v.size(); ++i) {
    for (size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] < v[j]) return true;
    }
  }
  return false;
}

struct ShapeScan {
  std::vector<ClassificationViolation> violations;
  std::vector<char> populated;  // s*s
  std::vector<char> ascent;     // s (diagonal)
  std::vector<std::int64_t> census;
  std::int64_t scanned = 0;

  void add(ClassificationViolation v) {
    if (violations.size() < kMaxViolationsPerShape) violations.push_back(std::move(v));
  }

  void merge(ShapeScan&& other) {
    for (auto& v : other.violations) add(std::move(v));
    for (size_t i = 0; i < populated.size(); ++i) populated[i] |= other.populated[i];
    for (size_t i = 0; i < ascent.size(); ++i) ascent[i] |= other.ascent[i];
    for (size_t i = 0; i < census.size(); ++i) census[i] += other.census[i];
    scanned += other.scanned;
  }
};

inline std::string cell_name(int m, int l) {
  return "C" + std::to_string(m) + "," + std::to_string(l);
}

inline void check_decomposition(const ShapeRecord& rec, std::span<const int> p,
                                const Kernel& kernel, ShapeScan& scan) {
  const int s = rec.s;
  auto witness = [&] { return Involution::trusted(p); };
  CellContents cells;
  try {
    cells = cell_decomposition(p, kernel);
  } catch (const StructuralError& e) {
    scan.add({"structure", witness(), e.what()});
    return;
  }
  ++scan.scanned;
  if (count_3412(p, rec.c + 1) == rec.c) {
    ++scan.census[p.size()];
  }
  for (int m = 1; m <= s; ++m) {
    for (int l = 1; l <= s; ++l) {
      const auto& content = cells[m - 1][l - 1];
      if (content.empty()) continue;
      scan.populated[static_cast<size_t>((m - 1) * s + (l - 1))] = 1;
      const CellClass cls = rec.grid.at(m, l);
      if (cls == CellClass::kInfeasible) {
        scan.add({"feasible", witness(), cell_name(m, l) + " is populated"});
        continue;
      }
      if (m == l) {
        if (has_ascent(content)) {
          scan.ascent[static_cast<size_t>(m - 1)] = 1;
          if (cls == CellClass::kDiagonalDecreasing) {
            scan.add({"diagonal-decreasing", witness(),
                      cell_name(m, l) + " holds an ascent"});
          }
        }
        continue;
      }
      if (!strictly_decreasing(content)) {
        scan.add({"decreasing", witness(), cell_name(m, l) + " is not decreasing"});
      }
      if (content.size() != cells[l - 1][m - 1].size()) {
        scan.add({"mirror", witness(),
                  cell_name(m, l) + " and " + cell_name(l, m) + " differ in size"});
      }
    }
  }
  // same row, columns a < b, both off-diagonal and populated
  for (int m = 1; m <= s; ++m) {
    for (int a = 1; a <= s; ++a) {
      const auto& left = cells[m - 1][a - 1];
      if (a == m || left.empty()) continue;
      for (int b = a + 1; b <= s; ++b) {
        const auto& right = cells[m - 1][b - 1];
        if (b == m || right.empty()) continue;
        if (*std::min_element(left.begin(), left.end()) <
            *std::max_element(right.begin(), right.end())) {
          scan.add({"row-order", witness(),
                    cell_name(m, a) + " has an entry below one of " +
                        cell_name(m, b)});
        }
      }
    }
  }
}

// rho with extra entries: each (column l, row m, offset, rank) point is
// placed inside cell C_{m,l}; the result must be an involution.
struct CellPoint {
  int m, l, position_rank, value_rank;
};

inline std::optional<Perm> realize(const Involution& rho,
                                   const std::vector<CellPoint>& extra) {
  constexpr int kScale = 64;
  std::vector<std::pair<int, int>> points;
  for (int k = 1; k <= rho.size(); ++k) points.emplace_back(kScale * k, kScale * rho(k));
  for (const auto& e : extra) {
    points.emplace_back(kScale * e.l + e.position_rank, kScale * e.m + e.value_rank);
  }
  std::sort(points.begin(), points.end());
  std::vector<int> values;
  for (const auto& pt : points) values.push_back(pt.second);
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  for (int& v : values) {
    v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                         sorted.begin()) + 1;
  }
  if (!is_involution(values)) return std::nullopt;
  return Perm(std::move(values));
}

inline void check_witnesses(const ShapeRecord& rec, std::vector<ClassificationViolation>& out) {
  const int s = rec.s;
  for (int m = 1; m <= s; ++m) {
    for (int l = 1; l <= s; ++l) {
      const CellClass cls = rec.grid.at(m, l);
      if (cls == CellClass::kInfeasible || (m != l && m < l)) continue;
      std::vector<CellPoint> extra;
      std::string what;
      if (cls == CellClass::kFree) {
        extra = {{m, l, 1, 1}, {m, l, 2, 2}};
        what = "an ascent";
      } else if (cls == CellClass::kDiagonalDecreasing) {
        extra = {{m, l, 1, 2}, {m, l, 2, 1}};
        what = "a 2-cycle";
      } else {
        extra = {{m, l, 1, 1}, {l, m, 1, 1}};
        what = "a mirrored pair";
      }
      const auto pi = realize(rec.shape, extra);
      if (!pi) {
        out.push_back({"witness", std::nullopt,
                       "filling " + cell_name(m, l) + " breaks the involution"});
        continue;
      }
      const Kernel k = kernel_of(pi->values());
      const int occ = count_3412(pi->values(), rec.c + 1);
      if (k.shape != rec.shape || occ != rec.c) {
        out.push_back({"witness", Involution(*pi),
                       cell_name(m, l) + " labelled " + to_string(cls) +
                           " cannot hold " + what});
      }
    }
  }
}

}  // namespace detail

// Validates several shapes in one pass per length; n_max[i] bounds the scan
// for shapes[i].
inline std::vector<ValidationReport> validate_catalog(
    std::span<const ShapeRecord> shapes, std::span<const int> n_max,
    unsigned threads = 1, EnumerationLimits limits = {}) {
  if (shapes.size() != n_max.size()) throw ArgumentError("one n_max per shape");
  std::map<Involution, size_t> index;
  int lo = 0, hi = -1;
  for (size_t i = 0; i < shapes.size(); ++i) {
    shapes[i].grid.check_consistency();
    if (!index.emplace(shapes[i].shape, i).second) {
      throw ArgumentError("duplicate shape " + shapes[i].shape.to_string());
    }
    check_size(n_max[i], limits);
    if (n_max[i] >= shapes[i].s) {
      lo = hi < lo ? shapes[i].s : std::min(lo, shapes[i].s);
      hi = std::max(hi, n_max[i]);
    }
  }
  auto fresh = [&] {
    std::vector<detail::ShapeScan> scans(shapes.size());
    for (size_t i = 0; i < shapes.size(); ++i) {
      const auto s = static_cast<size_t>(shapes[i].s);
      scans[i].populated.assign(s * s, 0);
      scans[i].ascent.assign(s, 0);
      scans[i].census.assign(static_cast<size_t>(std::max(n_max[i], 0) + 1), 0);
    }
    return scans;
  };
  using Scans = std::vector<detail::ShapeScan>;
  Scans total = fresh();
  for (int n = lo; n <= hi; ++n) {
    std::vector<char> sizes(static_cast<size_t>(n + 1), 0);
    bool any = false;
    for (size_t i = 0; i < shapes.size(); ++i) {
      if (shapes[i].s <= n && n <= n_max[i]) {
        sizes[static_cast<size_t>(shapes[i].s)] = 1;
        any = true;
      }
    }
    if (!any) continue;
    Scans part = reduce_involutions(
        n, threads, fresh(),
        [&](Scans& acc, std::span<const int> p) {
          const Kernel k = kernel_of(p);
          if (!sizes[static_cast<size_t>(k.size())]) return;
          const auto it = index.find(k.shape);
          if (it == index.end() || n > n_max[it->second]) return;
          detail::check_decomposition(shapes[it->second], p, k, acc[it->second]);
        },
        [](Scans& into, Scans&& other) {
          for (size_t i = 0; i < into.size(); ++i) into[i].merge(std::move(other[i]));
        },
        limits);
    for (size_t i = 0; i < total.size(); ++i) total[i].merge(std::move(part[i]));
  }

  std::vector<ValidationReport> reports;
  for (size_t i = 0; i < shapes.size(); ++i) {
    const ShapeRecord& rec = shapes[i];
    detail::ShapeScan& scan = total[i];
    ValidationReport report{rec.shape, n_max[i], scan.scanned, {}};
    detail::check_witnesses(rec, report.violations);
    for (auto& v : scan.violations) report.violations.push_back(std::move(v));
    const int s = rec.s;
    if (n_max[i] >= s + 2) {
      for (int m = 1; m <= s; ++m) {
        for (int l = 1; l <= s; ++l) {
          if (!rec.grid.feasible(m, l)) continue;
          if (!scan.populated[static_cast<size_t>((m - 1) * s + (l - 1))]) {
            report.violations.push_back({"populated", std::nullopt,
                                         detail::cell_name(m, l) +
                                             " is never populated"});
          }
        }
        if (rec.grid.at(m, m) == CellClass::kFree && !scan.ascent[m - 1]) {
          report.violations.push_back({"free", std::nullopt,
                                       detail::cell_name(m, m) +
                                           " never holds an ascent"});
        }
      }
    }
    const auto expected = detail::census_series(rec, n_max[i]);
    for (int n = s; n <= n_max[i]; ++n) {
      if (expected[n] != scan.census[n]) {
        report.violations.push_back(
            {"census", std::nullopt,
             "n=" + std::to_string(n) + ": " + std::to_string(scan.census[n]) +
                 " involutions with kernel and no other occurrence, cell weights predict " +
                 std::to_string(expected[n])});
        break;
      }
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

inline ValidationReport validate_classification(const ShapeRecord& rec, int n_max,
                                                unsigned threads = 1,
                                                EnumerationLimits limits = {}) {
  const int bound[] = {n_max};
  return validate_catalog(std::span(&rec, 1), bound, threads, limits).front();
}

// Lemma-4 style chains: free cells, diagonal-decreasing cells, and decreasing
// cells with row > column are each totally ordered componentwise.
inline std::vector<std::string> grid_order_violations(const CellGrid& grid) {
  std::vector<std::string> out;
  const int s = grid.size();
  std::vector<std::pair<int, int>> decreasing;
  for (int m = 1; m <= s; ++m) {
    for (int l = 1; l < m; ++l) {
      if (grid.at(m, l) == CellClass::kDecreasing) decreasing.emplace_back(m, l);
    }
  }
  for (size_t i = 0; i < decreasing.size(); ++i) {
    for (size_t j = i + 1; j < decreasing.size(); ++j) {
      const auto [m1, l1] = decreasing[i];
      const auto [m2, l2] = decreasing[j];
      const bool le = m1 <= m2 && l1 <= l2;
      const bool ge = m1 >= m2 && l1 >= l2;
      if (!le && !ge) {
        out.push_back(detail::cell_name(m1, l1) + " and " +
                      detail::cell_name(m2, l2) + " are incomparable");
      }
    }
  }
  return out;
}

}  // namespace inv3412
