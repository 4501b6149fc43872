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

// Cell classification of kernel shapes and the catalog of shapes feeding the
// generating-function recursion.
//
// A cell C_{m,l} (value row m, position column l, both 1-based) is probed by
// inserting one entry into it, plus the mirrored entry in C_{l,m} when
// m != l so the result stays an involution. The cell is infeasible iff the
// probe creates a new occurrence of 3412. Feasible off-diagonal cells are
// decreasing; a feasible diagonal cell C_{i,i} is diagonal-decreasing iff
// the shape has a 12-pattern lying entirely northwest or entirely southeast
// of it, and free otherwise.

#include <algorithm>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "inv3412/enumerate.hpp"
#include "inv3412/errors.hpp"
#include "inv3412/kernel.hpp"
#include "inv3412/perm.hpp"

namespace inv3412 {

enum class CellClass { kInfeasible, kFree, kDiagonalDecreasing, kDecreasing };

inline const char* to_string(CellClass c) {
  switch (c) {
    case CellClass::kInfeasible: return "infeasible";
    case CellClass::kFree: return "free";
    case CellClass::kDiagonalDecreasing: return "diagonal_decreasing";
    case CellClass::kDecreasing: return "decreasing";
  }
  return "?";
}

inline CellClass cell_class_from_string(const std::string& s) {
  for (CellClass c : {CellClass::kInfeasible, CellClass::kFree,
                      CellClass::kDiagonalDecreasing, CellClass::kDecreasing}) {
    if (s == to_string(c)) return c;
  }
  throw ArgumentError("unknown cell class: " + s);
}

class CellGrid {
 public:
  CellGrid() = default;
  explicit CellGrid(int size)
      : size_(size),
        cls_(static_cast<size_t>(size * size), CellClass::kInfeasible) {}

  int size() const { return size_; }

  CellClass at(int m, int l) const { return cls_[index(m, l)]; }
  void set(int m, int l, CellClass c) { cls_[index(m, l)] = c; }

  bool feasible(int m, int l) const { return at(m, l) != CellClass::kInfeasible; }

  int free_count() const { return count_diagonal(CellClass::kFree); }
  int diagonal_decreasing_count() const {
    return count_diagonal(CellClass::kDiagonalDecreasing);
  }
  // Decreasing cells strictly above the diagonal (value row > column); each
  // stands for a mirrored pair.
  int decreasing_count() const {
    int d = 0;
    for (int m = 1; m <= size_; ++m) {
      for (int l = 1; l < m; ++l) d += at(m, l) == CellClass::kDecreasing;
    }
    return d;
  }

  // Throws ConsistencyError unless infeasibility is symmetric and the
  // diagonal/off-diagonal labels are used in their places.
  void check_consistency() const {
    for (int m = 1; m <= size_; ++m) {
      for (int l = 1; l <= size_; ++l) {
        if (feasible(m, l) != feasible(l, m)) {
          throw ConsistencyError("asymmetric infeasibility at C" +
                                 std::to_string(m) + std::to_string(l));
        }
        const CellClass c = at(m, l);
        const bool diagonal_label =
            c == CellClass::kFree || c == CellClass::kDiagonalDecreasing;
        if (m == l ? c == CellClass::kDecreasing : diagonal_label) {
          throw ConsistencyError("misplaced label " + std::string(to_string(c)));
        }
      }
    }
  }

  friend bool operator==(const CellGrid&, const CellGrid&) = default;

 private:
  size_t index(int m, int l) const {
    if (m < 1 || l < 1 || m > size_ || l > size_) {
      throw ArgumentError("cell index out of range");
    }
    return static_cast<size_t>((m - 1) * size_ + (l - 1));
  }

  int count_diagonal(CellClass c) const {
    int k = 0;
    for (int i = 1; i <= size_; ++i) k += at(i, i) == c;
    return k;
  }

  int size_ = 0;
  std::vector<CellClass> cls_;
};

namespace detail {

// Occurrences of 3412 after inserting a probe entry at (column l, row m),
// mirrored when m != l.
inline int probe_occurrences(const Involution& rho, int m, int l) {
  const int s = rho.size();
  // Doubled coordinates keep kernel entries on even values and probes on
  // odd ones.
  std::vector<std::pair<int, int>> points;
  for (int k = 1; k <= s; ++k) points.emplace_back(2 * k, 2 * rho(k));
  points.emplace_back(2 * l + 1, 2 * m + 1);
  if (m != l) points.emplace_back(2 * m + 1, 2 * l + 1);
  std::sort(points.begin(), points.end());
  std::vector<int> values;
  for (const auto& pt : points) values.push_back(pt.second);
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  for (int& v : values) {
    v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                         sorted.begin()) + 1;
  }
  return count_3412(values);
}

inline bool has_ascent(const std::vector<std::pair<int, int>>& pts) {
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = 0; j < pts.size(); ++j) {
      if (pts[i].first < pts[j].first && pts[i].second < pts[j].second) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace detail

// Kernel entries (k, rho(k)) northwest of C_{i,i}: k <= i and rho(k) > i;
// southeast: k > i and rho(k) <= i.
inline bool diagonal_cell_is_decreasing(const Involution& rho, int i) {
  std::vector<std::pair<int, int>> northwest, southeast;
  for (int k = 1; k <= rho.size(); ++k) {
    if (k <= i && rho(k) > i) northwest.emplace_back(k, rho(k));
    if (k > i && rho(k) <= i) southeast.emplace_back(k, rho(k));
  }
  return detail::has_ascent(northwest) || detail::has_ascent(southeast);
}

inline bool is_base_shape(const Involution& rho) {
  return rho == Involution{1} || rho == Involution{2, 1};
}

inline CellGrid classify_cells(const Involution& rho) {
  if (rho.empty()) throw ArgumentError("empty shape");
  if (!is_base_shape(rho) && !is_kernel_involution(rho)) {
    throw ArgumentError(rho.to_string() + " is not a kernel involution");
  }
  const int s = rho.size();
  const int capacity = count_3412(rho.values());
  CellGrid grid(s);
  for (int m = 1; m <= s; ++m) {
    for (int l = 1; l <= s; ++l) {
      if (detail::probe_occurrences(rho, m, l) > capacity) continue;
      if (m != l) {
        grid.set(m, l, CellClass::kDecreasing);
      } else {
        grid.set(m, l, diagonal_cell_is_decreasing(rho, m)
                           ? CellClass::kDiagonalDecreasing
                           : CellClass::kFree);
      }
    }
  }
  grid.check_consistency();
  return grid;
}

struct ShapeRecord {
  Involution shape;
  int s = 0;         // size
  int c = 0;         // capacity
  int f = 0;         // free cells
  int dd = 0;        // diagonal-decreasing cells
  int d = 0;         // decreasing cells above the diagonal
  int parity21 = 0;  // inversions mod 2
  CellGrid grid;

  friend bool operator==(const ShapeRecord&, const ShapeRecord&) = default;
};

// Parameters derived from an explicit grid (used for fault injection and
// for reading catalogs back).
inline ShapeRecord shape_record_with_grid(const Involution& rho, CellGrid grid) {
  ShapeRecord rec;
  rec.shape = rho;
  rec.s = rho.size();
  rec.c = count_3412(rho.values());
  rec.f = grid.free_count();
  rec.dd = grid.diagonal_decreasing_count();
  rec.d = grid.decreasing_count();
  rec.parity21 = count_pattern_21(rho.values()) % 2;
  rec.grid = std::move(grid);
  return rec;
}

inline ShapeRecord make_shape_record(const Involution& rho) {
  return shape_record_with_grid(rho, classify_cells(rho));
}

// The unique kernel involution of capacity r and size 2r + 2: 21 for r = 0,
// otherwise the 2-cycles (1,3), (2i, 2i+3) for 1 <= i < r, and (2r, 2r+2).
inline Involution psi_shape(int r) {
  if (r < 0) throw ArgumentError("psi_shape needs r >= 0");
  if (r == 0) return Involution{2, 1};
  const int n = 2 * r + 2;
  std::vector<int> v(static_cast<size_t>(n), 0);
  auto pair = [&](int a, int b) {
    v[a - 1] = b;
    v[b - 1] = a;
  };
  pair(1, 3);
  for (int i = 1; i < r; ++i) pair(2 * i, 2 * i + 3);
  pair(2 * r, 2 * r + 2);
  Involution psi(Perm(std::move(v)));
  const int capacity = count_3412(psi.values());
  if (capacity != r) {
    throw ConsistencyError("psi^" + std::to_string(r) + " = " +
                           psi.to_string() + " has capacity " +
                           std::to_string(capacity));
  }
  return psi;
}

// Kernel involutions of size exactly n with capacity in [1, max_capacity].
inline std::set<Involution> kernel_involutions(
    int n, int max_capacity, unsigned threads = 1,
    const EnumerationLimits& limits = {}) {
  using Found = std::set<Involution>;
  return reduce_involutions(
      n, threads, Found{},
      [&](Found& acc, std::span<const int> p) {
        const int occ = count_3412(p, max_capacity);
        if (occ < 1 || occ > max_capacity) return;
        const Kernel k = kernel_of(p);
        if (k.size() == n) acc.insert(Involution::trusted(p));
      },
      [](Found& into, Found&& part) { into.merge(part); }, limits);
}

struct ShapeCatalog {
  int r = 0;
  std::vector<ShapeRecord> shapes;  // sorted by (size, one-line notation)
};

// Every kernel involution with capacity 1..r: exhaustive search of sizes
// 4..2r+1, plus psi^c for 1 <= c <= r (the only shape of size 2c+2). The
// base shapes 1 and 21 are not included.
inline ShapeCatalog shape_catalog(int r, unsigned threads = 1,
                                  const EnumerationLimits& limits = {}) {
  if (r < 1) throw ArgumentError("shape_catalog needs r >= 1");
  std::set<Involution> found;
  for (int n = 4; n <= 2 * r + 1; ++n) {
    found.merge(kernel_involutions(n, r, threads, limits));
  }
  for (int c = 1; c <= r; ++c) found.insert(psi_shape(c));
  ShapeCatalog catalog{r, {}};
  std::vector<Involution> shapes(found.begin(), found.end());
  catalog.shapes.resize(shapes.size());
  run_parallel(shapes.size(), threads, [&](size_t i) {
    catalog.shapes[i] = make_shape_record(shapes[i]);
  });
  return catalog;
}

}  // namespace inv3412
