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

// Occurrence graph of an involution, its kernel (the component holding the
// entry of value 1) and the kernel cell decomposition.

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "inv3412/errors.hpp"
#include "inv3412/perm.hpp"

namespace inv3412 {

// Bipartite graph: entries (identified by 1-based position) on one side,
// occurrences of 3412 on the other. Entry i is adjacent to occurrence j iff i
// is one of j's four positions.
struct OccurrenceGraph {
  int entries = 0;
  std::vector<Occurrence> occurrences;

  // (entry position, occurrence index) pairs, ordered by occurrence.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(occurrences.size() * 4);
    for (size_t j = 0; j < occurrences.size(); ++j) {
      for (int pos : occurrences[j].positions) {
        out.emplace_back(pos, static_cast<int>(j));
      }
    }
    return out;
  }

  int entry_degree(int position) const {
    int d = 0;
    for (const auto& o : occurrences) {
      d += static_cast<int>(std::count(o.positions.begin(),
                                       o.positions.end(), position));
    }
    return d;
  }

  // Connected components restricted to entry vertices, each as a sorted
  // position list; components are ordered by their smallest position.
  std::vector<std::vector<int>> entry_components() const {
    std::vector<int> parent(static_cast<size_t>(entries + 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& o : occurrences) {
      for (int k = 1; k < 4; ++k) {
        const int a = find(o.positions[0]);
        const int b = find(o.positions[k]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<std::vector<int>> by_root(static_cast<size_t>(entries + 1));
    for (int i = 1; i <= entries; ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& c : by_root) {
      if (!c.empty()) out.push_back(std::move(c));
    }
    return out;
  }
};

inline OccurrenceGraph occurrence_graph(std::span<const int> p) {
  return OccurrenceGraph{static_cast<int>(p.size()), occurrences_3412(p)};
}

inline OccurrenceGraph occurrence_graph(const Involution& p) {
  return occurrence_graph(p.values());
}

struct Kernel {
  std::vector<int> positions;  // increasing
  Involution shape;
  int capacity = 0;  // occurrences of 3412 inside the kernel

  int size() const { return static_cast<int>(positions.size()); }
};

namespace detail {

inline Kernel kernel_from_graph(std::span<const int> p,
                                const OccurrenceGraph& graph) {
  const int n = static_cast<int>(p.size());
  int one_at = 0;
  for (int i = 0; i < n; ++i) {
    if (p[i] == 1) one_at = i + 1;
  }
  std::vector<char> in_kernel(static_cast<size_t>(n + 1), 0);
  in_kernel[one_at] = 1;
  // Grow the component until no occurrence bridges it; small graphs.
  std::vector<char> used(graph.occurrences.size(), 0);
  for (bool grew = true; grew;) {
    grew = false;
    for (size_t j = 0; j < graph.occurrences.size(); ++j) {
      if (used[j]) continue;
      const auto& pos = graph.occurrences[j].positions;
      if (std::any_of(pos.begin(), pos.end(),
                      [&](int q) { return in_kernel[q] != 0; })) {
        used[j] = 1;
        grew = true;
        for (int q : pos) in_kernel[q] = 1;
      }
    }
  }
  Kernel k;
  for (int i = 1; i <= n; ++i) {
    if (in_kernel[i]) k.positions.push_back(i);
  }
  k.capacity = static_cast<int>(std::count(used.begin(), used.end(), 1));
  Perm shape = reduce_to_pattern(p, k.positions);
  if (!is_involution(shape)) {
    throw ConsistencyError("kernel shape " + shape.to_string() +
                           " is not an involution");
  }
  k.shape = Involution::trusted(shape.values());
  return k;
}

}  // namespace detail

inline Kernel kernel_of(std::span<const int> p) {
  if (p.empty()) throw ArgumentError("kernel of the empty permutation");
  return detail::kernel_from_graph(p, occurrence_graph(p));
}

inline Kernel kernel_of(const Involution& p) { return kernel_of(p.values()); }

inline bool is_kernel_involution(const Involution& rho) {
  if (rho.empty()) throw ArgumentError("empty shape");
  return kernel_of(rho).shape == rho;
}

// cells[m - 1][l - 1] lists, in position order, the values of C_{m,l}: the
// non-kernel entries between kernel positions i_l and i_{l+1} (i_{s+1} =
// n + 1) whose values lie between the m-th and (m+1)-th smallest kernel
// values (the (s+1)-th being n + 1).
using CellContents = std::vector<std::vector<std::vector<int>>>;

inline CellContents cell_decomposition(std::span<const int> p,
                                       const Kernel& kernel) {
  const int n = static_cast<int>(p.size());
  const int s = kernel.size();
  std::vector<int> kernel_values;
  std::vector<char> in_kernel(static_cast<size_t>(n + 1), 0);
  for (int pos : kernel.positions) {
    if (pos < 1 || pos > n) throw ArgumentError("kernel position out of range");
    kernel_values.push_back(p[pos - 1]);
    in_kernel[pos] = 1;
  }
  std::sort(kernel_values.begin(), kernel_values.end());
  CellContents cells(static_cast<size_t>(s),
                     std::vector<std::vector<int>>(static_cast<size_t>(s)));
  for (int j = 1; j <= n; ++j) {
    if (in_kernel[j]) continue;
    const int value = p[j - 1];
    // column: last kernel position before j
    const auto col_it = std::lower_bound(kernel.positions.begin(),
                                         kernel.positions.end(), j);
    const auto row_it =
        std::lower_bound(kernel_values.begin(), kernel_values.end(), value);
    if (col_it == kernel.positions.begin() ||
        row_it == kernel_values.begin()) {
      throw StructuralError("entry " + std::to_string(value) +
                            " at position " + std::to_string(j) +
                            " lies outside every kernel cell");
    }
    const auto l = col_it - kernel.positions.begin() - 1;
    const auto m = row_it - kernel_values.begin() - 1;
    cells[static_cast<size_t>(m)][static_cast<size_t>(l)].push_back(value);
  }
  return cells;
}

inline CellContents cell_decomposition(const Involution& p,
                                       const Kernel& kernel) {
  return cell_decomposition(p.values(), kernel);
}

}  // namespace inv3412
