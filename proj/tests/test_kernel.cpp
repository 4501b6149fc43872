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

#include "inv3412/enumerate.hpp"
#include "inv3412/kernel.hpp"
#include "test_support.hpp"

namespace inv3412 {
namespace {

const Involution kFigure = Involution::parse("8 2 3 13 7 6 5 1 11 12 9 10 4 14");

TEST(OccurrenceGraph, FigureInvolution) {
  const auto g = occurrence_graph(kFigure);
  EXPECT_EQ(g.entries, 14);
  ASSERT_EQ(g.occurrences.size(), 2u);
  EXPECT_EQ(g.edges().size(), 8u);
  for (const auto& occ : g.occurrences) {
    for (int pos : occ.positions) EXPECT_GE(g.entry_degree(pos), 1);
  }
}

TEST(OccurrenceGraph, TrivialCases) {
  const auto id = occurrence_graph(Involution(Perm::identity(6)));
  EXPECT_TRUE(id.occurrences.empty());
  EXPECT_TRUE(id.edges().empty());
  const auto single = occurrence_graph(Involution{3, 4, 1, 2});
  ASSERT_EQ(single.occurrences.size(), 1u);
  EXPECT_EQ(single.edges().size(), 4u);
}

TEST(Kernel, FigureInvolution) {
  const Kernel k = kernel_of(kFigure);
  EXPECT_EQ(k.positions, (std::vector<int>{1, 4, 8, 13}));
  EXPECT_EQ(k.shape, (Involution{3, 4, 1, 2}));
  EXPECT_EQ(k.size(), 4);
  EXPECT_EQ(k.capacity, 1);
}

TEST(Kernel, TrivialComponents) {
  const Kernel id = kernel_of(Involution(Perm::identity(5)));
  EXPECT_EQ(id.positions, std::vector<int>{1});
  EXPECT_EQ(id.shape, Involution{1});
  const Kernel k = kernel_of(Involution::parse("2157364"));
  EXPECT_EQ(k.shape, Involution{1});
  EXPECT_EQ(k.capacity, 0);
  EXPECT_THROW(kernel_of(Involution()), ArgumentError);
}

TEST(Kernel, KernelInvolutions) {
  EXPECT_TRUE(is_kernel_involution(Involution::parse("3412")));
  EXPECT_TRUE(is_kernel_involution(Involution::parse("351624")));
  EXPECT_FALSE(is_kernel_involution(Involution::parse("1324")));
  EXPECT_THROW(is_kernel_involution(Involution()), ArgumentError);
}

TEST(Kernel, AgreesWithNaiveComponent) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& v : testing::naive_involutions(n)) {
      const Kernel k = kernel_of(v);
      const auto naive = testing::naive_kernel_positions(v);
      ASSERT_EQ(std::vector<int>(naive.begin(), naive.end()), k.positions);
      const auto shape = testing::naive_kernel_shape(v);
      ASSERT_EQ(std::vector<int>(k.shape.values().begin(), k.shape.values().end()), shape);
    }
  }
}

TEST(Kernel, ShapeIsInvolutionAndSizeBounded) {
  for (int n = 1; n <= 10; ++n) {
    for_each_involution(n, [&](std::span<const int> p) {
      const Kernel k = kernel_of(p);
      ASSERT_TRUE(is_involution(k.shape.values()));
      if (k.capacity >= 1) ASSERT_LE(k.size(), 2 * k.capacity + 2);
    });
  }
}

TEST(CellDecomposition, FigureInvolution) {
  const auto cells = cell_decomposition(kFigure, kernel_of(kFigure));
  ASSERT_EQ(cells.size(), 4u);
  for (int m = 1; m <= 4; ++m) {
    for (int l = 1; l <= 4; ++l) {
      const auto& c = cells[m - 1][l - 1];
      if (m != l) EXPECT_TRUE(c.empty()) << m << "," << l;
    }
  }
  EXPECT_EQ(cells[0][0], (std::vector<int>{2, 3}));
  EXPECT_EQ(cells[1][1], (std::vector<int>{7, 6, 5}));
  EXPECT_EQ(cells[2][2], (std::vector<int>{11, 12, 9, 10}));
  EXPECT_EQ(cells[3][3], (std::vector<int>{14}));
}

TEST(CellDecomposition, KernelAloneLeavesCellsEmpty) {
  for (const char* text : {"3412", "351624"}) {
    const Involution rho = Involution::parse(text);
    const auto cells = cell_decomposition(rho, kernel_of(rho));
    for (const auto& row : cells) {
      for (const auto& c : row) EXPECT_TRUE(c.empty());
    }
  }
}

TEST(CellDecomposition, EveryEntryPlacedWhenCapacityPositive) {
  for (int n = 4; n <= 10; ++n) {
    for_each_involution(n, [&](std::span<const int> p) {
      const Kernel k = kernel_of(p);
      if (k.capacity == 0) return;
      const auto cells = cell_decomposition(p, k);
      size_t placed = 0;
      for (const auto& row : cells) {
        for (const auto& c : row) placed += c.size();
      }
      ASSERT_EQ(placed + k.positions.size(), p.size());
      ASSERT_EQ(k.positions.front(), 1);
    });
  }
}

TEST(CellDecomposition, EntryOutsideCellsIsStructuralError) {
  // kernel positions that skip the first entry
  const Involution p = Involution::parse("1324");
  Kernel fake;
  fake.positions = {2, 3};
  fake.shape = Involution{2, 1};
  EXPECT_THROW(cell_decomposition(p, fake), StructuralError);
}

}  // namespace
}  // namespace inv3412
