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

// Brute-force ground truth: involutions of each length tallied by their
// number of 3412 occurrences and their inversion parity, and the checks that
// bind the generating-function pipeline to those tallies.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inv3412/enumerate.hpp"
#include "inv3412/errors.hpp"
#include "inv3412/expr.hpp"
#include "inv3412/genfun.hpp"
#include "inv3412/golden.hpp"
#include "inv3412/perm.hpp"
#include "inv3412/series.hpp"

namespace inv3412 {

inline constexpr int kBruteDefaultMaxN = 14;

// counts[r][n] = #{p in I_n : exactly r occurrences}; overflow[n] counts
// those with more than max_r.
struct CountTable {
  int max_n = 0;
  int max_r = 0;
  std::vector<std::vector<std::int64_t>> counts;
  std::vector<std::int64_t> overflow;

  std::int64_t at(int r, int n) const { return counts[r][n]; }
};

struct ParityTable {
  int max_n = 0;
  int max_r = 0;
  std::vector<std::vector<std::int64_t>> even, odd;
  std::vector<std::int64_t> overflow_even, overflow_odd;

  // even - odd, the coefficients of N_r.
  std::int64_t signed_count(int r, int n) const { return even[r][n] - odd[r][n]; }
};

struct BruteTables {
  CountTable all;
  ParityTable parity;
};

// One enumeration pass fills both tables. Counting stops at max_r + 1
// occurrences, which lands in the overflow bucket.
inline BruteTables brute_tables(int max_n, int max_r, unsigned threads = 1,
                                EnumerationLimits limits = {kBruteDefaultMaxN}) {
  if (max_n < 0 || max_r < 0) throw ArgumentError("negative table bounds");
  check_size(max_n, limits);
  const auto rows = static_cast<size_t>(max_r + 1);
  const auto cols = static_cast<size_t>(max_n + 1);
  BruteTables t;
  t.all = {max_n, max_r, std::vector(rows, std::vector<std::int64_t>(cols, 0)),
           std::vector<std::int64_t>(cols, 0)};
  t.parity = {max_n, max_r,
              std::vector(rows, std::vector<std::int64_t>(cols, 0)),
              std::vector(rows, std::vector<std::int64_t>(cols, 0)),
              std::vector<std::int64_t>(cols, 0),
              std::vector<std::int64_t>(cols, 0)};
  // Per-n tally: [bucket][parity], bucket max_r + 1 is overflow.
  using Tally = std::vector<std::int64_t>;
  for (int n = 0; n <= max_n; ++n) {
    const Tally tally = reduce_involutions(
        n, threads, Tally(2 * (rows + 1), 0),
        [&](Tally& acc, std::span<const int> p) {
          const int occ = count_3412(p, max_r);
          const int odd = count_pattern_21(p) & 1;
          ++acc[2 * static_cast<size_t>(occ) + static_cast<size_t>(odd)];
        },
        [](Tally& into, Tally&& part) {
          for (size_t i = 0; i < into.size(); ++i) into[i] += part[i];
        },
        limits);
    for (size_t r = 0; r <= rows; ++r) {
      const std::int64_t even = tally[2 * r], odd = tally[2 * r + 1];
      if (r < rows) {
        t.all.counts[r][n] = even + odd;
        t.parity.even[r][n] = even;
        t.parity.odd[r][n] = odd;
      } else {
        t.all.overflow[n] = even + odd;
        t.parity.overflow_even[n] = even;
        t.parity.overflow_odd[n] = odd;
      }
    }
  }
  return t;
}

inline CountTable brute_table(int max_n, int max_r, unsigned threads = 1,
                              EnumerationLimits limits = {kBruteDefaultMaxN}) {
  return brute_tables(max_n, max_r, threads, limits).all;
}

inline ParityTable brute_parity_table(int max_n, int max_r, unsigned threads = 1,
                                      EnumerationLimits limits = {kBruteDefaultMaxN}) {
  return brute_tables(max_n, max_r, threads, limits).parity;
}

struct TableMismatch {
  std::string table;  // "I", "N", "E", ...
  int r = 0;
  int n = 0;
  std::string expected;
  std::string actual;
};

inline std::string describe(const TableMismatch& m) {
  return m.table + "[r=" + std::to_string(m.r) + ", n=" + std::to_string(m.n) +
         "]: expected " + m.expected + ", got " + m.actual;
}

struct SeriesReport {
  int max_r = 0;
  int max_n = 0;
  int i_checked = 0;
  int n_checked = 0;
  std::vector<TableMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// [x^n] I_r against counts[r][n] and [x^n] N_r against even - odd, for all
// r <= max_r, n <= max_n.
inline SeriesReport verify_series_vs_brute(GeneratingFunctions& gf,
                                           const BruteTables& brute, int max_r,
                                           int max_n) {
  if (max_r > brute.all.max_r || max_n > brute.all.max_n) {
    throw ArgumentError("brute tables do not cover the requested range");
  }
  if (max_n > gf.order()) throw ArgumentError("series order below max_n");
  SeriesReport report{max_r, max_n, 0, 0, {}};
  for (int r = 0; r <= max_r; ++r) {
    const SeriesQ& si = gf.series(GFKind::kI, r);
    const SeriesQ& sn = gf.series(GFKind::kN, r);
    for (int n = 0; n <= max_n; ++n) {
      const Rational want_i = brute.all.at(r, n);
      const Rational want_n = brute.parity.signed_count(r, n);
      ++report.i_checked;
      ++report.n_checked;
      if (si[n] != want_i) {
        report.mismatches.push_back({"I", r, n, want_i.get_str(), si[n].get_str()});
      }
      if (sn[n] != want_n) {
        report.mismatches.push_back({"N", r, n, want_n.get_str(), sn[n].get_str()});
      }
    }
  }
  return report;
}

// Cells of a brute table that differ from the published ones (n <= 12,
// r <= 6 only).
inline std::vector<TableMismatch> diff_against_published(const BruteTables& brute,
                                                         bool parity) {
  std::vector<TableMismatch> out;
  const int max_r = std::min(brute.all.max_r, golden::kTableMaxR);
  const int max_n = std::min(brute.all.max_n, golden::kTableMaxN);
  for (int r = 0; r <= max_r; ++r) {
    for (int n = 0; n <= max_n; ++n) {
      const std::int64_t want = parity ? golden::kEvenCounts[r][n]
                                       : golden::kInvolutionCounts[r][n];
      const std::int64_t got = parity ? brute.parity.even[r][n] : brute.all.at(r, n);
      if (want != got) {
        out.push_back({parity ? "E" : "I", r, n, std::to_string(want),
                       std::to_string(got)});
      }
    }
  }
  return out;
}

// The printed closed form for (kind, r) as an element of Q(x)[w], or
// nullopt when no formula is printed for it.
inline std::optional<QuadExt> printed_closed_form(GFKind kind, int r) {
  const char tag = kind == GFKind::kI ? 'I' : kind == GFKind::kN ? 'N' : '?';
  for (const auto& f : golden::kPrintedFormulas) {
    if (f.kind != tag || f.r != r) continue;
    const Poly disc = discriminant(kind);
    const RatFunc inv_2x2(Poly{1}, Poly{0, 0, 2});
    const RatFunc big_f(parse_poly(f.f_num), parse_poly(f.f_den));
    const RatFunc big_g(parse_poly(f.g_num), parse_poly(f.g_den));
    // w^(1-2r) = w * D^(-r)
    const RatFunc d_pow = RatFunc(disc).pow(-r);
    return QuadExt(big_f * inv_2x2, big_g * inv_2x2 * d_pow, disc);
  }
  return std::nullopt;
}

enum class DiffStatus { kMatch, kMismatch, kInvalid, kMissing };

inline const char* to_string(DiffStatus s) {
  switch (s) {
    case DiffStatus::kMatch: return "match";
    case DiffStatus::kMismatch: return "mismatch";
    case DiffStatus::kInvalid: return "invalid";
    case DiffStatus::kMissing: return "missing";
  }
  return "?";
}

struct FormulaDiff {
  GFKind kind = GFKind::kI;
  int r = 0;
  DiffStatus status = DiffStatus::kMissing;
  bool exact = false;     // closed forms equal in Q(x)[w]
  int first_n = -1;       // first differing coefficient
  std::string expected;   // pipeline value there
  std::string printed;    // value from the printed formula
  std::string message;
};

inline std::string describe(const FormulaDiff& d) {
  std::string head = std::string(to_string(d.kind)) + "_" + std::to_string(d.r) +
                     ": " + to_string(d.status);
  if (d.status == DiffStatus::kMismatch) {
    head += " at n=" + std::to_string(d.first_n) + " (pipeline " + d.expected +
            ", printed " + d.printed + ")";
  }
  if (!d.message.empty()) head += " (" + d.message + ")";
  return head;
}

// Expands the printed formulas for I_r and N_r and compares them with the
// pipeline, both as closed forms and coefficientwise up to `order`.
inline std::vector<FormulaDiff> verify_paper_formulas(GeneratingFunctions& gf, int r,
                                                      int order = 30) {
  if (r < 0 || r > 7) throw ArgumentError("printed formulas exist for r <= 7");
  std::vector<FormulaDiff> out;
  for (GFKind kind : {GFKind::kI, GFKind::kN}) {
    FormulaDiff diff;
    diff.kind = kind;
    diff.r = r;
    const auto printed = printed_closed_form(kind, r);
    if (!printed) {
      diff.message = "no printed formula";
      out.push_back(diff);
      continue;
    }
    const QuadExt& computed = gf.closed(kind, r);
    diff.exact = computed == *printed;
    const SeriesQ mine = quadext_to_series(computed, order);
    try {
      const SeriesQ theirs = quadext_to_series(*printed, order);
      diff.status = DiffStatus::kMatch;
      for (int n = 0; n <= order; ++n) {
        if (mine[n] != theirs[n]) {
          diff.status = DiffStatus::kMismatch;
          diff.first_n = n;
          diff.expected = mine[n].get_str();
          diff.printed = theirs[n].get_str();
          break;
        }
      }
    } catch (const ArithmeticError& e) {
      diff.status = DiffStatus::kInvalid;
      diff.message = e.what();
    }
    out.push_back(diff);
  }
  return out;
}

}  // namespace inv3412
