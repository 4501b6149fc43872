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

// Permutations and involutions in 1-based one-line notation, plus the two
// pattern statistics the rest of the library needs: occurrences of 3412 and
// inversions (occurrences of 21).

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "inv3412/errors.hpp"

namespace inv3412 {

// A permutation of {1..n}. values()[i - 1] is the image of position i.
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<int> values) : values_(std::move(values)) {
    const int n = size();
    std::vector<char> seen(values_.size(), 0);
    for (int v : values_) {
      if (v < 1 || v > n || seen[v - 1]) {
        throw ArgumentError("not a permutation of 1.." + std::to_string(n) +
                            ": " + to_string());
      }
      seen[v - 1] = 1;
    }
  }

  Perm(std::initializer_list<int> values)
      : Perm(std::vector<int>(values)) {}

  static Perm identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
  }

  // Accepts "3412" (digits, only unambiguous for n <= 9) or any list of
  // integers separated by spaces or commas, e.g. "8 2 3 13 7 6 5 1".
  static Perm parse(std::string_view text) {
    std::vector<int> v;
    const bool separated =
        text.find_first_of(" ,\t") != std::string_view::npos;
    if (!separated) {
      for (char ch : text) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
          throw ArgumentError("bad permutation literal: " + std::string(text));
        }
        v.push_back(ch - '0');
      }
      return Perm(std::move(v));
    }
    int current = -1;
    for (char ch : text) {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        current = (current < 0 ? 0 : current * 10) + (ch - '0');
      } else if (ch == ' ' || ch == ',' || ch == '\t') {
        if (current >= 0) v.push_back(current);
        current = -1;
      } else {
        throw ArgumentError("bad permutation literal: " + std::string(text));
      }
    }
    if (current >= 0) v.push_back(current);
    return Perm(std::move(v));
  }

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  // Image of a 1-based position.
  int operator()(int position) const { return values_[position - 1]; }

  std::span<const int> values() const { return values_; }

  Perm inverse() const {
    std::vector<int> inv(values_.size());
    for (int i = 0; i < size(); ++i) inv[values_[i] - 1] = i + 1;
    return Perm(std::move(inv));
  }

  // Compact digits when every value is a single digit, otherwise
  // space-separated.
  std::string to_string() const {
    std::string out;
    const bool compact = size() <= 9;
    for (int i = 0; i < size(); ++i) {
      if (!compact && i > 0) out += ' ';
      out += std::to_string(values_[i]);
    }
    return out;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  // Shorter permutations first, then lexicographic.
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
};

inline bool is_involution(std::span<const int> p) {
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i) {
    const int v = p[i];
    if (v < 1 || v > n || p[v - 1] != i + 1) return false;
  }
  return true;
}

inline bool is_involution(const Perm& p) { return is_involution(p.values()); }

// A permutation equal to its own inverse.
class Involution {
 public:
  Involution() = default;

  explicit Involution(Perm p) : perm_(std::move(p)) {
    if (!is_involution(perm_)) {
      throw ArgumentError("not an involution: " + perm_.to_string());
    }
  }

  Involution(std::initializer_list<int> values) : Involution(Perm(values)) {}

  // Skips validation; callers guarantee p is an involution.
  static Involution trusted(std::span<const int> p) {
    Involution out;
    out.perm_ = Perm(std::vector<int>(p.begin(), p.end()));
    return out;
  }

  static Involution parse(std::string_view text) {
    return Involution(Perm::parse(text));
  }

  const Perm& perm() const { return perm_; }
  int size() const { return perm_.size(); }
  bool empty() const { return perm_.empty(); }
  int operator()(int position) const { return perm_(position); }
  std::span<const int> values() const { return perm_.values(); }
  std::string to_string() const { return perm_.to_string(); }

  friend bool operator==(const Involution&, const Involution&) = default;
  friend std::strong_ordering operator<=>(const Involution& a,
                                          const Involution& b) {
    return a.perm_ <=> b.perm_;
  }

 private:
  Perm perm_;
};

// Positions i1 < i2 < i3 < i4 (1-based) with p(i3) < p(i4) < p(i1) < p(i2).
struct Occurrence {
  std::array<int, 4> positions{};

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

// All occurrences of 3412, in lexicographic order of positions.
inline std::vector<Occurrence> occurrences_3412(std::span<const int> p) {
  std::vector<Occurrence> out;
  const int n = static_cast<int>(p.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (p[b] < p[a]) continue;
      for (int c = b + 1; c < n; ++c) {
        if (p[c] > p[a]) continue;
        for (int d = c + 1; d < n; ++d) {
          if (p[c] < p[d] && p[d] < p[a]) {
            out.push_back(Occurrence{{a + 1, b + 1, c + 1, d + 1}});
          }
        }
      }
    }
  }
  return out;
}

inline std::vector<Occurrence> occurrences_3412(const Perm& p) {
  return occurrences_3412(p.values());
}

// Number of occurrences of 3412, nested loops with pruning. Counting stops as
// soon as the count exceeds `cap`, in which case cap + 1 is returned.
inline int count_3412(std::span<const int> p,
                      int cap = std::numeric_limits<int>::max() - 1) {
  const int n = static_cast<int>(p.size());
  int count = 0;
  for (int a = 0; a + 3 < n; ++a) {
    const int pa = p[a];
    if (pa < 3) continue;  // needs two smaller values to its right
    for (int b = a + 1; b + 2 < n; ++b) {
      if (p[b] < pa) continue;
      for (int c = b + 1; c + 1 < n; ++c) {
        const int pc = p[c];
        if (pc > pa) continue;
        for (int d = c + 1; d < n; ++d) {
          if (pc < p[d] && p[d] < pa && ++count > cap) return count;
        }
      }
    }
  }
  return count;
}

inline int count_3412(const Perm& p) { return count_3412(p.values()); }

// Independent O(n^2) count. below(j, v) is the number of ascending pairs
// among positions >= j whose values are both < v; each ascending pair
// (i1, i2) then contributes below(i2 + 1, p(i1)).
inline std::int64_t count_3412_ranked(std::span<const int> p) {
  const int n = static_cast<int>(p.size());
  const int width = n + 2;
  std::vector<std::int64_t> below(static_cast<size_t>((n + 1) * width), 0);
  auto at = [&](int j, int v) -> std::int64_t& {
    return below[static_cast<size_t>(j * width + v)];
  };
  std::vector<int> present(static_cast<size_t>(width), 0);
  std::vector<int> less(static_cast<size_t>(width), 0);
  for (int j = n - 1; j >= 0; --j) {
    // less[v]: suffix values (positions > j) smaller than v
    less[0] = 0;
    for (int v = 1; v < width; ++v) less[v] = less[v - 1] + present[v - 1];
    const int pj = p[j];
    for (int v = 0; v < width; ++v) {
      at(j, v) = at(j + 1, v);
      if (pj < v) at(j, v) += less[v] - less[pj + 1];
    }
    present[pj] = 1;
  }
  std::int64_t total = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (p[a] < p[b]) total += at(b + 1, p[a]);
    }
  }
  return total;
}

// Inversions: pairs i < j with p(i) > p(j).
inline int count_pattern_21(std::span<const int> p) {
  const int n = static_cast<int>(p.size());
  int count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) count += p[i] > p[j];
  }
  return count;
}

inline int count_pattern_21(const Perm& p) {
  return count_pattern_21(p.values());
}

// The permutation order-isomorphic to the values at the given strictly
// increasing 1-based positions.
inline Perm reduce_to_pattern(std::span<const int> p,
                              std::span<const int> positions) {
  const int n = static_cast<int>(p.size());
  std::vector<int> picked;
  picked.reserve(positions.size());
  int previous = 0;
  for (int pos : positions) {
    if (pos < 1 || pos > n) {
      throw ArgumentError("position " + std::to_string(pos) +
                          " out of range 1.." + std::to_string(n));
    }
    if (pos <= previous) {
      throw ArgumentError("positions must be strictly increasing");
    }
    previous = pos;
    picked.push_back(p[pos - 1]);
  }
  std::vector<int> sorted = picked;
  std::sort(sorted.begin(), sorted.end());
  for (int& v : picked) {
    v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                         sorted.begin()) +
        1;
  }
  return Perm(std::move(picked));
}

inline Perm reduce_to_pattern(const Perm& p, std::span<const int> positions) {
  return reduce_to_pattern(p.values(), positions);
}

}  // namespace inv3412
