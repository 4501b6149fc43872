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

// Involution enumeration. Involutions are generated by repeatedly choosing
// the partner of the largest unassigned element: itself (a fixed point) or a
// smaller unassigned element (a 2-cycle). Fixed point first, then partners in
// increasing order. The first few choices form a prefix that splits the
// stream into independent sub-streams for parallel work.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "inv3412/errors.hpp"
#include "inv3412/perm.hpp"

namespace inv3412 {

inline constexpr int kDefaultMaxN = 16;

struct EnumerationLimits {
  int max_n = kDefaultMaxN;
};

inline void check_size(int n, const EnumerationLimits& limits) {
  if (n < 0) throw ArgumentError("negative size " + std::to_string(n));
  if (n > limits.max_n) {
    throw ResourceError("refusing to enumerate involutions of size " +
                        std::to_string(n) + " (cap " +
                        std::to_string(limits.max_n) + ")");
  }
}

// Involution numbers t(n) = t(n-1) + (n-1) t(n-2).
inline std::uint64_t involution_count(int n) {
  std::uint64_t prev = 1, cur = 1;
  for (int k = 2; k <= n; ++k) {
    const std::uint64_t next = cur + static_cast<std::uint64_t>(k - 1) * prev;
    prev = cur;
    cur = next;
  }
  return n <= 0 ? 1 : cur;
}

// A partial assignment: values[i] == 0 marks an unassigned position. Every
// assigned element above `top` is settled.
struct InvolutionPrefix {
  std::vector<int> values;
  int top = 0;
};

namespace detail {

template <class Fn>
void extend_involution(std::vector<int>& p, int top, Fn& fn) {
  while (top >= 1 && p[top - 1] != 0) --top;
  if (top == 0) {
    fn(std::span<const int>(p));
    return;
  }
  p[top - 1] = top;
  extend_involution(p, top - 1, fn);
  for (int k = 1; k < top; ++k) {
    if (p[k - 1] != 0) continue;
    p[top - 1] = k;
    p[k - 1] = top;
    extend_involution(p, top - 1, fn);
    p[k - 1] = 0;
  }
  p[top - 1] = 0;
}

// Children of a prefix in stream order.
inline std::vector<InvolutionPrefix> expand(const InvolutionPrefix& prefix) {
  int top = prefix.top;
  while (top >= 1 && prefix.values[top - 1] != 0) --top;
  if (top == 0) return {InvolutionPrefix{prefix.values, 0}};
  std::vector<InvolutionPrefix> out;
  InvolutionPrefix fixed{prefix.values, top - 1};
  fixed.values[top - 1] = top;
  out.push_back(std::move(fixed));
  for (int k = 1; k < top; ++k) {
    if (prefix.values[k - 1] != 0) continue;
    InvolutionPrefix paired{prefix.values, top - 1};
    paired.values[top - 1] = k;
    paired.values[k - 1] = top;
    out.push_back(std::move(paired));
  }
  return out;
}

inline bool complete(const InvolutionPrefix& prefix) {
  return std::none_of(prefix.values.begin(), prefix.values.end(),
                      [](int v) { return v == 0; });
}

}  // namespace detail

// Visits every completion of `prefix`; fn receives the one-line notation.
template <class Fn>
void for_each_involution(const InvolutionPrefix& prefix, Fn&& fn) {
  std::vector<int> work = prefix.values;
  detail::extend_involution(work, prefix.top, fn);
}

template <class Fn>
void for_each_involution(int n, Fn&& fn, const EnumerationLimits& limits = {}) {
  check_size(n, limits);
  for_each_involution(
      InvolutionPrefix{std::vector<int>(static_cast<size_t>(n), 0), n}, fn);
}

inline std::vector<Involution> enumerate_involutions(
    int n, const EnumerationLimits& limits = {}) {
  std::vector<Involution> out;
  out.reserve(static_cast<size_t>(involution_count(n)));
  for_each_involution(
      n, [&](std::span<const int> p) { out.push_back(Involution::trusted(p)); },
      limits);
  return out;
}

// Splits the stream for size n into at least `min_parts` prefixes (or every
// involution, if there are fewer). Concatenating the sub-streams in order
// reproduces the full stream.
inline std::vector<InvolutionPrefix> partition_involutions(
    int n, int min_parts, const EnumerationLimits& limits = {}) {
  check_size(n, limits);
  std::vector<InvolutionPrefix> parts{
      InvolutionPrefix{std::vector<int>(static_cast<size_t>(n), 0), n}};
  while (static_cast<int>(parts.size()) < min_parts) {
    if (std::all_of(parts.begin(), parts.end(), detail::complete)) break;
    std::vector<InvolutionPrefix> next;
    for (const auto& part : parts) {
      if (detail::complete(part)) {
        next.push_back(part);
        continue;
      }
      for (auto& child : detail::expand(part)) next.push_back(std::move(child));
    }
    parts = std::move(next);
  }
  return parts;
}

inline unsigned default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs `task(index)` for index in [0, count) on up to `threads` workers.
// The first exception thrown by any task is rethrown on the caller.
template <class Task>
void run_parallel(size_t count, unsigned threads, Task&& task) {
  threads = std::max(1u, std::min<unsigned>(threads,
                                            static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (size_t i = next++; i < count; i = next++) {
          try {
            task(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

// Parallel reduction over I_n. `visit(acc, p)` folds one involution into a
// task-local accumulator; partial results are merged in partition order, so
// the outcome does not depend on the thread count as long as `merge` is
// associative.
template <class Acc, class Visit, class Merge>
Acc reduce_involutions(int n, unsigned threads, const Acc& identity,
                       Visit visit, Merge merge,
                       const EnumerationLimits& limits = {}) {
  const auto parts = partition_involutions(
      n, static_cast<int>(std::max(1u, threads) * 8), limits);
  std::vector<Acc> partial(parts.size(), identity);
  run_parallel(parts.size(), threads, [&](size_t i) {
    Acc& acc = partial[i];
    for_each_involution(parts[i],
                        [&](std::span<const int> p) { visit(acc, p); });
  });
  Acc result = identity;
  for (auto& acc : partial) merge(result, std::move(acc));
  return result;
}

}  // namespace inv3412
