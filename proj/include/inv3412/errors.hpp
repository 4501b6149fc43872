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

#include <stdexcept>
#include <string>

namespace inv3412 {

// Bad input to an operation (malformed permutation, out-of-range position,
// mixed discriminants, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request exceeding a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact-arithmetic failure: division by zero, genuine pole at 0.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An involution whose entries do not fit the kernel cell decomposition.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Internal invariant broken (asymmetric cell grid, psi capacity mismatch).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace inv3412
