// Copyright 2026 The Zenolie Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <utility>

#include "zenolie/dense.hpp"
#include "zenolie/lie.hpp"
#include "zenolie/pauli.hpp"
#include "zenolie/zeno.hpp"

namespace zenolie {

/// Two Hamiltonians h1, h2 on d dimensions embedded one qubit up as the
/// commuting pair
///   H1 = 1 (x) h1 + X (x) h2,   H2 = 1 (x) h2 + X (x) h1,
/// with the extension qubit leftmost and P = (1 + Z)/2 (x) 1.
struct PurifiedPair {
  DenseOperator h1, h2;
  DenseOperator H1, H2;
  Projection projection;
};

PurifiedPair purify_pair(const DenseOperator& h1, const DenseOperator& h2);

/// Same construction on Pauli sums; the result has one more qubit.
std::pair<PauliSum, PauliSum> purify_pair(const PauliSum& h1, const PauliSum& h2);

struct PurificationReport {
  double commutator_norm = 0.0;    // ||[H1, H2]||_F
  double recovery_error_1 = 0.0;   // ||V^dagger H1 V - h1||_F
  double recovery_error_2 = 0.0;   // ||V^dagger H2 V - h2||_F
};

PurificationReport verify_purification(const PurifiedPair& p);

struct ClosureContrast {
  /// Traceless closure dimension of {i h1, i h2}; at most d^2 - 1.
  std::size_t dim_original = 0;
  /// Closure dimension of {i H1, i H2} in u(2d).
  std::size_t dim_purified = 0;
};

ClosureContrast closure_contrast(const PurifiedPair& p, double tol = kDefaultRankTol);

}  // namespace zenolie
