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
#include <cstdint>
#include <string>
#include <vector>

#include "zenolie/dense.hpp"
#include "zenolie/lie.hpp"
#include "zenolie/pauli.hpp"
#include "zenolie/zeno.hpp"

namespace zenolie {

/// A named control system: commuting Hamiltonians plus the projector that
/// turns them into a universal set on its range.
struct ModelSpec {
  std::string name;
  std::size_t n_qubits = 0;
  std::vector<PauliSum> hamiltonians;
  std::string projection_spec;
  std::size_t expected_naked_dim = 0;
  /// Traceless dimension of the closure of the compressed generators.
  std::size_t expected_zeno_dim = 0;

  std::vector<DenseOperator> dense_hamiltonians() const;
  Projection projection() const { return parse_projection_spec(projection_spec, n_qubits); }
};

/// (XX + YY + ZZ) on qubits k, k+1 for k = first .. last-1; empty when
/// last <= first.
PauliSum heisenberg_chain(std::size_t n_qubits, std::size_t first, std::size_t last);

/// H1 = X1 X2, H2 = Z1 Z2, projector phi:1.
ModelSpec intro_example();
/// H1 = X1 X2 and H2 = sqrt3 (XXX + YYY + ZZZ)_{123} + Z3 + Heisenberg(3..n).
ModelSpec example_a(std::size_t n_qubits);
/// Three commuting Hamiltonians, projector phi:1*phi:3; needs n >= 5.
ModelSpec example_b(std::size_t n_qubits);
/// Parses `intro`, `a:<n>` or `b:<n>`.
ModelSpec model_by_name(const std::string& name);

/// Haar-distributed unitary via QR of a complex Ginibre matrix with the
/// diagonal phase correction. Deterministic per seed.
DenseOperator haar_unitary(Eigen::Index d, std::uint64_t seed);

/// (G + G^dagger)/2 for a complex Ginibre G with unit-variance entries.
DenseOperator random_hermitian(Eigen::Index d, std::uint64_t seed);

/// G G^dagger / Tr for a complex Ginibre G: a full-rank random state.
DenseOperator random_density_matrix(Eigen::Index d, std::uint64_t seed);

struct RandomCommutingPair {
  Eigen::Index dim = 0;
  Eigen::VectorXd eigenvalues_1;
  Eigen::VectorXd eigenvalues_2;
  DenseOperator common_unitary;
  std::uint64_t seed = 0;

  DenseOperator h1() const;
  DenseOperator h2() const;
};

/// Eigenvalues i.i.d. uniform on [-1, 1] and a Haar common eigenbasis.
RandomCommutingPair random_commuting_pair(std::size_t n_qubits, std::uint64_t seed);

/// Independent seed for trial `index` of a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

struct GenericityTrial {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t zeno_dim = 0;  // traceless
  bool is_full = false;
  double smallest_singular_value = 0.0;
  double min_accepted_residual = 0.0;
};

struct GenericitySummary {
  std::size_t full_count = 0;
  std::size_t total = 0;
  double min_smallest_singular_value = 0.0;
  double min_accepted_residual = 0.0;
  std::vector<GenericityTrial> trials;
};

struct GenericityOptions {
  /// Replace phi:1 by a Haar-random projection of rank d/2.
  bool haar_projection = false;
  std::size_t workers = 0;
};

/// Closure of the compressed pair {i V^dagger H1 V, i V^dagger H2 V}.
ClosureReport zeno_closure_of_pair(const RandomCommutingPair& pair, const Projection& p,
                                   double tol = kDefaultRankTol);

GenericitySummary genericity_sweep(std::size_t n_qubits, std::size_t trials, std::uint64_t seed,
                                   double tol = kDefaultRankTol,
                                   const GenericityOptions& opts = {});

}  // namespace zenolie
