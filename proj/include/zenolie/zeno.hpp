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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "zenolie/dense.hpp"

namespace zenolie {

/// Orthogonal projection P = V V^dagger with an explicit isometry V (d x r).
///
/// Projections built qubit by qubit also remember one 2 x k factor per
/// qubit (k = 2 for an untouched qubit, k = 1 for a frozen one), so that
/// products over disjoint qubits can be formed without diagonalizing.
class Projection {
 public:
  /// Validates V^dagger V = 1 within 1e-12.
  static Projection from_isometry(DenseOperator isometry);
  /// V is the Kronecker product of the factors, qubit 1 leftmost.
  static Projection from_qubit_factors(std::vector<DenseOperator> factors);
  static Projection identity(std::size_t n_qubits);

  Eigen::Index dim() const noexcept { return v_.rows(); }
  Eigen::Index rank() const noexcept { return v_.cols(); }
  const DenseOperator& isometry() const noexcept { return v_; }
  DenseOperator projector() const { return v_ * v_.adjoint(); }
  /// Per-qubit factors, present only for qubit-local projections.
  const std::optional<std::vector<DenseOperator>>& qubit_factors() const noexcept {
    return factors_;
  }

  /// V^dagger A V.
  DenseOperator compress(const DenseOperator& a) const;
  /// V B V^dagger.
  DenseOperator expand(const DenseOperator& b) const;

 private:
  Projection(DenseOperator v, std::optional<std::vector<DenseOperator>> factors)
      : v_(std::move(v)), factors_(std::move(factors)) {}

  DenseOperator v_;
  std::optional<std::vector<DenseOperator>> factors_;
};

/// +1 eigenvector of (X + Y + Z)/sqrt(3), first nonzero amplitude real
/// positive.
StateVector phi_state();
/// The orthogonal -1 eigenvector, same gauge.
StateVector phi_perp_state();

/// |phi><phi| on `qubit` (1-based) tensored with the identity elsewhere.
Projection make_phi_projector(std::size_t qubit, std::size_t n_qubits);

/// Product of projections acting on disjoint qubits. The same frozen state
/// on the same qubit is allowed (idempotence); different frozen states on a
/// shared qubit throw ContractViolation.
Projection product_projector(std::span<const Projection> ps);

/// Parses `phi:<q>` terms joined by `*`, or `identity`/`none`.
Projection parse_projection_spec(std::string_view spec, std::size_t n_qubits);

struct ZenoHamiltonian {
  DenseOperator full;        // P H P
  DenseOperator compressed;  // V^dagger H V
};

ZenoHamiltonian zeno_hamiltonian(const DenseOperator& h, const Projection& p);

struct ZenoSystem {
  std::vector<DenseOperator> full_hamiltonians;
  Projection projection;
  std::vector<DenseOperator> zeno_hamiltonians;
  std::vector<DenseOperator> compressed_hamiltonians;
};

ZenoSystem make_zeno_system(std::vector<DenseOperator> hamiltonians, Projection p);

/// The two-qubit projected commutator identity, evaluated three ways.
struct CommutatorIdentity {
  /// || [Hbar1, Hbar2] - 2i P1 Y2 / 3 ||_F, the identity as printed.
  double residual = 0.0;
  /// || [Hbar1, Hbar2] + 2i P1 Y2 / 3 ||_F.
  double residual_opposite_sign = 0.0;
  /// || [X/sqrt3, Z/sqrt3] + 2i Y / 3 ||_F on the compressed qubit.
  double compressed_residual = 0.0;
};

CommutatorIdentity intro_commutator_identity();

/// Eigendecomposition of a Hermitian operator, reusable across times.
class HermitianSpectrum {
 public:
  /// Throws ContractViolation for a non-Hermitian input.
  explicit HermitianSpectrum(const DenseOperator& h);

  const Eigen::VectorXd& eigenvalues() const noexcept { return values_; }
  const DenseOperator& eigenvectors() const noexcept { return vectors_; }
  /// exp(-i H t).
  DenseOperator propagator(double t) const;

 private:
  Eigen::VectorXd values_;
  DenseOperator vectors_;
};

/// exp(-i H t) for Hermitian H.
DenseOperator propagator(const DenseOperator& h, double t);

/// V^dagger (P exp(-iHt/m))^m V; a contraction, unitary only in the limit.
DenseOperator zeno_product(const DenseOperator& h, const Projection& p, double t,
                           std::size_t m);

struct ConvergencePoint {
  std::size_t m = 0;
  /// Spectral-norm distance to exp(-i V^dagger H V t) on the subspace.
  double error = 0.0;
  /// Survival probability averaged over an orthonormal basis of the
  /// subspace, ||W||_F^2 / r.
  double survival_probability = 0.0;
};

std::vector<ConvergencePoint> zeno_convergence(const DenseOperator& h, const Projection& p,
                                               double t, std::span<const std::size_t> ms);

}  // namespace zenolie
