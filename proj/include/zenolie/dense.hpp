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

#include <Eigen/Dense>
#include <cstddef>

#include "zenolie/pauli.hpp"

namespace zenolie {

using DenseOperator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr std::size_t kDefaultDenseQubitCap = 12;

/// Kronecker expansion of a Pauli sum. Throws SizeLimitError above the cap.
DenseOperator to_dense(const PauliSum& op, std::size_t max_qubits = kDefaultDenseQubitCap);
DenseOperator to_dense(const PauliTerm& t, std::size_t max_qubits = kDefaultDenseQubitCap);

/// Re Tr(a^dagger b).
double hs_inner(const DenseOperator& a, const DenseOperator& b);

/// Column-stacked entries, real parts in [0, d^2) and imaginary parts in
/// [d^2, 2d^2). The Euclidean dot product of two images equals hs_inner.
Eigen::VectorXd vectorize(const DenseOperator& a);
/// Inverse of vectorize for a d x d operator.
DenseOperator unvectorize(const Eigen::Ref<const Eigen::VectorXd>& v, Eigen::Index d);

inline DenseOperator commutator(const DenseOperator& a, const DenseOperator& b) {
  return a * b - b * a;
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b);

bool is_hermitian(const DenseOperator& a, double rel_tol = 1e-10);
bool is_anti_hermitian(const DenseOperator& a, double rel_tol = 1e-10);
bool all_finite(const DenseOperator& a);

/// Largest singular value.
double spectral_norm(const DenseOperator& a);
/// Half the sum of singular values of a - b.
double trace_distance(const DenseOperator& a, const DenseOperator& b);

/// Partial trace over `qubit` (1-based) of an n-qubit operator.
DenseOperator partial_trace_qubit(const DenseOperator& a, std::size_t qubit,
                                  std::size_t n_qubits);
/// Trace over every qubit except `qubit`; returns a 2 x 2 operator.
DenseOperator reduced_qubit_operator(const DenseOperator& a, std::size_t qubit,
                                     std::size_t n_qubits);
/// single (x) rest with `single` placed on `qubit`; inverse slot map of
/// partial_trace_qubit.
DenseOperator embed_on_qubit(const DenseOperator& single, const DenseOperator& rest,
                             std::size_t qubit, std::size_t n_qubits);
/// log2(dim) for a power-of-two dimension; throws DimensionError otherwise.
std::size_t qubit_count_of(Eigen::Index dim);

namespace pauli_matrix {
DenseOperator I();
DenseOperator X();
DenseOperator Y();
DenseOperator Z();
}  // namespace pauli_matrix

}  // namespace zenolie
