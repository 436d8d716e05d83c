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

#include "zenolie/purification.hpp"

#include "zenolie/errors.hpp"

namespace zenolie {

PurifiedPair purify_pair(const DenseOperator& h1, const DenseOperator& h2) {
  if (h1.rows() != h2.rows() || h1.cols() != h2.cols() || h1.rows() != h1.cols())
    throw DimensionError("purify_pair: h1 and h2 must be square with equal dimension");
  if (!is_hermitian(h1) || !is_hermitian(h2))
    throw ContractViolation("purify_pair: inputs must be Hermitian");
  using namespace pauli_matrix;
  const Eigen::Index d = h1.rows();
  DenseOperator v = DenseOperator::Zero(2 * d, d);
  v.topRows(d).setIdentity();
  return PurifiedPair{h1, h2, kron(I(), h1) + kron(X(), h2), kron(I(), h2) + kron(X(), h1),
                      Projection::from_isometry(std::move(v))};
}

std::pair<PauliSum, PauliSum> purify_pair(const PauliSum& h1, const PauliSum& h2) {
  if (h1.n_qubits() != h2.n_qubits())
    throw DimensionError("purify_pair: h1 and h2 act on different qubit counts");
  if (!h1.is_hermitian() || !h2.is_hermitian())
    throw ContractViolation("purify_pair: inputs must be Hermitian");
  const PauliString id = PauliString::from_letters("I");
  const PauliString x = PauliString::from_letters("X");
  return {h1.tensor_left(id) + h2.tensor_left(x), h2.tensor_left(id) + h1.tensor_left(x)};
}

PurificationReport verify_purification(const PurifiedPair& p) {
  PurificationReport r;
  r.commutator_norm = commutator(p.H1, p.H2).norm();
  r.recovery_error_1 = (p.projection.compress(p.H1) - p.h1).norm();
  r.recovery_error_2 = (p.projection.compress(p.H2) - p.h2).norm();
  return r;
}

ClosureContrast closure_contrast(const PurifiedPair& p, double tol) {
  const DenseOperator originals[] = {p.h1, p.h2};
  const DenseOperator purified[] = {p.H1, p.H2};
  ClosureContrast c;
  c.dim_original = hamiltonian_closure(originals, tol).report.traceless_dimension;
  c.dim_purified = hamiltonian_closure(purified, tol).report.dimension;
  return c;
}

}  // namespace zenolie
