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

#include "zenolie/dense.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "zenolie/errors.hpp"

namespace zenolie {

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw SizeLimitError("dense expansion of " + std::to_string(n) +
                         " qubits exceeds the cap of " + std::to_string(cap));
}

// Adds c * P for a phase-free string P = i^{|x&z|} X^x Z^z, using
// X^x Z^z |b> = (-1)^{|z&b|} |b ^ x>.
void accumulate(DenseOperator& m, const PauliString& s, cplx c) {
  const std::uint64_t x = s.x_mask();
  const std::uint64_t z = s.z_mask();
  static constexpr cplx kTurns[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx base = c * kTurns[std::popcount(x & z) & 3];
  const std::uint64_t dim = std::uint64_t{1} << s.n_qubits();
  for (std::uint64_t b = 0; b < dim; ++b) {
    const bool odd = std::popcount(z & b) & 1;
    m(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b)) += odd ? -base : base;
  }
}

}  // namespace

DenseOperator to_dense(const PauliSum& op, std::size_t max_qubits) {
  check_cap(op.n_qubits(), max_qubits);
  const Eigen::Index d = Eigen::Index{1} << op.n_qubits();
  DenseOperator m = DenseOperator::Zero(d, d);
  for (const auto& [s, c] : op.terms()) accumulate(m, s, c);
  return m;
}

DenseOperator to_dense(const PauliTerm& t, std::size_t max_qubits) {
  check_cap(t.n_qubits(), max_qubits);
  const Eigen::Index d = Eigen::Index{1} << t.n_qubits();
  DenseOperator m = DenseOperator::Zero(d, d);
  accumulate(m, t.string(), t.phase());
  return m;
}

double hs_inner(const DenseOperator& a, const DenseOperator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("hs_inner: operand shapes differ");
  return (a.array().conjugate() * b.array()).real().sum();
}

Eigen::VectorXd vectorize(const DenseOperator& a) {
  const Eigen::Index n = a.size();
  Eigen::VectorXd v(2 * n);
  // Eigen storage is column-major, so the flat view is the column stack.
  const Eigen::Map<const Eigen::VectorXcd> flat(a.data(), n);
  v.head(n) = flat.real();
  v.tail(n) = flat.imag();
  return v;
}

DenseOperator unvectorize(const Eigen::Ref<const Eigen::VectorXd>& v, Eigen::Index d) {
  const Eigen::Index n = d * d;
  if (v.size() != 2 * n) throw DimensionError("unvectorize: length is not 2 d^2");
  DenseOperator a(d, d);
  Eigen::Map<Eigen::VectorXcd> flat(a.data(), n);
  flat.real() = v.head(n);
  flat.imag() = v.tail(n);
  return a;
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

bool is_hermitian(const DenseOperator& a, double rel_tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).norm() <= rel_tol * std::max(1.0, a.norm());
}

bool is_anti_hermitian(const DenseOperator& a, double rel_tol) {
  if (a.rows() != a.cols()) return false;
  return (a + a.adjoint()).norm() <= rel_tol * std::max(1.0, a.norm());
}

bool all_finite(const DenseOperator& a) { return a.allFinite(); }

double spectral_norm(const DenseOperator& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<DenseOperator> svd(a);
  return svd.singularValues()(0);
}

double trace_distance(const DenseOperator& a, const DenseOperator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("trace_distance: operand shapes differ");
  Eigen::JacobiSVD<DenseOperator> svd(a - b);
  return 0.5 * svd.singularValues().sum();
}

namespace {

// Splits a full index into (bit of `qubit`, index over the other qubits).
struct SlotMap {
  std::size_t shift;  // bit position of the qubit
  std::uint64_t split(std::uint64_t b, int& bit) const {
    bit = static_cast<int>((b >> shift) & 1);
    const std::uint64_t low = b & ((std::uint64_t{1} << shift) - 1);
    return ((b >> (shift + 1)) << shift) | low;
  }
  std::uint64_t join(int bit, std::uint64_t rest) const {
    const std::uint64_t low = rest & ((std::uint64_t{1} << shift) - 1);
    return ((rest >> shift) << (shift + 1)) | (std::uint64_t(bit) << shift) | low;
  }
};

SlotMap slot_for(const DenseOperator& a, std::size_t qubit, std::size_t n_qubits) {
  if (a.rows() != a.cols() || a.rows() != (Eigen::Index{1} << n_qubits))
    throw DimensionError("operator is not on " + std::to_string(n_qubits) + " qubits");
  if (qubit < 1 || qubit > n_qubits)
    throw ContractViolation("qubit index " + std::to_string(qubit) + " out of range");
  return SlotMap{n_qubits - qubit};
}

}  // namespace

std::size_t qubit_count_of(Eigen::Index dim) {
  if (dim < 1 || (dim & (dim - 1)) != 0)
    throw DimensionError("dimension " + std::to_string(dim) + " is not a power of two");
  return static_cast<std::size_t>(std::countr_zero(static_cast<std::uint64_t>(dim)));
}

DenseOperator partial_trace_qubit(const DenseOperator& a, std::size_t qubit,
                                  std::size_t n_qubits) {
  const SlotMap slot = slot_for(a, qubit, n_qubits);
  const Eigen::Index r = a.rows() / 2;
  DenseOperator out = DenseOperator::Zero(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j)
      for (int k = 0; k < 2; ++k)
        out(i, j) += a(static_cast<Eigen::Index>(slot.join(k, i)),
                       static_cast<Eigen::Index>(slot.join(k, j)));
  return out;
}

DenseOperator reduced_qubit_operator(const DenseOperator& a, std::size_t qubit,
                                     std::size_t n_qubits) {
  const SlotMap slot = slot_for(a, qubit, n_qubits);
  DenseOperator out = DenseOperator::Zero(2, 2);
  const Eigen::Index r = a.rows() / 2;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      for (Eigen::Index i = 0; i < r; ++i)
        out(k, l) += a(static_cast<Eigen::Index>(slot.join(k, i)),
                       static_cast<Eigen::Index>(slot.join(l, i)));
  return out;
}

DenseOperator embed_on_qubit(const DenseOperator& single, const DenseOperator& rest,
                             std::size_t qubit, std::size_t n_qubits) {
  if (single.rows() != 2 || single.cols() != 2) throw DimensionError("single must be 2 x 2");
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  if (rest.rows() != d / 2 || rest.cols() != d / 2)
    throw DimensionError("rest has the wrong dimension");
  const SlotMap slot = slot_for(DenseOperator::Zero(d, d), qubit, n_qubits);
  DenseOperator out(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      int bi = 0;
      int bj = 0;
      const auto ri = static_cast<Eigen::Index>(slot.split(static_cast<std::uint64_t>(i), bi));
      const auto rj = static_cast<Eigen::Index>(slot.split(static_cast<std::uint64_t>(j), bj));
      out(i, j) = single(bi, bj) * rest(ri, rj);
    }
  return out;
}

namespace pauli_matrix {
DenseOperator I() { return DenseOperator::Identity(2, 2); }
DenseOperator X() {
  DenseOperator m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
DenseOperator Y() {
  DenseOperator m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}
DenseOperator Z() {
  DenseOperator m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli_matrix

}  // namespace zenolie
