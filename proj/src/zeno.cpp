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

#include "zenolie/zeno.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "zenolie/errors.hpp"

namespace zenolie {

namespace {

constexpr double kProjTol = 1e-12;

StateVector fix_gauge(StateVector v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = std::abs(v(i));
      break;
    }
  }
  return v;
}

DenseOperator phi_eigenvectors() {
  using namespace pauli_matrix;
  const DenseOperator m = (X() + Y() + Z()) / std::sqrt(3.0);
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(m);
  return es.eigenvectors();  // ascending: column 0 is -1, column 1 is +1
}

DenseOperator matrix_power(const DenseOperator& a, std::size_t m) {
  DenseOperator result = DenseOperator::Identity(a.rows(), a.cols());
  DenseOperator base = a;
  for (std::size_t e = m; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

bool is_identity_factor(const DenseOperator& f) {
  return f.cols() == f.rows() && (f - DenseOperator::Identity(f.rows(), f.cols())).norm() == 0.0;
}

}  // namespace

Projection Projection::from_isometry(DenseOperator isometry) {
  if (isometry.rows() < 1 || isometry.cols() < 1 || isometry.cols() > isometry.rows())
    throw ContractViolation("isometry must be d x r with 1 <= r <= d");
  const Eigen::Index r = isometry.cols();
  const double err = (isometry.adjoint() * isometry - DenseOperator::Identity(r, r)).norm();
  if (!(err <= kProjTol))
    throw ContractViolation("isometry columns are not orthonormal (error " +
                            std::to_string(err) + ")");
  return Projection(std::move(isometry), std::nullopt);
}

Projection Projection::from_qubit_factors(std::vector<DenseOperator> factors) {
  if (factors.empty()) throw ContractViolation("no qubit factors");
  DenseOperator v = DenseOperator::Identity(1, 1);
  for (const auto& f : factors) {
    if (f.rows() != 2 || f.cols() < 1 || f.cols() > 2)
      throw ContractViolation("qubit factor must be 2x1 or 2x2");
    v = kron(v, f);
  }
  Projection p = from_isometry(std::move(v));
  p.factors_ = std::move(factors);
  return p;
}

Projection Projection::identity(std::size_t n_qubits) {
  if (n_qubits < 1) throw ContractViolation("identity projection needs at least one qubit");
  return from_qubit_factors(std::vector<DenseOperator>(n_qubits, pauli_matrix::I()));
}

DenseOperator Projection::compress(const DenseOperator& a) const {
  if (a.rows() != dim() || a.cols() != dim())
    throw DimensionError("compress: operator is " + std::to_string(a.rows()) +
                         "-dimensional, projection acts on " + std::to_string(dim()));
  return v_.adjoint() * a * v_;
}

DenseOperator Projection::expand(const DenseOperator& b) const {
  if (b.rows() != rank() || b.cols() != rank())
    throw DimensionError("expand: operator does not match the projection rank");
  return v_ * b * v_.adjoint();
}

StateVector phi_state() { return fix_gauge(phi_eigenvectors().col(1)); }

StateVector phi_perp_state() { return fix_gauge(phi_eigenvectors().col(0)); }

Projection make_phi_projector(std::size_t qubit, std::size_t n_qubits) {
  if (n_qubits < 1 || n_qubits > kDefaultDenseQubitCap)
    throw ContractViolation("qubit count out of range");
  if (qubit < 1 || qubit > n_qubits)
    throw ContractViolation("qubit index " + std::to_string(qubit) + " out of range 1.." +
                            std::to_string(n_qubits));
  std::vector<DenseOperator> factors(n_qubits, pauli_matrix::I());
  factors[qubit - 1] = phi_state();
  return Projection::from_qubit_factors(std::move(factors));
}

Projection product_projector(std::span<const Projection> ps) {
  if (ps.empty()) throw ContractViolation("product_projector: empty list");
  const Eigen::Index d = ps.front().dim();
  for (const auto& p : ps)
    if (p.dim() != d) throw DimensionError("product_projector: projections on different spaces");

  std::optional<std::vector<DenseOperator>> acc;
  const Projection* generic = nullptr;
  for (const auto& p : ps) {
    if (!p.qubit_factors()) {
      if (p.rank() == d) continue;  // identity
      if (generic) throw ContractViolation("product of two non-local projections");
      generic = &p;
      continue;
    }
    const auto& f = *p.qubit_factors();
    if (!acc) {
      acc = f;
      continue;
    }
    for (std::size_t q = 0; q < f.size(); ++q) {
      if (is_identity_factor(f[q])) continue;
      auto& cur = (*acc)[q];
      if (is_identity_factor(cur)) {
        cur = f[q];
      } else if ((cur * cur.adjoint() - f[q] * f[q].adjoint()).norm() > kProjTol) {
        throw ContractViolation("projections overlap on qubit " + std::to_string(q + 1));
      }
    }
  }
  if (generic) {
    if (acc && std::any_of(acc->begin(), acc->end(),
                           [](const DenseOperator& f) { return !is_identity_factor(f); }))
      throw ContractViolation("cannot combine a non-local projection with a qubit projection");
    return *generic;
  }
  if (!acc) return ps.front();
  return Projection::from_qubit_factors(std::move(*acc));
}

Projection parse_projection_spec(std::string_view spec, std::size_t n_qubits) {
  if (spec == "identity" || spec == "none") return Projection::identity(n_qubits);
  std::vector<Projection> parts;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t star = spec.find('*', pos);
    const std::string_view item =
        spec.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
    if (!item.starts_with("phi:"))
      throw ParseError("projector term must look like phi:<qubit>, got '" +
                           std::string(item) + "'",
                       1);
    const std::string_view num = item.substr(4);
    std::size_t q = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), q);
    if (ec != std::errc{} || ptr != num.data() + num.size() || num.empty())
      throw ParseError("bad qubit index in '" + std::string(item) + "'", 1);
    if (q < 1 || q > n_qubits)
      throw ParseError("qubit index out of range in '" + std::string(item) + "'", 1);
    parts.push_back(make_phi_projector(q, n_qubits));
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return product_projector(parts);
}

ZenoHamiltonian zeno_hamiltonian(const DenseOperator& h, const Projection& p) {
  if (h.rows() != p.dim() || h.cols() != p.dim())
    throw DimensionError("zeno_hamiltonian: Hamiltonian and projection dimensions differ");
  if (!is_hermitian(h)) throw ContractViolation("zeno_hamiltonian: H is not Hermitian");
  ZenoHamiltonian out;
  out.compressed = p.compress(h);
  out.full = p.expand(out.compressed);
  return out;
}

ZenoSystem make_zeno_system(std::vector<DenseOperator> hamiltonians, Projection p) {
  ZenoSystem sys{std::move(hamiltonians), std::move(p), {}, {}};
  for (const auto& h : sys.full_hamiltonians) {
    auto z = zeno_hamiltonian(h, sys.projection);
    sys.zeno_hamiltonians.push_back(std::move(z.full));
    sys.compressed_hamiltonians.push_back(std::move(z.compressed));
  }
  return sys;
}

CommutatorIdentity intro_commutator_identity() {
  using namespace pauli_matrix;
  const Projection p1 = make_phi_projector(1, 2);
  const DenseOperator h1 = kron(X(), X());
  const DenseOperator h2 = kron(Z(), Z());
  const auto z1 = zeno_hamiltonian(h1, p1);
  const auto z2 = zeno_hamiltonian(h2, p1);
  const DenseOperator comm = commutator(z1.full, z2.full);
  const DenseOperator p1y2 = p1.projector() * kron(I(), Y());
  const cplx two_i_third(0.0, 2.0 / 3.0);

  CommutatorIdentity out;
  out.residual = (comm - two_i_third * p1y2).norm();
  out.residual_opposite_sign = (comm + two_i_third * p1y2).norm();
  out.compressed_residual =
      (commutator(z1.compressed, z2.compressed) + two_i_third * Y()).norm();
  return out;
}

HermitianSpectrum::HermitianSpectrum(const DenseOperator& h) {
  if (!is_hermitian(h)) throw ContractViolation("propagator: H is not Hermitian");
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(h);
  values_ = es.eigenvalues();
  vectors_ = es.eigenvectors();
}

DenseOperator HermitianSpectrum::propagator(double t) const {
  const Eigen::VectorXcd phases =
      (values_.cast<cplx>() * cplx(0.0, -t)).array().exp().matrix();
  return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

DenseOperator propagator(const DenseOperator& h, double t) {
  return HermitianSpectrum(h).propagator(t);
}

DenseOperator zeno_product(const DenseOperator& h, const Projection& p, double t,
                           std::size_t m) {
  if (m < 1) throw ContractViolation("zeno_product: m must be at least 1");
  // V^dagger (V V^dagger U)^m V collapses to (V^dagger U V)^m.
  return matrix_power(p.compress(propagator(h, t / static_cast<double>(m))), m);
}

std::vector<ConvergencePoint> zeno_convergence(const DenseOperator& h, const Projection& p,
                                               double t, std::span<const std::size_t> ms) {
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms[i] < 1) throw ContractViolation("zeno_convergence: m must be at least 1");
    if (i > 0 && ms[i] <= ms[i - 1])
      throw ContractViolation("zeno_convergence: ms must be strictly increasing");
  }
  const DenseOperator target = propagator(zeno_hamiltonian(h, p).compressed, t);
  const HermitianSpectrum spec(h);
  std::vector<ConvergencePoint> out;
  out.reserve(ms.size());
  for (std::size_t m : ms) {
    const DenseOperator w =
        matrix_power(p.compress(spec.propagator(t / static_cast<double>(m))), m);
    out.push_back({m, spectral_norm(w - target),
                   w.squaredNorm() / static_cast<double>(p.rank())});
  }
  return out;
}

}  // namespace zenolie
