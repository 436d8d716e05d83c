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

#include "zenolie/dissipation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zenolie/errors.hpp"
#include "zenolie/parallel.hpp"
#include "zenolie/zeno.hpp"

namespace zenolie {

DensityMatrix::DensityMatrix(DenseOperator rho) : rho_(std::move(rho)) {
  if (rho_.rows() < 1 || rho_.rows() != rho_.cols())
    throw ContractViolation("density matrix must be square and non-empty");
  if (!rho_.allFinite()) throw ContractViolation("density matrix has non-finite entries");
  if ((rho_ - rho_.adjoint()).norm() > kTol)
    throw ContractViolation("density matrix is not Hermitian");
  if (std::abs(rho_.trace() - 1.0) > kTol)
    throw ContractViolation("density matrix trace is not one");
  if (min_eigenvalue() < -kTol)
    throw ContractViolation("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  const double n = psi.norm();
  if (std::abs(n - 1.0) > 1e-12) throw ContractViolation("state vector is not normalized");
  return DensityMatrix(psi * psi.adjoint());
}

double DensityMatrix::min_eigenvalue() const {
  const DenseOperator herm = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

void LindbladModel::validate() const {
  const Eigen::Index d = hamiltonian.rows();
  if (d < 1 || hamiltonian.cols() != d) throw ContractViolation("Hamiltonian must be square");
  if (!hamiltonian.allFinite() || !is_hermitian(hamiltonian))
    throw ContractViolation("Hamiltonian must be finite and Hermitian");
  for (const auto& j : jumps) {
    if (j.op.rows() != d || j.op.cols() != d)
      throw DimensionError("jump operator dimension differs from the Hamiltonian");
    if (!j.op.allFinite()) throw ContractViolation("jump operator has non-finite entries");
    if (!(j.rate >= 0.0) || !std::isfinite(j.rate))
      throw ContractViolation("jump rates must be finite and non-negative");
  }
}

DenseOperator lindblad_rhs(const LindbladModel& model, const DenseOperator& rho) {
  const cplx minus_i(0.0, -1.0);
  DenseOperator out = minus_i * (model.hamiltonian * rho - rho * model.hamiltonian);
  for (const auto& j : model.jumps) {
    if (j.rate == 0.0) continue;
    const DenseOperator ldl = j.op.adjoint() * j.op;
    out += j.rate * (j.op * rho * j.op.adjoint() - 0.5 * (ldl * rho + rho * ldl));
  }
  return out;
}

LindbladModel amplitude_damping_model(std::size_t qubit, std::size_t n_qubits, double gamma,
                                      const std::optional<DenseOperator>& h) {
  if (!(gamma >= 0.0)) throw ContractViolation("damping rate must be non-negative");
  if (n_qubits < 1 || n_qubits > kDefaultDenseQubitCap)
    throw ContractViolation("qubit count out of range");
  if (qubit < 1 || qubit > n_qubits)
    throw ContractViolation("qubit index " + std::to_string(qubit) + " out of range");
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  const DenseOperator lowering = phi_state() * phi_perp_state().adjoint();
  LindbladModel m;
  m.hamiltonian = h ? *h : DenseOperator::Zero(d, d);
  m.jumps.push_back(
      {embed_on_qubit(lowering, DenseOperator::Identity(d / 2, d / 2), qubit, n_qubits), gamma});
  m.validate();
  return m;
}

DensityMatrix evolve_lindblad(const LindbladModel& model, const DensityMatrix& rho0, double t,
                              std::size_t steps, const LindbladObserver& observe) {
  model.validate();
  if (steps < 1) throw ContractViolation("evolve_lindblad: steps must be at least 1");
  if (rho0.dim() != model.dim()) throw DimensionError("initial state dimension mismatch");

  const double h = t / static_cast<double>(steps);
  DenseOperator rho = rho0.matrix();
  if (observe) observe(0.0, rho);
  for (std::size_t s = 0; s < steps; ++s) {
    const DenseOperator k1 = lindblad_rhs(model, rho);
    const DenseOperator k2 = lindblad_rhs(model, rho + (0.5 * h) * k1);
    const DenseOperator k3 = lindblad_rhs(model, rho + (0.5 * h) * k2);
    const DenseOperator k4 = lindblad_rhs(model, rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!rho.allFinite() || std::abs(rho.trace() - 1.0) > 1e-6 || rho.norm() > 1.0 + 1e-6)
      throw IntegrationError("master equation integration diverged at step " +
                             std::to_string(s + 1) + " of " + std::to_string(steps) +
                             "; increase the step count");
    if (observe) observe(h * static_cast<double>(s + 1), rho);
  }
  // Roundoff leaves an anti-Hermitian residue of order 1e-16 per step.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  DensityMatrix out(std::move(rho), DensityMatrix::Unchecked{});
  if (const double e = out.min_eigenvalue(); e < -1e-8)
    throw IntegrationError("evolved state has eigenvalue " + std::to_string(e) +
                           "; increase the step count");
  return out;
}

DensityMatrix analytic_damping_solution(const DensityMatrix& rho0, std::size_t qubit,
                                        double gamma, double t) {
  const std::size_t n = qubit_count_of(rho0.dim());
  const Eigen::Index d = rho0.dim();
  const StateVector phi = phi_state();
  const DenseOperator phi_proj = phi * phi.adjoint();
  const DenseOperator p = embed_on_qubit(phi_proj, DenseOperator::Identity(d / 2, d / 2), qubit, n);
  const DenseOperator q = DenseOperator::Identity(d, d) - p;
  const DenseOperator& r = rho0.matrix();

  const double decay = std::exp(-gamma * t);
  const double half = std::exp(-0.5 * gamma * t);
  DenseOperator out = (1.0 - decay) * embed_on_qubit(phi_proj, partial_trace_qubit(r, qubit, n),
                                                     qubit, n) +
                      decay * (p * r * p + q * r * q) + half * (p * r * q + q * r * p);
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(std::move(out));
}

std::vector<DampingPoint> strong_damping_zeno_check(const DenseOperator& h, std::size_t qubit,
                                                    const DensityMatrix& rho0, double t,
                                                    std::span<const double> gammas,
                                                    const StrongDampingOptions& opts) {
  if (opts.steps_per_rate_time < 50.0)
    throw ContractViolation("strong damping needs at least 50 steps per unit gamma * t");
  const std::size_t n = qubit_count_of(rho0.dim());
  const Projection p = make_phi_projector(qubit, n);
  const DenseOperator u = propagator(p.compress(h), t);
  const DenseOperator ideal = p.expand(u * p.compress(rho0.matrix()) * u.adjoint());

  const double h_norm = spectral_norm(h);
  std::vector<DampingPoint> out(gammas.size());
  detail::parallel_for(
      gammas.size(),
      [&](std::size_t i) {
        const double g = gammas[i];
        const auto steps = std::max({opts.min_steps,
                                     static_cast<std::size_t>(std::ceil(
                                         opts.steps_per_rate_time * g * std::abs(t))),
                                     static_cast<std::size_t>(std::ceil(
                                         opts.steps_per_norm_time * h_norm * std::abs(t)))});
        const auto model = amplitude_damping_model(qubit, n, g, h);
        const auto rho = evolve_lindblad(model, rho0, t, steps);
        out[i] = {g, trace_distance(rho.matrix(), ideal)};
      },
      opts.workers);
  return out;
}

}  // namespace zenolie
