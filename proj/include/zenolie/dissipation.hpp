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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "zenolie/dense.hpp"

namespace zenolie {

struct LindbladModel;
using LindbladObserver = std::function<void(double t, const DenseOperator& rho)>;

/// A validated density matrix: Hermitian and trace one within 1e-10, with
/// no eigenvalue below -1e-10.
class DensityMatrix {
 public:
  static constexpr double kTol = 1e-10;

  /// Throws ContractViolation if any invariant fails.
  explicit DensityMatrix(DenseOperator rho);
  static DensityMatrix pure(const StateVector& psi);

  Eigen::Index dim() const noexcept { return rho_.rows(); }
  const DenseOperator& matrix() const noexcept { return rho_; }
  double min_eigenvalue() const;

 private:
  struct Unchecked {};
  DensityMatrix(DenseOperator rho, Unchecked) : rho_(std::move(rho)) {}

  friend DensityMatrix evolve_lindblad(const LindbladModel&, const DensityMatrix&, double,
                                       std::size_t, const LindbladObserver&);

  DenseOperator rho_;
};

struct JumpOperator {
  DenseOperator op;
  double rate = 0.0;
};

/// Hamiltonian plus jump operators with non-negative rates.
struct LindbladModel {
  DenseOperator hamiltonian;
  std::vector<JumpOperator> jumps;

  Eigen::Index dim() const noexcept { return hamiltonian.rows(); }
  /// Throws ContractViolation when an invariant fails.
  void validate() const;
};

/// -i[H, rho] + sum_k rate_k (L rho L^dagger - {L^dagger L, rho}/2).
DenseOperator lindblad_rhs(const LindbladModel& model, const DenseOperator& rho);

/// Decay of `qubit` from |phi_perp> to |phi> at rate gamma, with an
/// optional coherent part (zero when omitted).
LindbladModel amplitude_damping_model(std::size_t qubit, std::size_t n_qubits, double gamma,
                                      const std::optional<DenseOperator>& h = std::nullopt);

/// Classical fourth-order Runge-Kutta with `steps` equal steps. Throws
/// IntegrationError if the trace drifts by more than 1e-6, the state leaves
/// the unit Frobenius ball (divergence), or the final state has an
/// eigenvalue below -1e-8.
DensityMatrix evolve_lindblad(const LindbladModel& model, const DensityMatrix& rho0, double t,
                              std::size_t steps, const LindbladObserver& observe = {});

/// Closed-form pure damping of `qubit`:
///   (1 - e^{-g t}) |phi><phi| (x) Tr_q rho0
///   + e^{-g t} (P rho0 P + Q rho0 Q) + e^{-g t/2} (P rho0 Q + Q rho0 P).
DensityMatrix analytic_damping_solution(const DensityMatrix& rho0, std::size_t qubit,
                                        double gamma, double t);

struct StrongDampingOptions {
  std::size_t min_steps = 200;
  /// Steps per unit of gamma * t; at least 50.
  double steps_per_rate_time = 50.0;
  /// Steps per unit of ||H||_2 * t, keeping the coherent part resolved.
  double steps_per_norm_time = 200.0;
  std::size_t workers = 0;
};

struct DampingPoint {
  double gamma = 0.0;
  double trace_distance = 0.0;
};

/// Evolves rho0 under damping of `qubit` plus control Hamiltonian h for
/// each rate and reports the trace distance to the ideal Zeno evolution
/// V exp(-i V^dagger h V t) (V^dagger rho0 V) exp(...)^dagger V^dagger.
std::vector<DampingPoint> strong_damping_zeno_check(const DenseOperator& h, std::size_t qubit,
                                                    const DensityMatrix& rho0, double t,
                                                    std::span<const double> gammas,
                                                    const StrongDampingOptions& opts = {});

}  // namespace zenolie
