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

#include "zenolie/paper_suite.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "json.hpp"
#include "zenolie/dissipation.hpp"
#include "zenolie/models.hpp"
#include "zenolie/purification.hpp"
#include "zenolie/zeno.hpp"

namespace zenolie {

namespace {

struct Dims {
  ClosureReport naked;
  ClosureReport zeno;
};

Dims model_dimensions(const ModelSpec& m, double tol) {
  const auto hs = m.dense_hamiltonians();
  const auto sys = make_zeno_system(hs, m.projection());
  return {hamiltonian_closure(hs, tol).report,
          hamiltonian_closure(sys.compressed_hamiltonians, tol).report};
}

CheckResult dims_check(const std::string& name, const ModelSpec& m, double tol) {
  const Dims d = model_dimensions(m, tol);
  CheckResult r;
  r.name = name;
  r.measured.set("naked_dim", d.naked.dimension)
      .set("zeno_traceless_dim", d.zeno.traceless_dimension)
      .set("zeno_dim", d.zeno.dimension);
  r.expectation = "naked " + std::to_string(m.expected_naked_dim) + ", zeno traceless " +
                  std::to_string(m.expected_zeno_dim);
  r.passed = d.naked.dimension == m.expected_naked_dim &&
             d.zeno.traceless_dimension == m.expected_zeno_dim;
  return r;
}

}  // namespace

bool SuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string SuiteReport::to_text() const {
  std::string out;
  for (const auto& c : checks) {
    out += c.passed ? "PASS " : "FAIL ";
    out += c.name;
    for (const auto& [k, v] : c.measured.fields()) out += " " + k + "=" + render_value(v);
    out += " (expect " + c.expectation + ")\n";
  }
  out += all_passed() ? "ALL PASS\n" : "SUITE FAILED\n";
  return out;
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["all_passed"] = all_passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["passed"] = c.passed;
    item["expectation"] = c.expectation;
    item["measured"] = nlohmann::ordered_json::parse(c.measured.to_json());
    j["checks"].push_back(std::move(item));
  }
  return j.dump(2) + "\n";
}

CheckResult check_intro_dimensions(double tol) {
  const ModelSpec m = intro_example();
  const Dims d = model_dimensions(m, tol);
  CheckResult r;
  r.name = "intro_dimensions";
  r.measured.set("naked_dim", d.naked.dimension).set("zeno_dim", d.zeno.dimension);
  r.expectation = "naked 2, zeno 3";
  r.passed = d.naked.dimension == 2 && d.zeno.dimension == 3;
  return r;
}

CheckResult check_commutator_identity() {
  const auto id = intro_commutator_identity();
  CheckResult r;
  r.name = "commutator_identity";
  r.measured.set("residual", Record::Value(id.residual));
  r.expectation = "||[Hbar1,Hbar2] - 2i P1 Y2/3||_F <= 1e-12";
  r.passed = id.residual <= 1e-12;
  return r;
}

CheckResult check_commutator_identity_sign_corrected() {
  const auto id = intro_commutator_identity();
  CheckResult r;
  r.name = "commutator_identity_sign_corrected";
  r.measured.set("residual", Record::Value(id.residual_opposite_sign))
      .set("compressed_residual", Record::Value(id.compressed_residual));
  r.expectation = "||[Hbar1,Hbar2] + 2i P1 Y2/3||_F <= 1e-12";
  r.passed = id.residual_opposite_sign <= 1e-12 && id.compressed_residual <= 1e-12;
  return r;
}

CheckResult check_example_a_dimensions(std::size_t n, double tol) {
  return dims_check("example_a_n" + std::to_string(n), example_a(n), tol);
}

CheckResult check_example_b_dimensions(std::size_t n, double tol) {
  return dims_check("example_b_n" + std::to_string(n), example_b(n), tol);
}

CheckResult check_purification(std::uint64_t seed, double tol) {
  double worst_comm = 0.0;
  double worst_recovery = 0.0;
  std::uint64_t k = 0;
  for (Eigen::Index d : {2, 4, 8})
    for (int i = 0; i < 100; ++i, ++k) {
      const auto p = purify_pair(random_hermitian(d, trial_seed(seed, 2 * k)),
                                 random_hermitian(d, trial_seed(seed, 2 * k + 1)));
      const auto rep = verify_purification(p);
      worst_comm = std::max(worst_comm, rep.commutator_norm);
      worst_recovery = std::max({worst_recovery, rep.recovery_error_1, rep.recovery_error_2});
    }
  const auto contrast =
      closure_contrast(purify_pair(pauli_matrix::X(), pauli_matrix::Z()), tol);
  CheckResult r;
  r.name = "purification";
  r.measured.set("max_commutator", Record::Value(worst_comm))
      .set("max_recovery", Record::Value(worst_recovery))
      .set("dim_original", contrast.dim_original)
      .set("dim_purified", contrast.dim_purified);
  r.expectation = "commutator <= 1e-11, recovery <= 1e-12, contrast (3, 2)";
  r.passed = worst_comm <= 1e-11 && worst_recovery <= 1e-12 && contrast.dim_original == 3 &&
             contrast.dim_purified == 2;
  return r;
}

CheckResult check_zeno_convergence() {
  const ModelSpec m = example_a(3);
  const DenseOperator h = to_dense(m.hamiltonians[1]);
  const std::array<std::size_t, 6> ms{8, 16, 32, 64, 128, 256};
  const auto pts = zeno_convergence(h, m.projection(), 1.0, ms);
  bool decreasing = true;
  for (std::size_t i = 1; i < pts.size(); ++i) decreasing &= pts[i].error < pts[i - 1].error;
  const double ratio = pts[4].error / pts[5].error;
  CheckResult r;
  r.name = "zeno_convergence";
  r.measured.set("error_8", Record::Value(pts[0].error))
      .set("error_256", Record::Value(pts[5].error))
      .set("ratio_128_256", Record::Value(ratio))
      .set("strictly_decreasing", Record::Value(decreasing));
  r.expectation = "strictly decreasing, ratio in [1.5, 2.5]";
  r.passed = decreasing && ratio >= 1.5 && ratio <= 2.5;
  return r;
}

CheckResult check_damping_vs_analytic(std::uint64_t seed) {
  const DensityMatrix rho0(random_density_matrix(4, trial_seed(seed, 7)));
  double worst = 0.0;
  for (double g : {0.5, 1.0, 3.0})
    for (double t : {0.1, 1.0, 5.0}) {
      const auto num = evolve_lindblad(amplitude_damping_model(1, 2, g), rho0, t, 2000);
      const auto exact = analytic_damping_solution(rho0, 1, g, t);
      worst = std::max(worst, (num.matrix() - exact.matrix()).cwiseAbs().maxCoeff());
    }
  const StateVector phi = phi_state();
  const DenseOperator limit =
      embed_on_qubit(phi * phi.adjoint(), partial_trace_qubit(rho0.matrix(), 1, 2), 1, 2);
  const auto late = evolve_lindblad(amplitude_damping_model(1, 2, 1.0), rho0, 20.0, 2000);
  const double dist = trace_distance(late.matrix(), limit);
  CheckResult r;
  r.name = "damping_vs_analytic";
  r.measured.set("max_entry_deviation", Record::Value(worst))
      .set("late_trace_distance", Record::Value(dist));
  r.expectation = "deviation <= 1e-6, distance at gamma t = 20 <= 1e-4";
  r.passed = worst <= 1e-6 && dist <= 1e-4;
  return r;
}

CheckResult check_strong_damping(std::size_t workers) {
  const ModelSpec m = example_a(3);
  const DenseOperator h = to_dense(m.hamiltonians[1]);
  // |phi> on qubit 1, |0>|1> on qubits 2 and 3.
  StateVector rest = StateVector::Zero(4);
  rest(1) = 1.0;
  const StateVector psi = kron(phi_state(), rest);
  const std::array<double, 5> gammas{0.0, 20.0, 50.0, 100.0, 200.0};
  StrongDampingOptions opts;
  opts.workers = workers;
  const auto pts = strong_damping_zeno_check(h, 1, DensityMatrix::pure(psi), 1.0, gammas, opts);
  bool monotone = true;
  for (std::size_t i = 2; i < pts.size(); ++i)
    monotone &= pts[i].trace_distance <= 1.1 * pts[i - 1].trace_distance;
  CheckResult r;
  r.name = "strong_damping";
  r.measured.set("distance_gamma0", Record::Value(pts[0].trace_distance))
      .set("distance_gamma20", Record::Value(pts[1].trace_distance))
      .set("distance_gamma200", Record::Value(pts[4].trace_distance))
      .set("ladder_monotone", Record::Value(monotone));
  r.expectation = "distance(200) < distance(20), ladder non-increasing within 10%";
  r.passed = monotone && pts[4].trace_distance < pts[1].trace_distance;
  return r;
}

CheckResult check_genericity(std::size_t trials, std::uint64_t seed, double tol,
                             std::size_t workers) {
  GenericityOptions opts;
  opts.workers = workers;
  const auto s = genericity_sweep(3, trials, seed, tol, opts);
  const std::size_t needed = trials - trials / 25;  // 48 of 50
  CheckResult r;
  r.name = "genericity";
  r.measured.set("full_count", s.full_count)
      .set("total", s.total)
      .set("min_smallest_singular_value", Record::Value(s.min_smallest_singular_value))
      .set("min_accepted_residual", Record::Value(s.min_accepted_residual));
  r.expectation = ">= " + std::to_string(needed) + "/" + std::to_string(trials) +
                  " reach traceless dim 15";
  r.passed = s.full_count >= needed;
  return r;
}

SuiteReport run_paper_suite(const SuiteConfig& config) {
  SuiteReport rep;
  rep.checks.push_back(check_intro_dimensions(config.tol));
  rep.checks.push_back(check_commutator_identity());
  rep.checks.push_back(check_commutator_identity_sign_corrected());
  rep.checks.push_back(check_example_a_dimensions(3, config.tol));
  rep.checks.push_back(check_example_a_dimensions(4, config.tol));
  rep.checks.push_back(check_example_b_dimensions(5, config.tol));
  rep.checks.push_back(check_purification(config.seed, config.tol));
  rep.checks.push_back(check_zeno_convergence());
  rep.checks.push_back(check_damping_vs_analytic(config.seed));
  rep.checks.push_back(check_strong_damping(config.workers));
  rep.checks.push_back(
      check_genericity(config.genericity_trials, config.seed, config.tol, config.workers));
  return rep;
}

}  // namespace zenolie
