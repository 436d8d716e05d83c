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

// Acceptance suite: one PASS/FAIL line per criterion.

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <random>

#include "test_util.hpp"
#include "zenolie/dense.hpp"
#include "zenolie/dissipation.hpp"
#include "zenolie/lie.hpp"
#include "zenolie/models.hpp"
#include "zenolie/pauli.hpp"
#include "zenolie/purification.hpp"
#include "zenolie/report.hpp"
#include "zenolie/zeno.hpp"

namespace zenolie {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void note(const std::string& s) { std::cout << "    " << s << "\n"; }

// Projector onto the +1 eigenvector of (X + Y + Z)/sqrt3, built from scratch.
DenseOperator oracle_phi_projector() {
  const DenseOperator n = (testing::letter_matrix('X') + testing::letter_matrix('Y') +
                           testing::letter_matrix('Z')) /
                          std::sqrt(3.0);
  return 0.5 * (DenseOperator::Identity(2, 2) + n);
}

struct ModelDims {
  std::size_t naked = 0;
  std::size_t zeno = 0;
  std::size_t zeno_traceless = 0;
};

ModelDims model_dims(const ModelSpec& m) {
  const auto hs = m.dense_hamiltonians();
  const auto sys = make_zeno_system(hs, m.projection());
  const auto naked = hamiltonian_closure(hs, 1e-10).report;
  const auto zeno = hamiltonian_closure(sys.compressed_hamiltonians, 1e-10).report;
  return {naked.dimension, zeno.dimension, zeno.traceless_dimension};
}

TEST(Acceptance, AC01_IntroDimensions) {
  const auto start = Clock::now();
  const ModelDims d = model_dims(intro_example());
  const double secs = seconds_since(start);
  note("naked=" + std::to_string(d.naked) + " zeno=" + std::to_string(d.zeno) +
       " seconds=" + format_number(secs));
  EXPECT_EQ(d.naked, 2u);
  EXPECT_EQ(d.zeno, 3u);
  EXPECT_LT(secs, 1.0);
}

TEST(Acceptance, AC02_CommutatorIdentity) {
  const DenseOperator p1 = kron(oracle_phi_projector(), DenseOperator::Identity(2, 2));
  const DenseOperator h1 = p1 * testing::kron_letters("XX") * p1;
  const DenseOperator h2 = p1 * testing::kron_letters("ZZ") * p1;
  const DenseOperator comm = h1 * h2 - h2 * h1;
  const DenseOperator rhs = cplx(0.0, 2.0 / 3.0) * p1 * testing::kron_letters("IY");
  const double residual = (comm - rhs).norm();
  const double flipped = (comm + rhs).norm();
  note("residual=" + format_number(residual) +
       " residual_with_opposite_sign=" + format_number(flipped));
  // The library's own evaluation must agree with this oracle.
  const auto lib = intro_commutator_identity();
  EXPECT_NEAR(lib.residual, residual, 1e-12);
  EXPECT_NEAR(lib.residual_opposite_sign, flipped, 1e-12);
  EXPECT_LE(residual, 1e-12);
}

TEST(Acceptance, AC03_ExampleA) {
  for (std::size_t n : {3u, 4u}) {
    const auto start = Clock::now();
    const ModelDims d = model_dims(example_a(n));
    const double secs = seconds_since(start);
    note("n=" + std::to_string(n) + " naked=" + std::to_string(d.naked) +
         " zeno_traceless=" + std::to_string(d.zeno_traceless) +
         " seconds=" + format_number(secs));
    EXPECT_EQ(d.naked, 2u);
    EXPECT_EQ(d.zeno_traceless, n == 3 ? 15u : 63u);
    if (n == 4) EXPECT_LT(secs, 30.0);
  }
}

TEST(Acceptance, AC04_ExampleB) {
  const auto start = Clock::now();
  const ModelDims d = model_dims(example_b(5));
  const double secs = seconds_since(start);
  note("naked=" + std::to_string(d.naked) + " zeno_traceless=" +
       std::to_string(d.zeno_traceless) + " seconds=" + format_number(secs));
  EXPECT_EQ(d.naked, 3u);
  EXPECT_EQ(d.zeno_traceless, 63u);
  EXPECT_LT(secs, 120.0);
}

TEST(Acceptance, AC05_Purification) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  auto gue = [&](Eigen::Index d) {
    DenseOperator a(d, d);
    for (Eigen::Index i = 0; i < d * d; ++i) a(i) = cplx(normal(rng), normal(rng));
    return DenseOperator(0.5 * (a + a.adjoint()));
  };
  double worst_comm = 0.0;
  double worst_recovery = 0.0;
  for (Eigen::Index d : {2, 4, 8})
    for (int k = 0; k < 100; ++k) {
      const DenseOperator h1 = gue(d);
      const DenseOperator h2 = gue(d);
      const auto p = purify_pair(h1, h2);
      worst_comm = std::max(worst_comm, (p.H1 * p.H2 - p.H2 * p.H1).norm());
      worst_recovery = std::max({worst_recovery, (p.H1.topLeftCorner(d, d) - h1).norm(),
                                 (p.H2.topLeftCorner(d, d) - h2).norm()});
    }
  const auto c = closure_contrast(purify_pair(pauli_matrix::X(), pauli_matrix::Z()));
  note("max_commutator=" + format_number(worst_comm) +
       " max_recovery=" + format_number(worst_recovery) + " contrast=(" +
       std::to_string(c.dim_original) + ", " + std::to_string(c.dim_purified) + ")");
  EXPECT_LE(worst_comm, 1e-11);
  EXPECT_LE(worst_recovery, 1e-12);
  EXPECT_EQ(c.dim_original, 3u);
  EXPECT_EQ(c.dim_purified, 2u);
}

TEST(Acceptance, AC06_ZenoConvergence) {
  const ModelSpec m = example_a(3);
  const DenseOperator h = to_dense(m.hamiltonians[1]);
  const Projection p = m.projection();
  const std::array<std::size_t, 6> ms{8, 16, 32, 64, 128, 256};
  const auto pts = zeno_convergence(h, p, 1.0, ms);
  // Direct product formula as a cross-check of the reduced evaluation.
  const DenseOperator pp = p.projector();
  const DenseOperator step = propagator(h, 1.0 / 8.0);
  DenseOperator direct = pp;
  for (int k = 0; k < 8; ++k) direct = pp * step * direct;
  EXPECT_LT(spectral_norm(p.compress(direct) - zeno_product(h, p, 1.0, 8)), 1e-12);

  std::string line;
  bool decreasing = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    line += " e" + std::to_string(pts[i].m) + "=" + format_number(pts[i].error);
    if (i > 0) decreasing &= pts[i].error < pts[i - 1].error;
  }
  const double ratio = pts[4].error / pts[5].error;
  note("errors:" + line + " ratio=" + format_number(ratio));
  EXPECT_TRUE(decreasing);
  EXPECT_GE(ratio, 1.5);
  EXPECT_LE(ratio, 2.5);
}

TEST(Acceptance, AC07_Dissipation) {
  const DensityMatrix rho0(random_density_matrix(4, 7));
  // Closed form in the {phi, phi_perp} frame of qubit 1.
  DenseOperator frame(2, 2);
  frame.col(0) = phi_state();
  frame.col(1) = phi_perp_state();
  const DenseOperator u = kron(frame, DenseOperator::Identity(2, 2));
  auto exact = [&](double g, double t) {
    DenseOperator r = u.adjoint() * rho0.matrix() * u;
    const double pop = std::exp(-g * t);
    const double coh = std::exp(-0.5 * g * t);
    DenseOperator out = DenseOperator::Zero(4, 4);
    out.topLeftCorner(2, 2) = r.topLeftCorner(2, 2) + (1.0 - pop) * r.bottomRightCorner(2, 2);
    out.bottomRightCorner(2, 2) = pop * r.bottomRightCorner(2, 2);
    out.topRightCorner(2, 2) = coh * r.topRightCorner(2, 2);
    out.bottomLeftCorner(2, 2) = coh * r.bottomLeftCorner(2, 2);
    return DenseOperator(u * out * u.adjoint());
  };
  double worst = 0.0;
  for (double g : {0.5, 1.0, 3.0})
    for (double t : {0.1, 1.0, 5.0}) {
      const auto num = evolve_lindblad(amplitude_damping_model(1, 2, g), rho0, t, 2000);
      worst = std::max(worst, (num.matrix() - exact(g, t)).cwiseAbs().maxCoeff());
    }
  const StateVector phi = phi_state();
  const DenseOperator limit =
      embed_on_qubit(phi * phi.adjoint(), partial_trace_qubit(rho0.matrix(), 1, 2), 1, 2);
  const auto late = evolve_lindblad(amplitude_damping_model(1, 2, 1.0), rho0, 20.0, 2000);
  const double dist = trace_distance(late.matrix(), limit);
  note("max_entry_deviation=" + format_number(worst) + " late_trace_distance=" +
       format_number(dist));
  EXPECT_LE(worst, 1e-6);
  EXPECT_LE(dist, 1e-4);
}

TEST(Acceptance, AC08_StrongDamping) {
  const ModelSpec m = example_a(3);
  const DenseOperator h = to_dense(m.hamiltonians[1]);
  StateVector rest = StateVector::Zero(4);
  rest(1) = 1.0;
  const DensityMatrix rho0 = DensityMatrix::pure(kron(phi_state(), rest));
  const std::array<double, 5> gammas{0.0, 20.0, 50.0, 100.0, 200.0};
  const auto pts = strong_damping_zeno_check(h, 1, rho0, 1.0, gammas);
  std::string line;
  bool monotone = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    line += " d" + std::to_string(static_cast<int>(pts[i].gamma)) + "=" +
            format_number(pts[i].trace_distance);
    if (i >= 2) monotone &= pts[i].trace_distance <= 1.1 * pts[i - 1].trace_distance;
  }
  note("distances:" + line);
  EXPECT_LT(pts[4].trace_distance, pts[1].trace_distance);
  EXPECT_TRUE(monotone);
}

TEST(Acceptance, AC09_Genericity) {
  const auto start = Clock::now();
  const auto s = genericity_sweep(3, 50, 20140101);
  const double secs = seconds_since(start);
  note("full=" + std::to_string(s.full_count) + "/50 min_accepted_residual=" +
       format_number(s.min_accepted_residual) + " seconds=" + format_number(secs));
  EXPECT_GE(s.full_count, 48u);
  EXPECT_LT(secs, 300.0);
}

// Coefficients of a dense operator in the Pauli basis.
std::map<std::string, cplx> pauli_coordinates(const DenseOperator& a, std::size_t n) {
  std::map<std::string, cplx> out;
  const char letters[] = {'I', 'X', 'Y', 'Z'};
  const std::size_t total = std::size_t{1} << (2 * n);
  for (std::size_t code = 0; code < total; ++code) {
    std::string s(n, 'I');
    for (std::size_t q = 0; q < n; ++q) s[q] = letters[(code >> (2 * q)) & 3];
    const cplx c = (testing::kron_letters(s) * a).trace() / static_cast<double>(a.rows());
    if (std::abs(c) > 0.0) out[s] = c;
  }
  return out;
}

TEST(Acceptance, AC10_PauliOracles) {
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> nq(1, 3);
  std::uniform_int_distribution<int> ph(0, 3);
  std::uniform_int_distribution<int> nt(1, 6);
  std::size_t phase_mismatches = 0;
  double worst_coef = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(nq(rng));
    const auto a = PauliTerm::from_letters(testing::random_letters(rng, n), ph(rng));
    const auto b = PauliTerm::from_letters(testing::random_letters(rng, n), ph(rng));
    const DenseOperator expect = (a.phase() * testing::kron_letters(a.string().letters())) *
                                 (b.phase() * testing::kron_letters(b.string().letters()));
    const PauliTerm prod = pauli_mul(a, b);
    const DenseOperator got = prod.phase() * testing::kron_letters(prod.string().letters());
    if ((got - expect).cwiseAbs().maxCoeff() != 0.0) ++phase_mismatches;

    const auto sa = testing::random_pauli_sum(rng, n, static_cast<std::size_t>(nt(rng)), false);
    const auto sb = testing::random_pauli_sum(rng, n, static_cast<std::size_t>(nt(rng)), false);
    const DenseOperator da = testing::oracle_dense(sa);
    const DenseOperator db = testing::oracle_dense(sb);
    const auto coords = pauli_coordinates(da * db - db * da, n);
    const PauliSum c = pauli_commutator(sa, sb);
    for (const auto& [letters, value] : coords)
      worst_coef = std::max(worst_coef,
                            std::abs(c.coefficient(PauliString::from_letters(letters)) - value));
    for (const auto& [s, value] : c.terms())
      if (!coords.contains(s.letters())) worst_coef = std::max(worst_coef, std::abs(value));
  }
  note("phase_mismatches=" + std::to_string(phase_mismatches) +
       " max_coefficient_error=" + format_number(worst_coef));
  EXPECT_EQ(phase_mismatches, 0u);
  EXPECT_LE(worst_coef, 1e-13);
}

class CriterionPrinter : public ::testing::EmptyTestEventListener {
 public:
  void OnTestEnd(const ::testing::TestInfo& info) override {
    // Test names look like AC07_Dissipation.
    std::string name = info.name();
    const auto sep = name.find('_');
    std::string id = name.substr(0, sep);
    if (id.size() == 4 && id[2] == '0') id.erase(2, 1);
    const bool ok = info.result()->Passed();
    results_.push_back(std::string(ok ? "PASS " : "FAIL ") + id + " " + name.substr(sep + 1));
    std::cout << results_.back() << std::endl;
  }
  void OnTestProgramEnd(const ::testing::UnitTest&) override {
    std::cout << "\n== acceptance summary ==\n";
    for (const auto& r : results_) std::cout << r << "\n";
  }

 private:
  std::vector<std::string> results_;
};

}  // namespace
}  // namespace zenolie

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  auto& listeners = ::testing::UnitTest::GetInstance()->listeners();
  delete listeners.Release(listeners.default_result_printer());
  listeners.Append(new zenolie::CriterionPrinter);
  return RUN_ALL_TESTS();
}
