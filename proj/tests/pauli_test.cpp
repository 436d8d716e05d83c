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

#include "zenolie/pauli.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "zenolie/dense.hpp"
#include "zenolie/errors.hpp"

namespace zenolie {
namespace {

using testing::kron_letters;
using testing::oracle_dense;

double max_abs(const DenseOperator& m) { return m.cwiseAbs().maxCoeff(); }

TEST(PauliMul, InvolutionGivesIdentity) {
  const auto p = pauli_mul(PauliTerm::from_letters("X"), PauliTerm::from_letters("X"));
  EXPECT_TRUE(p.string().is_identity());
  EXPECT_EQ(p.phase_exponent(), 0);
}

TEST(PauliMul, XTimesZIsMinusIY) {
  const auto p = pauli_mul(PauliTerm::from_letters("X"), PauliTerm::from_letters("Z"));
  EXPECT_EQ(p.string().letters(), "Y");
  EXPECT_EQ(p.phase(), cplx(0.0, -1.0));
  // 2x2 oracle.
  const DenseOperator xz = pauli_matrix::X() * pauli_matrix::Z();
  EXPECT_EQ(max_abs(xz - cplx(0, -1) * pauli_matrix::Y()), 0.0);
  EXPECT_EQ(max_abs(to_dense(p) - xz), 0.0);
}

TEST(PauliMul, TwoQubitProductPhase) {
  const auto p = pauli_mul(PauliTerm::from_letters("XX"), PauliTerm::from_letters("ZZ"));
  EXPECT_EQ(p.string().letters(), "YY");
  EXPECT_EQ(p.phase(), cplx(-1.0, 0.0));
  EXPECT_EQ(max_abs(to_dense(p) - kron_letters("XX") * kron_letters("ZZ")), 0.0);
}

TEST(PauliMul, QubitCountMismatchThrows) {
  EXPECT_THROW(pauli_mul(PauliTerm::from_letters("X"), PauliTerm::from_letters("XZ")),
               DimensionError);
}

TEST(PauliMul, RandomProductsMatchDenseExactly) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> nq(1, 4);
  std::uniform_int_distribution<int> ph(0, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(nq(rng));
    const PauliTerm a = PauliTerm::from_letters(testing::random_letters(rng, n), ph(rng));
    const PauliTerm b = PauliTerm::from_letters(testing::random_letters(rng, n), ph(rng));
    const DenseOperator expect = (a.phase() * kron_letters(a.string().letters())) *
                                 (b.phase() * kron_letters(b.string().letters()));
    const PauliTerm p = pauli_mul(a, b);
    ASSERT_EQ(max_abs(to_dense(p) - expect), 0.0) << a.string().letters() << " * "
                                                  << b.string().letters();
    ASSERT_EQ(std::abs(p.phase()), 1.0);
  }
}

TEST(PauliMul, Associative) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = PauliTerm::from_letters(testing::random_letters(rng, 5), trial);
    const auto b = PauliTerm::from_letters(testing::random_letters(rng, 5), trial + 1);
    const auto c = PauliTerm::from_letters(testing::random_letters(rng, 5), 3 * trial);
    ASSERT_EQ(pauli_mul(pauli_mul(a, b), c), pauli_mul(a, pauli_mul(b, c)));
  }
}

TEST(PauliCommutator, PaperPairCommutes) {
  const PauliSum xx(2, {{"XX", 1.0}});
  const PauliSum zz(2, {{"ZZ", 1.0}});
  EXPECT_TRUE(pauli_commutator(xx, zz).empty());
}

TEST(PauliCommutator, SelfCommutatorVanishes) {
  std::mt19937_64 rng(3);
  const PauliSum a = testing::random_pauli_sum(rng, 3, 8);
  EXPECT_TRUE(pauli_commutator(a, a).empty());
}

TEST(PauliCommutator, XZIsMinusTwoIY) {
  const PauliSum x(1, {{"X", 1.0}});
  const PauliSum z(1, {{"Z", 1.0}});
  const PauliSum c = pauli_commutator(x, z);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.coefficient(PauliString::from_letters("Y")), cplx(0.0, -2.0));
  // 2x2 oracle.
  const DenseOperator dense = commutator(pauli_matrix::X(), pauli_matrix::Z());
  EXPECT_LT(max_abs(dense - cplx(0, -2) * pauli_matrix::Y()), 1e-15);
}

TEST(PauliCommutator, AntisymmetricAndBilinear) {
  std::mt19937_64 rng(4);
  const auto a = testing::random_pauli_sum(rng, 3, 6, false);
  const auto b = testing::random_pauli_sum(rng, 3, 6, false);
  const auto c = testing::random_pauli_sum(rng, 3, 6, false);
  EXPECT_LT((pauli_commutator(a, b) + pauli_commutator(b, a)).max_abs_difference(PauliSum(3)),
            1e-12);
  const cplx alpha(0.3, -1.1);
  const auto lhs = pauli_commutator(alpha * a + b, c);
  const auto rhs = alpha * pauli_commutator(a, c) + pauli_commutator(b, c);
  EXPECT_LT(lhs.max_abs_difference(rhs), 1e-12);
}

TEST(PauliCommutator, MatchesDenseCommutator) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> nq(1, 4);
  std::uniform_int_distribution<int> nt(1, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(nq(rng));
    const auto a = testing::random_pauli_sum(rng, n, static_cast<std::size_t>(nt(rng)), false);
    const auto b = testing::random_pauli_sum(rng, n, static_cast<std::size_t>(nt(rng)), false);
    const DenseOperator da = oracle_dense(a);
    const DenseOperator db = oracle_dense(b);
    ASSERT_LE((to_dense(pauli_commutator(a, b)) - (da * db - db * da)).norm(), 1e-13);
  }
}

TEST(PauliCommutator, DimensionMismatchThrows) {
  EXPECT_THROW(pauli_commutator(PauliSum(2), PauliSum(3)), DimensionError);
}

TEST(PauliSum, PrunesCancellations) {
  PauliSum s(2);
  s.add("XY", 0.5);
  s.add("XY", -0.5 + 1e-15);
  EXPECT_TRUE(s.empty());
  PauliSum loose(2, 1e-3);
  loose.add("ZZ", 1e-4);
  EXPECT_TRUE(loose.empty());
}

TEST(PauliSum, HermiticityFollowsCoefficients) {
  PauliSum s(2, {{"XZ", 1.0}, {"YY", -2.5}});
  EXPECT_TRUE(s.is_hermitian());
  EXPECT_TRUE(is_hermitian(to_dense(s)));
  s.add("ZI", cplx(0.0, 1.0));
  EXPECT_FALSE(s.is_hermitian());
  EXPECT_FALSE(is_hermitian(to_dense(s)));
}

TEST(PauliSum, RejectsMismatchedTerms) {
  PauliSum s(2);
  EXPECT_THROW(s.add("XYZ", 1.0), DimensionError);
  EXPECT_THROW(s.add("XQ", 1.0), ContractViolation);
}

TEST(PauliString, QubitOneIsLeftmost) {
  const auto s = PauliString::single(3, 1, 'Z');
  EXPECT_EQ(s.letters(), "ZII");
  EXPECT_EQ(s.letter(1), 'Z');
  EXPECT_EQ(s.weight(), 1u);
}

TEST(PauliString, TensorLeftPrependsQubits) {
  const PauliSum h(2, {{"XZ", 2.0}});
  const PauliSum wide = h.tensor_left(PauliString::from_letters("Y"));
  EXPECT_EQ(wide.n_qubits(), 3u);
  EXPECT_EQ(wide.coefficient(PauliString::from_letters("YXZ")), cplx(2.0));
}

}  // namespace
}  // namespace zenolie
