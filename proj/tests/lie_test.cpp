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

#include "zenolie/lie.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_util.hpp"
#include "zenolie/errors.hpp"
#include "zenolie/models.hpp"
#include "zenolie/zeno.hpp"

namespace zenolie {
namespace {

const cplx kI(0.0, 1.0);

DenseOperator ipauli(std::string_view letters) { return kI * testing::kron_letters(letters); }

TEST(OrthonormalExtend, PauliDirections) {
  LieBasis b(2);
  EXPECT_TRUE(orthonormal_extend(b, ipauli("X")));
  EXPECT_TRUE(orthonormal_extend(b, ipauli("Z")));
  EXPECT_FALSE(orthonormal_extend(b, ipauli("X") + ipauli("Z")));
  EXPECT_TRUE(orthonormal_extend(b, ipauli("Y")));
  EXPECT_EQ(b.size(), 3u);
  EXPECT_EQ(b.discarded(), 1u);
  const Eigen::MatrixXd g = b.columns().transpose() * b.columns();
  EXPECT_LT((g - Eigen::MatrixXd::Identity(3, 3)).norm(), 1e-14);
}

TEST(OrthonormalExtend, RejectsBadCandidates) {
  LieBasis b(2);
  EXPECT_THROW(orthonormal_extend(b, pauli_matrix::X()), ContractViolation);
  EXPECT_THROW(orthonormal_extend(b, ipauli("XX")), DimensionError);
  EXPECT_THROW(LieBasis(2, 0.0), ContractViolation);
}

TEST(OrthonormalExtend, ZeroCandidateIsDiscarded) {
  LieBasis b(2);
  EXPECT_FALSE(orthonormal_extend(b, DenseOperator::Zero(2, 2)));
  EXPECT_TRUE(b.empty());
}

TEST(LieClosure, TwoPaulisGenerateSu2) {
  const std::vector<DenseOperator> gens{ipauli("X"), ipauli("Z")};
  const auto r = lie_closure(gens).report;
  EXPECT_EQ(r.dimension, 3u);
  EXPECT_EQ(r.traceless_dimension, 3u);
  EXPECT_TRUE(r.is_full_su);
  EXPECT_FALSE(r.is_full_u);
}

TEST(LieClosure, CommutingGeneratorsStayAbelian) {
  const std::vector<DenseOperator> gens{ipauli("XX"), ipauli("ZZ")};
  const auto r = lie_closure(gens).report;
  EXPECT_EQ(r.dimension, 2u);
  EXPECT_EQ(r.rounds, 1u);
}

TEST(LieClosure, IdentityCountsForU) {
  const std::vector<DenseOperator> gens{ipauli("X"), ipauli("Z"), ipauli("I")};
  const auto r = lie_closure(gens).report;
  EXPECT_EQ(r.dimension, 4u);
  EXPECT_EQ(r.traceless_dimension, 3u);
  EXPECT_TRUE(r.is_full_u);
}

TEST(LieClosure, Idempotent) {
  const auto m = example_a(3);
  const auto sys = make_zeno_system(m.dense_hamiltonians(), m.projection());
  const auto first = hamiltonian_closure(sys.compressed_hamiltonians);
  const auto again = lie_closure(first.basis.elements());
  EXPECT_EQ(again.report.dimension, first.report.dimension);
}

TEST(LieClosure, GeneratorOrderDoesNotMatter) {
  for (const char* name : {"intro", "a:3", "b:5"}) {
    const auto m = model_by_name(name);
    const auto sys = make_zeno_system(m.dense_hamiltonians(), m.projection());
    auto hs = sys.compressed_hamiltonians;
    const auto forward = hamiltonian_closure(hs).report;
    std::reverse(hs.begin(), hs.end());
    const auto backward = hamiltonian_closure(hs).report;
    EXPECT_EQ(forward.dimension, backward.dimension) << name;
    EXPECT_EQ(forward.traceless_dimension, backward.traceless_dimension) << name;
  }
}

TEST(LieClosure, MonotoneInGenerators) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<DenseOperator> gens;
    std::size_t last = 0;
    for (int k = 0; k < 3; ++k) {
      gens.push_back(kI * testing::oracle_dense(testing::random_pauli_sum(rng, 2, 2)));
      const std::size_t dim = lie_closure(gens).report.dimension;
      ASSERT_GE(dim, last);
      last = dim;
    }
  }
}

// Independent closure in real Pauli coordinates: A = i sum_P c_P P.
std::size_t oracle_closure_dimension(const std::vector<DenseOperator>& gens) {
  const Eigen::Index d = gens.front().rows();
  const char letters[] = {'I', 'X', 'Y', 'Z'};
  std::vector<DenseOperator> paulis;
  for (char a : letters)
    for (char b : letters) paulis.push_back(testing::kron_letters(std::string{a, b}));
  auto coords = [&](const DenseOperator& a) {
    Eigen::VectorXd c(16);
    for (int k = 0; k < 16; ++k)
      c(k) = (paulis[static_cast<std::size_t>(k)] * a).trace().imag() / static_cast<double>(d);
    return c;
  };
  auto rank = [](const std::vector<Eigen::VectorXd>& vs) {
    Eigen::MatrixXd m(16, static_cast<Eigen::Index>(vs.size()));
    for (std::size_t k = 0; k < vs.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = vs[k];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto s = svd.singularValues();
    std::size_t r = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k)
      if (s(k) > 1e-8 * std::max(1.0, s(0))) ++r;
    return r;
  };
  std::vector<DenseOperator> ops;
  std::vector<Eigen::VectorXd> vs;
  for (const auto& g : gens) {
    vs.push_back(coords(g));
    if (rank(vs) == vs.size()) ops.push_back(g);
    else vs.pop_back();
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = ops.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const DenseOperator c = ops[i] * ops[j] - ops[j] * ops[i];
        vs.push_back(coords(c));
        if (rank(vs) == vs.size()) {
          ops.push_back(c / c.norm());
          grew = true;
        } else {
          vs.pop_back();
        }
      }
  }
  return ops.size();
}

TEST(LieClosure, AgreesWithPauliCoordinateOracle) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> terms(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<DenseOperator> gens;
    for (int k = 0; k < 2; ++k)
      gens.push_back(kI * testing::oracle_dense(testing::random_pauli_sum(
                              rng, 2, static_cast<std::size_t>(terms(rng)))));
    ASSERT_EQ(lie_closure(gens, 1e-8).report.dimension, oracle_closure_dimension(gens))
        << "trial " << trial;
  }
}

TEST(FullRankTest, Examples) {
  LieBasis b(2);
  for (const char* p : {"X", "Y", "Z"}) orthonormal_extend(b, ipauli(p));
  const auto r = full_rank_test(b);
  EXPECT_TRUE(r.is_full);
  EXPECT_EQ(r.rank, 4u);
  EXPECT_NEAR(r.smallest_singular_value, 1.0, 1e-12);

  LieBasis partial(2);
  orthonormal_extend(partial, ipauli("Z"));
  EXPECT_FALSE(full_rank_test(partial).is_full);
  EXPECT_EQ(full_rank_test(partial).rank, 2u);
  EXPECT_THROW(full_rank_test(LieBasis(2)), ContractViolation);
}

TEST(TracelessDimension, StripsIdentity) {
  LieBasis b(2);
  orthonormal_extend(b, ipauli("I") + ipauli("Z"));
  orthonormal_extend(b, ipauli("I"));
  EXPECT_EQ(b.size(), 2u);
  EXPECT_EQ(traceless_dimension(b), 1u);
}

}  // namespace
}  // namespace zenolie
