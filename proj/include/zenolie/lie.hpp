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
#include <span>
#include <vector>

#include "zenolie/dense.hpp"

namespace zenolie {

inline constexpr double kDefaultRankTol = 1e-10;

/// Hilbert-Schmidt orthonormal real basis of a space of anti-Hermitian
/// d x d operators.
///
/// Elements are kept twice: as operators, and as the columns of a real
/// 2d^2 x k matrix (see vectorize) so that projections are a pair of
/// matrix-vector products.
class LieBasis {
 public:
  explicit LieBasis(Eigen::Index dim_space, double tol = kDefaultRankTol);

  Eigen::Index dim_space() const noexcept { return d_; }
  double tol() const noexcept { return tol_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const std::vector<DenseOperator>& elements() const noexcept { return elements_; }
  const DenseOperator& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t generator_count() const noexcept { return generator_count_; }
  void set_generator_count(std::size_t n) noexcept { generator_count_ = n; }
  /// Candidates rejected as linearly dependent so far.
  std::size_t discarded() const noexcept { return discarded_; }
  /// Smallest relative residual among accepted candidates; 1 for an empty
  /// basis. A value near tol flags a borderline direction.
  double min_accepted_residual() const noexcept { return min_residual_; }

  /// Real column view of the elements, 2d^2 x size().
  Eigen::Ref<const Eigen::MatrixXd> columns() const {
    return columns_.leftCols(static_cast<Eigen::Index>(elements_.size()));
  }

  /// Gram-Schmidt step with one re-orthogonalization pass. Appends the
  /// normalized residual when its norm exceeds tol * reference_norm and
  /// returns true; otherwise counts a discard and returns false. A
  /// reference_norm <= 0 means "use the candidate's own norm".
  bool extend_vectorized(Eigen::VectorXd v, double reference_norm = 0.0);

 private:
  Eigen::Index d_;
  double tol_;
  std::vector<DenseOperator> elements_;
  Eigen::MatrixXd columns_;
  std::size_t generator_count_ = 0;
  std::size_t discarded_ = 0;
  double min_residual_ = 1.0;
};

struct ClosureReport {
  std::size_t dimension = 0;
  std::size_t traceless_dimension = 0;
  bool is_full_u = false;
  bool is_full_su = false;
  std::size_t rounds = 0;
  std::size_t discarded = 0;
  double tol = kDefaultRankTol;
  double smallest_singular_value = 0.0;
  double min_accepted_residual = 1.0;
};

struct ClosureResult {
  LieBasis basis;
  ClosureReport report;
};

struct RankTestResult {
  bool is_full = false;
  std::size_t rank = 0;
  double smallest_singular_value = 0.0;
};

/// Extends `basis` by an anti-Hermitian candidate. Returns true when the
/// candidate contributed a new direction. Throws ContractViolation for a
/// non-anti-Hermitian candidate and DimensionError on a shape mismatch.
bool orthonormal_extend(LieBasis& basis, const DenseOperator& candidate);

/// Real Lie algebra generated by anti-Hermitian operators, by breadth-first
/// sweeps over untried commutator pairs.
ClosureResult lie_closure(std::span<const DenseOperator> generators,
                          double tol = kDefaultRankTol);

/// Convenience: closure of {i H_k} for Hermitian H_k.
ClosureResult hamiltonian_closure(std::span<const DenseOperator> hamiltonians,
                                  double tol = kDefaultRankTol);

/// Numerical rank of the matrix whose columns are the vectorized identity
/// (times i) and the basis elements; full means rank d^2, i.e. u(d).
RankTestResult full_rank_test(const LieBasis& basis);

/// Dimension of the span of the basis after removing identity components.
std::size_t traceless_dimension(const LieBasis& basis);

}  // namespace zenolie
