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

#include <algorithm>
#include <cmath>
#include <string>

#include "zenolie/errors.hpp"

namespace zenolie {

LieBasis::LieBasis(Eigen::Index dim_space, double tol) : d_(dim_space), tol_(tol) {
  if (d_ < 1) throw ContractViolation("LieBasis: operator dimension must be positive");
  if (!(tol_ > 0.0 && tol_ < 1.0)) throw ContractViolation("rank tolerance must lie in (0, 1)");
}

bool LieBasis::extend_vectorized(Eigen::VectorXd v, double reference_norm) {
  const Eigen::Index len = 2 * d_ * d_;
  if (v.size() != len) throw DimensionError("candidate has the wrong operator dimension");
  const double ref = reference_norm > 0.0 ? reference_norm : v.norm();
  const auto k = static_cast<Eigen::Index>(elements_.size());
  if (ref == 0.0 || k >= d_ * d_) {
    ++discarded_;
    return false;
  }
  if (k > 0) {
    const auto q = columns_.leftCols(k);
    for (int pass = 0; pass < 2; ++pass) v.noalias() -= q * (q.transpose() * v);
  }
  const double r = v.norm();
  if (!(r > tol_ * ref)) {
    ++discarded_;
    return false;
  }
  if (columns_.cols() <= k) {
    const Eigen::Index cap = std::min<Eigen::Index>(std::max<Eigen::Index>(8, 2 * k), d_ * d_);
    columns_.conservativeResize(len, cap);
  }
  v /= r;
  columns_.col(k) = v;
  elements_.push_back(unvectorize(v, d_));
  min_residual_ = std::min(min_residual_, r / ref);
  return true;
}

bool orthonormal_extend(LieBasis& basis, const DenseOperator& candidate) {
  if (candidate.rows() != basis.dim_space() || candidate.cols() != basis.dim_space())
    throw DimensionError("candidate is " + std::to_string(candidate.rows()) + "x" +
                         std::to_string(candidate.cols()) + ", basis expects " +
                         std::to_string(basis.dim_space()));
  if (!all_finite(candidate)) throw ContractViolation("candidate has non-finite entries");
  if ((candidate + candidate.adjoint()).norm() > 1e-10 * std::max(1.0, candidate.norm()))
    throw ContractViolation("candidate is not anti-Hermitian");
  return basis.extend_vectorized(vectorize(candidate));
}

ClosureResult lie_closure(std::span<const DenseOperator> generators, double tol) {
  if (generators.empty()) throw ContractViolation("lie_closure: empty generator list");
  const Eigen::Index d = generators.front().rows();
  for (const auto& g : generators) {
    if (g.rows() != d || g.cols() != d)
      throw DimensionError("lie_closure: generators have different dimensions");
    if (!all_finite(g)) throw ContractViolation("lie_closure: non-finite generator entries");
  }

  LieBasis basis(d, tol);
  for (const auto& g : generators) orthonormal_extend(basis, g);
  basis.set_generator_count(generators.size());

  const std::size_t full = static_cast<std::size_t>(d * d);
  std::size_t done = 0;  // pairs (i, j) with j < done have been tried
  std::size_t rounds = 0;
  while (done < basis.size() && basis.size() < full) {
    const std::size_t frontier = basis.size();
    ++rounds;
    for (std::size_t j = done; j < frontier && basis.size() < full; ++j)
      for (std::size_t i = 0; i < j && basis.size() < full; ++i) {
        // Basis elements have unit norm, so a commutator that is itself
        // roundoff must be measured against 1, not against its own size.
        Eigen::VectorXd c = vectorize(commutator(basis[i], basis[j]));
        const double ref = std::max(c.norm(), 1.0);
        basis.extend_vectorized(std::move(c), ref);
      }
    done = frontier;
  }

  ClosureReport rep;
  rep.dimension = basis.size();
  rep.traceless_dimension = traceless_dimension(basis);
  rep.is_full_u = rep.dimension == full;
  rep.is_full_su = rep.traceless_dimension == full - 1;
  rep.rounds = rounds;
  rep.discarded = basis.discarded();
  rep.tol = tol;
  rep.smallest_singular_value =
      basis.empty() ? 0.0 : full_rank_test(basis).smallest_singular_value;
  rep.min_accepted_residual = basis.min_accepted_residual();
  return {std::move(basis), rep};
}

ClosureResult hamiltonian_closure(std::span<const DenseOperator> hamiltonians, double tol) {
  std::vector<DenseOperator> gens;
  gens.reserve(hamiltonians.size());
  for (const auto& h : hamiltonians) gens.push_back(cplx(0.0, 1.0) * h);
  return lie_closure(gens, tol);
}

RankTestResult full_rank_test(const LieBasis& basis) {
  if (basis.empty()) throw ContractViolation("full_rank_test: empty basis");
  const Eigen::Index d = basis.dim_space();
  const Eigen::Index full = d * d;
  const auto k = static_cast<Eigen::Index>(basis.size());

  Eigen::MatrixXd mat(2 * full, k + 1);
  const DenseOperator unit =
      cplx(0.0, 1.0 / std::sqrt(static_cast<double>(d))) * DenseOperator::Identity(d, d);
  mat.col(0) = vectorize(unit);
  mat.rightCols(k) = basis.columns();

  Eigen::BDCSVD<Eigen::MatrixXd> svd(mat);
  const Eigen::VectorXd& s = svd.singularValues();
  const double thresh = basis.tol() * s(0);
  RankTestResult out;
  out.rank = static_cast<std::size_t>((s.array() > thresh).count());
  out.is_full = static_cast<Eigen::Index>(out.rank) == full;
  out.smallest_singular_value = s(std::min(full, s.size()) - 1);
  return out;
}

std::size_t traceless_dimension(const LieBasis& basis) {
  const Eigen::Index d = basis.dim_space();
  LieBasis stripped(d, basis.tol());
  for (const auto& a : basis.elements()) {
    DenseOperator t = a;
    t.diagonal().array() -= a.trace() / static_cast<double>(d);
    // Reference is the unit norm of the original element, so a pure
    // identity direction is rejected instead of being rescaled.
    stripped.extend_vectorized(vectorize(t), a.norm());
  }
  return stripped.size();
}

}  // namespace zenolie
