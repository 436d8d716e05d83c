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

#include "zenolie/models.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <random>

#include "zenolie/errors.hpp"
#include "zenolie/parallel.hpp"

namespace zenolie {

namespace {

const double kSqrt3 = std::sqrt(3.0);

std::string letters_on(std::size_t n, std::initializer_list<std::pair<std::size_t, char>> ops) {
  std::string s(n, 'I');
  for (const auto& [q, c] : ops) s[q - 1] = c;
  return s;
}

void require_commuting(const ModelSpec& m) {
  for (std::size_t i = 0; i < m.hamiltonians.size(); ++i)
    for (std::size_t j = i + 1; j < m.hamiltonians.size(); ++j)
      if (!pauli_commutator(m.hamiltonians[i], m.hamiltonians[j]).empty())
        throw ContractViolation(m.name + ": Hamiltonians " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " do not commute");
}

std::size_t pow4_minus_one(std::size_t k) { return (std::size_t{1} << (2 * k)) - 1; }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::vector<DenseOperator> ModelSpec::dense_hamiltonians() const {
  std::vector<DenseOperator> out;
  out.reserve(hamiltonians.size());
  for (const auto& h : hamiltonians) out.push_back(to_dense(h));
  return out;
}

PauliSum heisenberg_chain(std::size_t n_qubits, std::size_t first, std::size_t last) {
  PauliSum h(n_qubits);
  for (std::size_t k = first; k + 1 <= last && k + 1 <= n_qubits; ++k)
    for (char c : {'X', 'Y', 'Z'}) h.add(letters_on(n_qubits, {{k, c}, {k + 1, c}}), 1.0);
  return h;
}

ModelSpec intro_example() {
  ModelSpec m{"intro", 2, {PauliSum(2, {{"XX", 1.0}}), PauliSum(2, {{"ZZ", 1.0}})},
              "phi:1", 2, 3};
  require_commuting(m);
  return m;
}

ModelSpec example_a(std::size_t n) {
  if (n < 3) throw ContractViolation("example A needs at least 3 qubits");
  if (n > kDefaultDenseQubitCap) throw SizeLimitError("example A beyond the dense cap");
  PauliSum h1(n);
  h1.add(letters_on(n, {{1, 'X'}, {2, 'X'}}), 1.0);
  PauliSum h2 = heisenberg_chain(n, 3, n);
  for (char c : {'X', 'Y', 'Z'}) h2.add(letters_on(n, {{1, c}, {2, c}, {3, c}}), kSqrt3);
  h2.add(letters_on(n, {{3, 'Z'}}), 1.0);
  ModelSpec m{"a:" + std::to_string(n), n, {h1, h2}, "phi:1", 2, pow4_minus_one(n - 1)};
  require_commuting(m);
  return m;
}

ModelSpec example_b(std::size_t n) {
  if (n < 5) throw ContractViolation("example B needs at least 5 qubits");
  if (n > kDefaultDenseQubitCap) throw SizeLimitError("example B beyond the dense cap");
  PauliSum h1(n);
  h1.add(letters_on(n, {{1, 'Z'}, {2, 'Z'}}), 1.0);
  PauliSum h2(n);
  h2.add(letters_on(n, {{3, 'X'}, {4, 'X'}}), 1.0);
  PauliSum h3 = kSqrt3 * heisenberg_chain(n, 1, 2) + kSqrt3 * heisenberg_chain(n, 3, 4) +
                heisenberg_chain(n, 5, n);
  h3.add(letters_on(n, {{2, 'Z'}, {5, 'Z'}}), 1.0);
  h3.add(letters_on(n, {{5, 'Z'}}), 1.0);
  h3.add(letters_on(n, {{4, 'X'}, {5, 'X'}}), 1.0);
  h3.add(letters_on(n, {{5, 'X'}}), 1.0);
  ModelSpec m{"b:" + std::to_string(n), n, {h1, h2, h3}, "phi:1*phi:3", 3,
              pow4_minus_one(n - 2)};
  require_commuting(m);
  return m;
}

ModelSpec model_by_name(const std::string& name) {
  if (name == "intro") return intro_example();
  if (name.size() > 2 && (name[0] == 'a' || name[0] == 'b') && name[1] == ':') {
    std::size_t n = 0;
    const char* first = name.data() + 2;
    const char* last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec == std::errc{} && ptr == last) return name[0] == 'a' ? example_a(n) : example_b(n);
  }
  throw ContractViolation("unknown model '" + name + "' (expected intro, a:<n> or b:<n>)");
}

namespace {

DenseOperator ginibre(Eigen::Index d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  DenseOperator g(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = cplx(re, im);
    }
  return g;
}

}  // namespace

DenseOperator haar_unitary(Eigen::Index d, std::uint64_t seed) {
  if (d < 1) throw ContractViolation("haar_unitary: dimension must be positive");
  const DenseOperator g = ginibre(d, seed);
  Eigen::HouseholderQR<DenseOperator> qr(g);
  DenseOperator q = qr.householderQ() * DenseOperator::Identity(d, d);
  const DenseOperator r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    const cplx rjj = r(j, j);
    const double mag = std::abs(rjj);
    q.col(j) *= mag > 0.0 ? rjj / mag : cplx(1.0);
  }
  return q;
}


DenseOperator random_hermitian(Eigen::Index d, std::uint64_t seed) {
  if (d < 1) throw ContractViolation("random_hermitian: dimension must be positive");
  const DenseOperator g = ginibre(d, seed);
  return 0.5 * (g + g.adjoint());
}

DenseOperator random_density_matrix(Eigen::Index d, std::uint64_t seed) {
  if (d < 1) throw ContractViolation("random_density_matrix: dimension must be positive");
  const DenseOperator g = ginibre(d, seed);
  DenseOperator rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

DenseOperator RandomCommutingPair::h1() const {
  return common_unitary * eigenvalues_1.cast<cplx>().asDiagonal() * common_unitary.adjoint();
}

DenseOperator RandomCommutingPair::h2() const {
  return common_unitary * eigenvalues_2.cast<cplx>().asDiagonal() * common_unitary.adjoint();
}

RandomCommutingPair random_commuting_pair(std::size_t n_qubits, std::uint64_t seed) {
  if (n_qubits < 1 || n_qubits > kDefaultDenseQubitCap)
    throw SizeLimitError("random_commuting_pair: qubit count outside 1.." +
                         std::to_string(kDefaultDenseQubitCap));
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  RandomCommutingPair p;
  p.dim = d;
  p.seed = seed;
  p.eigenvalues_1.resize(d);
  p.eigenvalues_2.resize(d);
  for (Eigen::Index i = 0; i < d; ++i) p.eigenvalues_1(i) = uniform(rng);
  for (Eigen::Index i = 0; i < d; ++i) p.eigenvalues_2(i) = uniform(rng);
  p.common_unitary = haar_unitary(d, splitmix64(seed));
  return p;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ULL));
}

ClosureReport zeno_closure_of_pair(const RandomCommutingPair& pair, const Projection& p,
                                   double tol) {
  const DenseOperator gens[] = {p.compress(pair.h1()), p.compress(pair.h2())};
  return hamiltonian_closure(gens, tol).report;
}

GenericitySummary genericity_sweep(std::size_t n_qubits, std::size_t trials, std::uint64_t seed,
                                   double tol, const GenericityOptions& opts) {
  if (trials < 1) throw ContractViolation("genericity_sweep: trials must be at least 1");
  if (n_qubits < 1) throw ContractViolation("genericity_sweep: need at least one qubit");
  GenericitySummary s;
  s.total = trials;
  s.trials.resize(trials);
  detail::parallel_for(
      trials,
      [&](std::size_t i) {
        const std::uint64_t ts = trial_seed(seed, i);
        const auto pair = random_commuting_pair(n_qubits, ts);
        const Projection proj =
            opts.haar_projection
                ? Projection::from_isometry(
                      haar_unitary(pair.dim, splitmix64(ts ^ 0x5851f42d4c957f2dULL))
                          .leftCols(pair.dim / 2))
                : make_phi_projector(1, n_qubits);
        const ClosureReport rep = zeno_closure_of_pair(pair, proj, tol);
        const auto r = static_cast<std::size_t>(proj.rank());
        s.trials[i] = {i,
                       ts,
                       rep.traceless_dimension,
                       rep.traceless_dimension == r * r - 1,
                       rep.smallest_singular_value,
                       rep.min_accepted_residual};
      },
      opts.workers);
  s.min_smallest_singular_value = std::numeric_limits<double>::infinity();
  s.min_accepted_residual = std::numeric_limits<double>::infinity();
  for (const auto& t : s.trials) {
    s.full_count += t.is_full ? 1 : 0;
    s.min_smallest_singular_value = std::min(s.min_smallest_singular_value, t.smallest_singular_value);
    s.min_accepted_residual = std::min(s.min_accepted_residual, t.min_accepted_residual);
  }
  return s;
}

}  // namespace zenolie
