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

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

namespace zenolie {

using cplx = std::complex<double>;

inline constexpr std::size_t kMaxPauliQubits = 64;
inline constexpr double kDefaultPruneThreshold = 1e-14;

/// A Hermitian Pauli string in symplectic form.
///
/// Bit (n - q) of each mask belongs to qubit q (1-based), so qubit 1 is the
/// leftmost letter and the most significant bit of a computational-basis
/// index. A qubit carrying Y has both its X and Z bits set; the string is
/// the plain tensor product of letters and carries no phase.
class PauliString {
 public:
  PauliString() = default;
  PauliString(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

  static PauliString identity(std::size_t n_qubits);
  /// Parses a letter string such as "XIZY". Throws ContractViolation on
  /// anything outside {I, X, Y, Z}.
  static PauliString from_letters(std::string_view letters);
  /// Single non-identity letter on qubit q (1-based) of an n-qubit register.
  static PauliString single(std::size_t n_qubits, std::size_t qubit, char letter);

  std::size_t n_qubits() const noexcept { return n_; }
  std::uint64_t x_mask() const noexcept { return x_; }
  std::uint64_t z_mask() const noexcept { return z_; }

  char letter(std::size_t qubit) const;
  std::string letters() const;
  std::size_t weight() const noexcept;
  bool is_identity() const noexcept { return x_ == 0 && z_ == 0; }
  bool commutes_with(const PauliString& other) const;

  /// Prepends `extra` qubits on the left (they become qubits 1..extra).
  PauliString widened_left(std::size_t extra, const PauliString& head) const;

  std::uint64_t bit(std::size_t qubit) const noexcept {
    return std::uint64_t{1} << (n_ - qubit);
  }

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString& a, const PauliString& b) {
    return std::tie(a.n_, a.x_, a.z_) <=> std::tie(b.n_, b.x_, b.z_);
  }

 private:
  std::size_t n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// A Pauli string times an exact quarter-turn phase i^k.
class PauliTerm {
 public:
  PauliTerm() = default;
  explicit PauliTerm(PauliString s, int phase_exponent = 0)
      : string_(s), k_(((phase_exponent % 4) + 4) % 4) {}

  static PauliTerm from_letters(std::string_view letters, int phase_exponent = 0) {
    return PauliTerm(PauliString::from_letters(letters), phase_exponent);
  }

  const PauliString& string() const noexcept { return string_; }
  std::size_t n_qubits() const noexcept { return string_.n_qubits(); }
  /// Exponent k of the phase i^k, always in [0, 4).
  int phase_exponent() const noexcept { return k_; }
  cplx phase() const noexcept;
  bool is_hermitian() const noexcept { return k_ % 2 == 0; }

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;

 private:
  PauliString string_;
  int k_ = 0;
};

/// Exact product a*b. Throws DimensionError on qubit-count mismatch.
PauliTerm pauli_mul(const PauliTerm& a, const PauliTerm& b);

/// Sparse operator sum_k c_k P_k over phase-free Pauli strings.
class PauliSum {
 public:
  using TermMap = std::map<PauliString, cplx>;

  explicit PauliSum(std::size_t n_qubits, double prune = kDefaultPruneThreshold);
  PauliSum(std::size_t n_qubits,
           std::initializer_list<std::pair<std::string_view, cplx>> terms);

  std::size_t n_qubits() const noexcept { return n_; }
  double prune_threshold() const noexcept { return prune_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Coefficient of a string, zero when absent.
  cplx coefficient(const PauliString& s) const;

  /// Accumulates c * (phase of t) * string(t), pruning cancellations.
  PauliSum& add(const PauliTerm& t, cplx c = 1.0);
  PauliSum& add(std::string_view letters, cplx c);

  bool is_hermitian(double tol = 0.0) const;
  /// Largest coefficient magnitude difference against `other`.
  double max_abs_difference(const PauliSum& other) const;

  PauliSum& operator+=(const PauliSum& o);
  PauliSum& operator-=(const PauliSum& o);
  PauliSum& operator*=(cplx s);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(cplx s, PauliSum a) { return a *= s; }
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  /// Embeds into a wider register: `head` occupies the new leftmost qubits.
  PauliSum tensor_left(const PauliString& head) const;

  friend bool operator==(const PauliSum& a, const PauliSum& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const PauliSum& o) const;

  std::size_t n_;
  double prune_;
  TermMap terms_;
};

/// ab - ba, pruned. Only anticommuting string pairs contribute.
PauliSum pauli_commutator(const PauliSum& a, const PauliSum& b);

}  // namespace zenolie
