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

#include <bit>
#include <cmath>

#include "zenolie/errors.hpp"

namespace zenolie {

namespace {

int popcount(std::uint64_t v) { return std::popcount(v); }

std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// i^k for k in [0, 4).
cplx quarter_turn(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// Exponent e with string(a) * string(b) = i^e string(a xor b).
int product_phase(const PauliString& a, const PauliString& b) {
  const std::uint64_t x3 = a.x_mask() ^ b.x_mask();
  const std::uint64_t z3 = a.z_mask() ^ b.z_mask();
  int e = popcount(a.x_mask() & a.z_mask()) + popcount(b.x_mask() & b.z_mask()) +
          2 * popcount(a.z_mask() & b.x_mask()) - popcount(x3 & z3);
  return ((e % 4) + 4) % 4;
}

}  // namespace

PauliString::PauliString(std::size_t n_qubits, std::uint64_t x_mask,
                         std::uint64_t z_mask)
    : n_(n_qubits), x_(x_mask), z_(z_mask) {
  if (n_ == 0 || n_ > kMaxPauliQubits)
    throw ContractViolation("Pauli string needs 1.." + std::to_string(kMaxPauliQubits) +
                            " qubits, got " + std::to_string(n_));
  if ((x_ | z_) & ~low_mask(n_))
    throw ContractViolation("Pauli mask has bits beyond the qubit count");
}

PauliString PauliString::identity(std::size_t n_qubits) {
  return PauliString(n_qubits, 0, 0);
}

PauliString PauliString::from_letters(std::string_view letters) {
  const std::size_t n = letters.size();
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t b = std::uint64_t{1} << (n - 1 - i);
    switch (letters[i]) {
      case 'I': break;
      case 'X': x |= b; break;
      case 'Y': x |= b; z |= b; break;
      case 'Z': z |= b; break;
      default:
        throw ContractViolation(std::string("invalid Pauli letter '") + letters[i] + "'");
    }
  }
  return PauliString(n, x, z);
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit, char letter) {
  if (qubit < 1 || qubit > n_qubits)
    throw ContractViolation("qubit index " + std::to_string(qubit) + " out of range");
  std::string s(n_qubits, 'I');
  s[qubit - 1] = letter;
  return from_letters(s);
}

char PauliString::letter(std::size_t qubit) const {
  const std::uint64_t b = bit(qubit);
  const bool xb = x_ & b;
  const bool zb = z_ & b;
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

std::string PauliString::letters() const {
  std::string s(n_, 'I');
  for (std::size_t q = 1; q <= n_; ++q) s[q - 1] = letter(q);
  return s;
}

std::size_t PauliString::weight() const noexcept {
  return static_cast<std::size_t>(popcount(x_ | z_));
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (n_ != other.n_) throw DimensionError("Pauli strings on different qubit counts");
  return ((popcount(x_ & other.z_) + popcount(z_ & other.x_)) & 1) == 0;
}

PauliString PauliString::widened_left(std::size_t extra, const PauliString& head) const {
  if (head.n_qubits() != extra) throw DimensionError("head string has wrong width");
  return PauliString(n_ + extra, (head.x_mask() << n_) | x_, (head.z_mask() << n_) | z_);
}

cplx PauliTerm::phase() const noexcept { return quarter_turn(k_); }

PauliTerm pauli_mul(const PauliTerm& a, const PauliTerm& b) {
  if (a.n_qubits() != b.n_qubits())
    throw DimensionError("pauli_mul: " + std::to_string(a.n_qubits()) + " vs " +
                         std::to_string(b.n_qubits()) + " qubits");
  const PauliString& sa = a.string();
  const PauliString& sb = b.string();
  PauliString s(sa.n_qubits(), sa.x_mask() ^ sb.x_mask(), sa.z_mask() ^ sb.z_mask());
  return PauliTerm(s, a.phase_exponent() + b.phase_exponent() + product_phase(sa, sb));
}

PauliSum::PauliSum(std::size_t n_qubits, double prune) : n_(n_qubits), prune_(prune) {
  if (n_ == 0 || n_ > kMaxPauliQubits)
    throw ContractViolation("PauliSum qubit count out of range");
  if (!(prune_ >= 0.0)) throw ContractViolation("prune threshold must be non-negative");
}

PauliSum::PauliSum(std::size_t n_qubits,
                   std::initializer_list<std::pair<std::string_view, cplx>> terms)
    : PauliSum(n_qubits) {
  for (const auto& [letters, c] : terms) add(letters, c);
}

cplx PauliSum::coefficient(const PauliString& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? cplx{} : it->second;
}

PauliSum& PauliSum::add(const PauliTerm& t, cplx c) {
  if (t.n_qubits() != n_)
    throw DimensionError("term has " + std::to_string(t.n_qubits()) + " qubits, sum has " +
                         std::to_string(n_));
  const cplx v = c * t.phase();
  auto [it, inserted] = terms_.try_emplace(t.string(), v);
  if (!inserted) it->second += v;
  if (std::abs(it->second) <= prune_) terms_.erase(it);
  return *this;
}

PauliSum& PauliSum::add(std::string_view letters, cplx c) {
  return add(PauliTerm::from_letters(letters), c);
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [s, c] : terms_)
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

double PauliSum::max_abs_difference(const PauliSum& other) const {
  check_same(other);
  double m = 0.0;
  for (const auto& [s, c] : terms_) m = std::max(m, std::abs(c - other.coefficient(s)));
  for (const auto& [s, c] : other.terms_)
    if (!terms_.contains(s)) m = std::max(m, std::abs(c));
  return m;
}

void PauliSum::check_same(const PauliSum& o) const {
  if (o.n_ != n_)
    throw DimensionError("PauliSum qubit mismatch: " + std::to_string(n_) + " vs " +
                         std::to_string(o.n_));
}

PauliSum& PauliSum::operator+=(const PauliSum& o) {
  check_same(o);
  for (const auto& [s, c] : o.terms_) add(PauliTerm(s), c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& o) {
  check_same(o);
  for (const auto& [s, c] : o.terms_) add(PauliTerm(s), -c);
  return *this;
}

PauliSum& PauliSum::operator*=(cplx s) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    if (std::abs(it->second) <= prune_)
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  a.check_same(b);
  PauliSum out(a.n_, a.prune_);
  for (const auto& [sa, ca] : a.terms_)
    for (const auto& [sb, cb] : b.terms_)
      out.add(pauli_mul(PauliTerm(sa), PauliTerm(sb)), ca * cb);
  return out;
}

PauliSum PauliSum::tensor_left(const PauliString& head) const {
  PauliSum out(n_ + head.n_qubits(), prune_);
  for (const auto& [s, c] : terms_)
    out.add(PauliTerm(s.widened_left(head.n_qubits(), head)), c);
  return out;
}

PauliSum pauli_commutator(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits())
    throw DimensionError("pauli_commutator: " + std::to_string(a.n_qubits()) + " vs " +
                         std::to_string(b.n_qubits()) + " qubits");
  PauliSum out(a.n_qubits(), a.prune_threshold());
  for (const auto& [sa, ca] : a.terms())
    for (const auto& [sb, cb] : b.terms()) {
      if (sa.commutes_with(sb)) continue;
      // Anticommuting strings: ab - ba = 2ab.
      out.add(pauli_mul(PauliTerm(sa), PauliTerm(sb)), 2.0 * ca * cb);
    }
  return out;
}

}  // namespace zenolie
