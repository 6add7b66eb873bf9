// Copyright 2026 The tsolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fmt/format.h>

#include <bit>
#include <cctype>

#include "tsolve/stabilizer.hpp"

namespace tsolve {

namespace {

const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

Pauli::Pauli(int n, Mask x, Mask z, int phase) : n_(n), x_(x), z_(z), phase_(((phase % 4) + 4) % 4) {
  check_qubit_count(n);
  if ((x | z) & ~full_mask(n))
    throw std::invalid_argument(fmt::format("Pauli support exceeds {} qubits", n));
}

Pauli Pauli::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  int phase = 0;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
    if (text[0] == '-') phase = 2;
    text.remove_prefix(1);
  }
  if (!text.empty() && text[0] == 'i') {
    phase += 1;
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty Pauli string");
  const int n = static_cast<int>(text.size());
  check_qubit_count(n);
  Mask x = 0, z = 0;
  for (int k = 0; k < n; ++k) {
    const Mask bit = Mask{1} << k;
    switch (text[k]) {
      case 'I':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        ++phase;
        break;
      default:
        throw std::invalid_argument(fmt::format("bad Pauli letter '{}' in '{}'", text[k], text));
    }
  }
  return {n, x, z, phase};
}

Pauli Pauli::single(int n, int qubit, char kind) {
  if (qubit < 1 || qubit > n) throw std::invalid_argument("qubit out of range");
  const Mask bit = Mask{1} << (qubit - 1);
  switch (kind) {
    case 'I':
      return identity(n);
    case 'X':
      return {n, bit, 0, 0};
    case 'Z':
      return {n, 0, bit, 0};
    case 'Y':
      return {n, bit, bit, 1};
  }
  throw std::invalid_argument(fmt::format("bad Pauli kind '{}'", kind));
}

bool Pauli::is_hermitian() const { return (phase_ - std::popcount(x_ & z_)) % 2 == 0; }

bool Pauli::commutes_with(const Pauli& o) const {
  return (std::popcount(x_ & o.z_) + std::popcount(z_ & o.x_)) % 2 == 0;
}

std::string Pauli::str() const {
  static const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  const int scalar = ((phase_ - std::popcount(x_ & z_)) % 4 + 4) % 4;
  std::string s = kPrefix[scalar];
  for (int k = 0; k < n_; ++k) {
    const bool xb = (x_ >> k) & 1, zb = (z_ >> k) & 1;
    s += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return s;
}

Pauli operator*(const Pauli& a, const Pauli& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("multiplying Paulis of different size");
  // Z^z1 X^x2 = (-1)^{z1.x2} X^x2 Z^z1
  return {a.n_, a.x_ ^ b.x_, a.z_ ^ b.z_, a.phase_ + b.phase_ + 2 * std::popcount(a.z_ & b.x_)};
}

StateVector apply_pauli(const Pauli& d, const StateVector& psi) {
  const int n = psi.n();
  if (d.n() != n)
    throw std::invalid_argument(fmt::format("Pauli on {} qubits applied to state on {}", d.n(), n));
  const Mask xi = reverse_bits(d.x(), n), zi = reverse_bits(d.z(), n);
  const cplx scalar = kIPow[d.phase()];
  StateVector out(n);
  for (std::size_t b = 0; b < psi.dim(); ++b) {
    const cplx v = psi[b] * scalar;
    out[b ^ xi] = (std::popcount(zi & b) & 1) ? -v : v;
  }
  return out;
}

Pauli conjugate_by_permutation(const Pauli& d, const Permutation& pi) {
  if (pi.n() != d.n()) throw std::invalid_argument("permutation and Pauli sizes differ");
  return {d.n(), pi.apply(d.x()), pi.apply(d.z()), d.phase()};
}

}  // namespace tsolve
