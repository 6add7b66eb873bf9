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

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>

#include "tsolve/kernels.hpp"
#include "tsolve/stabilizer.hpp"

namespace tsolve {

namespace {

constexpr int kMaxDenseStabilizerQubits = 16;

// Lowest set position of the symplectic vector (x | z << n), as (is_z, bit).
std::pair<bool, int> pivot_of(const Pauli& p) {
  if (p.x()) return {false, std::countr_zero(p.x())};
  return {true, std::countr_zero(p.z())};
}

bool has_bit(const Pauli& p, std::pair<bool, int> piv) {
  return ((piv.first ? p.z() : p.x()) >> piv.second) & 1;
}

void axpy(cplx s, const StateVector& x, StateVector& y) {
  for (std::size_t i = 0; i < y.dim(); ++i) y[i] += s * x[i];
}

StateVector project_plus(const std::vector<Pauli>& gens, StateVector v) {
  for (const auto& g : gens) {
    const StateVector gv = apply_pauli(g, v);
    for (std::size_t i = 0; i < v.dim(); ++i) v[i] = 0.5 * (v[i] + gv[i]);
  }
  return v;
}

// Orthonormal basis of the +1 eigenspace of commuting generators.
std::vector<StateVector> eigenspace_basis(int n, const std::vector<Pauli>& gens, std::size_t target) {
  check_qubit_count(n, kMaxDenseStabilizerQubits);
  std::vector<StateVector> basis;
  const std::size_t dim = std::size_t{1} << n;
  for (std::size_t seed = 0; seed < dim && basis.size() < target; ++seed) {
    StateVector v = project_plus(gens, StateVector::basis(n, seed));
    if (v.norm() < 1e-8) continue;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) axpy(-kernels::cdot(b.data(), v.data(), v.dim()), b, v);
    if (v.norm() < 1e-6) continue;
    v.normalize();
    basis.push_back(std::move(v));
  }
  if (basis.size() != target)
    throw InvariantError(fmt::format("found {} of {} code-space basis vectors", basis.size(), target));
  return basis;
}

}  // namespace

StabilizerGroup::StabilizerGroup(int n, std::vector<Pauli> generators)
    : n_(n), gens_(std::move(generators)) {
  check_qubit_count(n);
  for (const auto& g : gens_) {
    if (g.n() != n)
      throw std::invalid_argument(fmt::format("generator {} is not on {} qubits", g.str(), n));
    if (!g.is_hermitian()) throw std::invalid_argument(fmt::format("generator {} is not Hermitian", g.str()));
  }
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (!gens_[i].commutes_with(gens_[j]))
        throw std::invalid_argument(
            fmt::format("generators {} and {} anticommute", gens_[i].str(), gens_[j].str()));

  // GF(2) elimination that carries the exact phase of each product: a
  // generator reducing to -I exposes -I in the group.
  std::vector<std::pair<Pauli, std::pair<bool, int>>> rows;
  for (const auto& g : gens_) {
    Pauli p = g;
    for (const auto& [row, piv] : rows)
      if (has_bit(p, piv)) p = p * row;
    if (p.is_identity_up_to_phase()) {
      if (p.phase() != 0)
        throw std::invalid_argument(fmt::format(
            "-I is in the group generated by {} (empty code space)", g.str()));
      continue;
    }
    rows.emplace_back(p, pivot_of(p));
  }
  rank_ = static_cast<int>(rows.size());
}

StabilizerGroup StabilizerGroup::parse(std::string_view text) {
  std::vector<Pauli> gens;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      gens.push_back(Pauli::parse(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(fmt::format("line {}: {}", line_no, e.what()));
    }
    if (gens.back().n() != gens.front().n())
      throw std::invalid_argument(fmt::format("line {}: generator length differs", line_no));
  }
  if (gens.empty()) throw std::invalid_argument("no stabilizer generators");
  const int n = gens.front().n();
  return StabilizerGroup(n, std::move(gens));
}

std::vector<Pauli> StabilizerGroup::elements() const {
  if (gens_.size() > 20) throw ResourceLimitError("more than 20 generators");
  std::vector<Pauli> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << gens_.size()); ++s) {
    Pauli p = Pauli::identity(n_);
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if ((s >> i) & 1) p = p * gens_[i];
    out.push_back(p);
  }
  return out;
}

CodeSpace stabilizer_state(const StabilizerGroup& s) {
  const int n = s.n();
  if (n > kMaxDenseStabilizerQubits)
    throw ResourceLimitError(fmt::format("dense stabilizer path is limited to {} qubits",
                                         kMaxDenseStabilizerQubits));
  CodeSpace code;
  code.n = n;
  code.basis = eigenspace_basis(n, s.generators(), std::size_t{1} << (n - s.rank()));
  for (const auto& v : code.basis)
    for (const auto& g : s.generators()) {
      const StateVector gv = apply_pauli(g, v);
      double dev = 0;
      for (std::size_t i = 0; i < v.dim(); ++i) dev = std::max(dev, std::abs(gv[i] - v[i]));
      if (dev > 1e-10)
        throw InvariantError(fmt::format("code vector not fixed by {} (deviation {:.3g})", g.str(), dev));
    }
  if (code.basis.size() == 1) code.basis[0].canonicalize_phase();
  return code;
}

namespace {

AnticommutatorReport anticommutator_on_basis(const Pauli& d, const Trajectory& t,
                                             const Trajectory& t2, const Angle& theta,
                                             const std::vector<StateVector>& basis, double tol) {
  const DiagonalPhaseOp r = orthogonality_phases(t, t2, theta, d.n());
  AnticommutatorReport rep;
  rep.dim_v = basis.size();
  double sq = 0;
  for (const auto& v : basis) {
    const StateVector a = apply_pauli(d, apply_diagonal(r, v));
    const StateVector b = apply_diagonal(r, apply_pauli(d, v));
    for (std::size_t i = 0; i < a.dim(); ++i) sq += std::norm(a[i] + b[i]);
  }
  rep.norm = std::sqrt(sq);
  rep.holds = rep.norm <= tol;
  return rep;
}

std::vector<StateVector> subspace_basis(int n, const std::vector<Pauli>& v_spec) {
  if (!v_spec.empty()) return stabilizer_state(StabilizerGroup(n, v_spec)).basis;
  check_qubit_count(n, kMaxDenseStabilizerQubits);
  std::vector<StateVector> basis;
  for (std::size_t b = 0; b < (std::size_t{1} << n); ++b) basis.push_back(StateVector::basis(n, b));
  return basis;
}

}  // namespace

AnticommutatorReport projected_anticommutator_check(const Pauli& d, const Trajectory& t,
                                                    const Trajectory& t2, const Angle& theta,
                                                    const std::vector<Pauli>& v_spec, double tol) {
  for (const auto& v : v_spec)
    if (!d.commutes_with(v))
      throw std::invalid_argument(fmt::format("{} does not commute with {}", d.str(), v.str()));
  return anticommutator_on_basis(d, t, t2, theta, subspace_basis(d.n(), v_spec), tol);
}

std::optional<AnticommutationWitness> find_anticommutation_witness(const StabilizerGroup& s,
                                                                   const Trajectory& t,
                                                                   const Trajectory& t2,
                                                                   const Angle& theta) {
  const auto& gens = s.generators();
  const std::size_t k = gens.size();
  if (k > 12) throw ResourceLimitError("witness search is limited to 12 generators");
  std::vector<std::uint32_t> subsets(std::size_t{1} << k);
  std::iota(subsets.begin(), subsets.end(), 0u);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  std::map<std::uint32_t, std::vector<StateVector>> bases;
  for (const auto& d : s.elements()) {
    if (d.is_identity_up_to_phase()) continue;
    for (std::uint32_t sub : subsets) {
      std::vector<Pauli> v;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i)
        if ((sub >> i) & 1) {
          ok = d.commutes_with(gens[i]);
          v.push_back(gens[i]);
        }
      if (!ok) continue;
      auto it = bases.find(sub);
      if (it == bases.end()) it = bases.emplace(sub, subspace_basis(s.n(), v)).first;
      const auto rep = anticommutator_on_basis(d, t, t2, theta, it->second, 1e-10);
      if (rep.holds) return AnticommutationWitness{d, v, rep};
    }
  }
  return std::nullopt;
}

}  // namespace tsolve
