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

#include "tsolve/simulator.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <cmath>

#include "tsolve/kernels.hpp"

namespace tsolve {

namespace {

constexpr std::size_t kBlock = 2048;
// Upper bound on |T|^2 * 2^n / 2 complex multiply-adds for one Gram matrix.
constexpr double kMaxGramWork = 1e12;

Mask index_mask(const Trajectory& t, int n) {
  if (t.n() != n)
    throw std::invalid_argument(fmt::format("trajectory on {} qubits, state on {}", t.n(), n));
  return reverse_bits(t.mask(), n);
}

void check_state(const StateVector& psi) {
  if (psi.n() > kMaxStateQubits)
    throw ResourceLimitError(fmt::format("statevector on {} qubits exceeds {}", psi.n(),
                                         kMaxStateQubits));
}

// e^{i theta/2 (2k - w)} for k = 0..w: the R^(T) phase of a basis state with k
// ones inside T, |T| = w.
std::vector<cplx> phase_table(int w, double theta) {
  std::vector<cplx> table(w + 1);
  for (int k = 0; k <= w; ++k) table[k] = std::polar(1.0, 0.5 * theta * (2 * k - w));
  return table;
}

// M[(i,a),(j,b)] = <R^(T_a) psi_i | R^(T_b) psi_j>, rows ordered i * |T| + a.
Eigen::MatrixXcd perturbed_gram(const std::vector<StateVector>& states, const TrajectorySet& ts,
                                const Angle& theta) {
  const int n = ts.n();
  const std::size_t T = ts.size(), k = states.size(), rows = k * T;
  const std::size_t dim = std::size_t{1} << n;
  for (const auto& s : states) {
    check_state(s);
    if (s.n() != n)
      throw std::invalid_argument(fmt::format("state on {} qubits, trajectories on {}", s.n(), n));
  }
  if (0.5 * double(rows) * double(rows) * double(dim) > kMaxGramWork)
    throw ResourceLimitError(fmt::format(
        "Gram matrix of {} perturbed states on {} qubits exceeds the work cap", rows, n));

  std::vector<Mask> masks(T);
  std::vector<std::vector<cplx>> tables(T);
  for (std::size_t a = 0; a < T; ++a) {
    masks[a] = index_mask(ts[a], n);
    tables[a] = phase_table(ts[a].size(), theta.theta);
  }

  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(rows, rows);
  const std::size_t block = std::min(kBlock, dim);
  std::vector<cplx> u(rows * block);
  for (std::size_t base = 0; base < dim; base += block) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t a = 0; a < T; ++a) {
        cplx* row = &u[(i * T + a) * block];
        const auto& tab = tables[a];
        for (std::size_t x = 0; x < block; ++x)
          row[x] = tab[std::popcount((base + x) & masks[a])];
        kernels::cmul(row, states[i].data() + base, row, block);
      }
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = r; c < rows; ++c)
        g(r, c) += kernels::cdot(&u[r * block], &u[c * block], block);
  }
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < r; ++c) g(r, c) = std::conj(g(c, r));
  return g;
}

}  // namespace

void require_normalized(const StateVector& psi, double tol) {
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > tol)
    throw std::invalid_argument(fmt::format("state is not normalized (norm {:.12g})", norm));
}

DiagonalPhaseOp DiagonalPhaseOp::identity(int n) {
  check_qubit_count(n, kMaxStateQubits);
  return {n, std::vector<double>(std::size_t{1} << n, 0.0)};
}

DiagonalPhaseOp DiagonalPhaseOp::adjoint() const {
  DiagonalPhaseOp out = *this;
  for (auto& p : out.phases) p = -p;
  return out;
}

DiagonalPhaseOp operator*(const DiagonalPhaseOp& a, const DiagonalPhaseOp& b) {
  if (a.n != b.n) throw std::invalid_argument("diagonal operators on different qubit counts");
  DiagonalPhaseOp out = a;
  for (std::size_t i = 0; i < out.phases.size(); ++i) out.phases[i] += b.phases[i];
  return out;
}

DiagonalPhaseOp trajectory_phases(const Trajectory& t, const Angle& theta, int n) {
  DiagonalPhaseOp op = DiagonalPhaseOp::identity(n);
  const Mask m = index_mask(t, n);
  const int w = t.size();
  for (std::size_t b = 0; b < op.phases.size(); ++b)
    op.phases[b] = 0.5 * theta.theta * (2 * std::popcount(b & m) - w);
  return op;
}

DiagonalPhaseOp orthogonality_phases(const Trajectory& t, const Trajectory& t2, const Angle& theta,
                                     int n) {
  return trajectory_phases(t, theta, n).adjoint() * trajectory_phases(t2, theta, n);
}

StateVector apply_diagonal(const DiagonalPhaseOp& op, const StateVector& psi) {
  if (op.n != psi.n())
    throw std::invalid_argument(
        fmt::format("operator on {} qubits applied to state on {}", op.n, psi.n()));
  StateVector out = psi;
  for (std::size_t b = 0; b < out.dim(); ++b) out[b] *= std::polar(1.0, op.phases[b]);
  return out;
}

StateVector permutation_matrix_action(const Permutation& pi, const StateVector& psi) {
  const int n = psi.n();
  if (pi.n() != n)
    throw std::invalid_argument(fmt::format("permutation on {} qubits, state on {}", pi.n(), n));
  StateVector out(n);
  for (std::size_t b = 0; b < psi.dim(); ++b)
    out[reverse_bits(pi.apply(reverse_bits(b, n)), n)] = psi[b];
  return out;
}

GramMatrix gram_matrix(const StateVector& psi, const TrajectorySet& ts, const Angle& theta) {
  check_state(psi);
  require_normalized(psi);
  return perturbed_gram({psi}, ts, theta);
}

cplx gram_entry(const StateVector& psi, const Trajectory& t, const Trajectory& t2,
                const Angle& theta) {
  check_state(psi);
  const int n = psi.n();
  // Qubits in both trajectories contribute canceling phases.
  const Mask a = index_mask(t, n) & ~index_mask(t2, n);
  const Mask b = index_mask(t2, n) & ~index_mask(t, n);
  const int wa = std::popcount(a), wb = std::popcount(b);
  std::vector<cplx> table(wa + wb + 1);
  for (int d = 0; d <= wa + wb; ++d)
    table[d] = std::polar(1.0, 0.5 * theta.theta * (2 * (d - wa) - wb + wa));
  cplx sum = 0;
  for (std::size_t x = 0; x < psi.dim(); ++x) {
    const double p = std::norm(psi[x]);
    if (p != 0) sum += p * table[std::popcount(x & b) - std::popcount(x & a) + wa];
  }
  return sum;
}

TsReport verify_ts_state(const StateVector& psi, const TrajectorySet& ts, const Angle& theta,
                         double tol) {
  const GramMatrix g = gram_matrix(psi, ts, theta);
  TsReport r;
  for (Eigen::Index a = 0; a < g.rows(); ++a)
    for (Eigen::Index b = 0; b < g.cols(); ++b) {
      if (a == b)
        r.max_diag_dev = std::max(r.max_diag_dev, std::abs(g(a, a) - 1.0));
      else
        r.max_offdiag = std::max(r.max_offdiag, std::abs(g(a, b)));
    }
  r.is_ts = r.max_offdiag <= tol && r.max_diag_dev <= tol;
  return r;
}

TsReport verify_ts_state_on_orbits(const StateVector& psi, const std::vector<PairOrbit>& orbits,
                                   const Angle& theta, double tol) {
  require_normalized(psi);
  TsReport r;
  for (const auto& o : orbits) {
    const cplx v = gram_entry(psi, o.rep.first, o.rep.second, theta);
    if (o.rep.first == o.rep.second)
      r.max_diag_dev = std::max(r.max_diag_dev, std::abs(v - 1.0));
    else
      r.max_offdiag = std::max(r.max_offdiag, std::abs(v));
  }
  r.is_ts = r.max_offdiag <= tol && r.max_diag_dev <= tol;
  return r;
}

CodeReport verify_ts_code(const std::vector<StateVector>& basis, const TrajectorySet& ts,
                          const Angle& theta, double tol) {
  if (basis.empty()) throw std::invalid_argument("empty code basis");
  const std::size_t k = basis.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      const cplx v = inner(basis[i], basis[j]);
      if (std::abs(v - (i == j ? 1.0 : 0.0)) > tol)
        throw std::invalid_argument(fmt::format(
            "code basis is not orthonormal: <psi_{}|psi_{}> = {:.3g}{:+.3g}i", i, j, v.real(),
            v.imag()));
    }
  const Eigen::MatrixXcd g = perturbed_gram(basis, ts, theta);
  CodeReport r;
  r.dimension = k;
  for (Eigen::Index x = 0; x < g.rows(); ++x)
    for (Eigen::Index y = 0; y < g.cols(); ++y) {
      if (x == y)
        r.max_diag_dev = std::max(r.max_diag_dev, std::abs(g(x, y) - 1.0));
      else
        r.max_offdiag = std::max(r.max_offdiag, std::abs(g(x, y)));
    }
  r.is_ts_code = r.max_offdiag <= tol && r.max_diag_dev <= tol;
  return r;
}

}  // namespace tsolve
