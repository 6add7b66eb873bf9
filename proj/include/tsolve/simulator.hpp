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

#pragma once

// Dense statevector oracle. Every perturbation is diagonal in the Z basis, so
// operators are stored as real eigenphase arrays indexed by basis index.

#include <Eigen/Dense>
#include <vector>

#include "tsolve/core.hpp"
#include "tsolve/groups.hpp"

namespace tsolve {

inline constexpr double kDefaultTol = 1e-9;

struct DiagonalPhaseOp {
  int n = 0;
  std::vector<double> phases;  // amplitude b is multiplied by exp(i phases[b])

  static DiagonalPhaseOp identity(int n);
  DiagonalPhaseOp adjoint() const;
  // Product of two diagonal operators (phases add).
  friend DiagonalPhaseOp operator*(const DiagonalPhaseOp& a, const DiagonalPhaseOp& b);
};

// R^(T)(theta): R_Z(theta) on every qubit of T, with R_Z|0> = e^{-i theta/2}|0>.
DiagonalPhaseOp trajectory_phases(const Trajectory& t, const Angle& theta, int n);
// R^(T)(theta)^dagger R^(T2)(theta).
DiagonalPhaseOp orthogonality_phases(const Trajectory& t, const Trajectory& t2, const Angle& theta,
                                     int n);

StateVector apply_diagonal(const DiagonalPhaseOp& op, const StateVector& psi);
// Amplitude at pi(b) is the input amplitude at b.
StateVector permutation_matrix_action(const Permutation& pi, const StateVector& psi);

using GramMatrix = Eigen::MatrixXcd;

// G_ab = <R^(T_a) psi | R^(T_b) psi>. Throws std::invalid_argument when psi is
// not normalized to within 1e-9.
GramMatrix gram_matrix(const StateVector& psi, const TrajectorySet& ts, const Angle& theta);
// A single entry <R^(T) psi | R^(T2) psi>, without building the whole matrix.
cplx gram_entry(const StateVector& psi, const Trajectory& t, const Trajectory& t2,
                const Angle& theta);

struct TsReport {
  bool is_ts = false;
  double max_offdiag = 0;   // max |G_ab|, a != b
  double max_diag_dev = 0;  // max |G_aa - 1|
};

TsReport verify_ts_state(const StateVector& psi, const TrajectorySet& ts, const Angle& theta,
                         double tol = kDefaultTol);
// Same verdict from one Gram entry per pair orbit. Valid only when psi is
// invariant under the group that generated the orbits.
TsReport verify_ts_state_on_orbits(const StateVector& psi, const std::vector<PairOrbit>& orbits,
                                   const Angle& theta, double tol = kDefaultTol);

struct CodeReport {
  bool is_ts_code = false;
  double max_offdiag = 0;   // largest |<psi_i|R^(T,T')|psi_j>| that should vanish
  double max_diag_dev = 0;  // largest |<psi_i|psi_i> - 1| over the diagonal blocks
  std::size_t dimension = 0;
};

// Checks <psi_i|R^(T)^dagger R^(T')|psi_j> = delta_{TT'} delta_ij. Throws
// std::invalid_argument when the basis is not orthonormal within tol.
CodeReport verify_ts_code(const std::vector<StateVector>& basis, const TrajectorySet& ts,
                          const Angle& theta, double tol = kDefaultTol);

void require_normalized(const StateVector& psi, double tol = 1e-9);

}  // namespace tsolve
