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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsolve/core.hpp"
#include "tsolve/groups.hpp"
#include "tsolve/simulator.hpp"

namespace tsolve {

// i^phase * prod_k X_k^{x_k} Z_k^{z_k}; Y_k is stored as x = z = 1 with one
// extra factor of i. Masks use the qubit-bit convention of Trajectory.
class Pauli {
 public:
  Pauli() = default;
  Pauli(int n, Mask x, Mask z, int phase = 0);

  static Pauli identity(int n) { return {n, 0, 0, 0}; }
  // "-ZIZI", "+XXXX", "iY"; the optional prefix is one of + - i -i +i.
  static Pauli parse(std::string_view text);
  static Pauli x_on(int n, Mask qubits) { return {n, qubits, 0, 0}; }
  static Pauli z_on(int n, Mask qubits) { return {n, 0, qubits, 0}; }
  static Pauli single(int n, int qubit, char kind);  // kind in I, X, Y, Z

  int n() const { return n_; }
  Mask x() const { return x_; }
  Mask z() const { return z_; }
  int phase() const { return phase_; }  // exponent of i, 0..3
  // Qubits receiving X or Y: the support of the induced string relabeling.
  Mask sigma() const { return x_; }

  bool is_hermitian() const;
  bool is_identity_up_to_phase() const { return x_ == 0 && z_ == 0; }
  bool commutes_with(const Pauli& o) const;
  // Sign/letter form, e.g. "-XIZY"; "i" or "-i" prefixes for non-Hermitian.
  std::string str() const;

  friend Pauli operator*(const Pauli& a, const Pauli& b);
  friend bool operator==(const Pauli&, const Pauli&) = default;

 private:
  int n_ = 0;
  Mask x_ = 0, z_ = 0;
  int phase_ = 0;
};

StateVector apply_pauli(const Pauli& d, const StateVector& psi);
// P_pi D P_pi^dagger: the Pauli acting on qubit pi(k) what D acts on k.
Pauli conjugate_by_permutation(const Pauli& d, const Permutation& pi);

class StabilizerGroup {
 public:
  StabilizerGroup() = default;
  // Throws std::invalid_argument for non-Hermitian or anticommuting
  // generators, for -I in the generated group, or mismatched sizes.
  StabilizerGroup(int n, std::vector<Pauli> generators);
  // One generator per non-blank line; '#' starts a comment.
  static StabilizerGroup parse(std::string_view text);

  int n() const { return n_; }
  const std::vector<Pauli>& generators() const { return gens_; }
  int rank() const { return rank_; }
  // All 2^k products of the generators (k <= 20).
  std::vector<Pauli> elements() const;

 private:
  int n_ = 0;
  std::vector<Pauli> gens_;
  int rank_ = 0;
};

struct CodeSpace {
  int n = 0;
  std::vector<StateVector> basis;  // orthonormal
  std::size_t dimension() const { return basis.size(); }
};

// Orthonormal basis of the joint +1 eigenspace, dimension 2^(n - rank).
// Single states get a canonical global phase.
CodeSpace stabilizer_state(const StabilizerGroup& s);

struct AnticommutatorReport {
  bool holds = false;
  double norm = 0;  // Frobenius norm of {D, R^(T,T2)} restricted to V
  std::size_t dim_v = 0;
};

// Checks {D, R^(T,T2)(theta)} Pi_V = 0, with V the joint +1 eigenspace of
// v_spec (the full space when v_spec is empty), to within tol.
AnticommutatorReport projected_anticommutator_check(const Pauli& d, const Trajectory& t,
                                                    const Trajectory& t2, const Angle& theta,
                                                    const std::vector<Pauli>& v_spec,
                                                    double tol = 1e-10);

struct AnticommutationWitness {
  Pauli d;
  std::vector<Pauli> v_spec;
  AnticommutatorReport report;
};

// Searches D in the group and V given by a subset of the generators commuting
// with D (smallest subsets first).
std::optional<AnticommutationWitness> find_anticommutation_witness(const StabilizerGroup& s,
                                                                   const Trajectory& t,
                                                                   const Trajectory& t2,
                                                                   const Angle& theta);

// ---- worked examples ----

struct AnticommutationCase {
  Pauli d;
  Trajectory t, t2;
  std::vector<Pauli> v_spec;
};

struct CodeFixture {
  std::string name;
  StabilizerGroup group;
  TrajectorySet ts;
  Angle theta;
  std::vector<AnticommutationCase> cases;  // documented representatives
};

CodeFixture c4_fixture();
CodeFixture c6_fixture();
CodeFixture toric_fixture();
// Symmetries pi1 = (1 2)(4 8) and pi2 = (3 7)(4 8) of the toric state.
PermutationGroup toric_symmetry_group();

// ---- logical codes ----

struct CtsCode {
  int n = 0, m = 0;
  Angle theta;
  TrajectorySet ts;
  StateVector plus, minus;  // |+_L>, |-_L> = Z_L |+_L>
  CodeSpace code;           // {|0_L>, |1_L>}
};

// Negates strings of weight > floor(n/2).
StateVector apply_logical_z(const StateVector& psi);
StateVector apply_logical_x(const StateVector& psi);  // X on every qubit

// n odd. |+_L> comes from the closed-form symmetric constructions when they
// apply at theta and from the reduced LP otherwise.
CtsCode build_cts_code(int n, int m, const Angle& theta);

struct Concatenated {
  StateVector state;
  TrajectorySet ts;
  Angle theta;
};

// Each logical qubit becomes n' physical qubits; logical trajectories become
// unions of whole blocks and the physical angle is theta / n'.
Concatenated concat_repetition(const StateVector& psi, const TrajectorySet& logical_ts,
                               const Angle& theta, int n_prime);

StabilizerGroup steane_group();  // 3 X-type + 3 Z-type generators
// Steane |0_L>, |1_L> with |1_L> = X^7 |0_L>.
std::pair<StateVector, StateVector> steane_logical_states();
// Each logical qubit encoded in a 7-qubit block; physical trajectories are
// whole blocks at theta = pi/2, which acts as a logical R_Z^dagger(pi/2).
Concatenated concat_steane(const StateVector& psi, const TrajectorySet& logical_ts);

struct ErrorTrial {
  int qubit = 0;
  char kind = 'X';
  std::vector<int> syndrome;  // per block, 6 bits packed as an integer
  double fidelity = 0;        // |<clean|corrected>|^2
  TsReport report;
  bool passed = false;
};

struct SteaneDemo {
  TsReport clean;
  std::vector<ErrorTrial> trials;  // every single-qubit X, Y, Z error
  bool passed = false;
};

SteaneDemo run_steane_demo(double tol = kDefaultTol);

}  // namespace tsolve
