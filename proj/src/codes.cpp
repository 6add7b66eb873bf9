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

// Worked stabilizer examples, the [[n,1]] logical code and the two
// concatenation transforms.

#include <fmt/format.h>

#include <bit>
#include <cmath>
#include <functional>
#include <numbers>

#include "tsolve/families.hpp"
#include "tsolve/lp.hpp"
#include "tsolve/stabilizer.hpp"

namespace tsolve {

namespace {

StabilizerGroup group_of(std::initializer_list<const char*> gens) {
  std::vector<Pauli> ps;
  for (const char* g : gens) ps.push_back(Pauli::parse(g));
  const int n = ps.front().n();
  return StabilizerGroup(n, std::move(ps));
}

Trajectory traj(int n, std::initializer_list<int> q) { return Trajectory::from_members(n, q); }

const Angle kHalfPi(std::numbers::pi / 2);

}  // namespace

CodeFixture c4_fixture() {
  CodeFixture f;
  f.name = "c4";
  f.group = group_of({"-ZIZI", "-IZIZ", "+XIXI", "+IXIX"});
  const auto g = PermutationGroup::cyclic(4);
  f.ts = generate_transitive_set(g, 2);
  f.theta = kHalfPi;
  f.cases.push_back({Pauli::parse("XIXI"), traj(4, {1, 2}), traj(4, {2, 3}), {Pauli::parse("-ZIZI")}});
  return f;
}

CodeFixture c6_fixture() {
  CodeFixture f;
  f.name = "c6";
  f.group = group_of({"-ZIIZII", "-IZIIZI", "-IIZIIZ", "+XIIXII", "+IXIIXI", "+IIXIIX"});
  f.ts = generate_transitive_set(PermutationGroup::cyclic(6), 3);
  f.theta = kHalfPi;
  return f;  // anticommutation is checked exhaustively by witness search
}

CodeFixture toric_fixture() {
  CodeFixture f;
  f.name = "toric";
  f.group = group_of({"XXXIIIXI", "XXIXIIIX", "IIXIXXXI", "IIIXXXIX",  // X1237 X1248 X3567 X4568
                      "ZIZZZIII", "IZZZIZII", "ZIIIZIZZ", "IZIIIZZZ",  // Z1345 Z2346 Z1578 Z2678
                      "-ZZIIIIII", "-IIZIIIZI"});                     // -Z12 -Z37
  const int n = 8;
  f.ts = TrajectorySet(n, {traj(n, {1, 3, 4, 5}), traj(n, {1, 5, 7, 8}), traj(n, {2, 4, 5, 7}),
                           traj(n, {2, 3, 5, 8})});
  f.theta = kHalfPi;
  f.cases.push_back({Pauli::parse("IIXIXXXI"), f.ts[0], f.ts[1], {Pauli::parse("-IIZIIIZI")}});
  f.cases.push_back({Pauli::parse("IIIXXXIX"), f.ts[0], f.ts[3], {Pauli::parse("-IIIZIIIZ")}});
  return f;
}

PermutationGroup toric_symmetry_group() {
  return PermutationGroup::generic(8, {Permutation::parse_cycles("(1 2)(4 8)", 8),
                                       Permutation::parse_cycles("(3 7)(4 8)", 8)});
}

// ---- [[n,1]] code ----

StateVector apply_logical_z(const StateVector& psi) {
  StateVector out = psi;
  const int n = psi.n();
  for (std::size_t b = 0; b < out.dim(); ++b)
    if (std::popcount(b) > n / 2) out[b] = -out[b];
  return out;
}

StateVector apply_logical_x(const StateVector& psi) {
  return apply_pauli(Pauli::x_on(psi.n(), full_mask(psi.n())), psi);
}

CtsCode build_cts_code(int n, int m, const Angle& theta) {
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument(fmt::format("the [[n,1]] construction needs odd n, got {}", n));
  CtsCode code;
  code.n = n;
  code.m = m;
  code.theta = theta;
  code.ts = generate_transitive_set(PermutationGroup::symmetric(n), m);
  const double slack = 1e-12;
  if (theta.theta >= threshold_sym(n, m).theta_star - slack) {
    code.plus = construct_ts_sym(n, m, theta);
  } else if (n > 1 && (m == 1 || m == n - 1) && theta.theta >= threshold_sym_m1(n).theta_star - slack) {
    code.plus = construct_ts_sym_m1(n, theta);
  } else {
    const auto res = solve_feasibility(build_Aprime(n, m, theta));
    if (!res.feasible)
      throw std::invalid_argument(
          fmt::format("no permutation-invariant TS state for n={} m={} at theta={:.12g}", n, m, theta.theta));
    code.plus = state_from_solution_symmetric(res.c, n);
  }
  code.minus = apply_logical_z(code.plus);
  StateVector zero(n), one(n);
  const double r = std::sqrt(0.5);
  for (std::size_t b = 0; b < zero.dim(); ++b) {
    zero[b] = r * (code.plus[b] + code.minus[b]);
    one[b] = r * (code.plus[b] - code.minus[b]);
  }
  code.code.n = n;
  code.code.basis = {zero, one};
  return code;
}

// ---- concatenation ----

namespace {

TrajectorySet block_trajectories(const TrajectorySet& logical, int block) {
  const int n = logical.n();
  std::vector<Trajectory> out;
  for (const auto& t : logical) {
    Mask m = 0;
    for (int q : t.members()) m |= full_mask(block) << ((q - 1) * block);
    out.emplace_back(n * block, m);
  }
  return TrajectorySet(n * block, std::move(out));
}

void check_logical(const StateVector& psi, const TrajectorySet& ts) {
  if (psi.n() < 1) throw std::invalid_argument("concatenation needs at least one logical qubit");
  if (ts.n() != psi.n())
    throw std::invalid_argument(fmt::format("logical state on {} qubits, trajectories on {}", psi.n(), ts.n()));
}

}  // namespace

Concatenated concat_repetition(const StateVector& psi, const TrajectorySet& logical_ts,
                               const Angle& theta, int n_prime) {
  check_logical(psi, logical_ts);
  if (n_prime < 1) throw std::invalid_argument("n' must be at least 1");
  const int n = psi.n();
  if (n * n_prime > kMaxStateQubits)
    throw ResourceLimitError(fmt::format("{} physical qubits exceed {}", n * n_prime, kMaxStateQubits));
  Concatenated out;
  out.state = StateVector(n * n_prime);
  for (std::size_t j = 0; j < psi.dim(); ++j) {
    std::size_t phys = 0;
    for (int k = n - 1; k >= 0; --k)
      phys = (phys << n_prime) | (((j >> k) & 1) ? full_mask(n_prime) : 0);
    out.state[phys] = psi[j];
  }
  out.ts = block_trajectories(logical_ts, n_prime);
  out.theta = Angle(theta.theta / n_prime);
  return out;
}

StabilizerGroup steane_group() {
  return group_of({"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"});
}

std::pair<StateVector, StateVector> steane_logical_states() {
  auto gens = steane_group().generators();
  gens.push_back(Pauli::z_on(7, full_mask(7)));
  const auto code = stabilizer_state(StabilizerGroup(7, gens));
  StateVector zero = code.basis.at(0);
  return {zero, apply_logical_x(zero)};
}

Concatenated concat_steane(const StateVector& psi, const TrajectorySet& logical_ts) {
  check_logical(psi, logical_ts);
  const int n = psi.n();
  if (7 * n > kMaxStateQubits)
    throw ResourceLimitError(fmt::format("{} Steane blocks exceed the statevector cap", n));
  const auto [zero, one] = steane_logical_states();
  Concatenated out;
  out.state = StateVector(7 * n);
  for (std::size_t j = 0; j < psi.dim(); ++j) {
    if (psi[j] == 0.0) continue;
    StateVector term = ((j >> (n - 1)) & 1) ? one : zero;
    for (int k = n - 2; k >= 0; --k) term = tensor(term, ((j >> k) & 1) ? one : zero);
    for (std::size_t i = 0; i < term.dim(); ++i) out.state[i] += psi[j] * term[i];
  }
  out.ts = block_trajectories(logical_ts, 7);
  out.theta = kHalfPi;
  return out;
}

// ---- error-resilience demo ----

namespace {

// Block generators shifted onto qubits 7b+1..7b+7 of an n-qubit register.
std::vector<Pauli> shifted_generators(int n, int block) {
  const StabilizerGroup steane = steane_group();
  std::vector<Pauli> out;
  for (const auto& g : steane.generators())
    out.emplace_back(n, g.x() << (7 * block), g.z() << (7 * block), g.phase());
  return out;
}

// Syndrome bits: 0-2 from the X-type generators, 3-5 from the Z-type ones.
// Each triple read as a binary number (first generator most significant)
// names the qubit carrying the error.
StateVector correct(const StateVector& psi, int blocks, const std::vector<int>& syndrome) {
  StateVector out = psi;
  const int n = psi.n();
  for (int b = 0; b < blocks; ++b) {
    const int s = syndrome[b];
    const int z_at = ((s >> 0) & 1) << 2 | ((s >> 1) & 1) << 1 | ((s >> 2) & 1);
    const int x_at = ((s >> 3) & 1) << 2 | ((s >> 4) & 1) << 1 | ((s >> 5) & 1);
    if (x_at) out = apply_pauli(Pauli::single(n, 7 * b + x_at, 'X'), out);
    if (z_at) out = apply_pauli(Pauli::single(n, 7 * b + z_at, 'Z'), out);
  }
  return out;
}

}  // namespace

SteaneDemo run_steane_demo(double tol) {
  const int n_logical = 2;
  StateVector logical(n_logical);
  logical[1] = logical[2] = std::sqrt(0.5);
  const TrajectorySet logical_ts(n_logical, {traj(2, {1}), traj(2, {2})});
  const Concatenated phys = concat_steane(logical, logical_ts);
  const int n = phys.state.n();

  SteaneDemo demo;
  demo.clean = verify_ts_state(phys.state, phys.ts, phys.theta, tol);
  demo.passed = demo.clean.is_ts;

  std::vector<Pauli> gens;
  for (int b = 0; b < n_logical; ++b)
    for (auto& g : shifted_generators(n, b)) gens.push_back(g);

  for (int q = 1; q <= n; ++q)
    for (char kind : {'X', 'Y', 'Z'}) {
      ErrorTrial trial;
      trial.qubit = q;
      trial.kind = kind;
      trial.passed = true;
      double best_prob = -1;
      // Enumerate every syndrome branch with nonzero probability.
      std::function<void(const StateVector&, std::size_t, std::vector<int>)> measure =
          [&](const StateVector& v, std::size_t gi, std::vector<int> syn) {
            if (gi == gens.size()) {
              const double prob = v.norm() * v.norm();
              StateVector fixed = correct(v, n_logical, syn);
              fixed.normalize();
              const double fid = std::norm(inner(phys.state, fixed));
              const TsReport rep = verify_ts_state(fixed, phys.ts, phys.theta, tol);
              if (!(rep.is_ts && fid >= 1 - tol)) trial.passed = false;
              if (prob > best_prob) {
                best_prob = prob;
                trial.syndrome = syn;
                trial.fidelity = fid;
                trial.report = rep;
              }
              return;
            }
            const StateVector gv = apply_pauli(gens[gi], v);
            for (int outcome = 0; outcome < 2; ++outcome) {
              StateVector branch(v.n());
              const double sign = outcome ? -1.0 : 1.0;
              for (std::size_t i = 0; i < v.dim(); ++i) branch[i] = 0.5 * (v[i] + sign * gv[i]);
              if (branch.norm() < 1e-9) continue;
              auto next = syn;
              if (outcome) next[gi / 6] |= 1 << (gi % 6);
              measure(branch, gi + 1, std::move(next));
            }
          };
      measure(apply_pauli(Pauli::single(n, q, kind), phys.state), 0, std::vector<int>(n_logical, 0));
      demo.passed = demo.passed && trial.passed;
      demo.trials.push_back(std::move(trial));
    }
  return demo;
}

}  // namespace tsolve
