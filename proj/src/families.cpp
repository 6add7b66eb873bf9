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

#include "tsolve/families.hpp"

#include <fmt/format.h>

#include <bit>
#include <cmath>
#include <numbers>

namespace tsolve {

namespace {

constexpr double kAngleSlack = 1e-12;

StateVector symmetric_state(int n, const Eigen::VectorXd& c) {
  return state_from_solution_symmetric(c, n, 1e-12);
}

// Clears rounding-level negatives and rescales so row 0 of A holds.
Eigen::VectorXd normalize_coefficients(Eigen::VectorXd c, int n) {
  for (Eigen::Index nu = 0; nu < c.size(); ++nu)
    if (c(nu) < 0) {
      if (c(nu) < -1e-10)
        throw InvariantError(fmt::format("coefficient c_{} = {:.3g} is negative", nu, c(nu)));
      c(nu) = 0;
    }
  double total = 0;
  for (Eigen::Index nu = 0; nu < c.size(); ++nu)
    total += c(nu) * alpha(n, static_cast<int>(nu)) * double(binomial(n, static_cast<int>(nu)));
  return c / total;
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::trivial:
      return "trivial";
    case Family::sym_general:
      return "sym_general";
    case Family::sym_m1:
      return "sym_m1";
    case Family::cyc_multiple:
      return "cyc_multiple";
  }
  return "?";
}

ThresholdFormula threshold_sym(int n, int m) {
  if (n < 1 || m < 0 || m > n)
    throw std::invalid_argument(fmt::format("need n >= 1 and 0 <= m <= n, got n={} m={}", n, m));
  ThresholdFormula f;
  f.family = Family::sym_general;
  f.n = n;
  f.m = m;
  f.theta_star = (n - 1) * std::numbers::pi / n;
  f.necessary = m == n / 2 || m == (n + 1) / 2;
  return f;
}

ThresholdFormula threshold_sym_m1(int n) {
  if (n <= 1) throw std::invalid_argument("the m = 1 threshold needs n > 1");
  ThresholdFormula f;
  f.family = Family::sym_m1;
  f.n = n;
  f.m = 1;
  f.theta_star = std::acos(-1.0 + 1.0 / ((n + 1) / 2));
  f.necessary = true;
  return f;
}

ThresholdFormula threshold_cyc(int m, int kappa) {
  if (m < 1 || kappa < 2) throw std::invalid_argument("cyclic formula needs m >= 1, kappa >= 2");
  ThresholdFormula f;
  f.family = Family::cyc_multiple;
  f.n = m * kappa;
  f.m = m;
  f.kappa = kappa;
  f.theta_star = std::acos(-1.0 + 1.0 / ((kappa + 1) / 2));
  f.necessary = false;
  return f;
}

std::optional<ThresholdFormula> best_formula(GroupKind kind, int n, int m) {
  if (n < 1 || m < 0 || m > n) return std::nullopt;
  if (m == 0 || m == n) {
    ThresholdFormula f;
    f.n = n;
    f.m = m;
    f.necessary = true;
    return f;
  }
  switch (kind) {
    case GroupKind::symmetric:
      if (m == 1 || m == n - 1) {
        auto f = threshold_sym_m1(n);
        f.m = m;
        return f;
      }
      return threshold_sym(n, m);
    case GroupKind::cyclic:
      if (n % m == 0) return threshold_cyc(m, n / m);
      return std::nullopt;
    case GroupKind::generic:
      return std::nullopt;
  }
  return std::nullopt;
}

Eigen::VectorXd ts_sym_coefficients(int n, const Angle& theta) {
  const int N = n / 2 + 1;
  Eigen::VectorXd c(N);
  for (int nu = 0; nu < N; ++nu) {
    const int k = N - 1 - nu;
    const double p = n % 2 == 0 ? chebyshev_T(k, theta.t) : chebyshev_W(k, theta.t);
    c(nu) = (k % 2 == 0 ? 1.0 : -1.0) * p;
  }
  return normalize_coefficients(c, n);
}

Eigen::VectorXd ts_sym_m1_coefficients(int n, const Angle& theta) {
  // Only the outer orbits are populated; row 1 of A fixes their ratio.
  const int N = n / 2 + 1;
  const ReducedMatrix a = build_A_symmetric(n, 1, theta);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(N);
  c(N - 1) = 1.0;
  c(0) = -a.entries(1, N - 1) / a.entries(1, 0);
  return normalize_coefficients(c, n);
}

StateVector construct_ts_sym(int n, int m, const Angle& theta) {
  const auto f = threshold_sym(n, m);
  if (theta.theta < f.theta_star - kAngleSlack)
    throw std::invalid_argument(fmt::format(
        "theta = {:.12g} is below the guaranteed threshold (n-1)pi/n = {:.12g}", theta.theta,
        f.theta_star));
  if (n == 1) return StateVector(1, {std::sqrt(0.5), std::sqrt(0.5)});
  return symmetric_state(n, ts_sym_coefficients(n, theta));
}

StateVector construct_ts_sym_m1(int n, const Angle& theta) {
  const auto f = threshold_sym_m1(n);
  if (theta.theta < f.theta_star - kAngleSlack)
    throw std::invalid_argument(fmt::format(
        "theta = {:.12g} is below the m = 1 threshold arccos(-1 + 1/ceil(n/2)) = {:.12g}",
        theta.theta, f.theta_star));
  return symmetric_state(n, ts_sym_m1_coefficients(n, theta));
}

StateVector construct_ts_cyc(int m, int kappa, const Angle& theta) {
  const auto f = threshold_cyc(m, kappa);
  if (theta.theta < f.theta_star - kAngleSlack)
    throw std::invalid_argument(fmt::format(
        "theta = {:.12g} is below the cyclic bound arccos(-1 + 1/ceil(kappa/2)) = {:.12g}",
        theta.theta, f.theta_star));
  const int n = m * kappa;
  check_qubit_count(n, kMaxStateQubits);
  const StateVector column = construct_ts_sym_m1(kappa, theta);
  StateVector psi(n);
  for (std::size_t x = 0; x < psi.dim(); ++x) {
    cplx amp = 1.0;
    for (int s = 1; s <= m && amp != 0.0; ++s) {
      std::size_t sub = 0;
      for (int r = 0; r < kappa; ++r) {
        const int qubit = r * m + s;  // row r + 1, column s
        sub = (sub << 1) | ((x >> (n - qubit)) & 1);
      }
      amp *= column[sub];
    }
    psi[x] = amp;
  }
  return psi;
}

std::vector<int> m_values(MRule rule, int n, int fixed_m) {
  switch (rule) {
    case MRule::half:
      return {n / 2};
    case MRule::one:
      return {1};
    case MRule::fixed:
      return {fixed_m};
    case MRule::all: {
      std::vector<int> all(n + 1);
      for (int m = 0; m <= n; ++m) all[m] = m;
      return all;
    }
  }
  return {};
}

std::vector<SweepRow> sweep_thresholds(GroupKind group, int n_min, int n_max, MRule rule,
                                       int fixed_m, const ThresholdOptions& opt) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("invalid n range");
  if (group == GroupKind::generic) throw std::invalid_argument("sweeps cover sym and cyc only");
  std::vector<SweepRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    if (group == GroupKind::cyclic && rule == MRule::half && n % 2 != 0) continue;
    for (int m : m_values(rule, n, fixed_m)) {
      if (m < 0 || m > n) continue;
      SweepRow row;
      row.n = n;
      row.m = m;
      row.group = group;
      if (auto f = best_formula(group, n, m)) row.theta_formula = f->theta_star;
      ThresholdResult t;
      if (group == GroupKind::symmetric) {
        t = find_threshold(ReducedSystem::symmetric(n, m), opt);
      } else {
        const auto g = PermutationGroup::cyclic(n);
        const auto table = build_orbit_table(g, generate_transitive_set(g, m));
        t = find_threshold(ReducedSystem::from_orbits(table), opt);
      }
      if (t.found) row.theta_lp = t.theta;
      if (row.theta_formula && row.theta_lp) row.delta = std::abs(*row.theta_formula - *row.theta_lp);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace tsolve
