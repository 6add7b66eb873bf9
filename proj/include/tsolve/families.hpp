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
#include <vector>

#include "tsolve/core.hpp"
#include "tsolve/groups.hpp"
#include "tsolve/lp.hpp"

namespace tsolve {

enum class Family { trivial, sym_general, sym_m1, cyc_multiple };
const char* family_name(Family f);

struct ThresholdFormula {
  Family family = Family::trivial;
  int n = 0, m = 0, kappa = 0;
  double theta_star = 0;
  bool sufficient = true;
  bool necessary = false;
};

// (n-1)pi/n; necessary as well when m is floor(n/2) or ceil(n/2).
ThresholdFormula threshold_sym(int n, int m);
// arccos(-1 + 1/ceil(n/2)); necessary and sufficient for m in {1, n-1}.
ThresholdFormula threshold_sym_m1(int n);
// arccos(-1 + 1/ceil(kappa/2)) for n = kappa m; sufficient only.
ThresholdFormula threshold_cyc(int m, int kappa);
// The sharpest formula known for (group, n, m), if any.
std::optional<ThresholdFormula> best_formula(GroupKind kind, int n, int m);

// Symmetric-orbit coefficients c_nu (sum c_nu |omega_nu| = 1) of the state
// below; exposed for tests.
Eigen::VectorXd ts_sym_coefficients(int n, const Angle& theta);
Eigen::VectorXd ts_sym_m1_coefficients(int n, const Angle& theta);

// Permutation- and flip-invariant TS state for every T_sym(n, m) once
// theta >= (n-1)pi/n. Below that angle it throws std::invalid_argument.
StateVector construct_ts_sym(int n, int m, const Angle& theta);
// TS state for T_sym(n, 1) down to the m = 1 threshold.
StateVector construct_ts_sym_m1(int n, const Angle& theta);
// TS state for T_cyc(kappa m, m): a copy of the kappa-qubit m = 1 state on
// each column {c, c+m, ..., c+(kappa-1)m} of the kappa x m row-major array.
StateVector construct_ts_cyc(int m, int kappa, const Angle& theta);

enum class MRule { half, one, all, fixed };

struct SweepRow {
  int n = 0, m = 0;
  GroupKind group = GroupKind::symmetric;
  std::optional<double> theta_formula;
  std::optional<double> theta_lp;  // empty when no grid angle is feasible
  std::optional<double> delta;
};

// For cyclic groups the half rule picks m = n/2 on even n only.
std::vector<int> m_values(MRule rule, int n, int fixed_m = 0);
std::vector<SweepRow> sweep_thresholds(GroupKind group, int n_min, int n_max, MRule rule,
                                       int fixed_m = 0, const ThresholdOptions& opt = {});

}  // namespace tsolve
