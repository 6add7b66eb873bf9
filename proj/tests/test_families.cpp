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

#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "tsolve/families.hpp"

namespace tsolve {
namespace {

using std::numbers::pi;

TEST(Formulas, ClosedForms) {
  EXPECT_DOUBLE_EQ(threshold_sym(4, 2).theta_star, 3 * pi / 4);
  EXPECT_TRUE(threshold_sym(4, 2).necessary);
  EXPECT_TRUE(threshold_sym(7, 3).necessary);
  EXPECT_TRUE(threshold_sym(7, 4).necessary);
  EXPECT_FALSE(threshold_sym(7, 2).necessary);
  EXPECT_DOUBLE_EQ(threshold_sym_m1(3).theta_star, 2 * pi / 3);
  EXPECT_DOUBLE_EQ(threshold_sym_m1(2).theta_star, pi / 2);
  const ThresholdFormula c = threshold_cyc(2, 4);
  EXPECT_FALSE(c.necessary);
  EXPECT_DOUBLE_EQ(c.theta_star, 2 * pi / 3);
}

TEST(Formulas, BestFormulaSelection) {
  EXPECT_EQ(best_formula(GroupKind::symmetric, 5, 1)->family, Family::sym_m1);
  EXPECT_EQ(best_formula(GroupKind::symmetric, 5, 4)->family, Family::sym_m1);
  EXPECT_EQ(best_formula(GroupKind::symmetric, 5, 2)->family, Family::sym_general);
  EXPECT_EQ(best_formula(GroupKind::symmetric, 5, 0)->family, Family::trivial);
  EXPECT_EQ(best_formula(GroupKind::cyclic, 6, 2)->family, Family::cyc_multiple);
  EXPECT_FALSE(best_formula(GroupKind::cyclic, 7, 2).has_value());
  EXPECT_FALSE(best_formula(GroupKind::generic, 6, 2).has_value());
}

TEST(Constructions, SymmetricPassesOracleAtAndAboveThreshold) {
  for (int n = 2; n <= 10; ++n)
    for (double frac : {0.0, 0.5, 1.0}) {
      const double star = (n - 1) * pi / n;
      const double theta = star + frac * (pi - star);
      const StateVector psi = construct_ts_sym(n, n / 2, Angle(theta));
      for (int m = 0; m <= n; ++m) {
        const TrajectorySet ts = generate_transitive_set(PermutationGroup::symmetric(n), m);
        const auto dev = oracle::gram_deviation(oracle::dense_gram(psi, ts, theta));
        EXPECT_LT(dev.offdiag, 1e-9) << "n=" << n << " m=" << m << " theta=" << theta;
        EXPECT_LT(dev.diag, 1e-9);
      }
    }
}

TEST(Constructions, SymmetricRejectsSmallAngles) {
  EXPECT_THROW(construct_ts_sym(6, 3, Angle(2.0)), std::invalid_argument);
  EXPECT_THROW(construct_ts_sym_m1(6, Angle(1.0)), std::invalid_argument);
}

TEST(Constructions, SymmetricIsPermutationAndFlipInvariant) {
  std::mt19937_64 rng(41);
  for (int n = 2; n <= 9; ++n) {
    const StateVector psi = construct_ts_sym(n, n / 2, Angle(pi));
    for (int k = 0; k < 5; ++k) {
      const GroupElement g{k % 2 ? SwapElement::all(n) : SwapElement::none(n), oracle::random_permutation(n, rng)};
      for (std::uint64_t i = 0; i < psi.dim(); ++i)
        EXPECT_NEAR(std::abs(psi[act_on_bitstring(g, BitString::from_index(n, i)).index()] - psi[i]), 0, 1e-15);
    }
  }
}

TEST(Constructions, M1PassesOracleDownToItsThreshold) {
  for (int n = 2; n <= 12; ++n) {
    const double star = threshold_sym_m1(n).theta_star;
    for (double theta : {star, 0.5 * (star + pi), pi}) {
      const StateVector psi = construct_ts_sym_m1(n, Angle(theta));
      for (int m : {1, n - 1}) {
        const TrajectorySet ts = generate_transitive_set(PermutationGroup::symmetric(n), m);
        const auto dev = oracle::gram_deviation(oracle::dense_gram(psi, ts, theta));
        EXPECT_LT(dev.offdiag, 1e-9) << "n=" << n << " theta=" << theta;
        EXPECT_LT(dev.diag, 1e-9);
      }
    }
  }
}

TEST(Constructions, CyclicPassesOracleAndIsShiftInvariant) {
  for (int m = 1; m <= 4; ++m)
    for (int kappa = 2; kappa * m <= 12; ++kappa) {
      const int n = m * kappa;
      const double theta = threshold_cyc(m, kappa).theta_star;
      const StateVector psi = construct_ts_cyc(m, kappa, Angle(theta));
      const PermutationGroup g = PermutationGroup::cyclic(n);
      const TrajectorySet ts = generate_transitive_set(g, m);
      const auto dev = oracle::gram_deviation(oracle::dense_gram(psi, ts, theta));
      EXPECT_LT(dev.offdiag, 1e-9) << "m=" << m << " kappa=" << kappa;
      EXPECT_LT(dev.diag, 1e-9);
      const StateVector shifted = permutation_matrix_action(Permutation::cycle(n), psi);
      for (std::size_t i = 0; i < psi.dim(); ++i) {
        EXPECT_NEAR(std::abs(shifted[i] - psi[i]), 0, 1e-15);
        EXPECT_NEAR(std::abs(psi[psi.dim() - 1 - i] - psi[i]), 0, 1e-15);
      }
    }
}

TEST(Coefficients, SignPatternHoldsExactlyAboveHalfFillingThreshold) {
  for (int n = 2; n <= 12; n += 2) {
    const int N = n / 2 + 1;
    const double star = (n - 1) * pi / n;
    for (double theta = 0.01; theta <= pi; theta += 0.013) {
      if (std::abs(theta - star) < 1e-9) continue;
      bool all_nonneg = true;
      for (int nu = 0; nu < N; ++nu) {
        const int k = N - 1 - nu;
        if ((k % 2 ? -1 : 1) * oracle::cheb_T(k, std::cos(theta)) < -1e-12) all_nonneg = false;
      }
      EXPECT_EQ(all_nonneg, theta >= star) << "n=" << n << " theta=" << theta;
    }
  }
}

TEST(Coefficients, NormalizedOverOrbitSizes) {
  for (int n = 2; n <= 10; ++n) {
    const Eigen::VectorXd c = ts_sym_coefficients(n, Angle(pi));
    double s = 0;
    for (int nu = 0; nu < c.size(); ++nu)
      s += c(nu) * alpha(n, nu) * oracle::choose(n, nu);
    EXPECT_NEAR(s, 1.0, 1e-12);
    EXPECT_GE(c.minCoeff(), 0.0);
  }
}

TEST(Sweep, RowsForEachRule) {
  const auto rows = sweep_thresholds(GroupKind::symmetric, 2, 6, MRule::half);
  ASSERT_EQ(rows.size(), 5u);
  for (const auto& r : rows) {
    ASSERT_TRUE(r.theta_lp && r.theta_formula);
    EXPECT_LT(*r.delta, 1e-6);
  }
  EXPECT_EQ(m_values(MRule::all, 4), (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(m_values(MRule::half, 5), (std::vector<int>{2}));
  const auto cyc = sweep_thresholds(GroupKind::cyclic, 4, 7, MRule::half);
  ASSERT_EQ(cyc.size(), 2u);  // n = 4, 6
  for (const auto& r : cyc) EXPECT_LE(*r.theta_lp, *r.theta_formula + 1e-6);
}

}  // namespace
}  // namespace tsolve
