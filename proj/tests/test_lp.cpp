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
#include <random>

#include "oracles.hpp"
#include "tsolve/families.hpp"
#include "tsolve/lp.hpp"

namespace tsolve {
namespace {

using std::numbers::pi;

TEST(Chebyshev, MatchTrigonometricDefinitions) {
  for (int k = 0; k <= 12; ++k)
    for (double t = -0.99; t <= 1.0; t += 0.07) {
      EXPECT_NEAR(chebyshev_T(k, t), oracle::cheb_T(k, t), 1e-10);
      EXPECT_NEAR(chebyshev_W(k, t), oracle::cheb_W(k, t), 1e-9);
    }
  EXPECT_EQ(chebyshev_W(-1, 0.3), -1.0);
}

TEST(Chebyshev, WSatisfiesThreeTermIdentity) {
  // t W_k = (W_{k+1} + W_{k-1}) / 2
  for (int k = 0; k <= 10; ++k) {
    const IntPoly lhs = IntPoly::t() * chebyshev_W_poly(k);
    const IntPoly twice = chebyshev_W_poly(k + 1) + chebyshev_W_poly(k - 1);
    EXPECT_EQ(2 * lhs, twice) << "k=" << k;
  }
}

TEST(Chebyshev, PolynomialsEvaluateLikeDoubles) {
  for (int k = 0; k <= 15; ++k)
    for (double t : {-1.0, -0.4, 0.0, 0.35, 0.9, 1.0}) {
      EXPECT_NEAR(chebyshev_T_poly(k).eval(t), chebyshev_T(k, t), 1e-9);
      EXPECT_NEAR(chebyshev_W_poly(k).eval(t), chebyshev_W(k, t), 1e-9);
    }
}

TEST(IntPoly, ArithmeticAndDerivative) {
  const IntPoly p({1, 2, 3});  // 1 + 2t + 3t^2
  EXPECT_EQ(p.derivative(), IntPoly({2, 6}));
  EXPECT_EQ(p.derivative(3), IntPoly());
  EXPECT_EQ(p * IntPoly({0, 1}), IntPoly({0, 1, 2, 3}));
  EXPECT_EQ(p - p, IntPoly());
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(p.str(), "3t^2 + 2t + 1");
  EXPECT_THROW(IntPoly({INT64_MAX}) + IntPoly({1}), std::overflow_error);
}

TEST(ASymmetric, MatchesTripleSumOracle) {
  for (int n = 1; n <= 12; ++n)
    for (int m = 0; m <= n; ++m)
      for (double theta : {0.0, 0.7, 1.9, 2.8, pi}) {
        const ReducedMatrix a = build_A_symmetric(n, m, Angle(theta));
        ASSERT_EQ(a.N(), n / 2 + 1);
        for (Eigen::Index mu = 0; mu < a.M(); ++mu)
          for (Eigen::Index nu = 0; nu < a.N(); ++nu)
            EXPECT_NEAR(a.entries(mu, nu), oracle::a_sym_entry(n, int(mu), int(nu), theta),
                        1e-9 * (1 + std::abs(a.entries(mu, nu))));
      }
}

TEST(ASymmetric, AlphaConvention) {
  EXPECT_EQ(alpha(4, 2), 1);
  EXPECT_EQ(alpha(4, 1), 2);
  EXPECT_EQ(alpha(5, 2), 2);
}

TEST(ASymmetric, PolynomialFormMatchesNumeric) {
  for (int n = 2; n <= 10; ++n) {
    const int m = n / 2;
    const auto poly = A_symmetric_poly(n, m);
    const auto poly_p = Aprime_poly(n, m);
    for (double theta : {0.3, 1.2, 2.5}) {
      const ReducedMatrix a = build_A_symmetric(n, m, Angle(theta));
      const ReducedMatrix ap = build_Aprime(n, m, Angle(theta));
      for (Eigen::Index mu = 0; mu < a.M(); ++mu)
        for (Eigen::Index nu = 0; nu < a.N(); ++nu) {
          EXPECT_NEAR(poly[mu][nu].eval(std::cos(theta)), a.entries(mu, nu), 1e-8);
          EXPECT_NEAR(poly_p[mu][nu].eval(std::cos(theta)), ap.entries(mu, nu), 1e-8);
        }
    }
  }
}

TEST(Aprime, RowsAreDerivativesOfARows) {
  for (int n = 2; n <= 10; ++n)
    for (int m = 0; m <= n; ++m) {
      const auto a = A_symmetric_poly(n, m);
      const auto ap = Aprime_poly(n, m);
      ASSERT_EQ(a.size(), ap.size());
      EXPECT_EQ(ap[0], a[0]);
      for (std::size_t mu = 1; mu < a.size(); ++mu)
        for (std::size_t nu = 0; nu < a[mu].size(); ++nu)
          EXPECT_EQ(ap[mu][nu], a[mu][nu].derivative(int(mu) - 1)) << n << " " << m << " " << mu << " " << nu;
    }
}

TEST(ASymmetric, DerivativeLadder) {
  // (mu - j) A^(j)_{mu,nu} - mu A^(j)_{mu-1,nu} = (t - 1) A^(j+1)_{mu,nu}
  for (int n = 2; n <= 10; ++n)
    for (int m = 0; m <= n; ++m) {
      const auto a = A_symmetric_poly(n, m);
      for (std::size_t mu = 1; mu < a.size(); ++mu)
        for (std::size_t nu = 0; nu < a[mu].size(); ++nu)
          for (int j = 0; j <= int(mu) - 1; ++j) {
            const IntPoly lhs = std::int64_t(mu - j) * a[mu][nu].derivative(j) -
                                std::int64_t(mu) * a[mu - 1][nu].derivative(j);
            const IntPoly rhs = IntPoly({-1, 1}) * a[mu][nu].derivative(j + 1);
            EXPECT_EQ(lhs, rhs);
          }
    }
}

TEST(AGeneric, MatchesSymmetricClosedForm) {
  for (int n = 1; n <= 7; ++n)
    for (int m = 0; m <= n; ++m) {
      const PermutationGroup g = PermutationGroup::symmetric(n);
      const OrbitTable table = build_orbit_table(g, generate_transitive_set(g, m));
      const GenericAKernel kernel(table);
      for (double theta : {0.0, 0.9, 2.1, pi}) {
        const ReducedMatrix gen = kernel.evaluate(Angle(theta));
        const ReducedMatrix sym = build_A_symmetric(n, m, Angle(theta));
        ASSERT_EQ(gen.entries.rows(), sym.entries.rows());
        EXPECT_LT((gen.entries - sym.entries).cwiseAbs().maxCoeff(), 1e-12);
      }
    }
}

// (A c)_mu equals the Gram entry of the orbit representative for the state
// with amplitude sqrt(c_nu) on omega_nu.
TEST(AGeneric, ActsAsGramEntriesOnOrbitStates) {
  std::mt19937_64 rng(21);
  for (int n = 3; n <= 8; ++n) {
    const PermutationGroup g = PermutationGroup::cyclic(n);
    const OrbitTable table = build_orbit_table(g, generate_transitive_set(g, 2));
    Eigen::VectorXd c(table.N());
    double norm = 0;
    for (std::size_t nu = 0; nu < table.N(); ++nu) {
      c(nu) = std::uniform_real_distribution<double>(0, 1)(rng);
      norm += c(nu) * double(table.strings[nu].size);
    }
    c /= norm;
    const StateVector psi = state_from_solution(c, table);
    const Angle theta(1.7);
    const Eigen::VectorXd ac = build_A_generic(table, theta).entries * c;
    for (std::size_t mu = 0; mu < table.M(); ++mu) {
      const cplx gmu = gram_entry(psi, table.pairs[mu].rep.first, table.pairs[mu].rep.second, theta);
      EXPECT_NEAR(gmu.real(), ac(mu), 1e-12);
      EXPECT_NEAR(gmu.imag(), 0, 1e-12);
    }
  }
}

TEST(Simplex, AgreesWithVertexEnumeration) {
  std::mt19937_64 rng(31);
  int feasible = 0, total = 0;
  for (int n = 2; n <= 9; ++n)
    for (int m = 1; m < n; ++m)
      for (int k = 0; k < 6; ++k) {
        const double theta = std::uniform_real_distribution<double>(0, pi)(rng);
        for (MatrixVariant v : {MatrixVariant::A, MatrixVariant::Aprime}) {
          const ReducedMatrix mat = ReducedSystem::symmetric(n, m, v).matrix(Angle(theta));
          const bool expect = oracle::vertex_feasible(mat.entries);
          const FeasibilityResult r = solve_feasibility(mat);
          EXPECT_EQ(r.feasible, expect) << "n=" << n << " m=" << m << " theta=" << theta;
          if (r.feasible) {
            EXPECT_GE(r.c.minCoeff(), 0.0);
            EXPECT_LT(r.residual, 1e-9);
          }
          feasible += expect;
          ++total;
        }
      }
  EXPECT_GT(feasible, 0);
  EXPECT_LT(feasible, total);
}

TEST(Simplex, ThetaZeroFeasibleOnlyForSingleOrbit) {
  EXPECT_FALSE(solve_feasibility(build_A_symmetric(4, 2, Angle(0.0))).feasible);
  EXPECT_TRUE(solve_feasibility(build_A_symmetric(4, 0, Angle(0.0))).feasible);
}

TEST(Simplex, SquareCaseRatiosFollowChebyshev) {
  // For m = floor(n/2) the system is square; the solution is unique, with
  // c_nu / c_{N-1} = (-1)^{N-1-nu} P_{N-1-nu}(t).
  for (int n = 2; n <= 12; ++n) {
    const int m = n / 2;
    const int N = n / 2 + 1;
    const double theta = (n - 1) * pi / n + 0.5 * (pi - (n - 1) * pi / n);
    const double t = std::cos(theta);
    const FeasibilityResult r = solve_feasibility(build_Aprime(n, m, Angle(theta)));
    ASSERT_TRUE(r.feasible) << n;
    ASSERT_GT(r.c(N - 1), 1e-9);
    for (int nu = 0; nu < N; ++nu) {
      const int k = N - 1 - nu;
      const double p = n % 2 == 0 ? oracle::cheb_T(k, t) : oracle::cheb_W(k, t);
      EXPECT_NEAR(r.c(nu) / r.c(N - 1), (k % 2 ? -1 : 1) * p, 1e-7) << "n=" << n << " nu=" << nu;
    }
  }
}

TEST(Simplex, FeasibilityIsMonotoneInOrbitCount) {
  // Feasible at (n, m1) implies feasible at (n, m2) when M2 <= M1.
  for (int n = 3; n <= 10; ++n)
    for (double theta = 0.2; theta < pi; theta += 0.25) {
      std::vector<std::pair<int, bool>> rows;  // (M, feasible)
      for (int m = 0; m <= n; ++m) {
        const ReducedMatrix a = build_A_symmetric(n, m, Angle(theta));
        rows.push_back({int(a.M()), solve_feasibility(a).feasible});
      }
      for (const auto& [m1, f1] : rows)
        for (const auto& [m2, f2] : rows)
          if (f1 && m2 <= m1) EXPECT_TRUE(f2) << "n=" << n << " theta=" << theta;
    }
}

TEST(Threshold, HalfFillingFeasibleExactlyAboveFormula) {
  for (int n = 2; n <= 12; ++n) {
    const double star = (n - 1) * pi / n;
    const ReducedMatrix above = build_Aprime(n, n / 2, Angle(star + 1e-4));
    const ReducedMatrix below = build_Aprime(n, n / 2, Angle(star - 1e-4));
    EXPECT_TRUE(solve_feasibility(above).feasible) << n;
    EXPECT_FALSE(solve_feasibility(below).feasible) << n;
  }
}

TEST(Threshold, BisectionFindsFormula) {
  const ThresholdResult r = find_threshold(ReducedSystem::symmetric(6, 3));
  ASSERT_TRUE(r.found);
  EXPECT_NEAR(r.theta, 5 * pi / 6, 1e-6);
  EXPECT_FALSE(r.segments.empty());
}

TEST(Reconstruction, RejectsNegativeWeights) {
  Eigen::VectorXd c(2);
  c << 0.5, -0.1;
  EXPECT_THROW(state_from_solution_symmetric(c, 3), std::invalid_argument);
}

TEST(Reconstruction, SymmetricMatchesTableBased) {
  const int n = 6;
  const PermutationGroup g = PermutationGroup::symmetric(n);
  const OrbitTable table = build_orbit_table(g, generate_transitive_set(g, 2));
  Eigen::VectorXd c(table.N());
  double norm = 0;
  for (std::size_t nu = 0; nu < table.N(); ++nu) {
    c(nu) = 1.0 + nu;
    norm += c(nu) * double(table.strings[nu].size);
  }
  c /= norm;
  const StateVector a = state_from_solution(c, table);
  const StateVector b = state_from_solution_symmetric(c, n);
  for (std::size_t i = 0; i < a.dim(); ++i) EXPECT_NEAR(std::abs(a[i] - b[i]), 0, 1e-15);
}

}  // namespace
}  // namespace tsolve
