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

// Reduced feasibility systems A(theta) c = d, c >= 0, with d = e_0. Rows are
// indexed by trajectory-pair orbits, columns by bit-string orbits.

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsolve/core.hpp"
#include "tsolve/groups.hpp"
#include "tsolve/simulator.hpp"

namespace tsolve {

// ---- Chebyshev polynomials ----

double chebyshev_T(int k, double t);  // k >= 0
double chebyshev_W(int k, double t);  // k >= -1, W_{-1} = -1

// Integer-coefficient polynomial in t, ascending powers. Arithmetic throws
// std::overflow_error instead of wrapping.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs);
  static IntPoly constant(std::int64_t c) { return IntPoly({c}); }
  static IntPoly t() { return IntPoly({0, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  std::int64_t operator[](int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : 0; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  IntPoly derivative(int order = 1) const;
  double eval(double t) const;
  std::string str() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(std::int64_t s, const IntPoly& a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

IntPoly chebyshev_T_poly(int k);
IntPoly chebyshev_W_poly(int k);

// ---- reduced matrices ----

enum class MatrixVariant { A, Aprime };
const char* variant_name(MatrixVariant v);

struct ReducedMatrix {
  Eigen::MatrixXd entries;  // M x N
  Angle theta;
  MatrixVariant variant = MatrixVariant::A;
  std::vector<std::uint64_t> omega_sizes;  // |omega_nu|

  Eigen::Index M() const { return entries.rows(); }
  Eigen::Index N() const { return entries.cols(); }
};

// 1 if n is even and nu = n/2, else 2.
int alpha(int n, int nu);

// Closed forms for the symmetric group.
ReducedMatrix build_A_symmetric(int n, int m, const Angle& theta);
ReducedMatrix build_Aprime(int n, int m, const Angle& theta);
std::vector<std::vector<IntPoly>> A_symmetric_poly(int n, int m);
std::vector<std::vector<IntPoly>> Aprime_poly(int n, int m);

// Orbit-sum form valid for any group. Entry (mu, nu) sums
// exp(i(phi^(T')_b - phi^(T)_b)) over b in omega_nu; for equal-size
// trajectories the exponent is theta * d with d an integer, so the entry is
// sum_d count[d] cos(d theta) = sum_d count[d] T_|d|(t). The counts are built
// once and reused across angles.
class GenericAKernel {
 public:
  // Throws InvariantError when two members of a pair orbit disagree or when
  // an entry has a nonzero imaginary part (both signal broken orbits).
  explicit GenericAKernel(const OrbitTable& table, int reps_checked = 3);

  int M() const { return static_cast<int>(counts_.size()); }
  int N() const { return static_cast<int>(omega_sizes_.size()); }
  const std::vector<std::uint64_t>& omega_sizes() const { return omega_sizes_; }
  ReducedMatrix evaluate(const Angle& theta) const;
  IntPoly poly(int mu, int nu) const;

 private:
  // counts_[mu][nu][d] = number of b in omega_nu with exponent d (0..maxd).
  // Flip symmetry makes the count for -d equal, so only |d| is kept.
  std::vector<std::vector<std::vector<std::int64_t>>> counts_;
  std::vector<std::uint64_t> omega_sizes_;
};

ReducedMatrix build_A_generic(const OrbitTable& table, const Angle& theta);

// A reduced system whose matrix can be evaluated at many angles.
class ReducedSystem {
 public:
  static ReducedSystem symmetric(int n, int m, MatrixVariant variant = MatrixVariant::Aprime);
  static ReducedSystem from_orbits(const OrbitTable& table);

  int n() const { return n_; }
  int M() const { return M_; }
  int N() const { return N_; }
  MatrixVariant variant() const { return variant_; }
  ReducedMatrix matrix(const Angle& theta) const;

 private:
  int n_ = 0, m_ = 0, M_ = 0, N_ = 0;
  MatrixVariant variant_ = MatrixVariant::A;
  std::optional<GenericAKernel> kernel_;
};

// ---- feasibility ----

struct FeasibilityResult {
  bool feasible = false;
  Eigen::VectorXd c;      // length N, nonnegative when feasible
  double residual = 0;    // ||A c - d||_inf on the unscaled system
  double certificate = 0; // phase-1 objective on the row-scaled system
  int iterations = 0;
};

struct LpOptions {
  double tol = 1e-9;
  int max_iterations = 10000;
};

// Phase-1 simplex with Bland's rule. theta = 0 is decided directly: feasible
// iff M = 1. Throws InvariantError when the iteration cap is hit.
FeasibilityResult solve_feasibility(const ReducedMatrix& mat, const LpOptions& opt = {});

struct ThresholdResult {
  bool found = false;    // some grid angle is feasible
  double theta = 0;      // left end of the lowest feasible segment
  // Feasible grid segments [lo, hi] (grid angles, not refined).
  std::vector<std::pair<double, double>> segments;
  int solves = 0;
};

struct ThresholdOptions {
  int grid_points = 512;
  double bisection_tol = 1e-8;
  LpOptions lp;
};

ThresholdResult find_threshold(const ReducedSystem& sys, const ThresholdOptions& opt = {});

// Amplitude sqrt(c_nu) on every string of omega_nu. Throws
// std::invalid_argument when some c_nu < -tol.
StateVector state_from_solution(const Eigen::VectorXd& c, const OrbitTable& table,
                                double tol = 1e-9);
// Symmetric-group variant that needs no materialized orbits: omega_nu is the
// set of strings with min(weight, n - weight) = nu.
StateVector state_from_solution_symmetric(const Eigen::VectorXd& c, int n, double tol = 1e-9);

}  // namespace tsolve
