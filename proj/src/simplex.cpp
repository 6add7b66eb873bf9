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

#include <bit>
#include <cmath>
#include <numbers>

#include "tsolve/lp.hpp"

namespace tsolve {

namespace {

constexpr double kPivotEps = 1e-12;

double residual_inf(const Eigen::MatrixXd& a, const Eigen::VectorXd& c) {
  Eigen::VectorXd r = a * c;
  r(0) -= 1.0;
  return r.cwiseAbs().maxCoeff();
}

// Refits the support found by the simplex with a least-squares solve, which
// removes the error accumulated through pivoting.
Eigen::VectorXd polish(const Eigen::MatrixXd& scaled, const Eigen::VectorXd& rhs,
                       const Eigen::VectorXd& x, double tol) {
  std::vector<Eigen::Index> support;
  for (Eigen::Index j = 0; j < x.size(); ++j)
    if (x(j) > 0) support.push_back(j);
  if (support.empty()) return x;
  Eigen::MatrixXd sub(scaled.rows(), static_cast<Eigen::Index>(support.size()));
  for (std::size_t k = 0; k < support.size(); ++k) sub.col(k) = scaled.col(support[k]);
  const Eigen::VectorXd y = sub.colPivHouseholderQr().solve(rhs);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(x.size());
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (y(k) < -tol) return x;
    out(support[k]) = std::max(0.0, y(k));
  }
  const double before = (scaled * x - rhs).cwiseAbs().maxCoeff();
  const double after = (scaled * out - rhs).cwiseAbs().maxCoeff();
  return after <= before ? out : x;
}

}  // namespace

FeasibilityResult solve_feasibility(const ReducedMatrix& mat, const LpOptions& opt) {
  const Eigen::MatrixXd& a = mat.entries;
  const Eigen::Index M = a.rows(), N = a.cols();
  if (M == 0 || N == 0) throw std::invalid_argument("empty reduced matrix");
  FeasibilityResult res;
  res.c = Eigen::VectorXd::Zero(N);

  // theta = 0: every perturbation is the identity, so only |T| = 1 works.
  if (mat.theta.theta == 0.0) {
    if (M == 1 && a(0, 0) > 0) {
      res.feasible = true;
      res.c(0) = 1.0 / a(0, 0);
      res.residual = residual_inf(a, res.c);
    } else {
      res.certificate = 1.0;
    }
    return res;
  }

  // Row scaling and sign normalization so that rhs >= 0.
  Eigen::MatrixXd s = a;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(M);
  rhs(0) = 1.0;
  for (Eigen::Index i = 0; i < M; ++i) {
    const double mx = s.row(i).cwiseAbs().maxCoeff();
    if (mx == 0) {
      if (rhs(i) != 0) {
        res.certificate = 1.0;
        return res;
      }
      continue;
    }
    s.row(i) /= mx;
    rhs(i) /= mx;
  }

  // Tableau [s | I | rhs] with artificials basic; cost row holds reduced costs
  // of the phase-1 objective sum(artificials).
  const Eigen::Index cols = N + M;
  Eigen::MatrixXd tab = Eigen::MatrixXd::Zero(M, cols + 1);
  for (Eigen::Index i = 0; i < M; ++i) {
    const double sign = rhs(i) < 0 ? -1.0 : 1.0;
    tab.block(i, 0, 1, N) = sign * s.row(i);
    tab(i, N + i) = 1.0;
    tab(i, cols) = sign * rhs(i);
  }
  std::vector<Eigen::Index> basis(M);
  for (Eigen::Index i = 0; i < M; ++i) basis[i] = N + i;
  Eigen::RowVectorXd cost = Eigen::RowVectorXd::Zero(cols + 1);
  for (Eigen::Index i = 0; i < M; ++i) cost -= tab.row(i);
  cost.segment(N, M).setZero();

  int it = 0;
  while (true) {
    // Bland: lowest-index improving column; artificials never re-enter.
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < N; ++j)
      if (cost(j) < -kPivotEps) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    Eigen::Index leave = -1;
    double best = 0;
    for (Eigen::Index i = 0; i < M; ++i) {
      if (tab(i, enter) <= kPivotEps) continue;
      const double ratio = tab(i, cols) / tab(i, enter);
      if (leave < 0 || ratio < best - kPivotEps ||
          (ratio <= best + kPivotEps && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded direction cannot occur in phase 1
    if (++it > opt.max_iterations)
      throw InvariantError(fmt::format("simplex exceeded {} iterations", opt.max_iterations));
    tab.row(leave) /= tab(leave, enter);
    for (Eigen::Index i = 0; i < M; ++i)
      if (i != leave && tab(i, enter) != 0) tab.row(i) -= tab(i, enter) * tab.row(leave);
    if (cost(enter) != 0) cost -= cost(enter) * tab.row(leave);
    basis[leave] = enter;
  }
  res.iterations = it;

  double objective = 0;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(N);
  for (Eigen::Index i = 0; i < M; ++i) {
    if (basis[i] >= N)
      objective += std::max(0.0, tab(i, cols));
    else
      x(basis[i]) = std::max(0.0, tab(i, cols));
  }
  res.certificate = objective;
  res.feasible = objective <= opt.tol;
  if (res.feasible) {
    res.c = polish(s, rhs, x, opt.tol);
    res.residual = residual_inf(a, res.c);
  }
  return res;
}

ThresholdResult find_threshold(const ReducedSystem& sys, const ThresholdOptions& opt) {
  ThresholdResult out;
  const int G = std::max(2, opt.grid_points);
  auto feasible = [&](double theta) {
    ++out.solves;
    return solve_feasibility(sys.matrix(Angle(theta)), opt.lp).feasible;
  };
  std::vector<bool> grid(G);
  std::vector<double> angle(G);
  for (int i = 0; i < G; ++i) {
    angle[i] = i == G - 1 ? std::numbers::pi : i * std::numbers::pi / (G - 1);
    grid[i] = feasible(angle[i]);
  }
  for (int i = 0; i < G;) {
    if (!grid[i]) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < G && grid[j + 1]) ++j;
    out.segments.emplace_back(angle[i], angle[j]);
    i = j + 1;
  }
  if (out.segments.empty()) return out;
  out.found = true;
  const int first = static_cast<int>(std::lround(out.segments.front().first * (G - 1) / std::numbers::pi));
  if (first == 0) {
    out.theta = 0;
    return out;
  }
  double lo = angle[first - 1], hi = angle[first];
  while (hi - lo > opt.bisection_tol) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  out.theta = hi;
  return out;
}

namespace {

std::vector<double> checked_amplitudes(const Eigen::VectorXd& c, double tol) {
  std::vector<double> amp(c.size());
  for (Eigen::Index nu = 0; nu < c.size(); ++nu) {
    if (c(nu) < -tol)
      throw std::invalid_argument(fmt::format("negative coefficient c_{} = {:.3g}", nu, c(nu)));
    amp[nu] = std::sqrt(std::max(0.0, c(nu)));
  }
  return amp;
}

}  // namespace

StateVector state_from_solution(const Eigen::VectorXd& c, const OrbitTable& table, double tol) {
  if (static_cast<std::size_t>(c.size()) != table.N())
    throw std::invalid_argument(
        fmt::format("{} coefficients for {} string orbits", c.size(), table.N()));
  if (!table.strings_materialized()) {
    if (table.kind == GroupKind::symmetric) return state_from_solution_symmetric(c, table.n, tol);
    throw ResourceLimitError("state reconstruction needs materialized string orbits");
  }
  check_qubit_count(table.n, kMaxStateQubits);
  const auto amp = checked_amplitudes(c, tol);
  StateVector psi(table.n);
  for (std::size_t nu = 0; nu < table.strings.size(); ++nu)
    for (const auto& b : table.strings[nu].members) psi[b.index()] = amp[nu];
  return psi;
}

StateVector state_from_solution_symmetric(const Eigen::VectorXd& c, int n, double tol) {
  check_qubit_count(n, kMaxStateQubits);
  if (c.size() != n / 2 + 1)
    throw std::invalid_argument(fmt::format("{} coefficients for {} string orbits", c.size(), n / 2 + 1));
  const auto amp = checked_amplitudes(c, tol);
  StateVector psi(n);
  for (std::size_t x = 0; x < psi.dim(); ++x) {
    const int w = std::popcount(x);
    psi[x] = amp[std::min(w, n - w)];
  }
  return psi;
}

}  // namespace tsolve
