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

// Brute-force reference implementations shared by the unit and acceptance
// tests. None of them call the library code they are used to check; they go
// through dense matrices, explicit group elements and textbook formulas.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "tsolve/core.hpp"
#include "tsolve/groups.hpp"

namespace tsolve::oracle {

using cd = std::complex<double>;

// Basis index of the string whose qubit k (1-based) is bit k-1 of mask.
inline std::uint64_t index_of(Mask mask, int n) {
  std::uint64_t idx = 0;
  for (int k = 1; k <= n; ++k) idx = (idx << 1) | ((mask >> (k - 1)) & 1);
  return idx;
}

inline Mask mask_of(std::uint64_t idx, int n) {
  Mask m = 0;
  for (int k = n; k >= 1; --k, idx >>= 1) m |= Mask(idx & 1) << (k - 1);
  return m;
}

// R^(T)(theta) as a dense diagonal, built as a Kronecker product of
// single-qubit R_Z(theta) = diag(e^{-i theta/2}, e^{i theta/2}) (qubit 1 is
// the leftmost factor).
inline Eigen::VectorXcd rz_diagonal(const Trajectory& t, double theta, int n) {
  Eigen::VectorXcd d = Eigen::VectorXcd::Ones(1);
  for (int k = 1; k <= n; ++k) {
    Eigen::Vector2cd f(1, 1);
    if (t.contains(k)) f << std::polar(1.0, -theta / 2), std::polar(1.0, theta / 2);
    Eigen::VectorXcd next(d.size() * 2);
    for (Eigen::Index i = 0; i < d.size(); ++i) {
      next(2 * i) = d(i) * f(0);
      next(2 * i + 1) = d(i) * f(1);
    }
    d = next;
  }
  return d;
}

inline Eigen::VectorXcd to_eigen(const StateVector& psi) {
  Eigen::VectorXcd v(psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i) v(i) = psi[i];
  return v;
}

// Gram matrix G_ab = <R^(T_a) psi | R^(T_b) psi> as V^dagger V.
inline Eigen::MatrixXcd dense_gram(const StateVector& psi, const TrajectorySet& ts, double theta) {
  const Eigen::VectorXcd v = to_eigen(psi);
  Eigen::MatrixXcd cols(v.size(), ts.size());
  for (std::size_t a = 0; a < ts.size(); ++a)
    cols.col(a) = rz_diagonal(ts[a], theta, ts.n()).cwiseProduct(v);
  return cols.adjoint() * cols;
}

struct GramDev {
  double offdiag = 0, diag = 0;
};

inline GramDev gram_deviation(const Eigen::MatrixXcd& g) {
  GramDev d;
  for (Eigen::Index a = 0; a < g.rows(); ++a)
    for (Eigen::Index b = 0; b < g.cols(); ++b) {
      if (a == b)
        d.diag = std::max(d.diag, std::abs(g(a, b) - 1.0));
      else
        d.offdiag = std::max(d.offdiag, std::abs(g(a, b)));
    }
  return d;
}

// Dense permutation matrix with P |j_1...j_n> = |j_{pi^-1(1)} ... j_{pi^-1(n)}>.
inline Eigen::MatrixXd permutation_matrix(const Permutation& pi) {
  const int n = pi.n();
  const std::uint64_t dim = std::uint64_t{1} << n;
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(dim, dim);
  const Permutation inv = pi.inverse();
  for (std::uint64_t i = 0; i < dim; ++i) {
    const Mask in = mask_of(i, n);
    Mask out = 0;
    for (int k = 1; k <= n; ++k) out |= Mask((in >> (inv(k) - 1)) & 1) << (k - 1);
    p(index_of(out, n), i) = 1;
  }
  return p;
}

// ---- orbits by union-find over every group element ----

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

inline Mask permute_mask(const std::vector<int>& image, Mask m) {
  Mask out = 0;
  for (std::size_t k = 0; k < image.size(); ++k)
    if ((m >> k) & 1) out |= Mask{1} << (image[k] - 1);
  return out;
}

// Group closure from generator image arrays (1-based images).
inline std::vector<std::vector<int>> closure(const std::vector<std::vector<int>>& gens, int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 1);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        std::vector<int> p(n);
        for (int k = 0; k < n; ++k) p[k] = g[e[k] - 1];
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<std::vector<int>> images(const PermutationGroup& g) {
  std::vector<std::vector<int>> out;
  for (const auto& p : g.generators()) {
    std::vector<int> im(p.n());
    for (int k = 1; k <= p.n(); ++k) im[k - 1] = p(k);
    out.push_back(im);
  }
  return out;
}

// Partition of all 2^n strings (as masks) under G and the global flip.
inline std::set<std::set<Mask>> string_partition(const std::vector<std::vector<int>>& elems, int n) {
  const std::size_t dim = std::size_t{1} << n;
  UnionFind uf(dim);
  const Mask full = full_mask(n);
  for (std::size_t b = 0; b < dim; ++b) {
    uf.unite(b, b ^ full);
    for (const auto& e : elems) uf.unite(b, permute_mask(e, b));
  }
  std::map<std::size_t, std::set<Mask>> groups;
  for (std::size_t b = 0; b < dim; ++b) groups[uf.find(b)].insert(b);
  std::set<std::set<Mask>> out;
  for (auto& [_, s] : groups) out.insert(std::move(s));
  return out;
}

// Partition of T^2 under G and the exchange (T,T') -> (T',T).
inline std::set<std::set<std::pair<Mask, Mask>>> pair_partition(
    const std::vector<std::vector<int>>& elems, const TrajectorySet& ts) {
  const std::size_t k = ts.size();
  std::map<Mask, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index[ts[i].mask()] = i;
  UnionFind uf(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      uf.unite(a * k + b, b * k + a);
      for (const auto& e : elems) {
        const std::size_t pa = index.at(permute_mask(e, ts[a].mask()));
        const std::size_t pb = index.at(permute_mask(e, ts[b].mask()));
        uf.unite(a * k + b, pa * k + pb);
      }
    }
  std::map<std::size_t, std::set<std::pair<Mask, Mask>>> groups;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) groups[uf.find(a * k + b)].insert({ts[a].mask(), ts[b].mask()});
  std::set<std::set<std::pair<Mask, Mask>>> out;
  for (auto& [_, s] : groups) out.insert(std::move(s));
  return out;
}

inline std::set<std::set<Mask>> as_partition(const std::vector<StringOrbit>& orbits) {
  std::set<std::set<Mask>> out;
  for (const auto& o : orbits) {
    std::set<Mask> s;
    for (const auto& b : o.members) s.insert(b.bits());
    out.insert(std::move(s));
  }
  return out;
}

inline std::set<std::set<std::pair<Mask, Mask>>> as_partition(const std::vector<PairOrbit>& orbits) {
  std::set<std::set<std::pair<Mask, Mask>>> out;
  for (const auto& o : orbits) {
    std::set<std::pair<Mask, Mask>> s;
    for (const auto& p : o.members) s.insert({p.first.mask(), p.second.mask()});
    out.insert(std::move(s));
  }
  return out;
}

// ---- counting formulas ----

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

// Binary necklaces of length n up to complementation:
// (1/n) sum_{d | n} 2^{n/d - 1} phi(2d).
inline std::uint64_t necklace_flip_count(int n) {
  std::uint64_t sum = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) sum += (std::uint64_t{1} << (n / d - 1)) * euler_phi(2 * d);
  return sum / n;
}

inline double choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Symmetric-group entries by their defining triple sum.
inline double a_sym_entry(int n, int mu, int nu, double theta) {
  const double alpha = (n % 2 == 0 && 2 * nu == n) ? 1 : 2;
  double s = 0;
  for (int i = 0; i <= nu; ++i)
    for (int j = 0; j <= nu; ++j) s += choose(mu, i) * choose(mu, j) * choose(n - 2 * mu, nu - i - j) * std::cos((i - j) * theta);
  return alpha * s;
}

// Chebyshev polynomials through their trigonometric definitions.
inline double cheb_T(int k, double t) { return std::cos(k * std::acos(t)); }
inline double cheb_W(int k, double t) {
  const double x = std::acos(t);
  if (std::abs(std::sin(x / 2)) < 1e-300) return 2.0 * k + 1;  // t = 1
  return std::sin((k + 0.5) * x) / std::sin(x / 2);
}

// ---- LP feasibility by vertex enumeration ----

// Decides whether A c = e_0 has a solution c >= 0 by trying every column
// subset of size <= rank as a basis. Exponential; only for tiny systems.
inline bool vertex_feasible(const Eigen::MatrixXd& a, double tol = 1e-9) {
  const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
  Eigen::VectorXd d = Eigen::VectorXd::Zero(rows);
  d(0) = 1;
  for (std::uint32_t s = 1; s < (1u << cols); ++s) {
    const int k = std::popcount(s);
    if (k > rows) continue;
    Eigen::MatrixXd sub(rows, k);
    for (int j = 0, c = 0; j < cols; ++j)
      if ((s >> j) & 1) sub.col(c++) = a.col(j);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sub);
    if (qr.rank() < k) continue;
    const Eigen::VectorXd x = qr.solve(d);
    if ((sub * x - d).cwiseAbs().maxCoeff() > tol) continue;
    if (x.minCoeff() >= -tol) return true;
  }
  return false;
}

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation::from_image(im);
}

inline Mask random_mask(int n, std::mt19937_64& rng) {
  return std::uniform_int_distribution<Mask>(0, full_mask(n))(rng);
}

}  // namespace tsolve::oracle
