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

#include "tsolve/lp.hpp"

namespace tsolve {

const char* variant_name(MatrixVariant v) { return v == MatrixVariant::A ? "A" : "Aprime"; }

int alpha(int n, int nu) { return (n % 2 == 0 && 2 * nu == n) ? 1 : 2; }

namespace {

void check_nm(int n, int m) {
  check_qubit_count(n);
  if (n < 1 || m < 0 || m > n)
    throw std::invalid_argument(fmt::format("need n >= 1 and 0 <= m <= n, got n={} m={}", n, m));
}

std::vector<std::uint64_t> symmetric_omega_sizes(int n) {
  std::vector<std::uint64_t> s(n / 2 + 1);
  for (int nu = 0; nu <= n / 2; ++nu) s[nu] = alpha(n, nu) * binomial(n, nu);
  return s;
}

}  // namespace

ReducedMatrix build_A_symmetric(int n, int m, const Angle& theta) {
  check_nm(n, m);
  const int M = static_cast<int>(symmetric_pair_orbit_count(n, m)), N = n / 2 + 1;
  ReducedMatrix r;
  r.theta = theta;
  r.variant = MatrixVariant::A;
  r.omega_sizes = symmetric_omega_sizes(n);
  r.entries.resize(M, N);
  for (int mu = 0; mu < M; ++mu)
    for (int nu = 0; nu < N; ++nu) {
      double s = 0;
      for (int i = 0; i <= mu; ++i)
        for (int i2 = 0; i2 <= mu; ++i2) {
          const double w = double(binomial(mu, i)) * double(binomial(mu, i2)) *
                           double(binomial(n - 2 * mu, nu - i - i2));
          if (w != 0) s += w * std::cos((i - i2) * theta.theta);
        }
      r.entries(mu, nu) = alpha(n, nu) * s;
    }
  return r;
}

ReducedMatrix build_Aprime(int n, int m, const Angle& theta) {
  check_nm(n, m);
  const int M = static_cast<int>(symmetric_pair_orbit_count(n, m)), N = n / 2 + 1;
  ReducedMatrix r;
  r.theta = theta;
  r.variant = MatrixVariant::Aprime;
  r.omega_sizes = symmetric_omega_sizes(n);
  r.entries.resize(M, N);
  double scale = 1;  // 2^mu mu!
  for (int mu = 0; mu < M; ++mu) {
    if (mu > 0) scale *= 2.0 * mu;
    for (int nu = 0; nu < N; ++nu) {
      if (mu == 0) {
        r.entries(0, nu) = double(r.omega_sizes[nu]);
        continue;
      }
      const int k = n - 2 * mu, d = nu - mu;
      r.entries(mu, nu) =
          scale * alpha(n, nu) *
          (double(binomial(k, d)) * theta.t + 0.5 * (double(binomial(k, d + 1)) + double(binomial(k, d - 1))));
    }
  }
  return r;
}

std::vector<std::vector<IntPoly>> A_symmetric_poly(int n, int m) {
  check_nm(n, m);
  const int M = static_cast<int>(symmetric_pair_orbit_count(n, m)), N = n / 2 + 1;
  std::vector<std::vector<IntPoly>> out(M, std::vector<IntPoly>(N));
  for (int mu = 0; mu < M; ++mu)
    for (int nu = 0; nu < N; ++nu) {
      IntPoly s;
      for (int i = 0; i <= mu; ++i)
        for (int i2 = 0; i2 <= mu; ++i2) {
          const auto w = static_cast<std::int64_t>(binomial(mu, i) * binomial(mu, i2) *
                                                   binomial(n - 2 * mu, nu - i - i2));
          if (w != 0) s = s + w * chebyshev_T_poly(std::abs(i - i2));
        }
      out[mu][nu] = alpha(n, nu) * s;
    }
  return out;
}

std::vector<std::vector<IntPoly>> Aprime_poly(int n, int m) {
  check_nm(n, m);
  const int M = static_cast<int>(symmetric_pair_orbit_count(n, m)), N = n / 2 + 1;
  std::vector<std::vector<IntPoly>> out(M, std::vector<IntPoly>(N));
  std::int64_t half_scale = 1;  // 2^(mu-1) mu!
  for (int nu = 0; nu < N; ++nu)
    out[0][nu] = IntPoly::constant(alpha(n, nu) * static_cast<std::int64_t>(binomial(n, nu)));
  for (int mu = 1; mu < M; ++mu) {
    half_scale *= (mu == 1 ? 1 : 2 * mu);
    for (int nu = 0; nu < N; ++nu) {
      const int k = n - 2 * mu, d = nu - mu;
      const auto lin = static_cast<std::int64_t>(2 * binomial(k, d));
      const auto cst = static_cast<std::int64_t>(binomial(k, d + 1) + binomial(k, d - 1));
      out[mu][nu] = (half_scale * alpha(n, nu)) * IntPoly({cst, lin});
    }
  }
  return out;
}

// ---- GenericAKernel ----

GenericAKernel::GenericAKernel(const OrbitTable& table, int reps_checked) {
  const int n = table.n;
  if (!table.strings_materialized())
    throw ResourceLimitError("orbit-sum matrix needs materialized bit-string orbits");
  if (!table.pairs_materialized() && reps_checked > 1)
    throw ResourceLimitError("orbit-sum matrix needs materialized pair orbits");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::int32_t> orbit_of(dim, -1);
  for (std::size_t nu = 0; nu < table.strings.size(); ++nu) {
    omega_sizes_.push_back(table.strings[nu].size);
    for (const auto& b : table.strings[nu].members)
      orbit_of[b.index()] = static_cast<std::int32_t>(nu);
  }
  const int N = static_cast<int>(table.strings.size());

  // Signed exponent histogram for one trajectory pair, folded to |d|.
  auto histogram = [&](const TrajectoryPair& p) {
    const Mask a = reverse_bits(p.first.mask() & ~p.second.mask(), n);
    const Mask b = reverse_bits(p.second.mask() & ~p.first.mask(), n);
    const int w = std::popcount(a);
    std::vector<std::vector<std::int64_t>> signed_counts(N, std::vector<std::int64_t>(2 * w + 1, 0));
    for (std::size_t x = 0; x < dim; ++x)
      ++signed_counts[orbit_of[x]][std::popcount(x & b) - std::popcount(x & a) + w];
    std::vector<std::vector<std::int64_t>> folded(N, std::vector<std::int64_t>(w + 1, 0));
    for (int nu = 0; nu < N; ++nu) {
      for (int d = 1; d <= w; ++d) {
        if (signed_counts[nu][w + d] != signed_counts[nu][w - d])
          throw InvariantError(fmt::format(
              "orbit-sum entry for pair {} and string orbit {} has a nonzero imaginary part",
              pair_str(p), nu));
        folded[nu][d] = 2 * signed_counts[nu][w + d];
      }
      folded[nu][0] = signed_counts[nu][w];
    }
    return folded;
  };

  for (const auto& orbit : table.pairs) {
    auto counts = histogram(orbit.rep);
    const std::size_t size = orbit.members.size();
    for (int r = 1; r < reps_checked && size > 1; ++r) {
      const auto& other = orbit.members[(r * size) / reps_checked];
      auto again = histogram(other);
      // Histograms can differ in length only through trailing zeros.
      bool same = true;
      for (int nu = 0; nu < N && same; ++nu) {
        const std::size_t len = std::max(counts[nu].size(), again[nu].size());
        for (std::size_t d = 0; d < len; ++d) {
          const auto x = d < counts[nu].size() ? counts[nu][d] : 0;
          const auto y = d < again[nu].size() ? again[nu][d] : 0;
          if (x != y) same = false;
        }
      }
      if (!same)
        throw InvariantError(fmt::format("pairs {} and {} share an orbit but give different rows",
                                         pair_str(orbit.rep), pair_str(other)));
    }
    counts_.push_back(std::move(counts));
  }
}

ReducedMatrix GenericAKernel::evaluate(const Angle& theta) const {
  ReducedMatrix r;
  r.theta = theta;
  r.variant = MatrixVariant::A;
  r.omega_sizes = omega_sizes_;
  r.entries.resize(M(), N());
  for (int mu = 0; mu < M(); ++mu)
    for (int nu = 0; nu < N(); ++nu) {
      const auto& c = counts_[mu][nu];
      double s = 0;
      for (std::size_t d = 0; d < c.size(); ++d)
        if (c[d]) s += double(c[d]) * std::cos(double(d) * theta.theta);
      r.entries(mu, nu) = s;
    }
  return r;
}

IntPoly GenericAKernel::poly(int mu, int nu) const {
  IntPoly p;
  const auto& c = counts_.at(mu).at(nu);
  for (std::size_t d = 0; d < c.size(); ++d)
    if (c[d]) p = p + c[d] * chebyshev_T_poly(static_cast<int>(d));
  return p;
}

ReducedMatrix build_A_generic(const OrbitTable& table, const Angle& theta) {
  return GenericAKernel(table).evaluate(theta);
}

// ---- ReducedSystem ----

ReducedSystem ReducedSystem::symmetric(int n, int m, MatrixVariant variant) {
  check_nm(n, m);
  ReducedSystem s;
  s.n_ = n;
  s.m_ = m;
  s.M_ = static_cast<int>(symmetric_pair_orbit_count(n, m));
  s.N_ = n / 2 + 1;
  s.variant_ = variant;
  return s;
}

ReducedSystem ReducedSystem::from_orbits(const OrbitTable& table) {
  ReducedSystem s;
  s.kernel_.emplace(table);
  s.n_ = table.n;
  s.m_ = table.ts.m();
  s.M_ = s.kernel_->M();
  s.N_ = s.kernel_->N();
  s.variant_ = MatrixVariant::A;
  return s;
}

ReducedMatrix ReducedSystem::matrix(const Angle& theta) const {
  if (kernel_) return kernel_->evaluate(theta);
  return variant_ == MatrixVariant::A ? build_A_symmetric(n_, m_, theta) : build_Aprime(n_, m_, theta);
}

}  // namespace tsolve
