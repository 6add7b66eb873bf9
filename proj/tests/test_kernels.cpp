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

#include <complex>
#include <random>
#include <vector>

#include "tsolve/kernels.hpp"

namespace tsolve::kernels {
namespace {

using cd = std::complex<double>;

std::vector<cd> random_vec(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cd> v(n);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

class KernelEquivalence : public ::testing::TestWithParam<std::size_t> {};

// The SIMD variants only reassociate sums, so results agree with the scalar
// reference to rounding.
TEST_P(KernelEquivalence, Avx2MatchesScalar) {
  if (!isa_available(Isa::avx2)) GTEST_SKIP() << "AVX2 not available";
  std::mt19937_64 rng(GetParam());
  const std::size_t n = GetParam();
  const auto a = random_vec(n, rng), b = random_vec(n, rng);

  const cd d_s = cdot(a.data(), b.data(), n, Isa::scalar);
  const cd d_v = cdot(a.data(), b.data(), n, Isa::avx2);
  EXPECT_NEAR(std::abs(d_s - d_v), 0, 1e-12 * (1 + std::abs(d_s)) * std::sqrt(double(n) + 1));

  std::vector<cd> o_s(n), o_v(n);
  cmul(a.data(), b.data(), o_s.data(), n, Isa::scalar);
  cmul(a.data(), b.data(), o_v.data(), n, Isa::avx2);
  for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(std::abs(o_s[i] - o_v[i]), 0, 1e-14 * (1 + std::abs(o_s[i])));

  const double n_s = norm2(a.data(), n, Isa::scalar);
  const double n_v = norm2(a.data(), n, Isa::avx2);
  EXPECT_NEAR(n_s, n_v, 1e-12 * (1 + n_s));
}

INSTANTIATE_TEST_SUITE_P(Sizes, KernelEquivalence, ::testing::Values(0, 1, 2, 3, 7, 64, 1001, 4096));

TEST(Kernels, ScalarReferenceIsExact) {
  const std::vector<cd> a{{1, 2}, {3, -1}}, b{{0, 1}, {2, 2}};
  // conj(1+2i)(i) + conj(3-i)(2+2i) = (2+i) + (4+8i)
  EXPECT_EQ(cdot(a.data(), b.data(), 2, Isa::scalar), cd(6, 9));
  std::vector<cd> out(2);
  cmul(a.data(), b.data(), out.data(), 2, Isa::scalar);
  EXPECT_EQ(out[0], cd(-2, 1));
  EXPECT_EQ(norm2(a.data(), 2, Isa::scalar), 15.0);
}

TEST(Kernels, InPlaceCmul) {
  std::mt19937_64 rng(3);
  auto a = random_vec(33, rng);
  const auto b = random_vec(33, rng);
  std::vector<cd> expect(33);
  for (std::size_t i = 0; i < 33; ++i) expect[i] = a[i] * b[i];
  cmul(a.data(), b.data(), a.data(), 33);
  for (std::size_t i = 0; i < 33; ++i) EXPECT_NEAR(std::abs(a[i] - expect[i]), 0, 1e-14);
}

TEST(Kernels, ActiveIsaIsAvailable) {
  EXPECT_TRUE(isa_available(active_isa()));
  EXPECT_TRUE(isa_available(Isa::scalar));
}

}  // namespace
}  // namespace tsolve::kernels
