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

// Compiled with -mavx2 -mfma; only reached after the CPUID check in
// kernels.cpp. A __m256d holds two interleaved complex doubles.

#include <immintrin.h>

#include "tsolve/kernels.hpp"

namespace tsolve::kernels::detail {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

std::complex<double> cdot_avx2(const std::complex<double>* a, const std::complex<double>* b,
                               std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d re = _mm256_setzero_pd();  // lanes: ar*br, ai*bi
  __m256d im = _mm256_setzero_pd();  // lanes: ar*bi, ai*br
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    re = _mm256_fmadd_pd(va, vb, re);
    im = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), im);
  }
  const __m256d sign = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
  double out_re = hsum(re);
  double out_im = hsum(_mm256_mul_pd(im, sign));
  for (; i < n; ++i) {
    out_re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    out_im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {out_re, out_im};
}

void cmul_avx2(const std::complex<double>* a, const std::complex<double>* b,
               std::complex<double>* out, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  double* po = reinterpret_cast<double*>(out);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    const __m256d a_re = _mm256_movedup_pd(va);
    const __m256d a_im = _mm256_permute_pd(va, 0b1111);
    const __m256d b_sw = _mm256_permute_pd(vb, 0b0101);
    _mm256_storeu_pd(po + 2 * i, _mm256_fmaddsub_pd(a_re, vb, _mm256_mul_pd(a_im, b_sw)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

double norm2_avx2(const std::complex<double>* a, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(pa + 2 * i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += std::norm(a[i]);
  return s;
}

}  // namespace tsolve::kernels::detail
