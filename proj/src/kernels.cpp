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

#include "tsolve/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace tsolve::kernels {

namespace detail {

std::complex<double> cdot_scalar(const std::complex<double>* a,
                                 const std::complex<double>* b, std::size_t n) {
  // Two accumulators keep the reduction order close to the vector variant.
  double re0 = 0, im0 = 0, re1 = 0, im1 = 0;
  std::size_t i = 0;
  for (; i + 1 < n; i += 2) {
    re0 += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im0 += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    re1 += a[i + 1].real() * b[i + 1].real() + a[i + 1].imag() * b[i + 1].imag();
    im1 += a[i + 1].real() * b[i + 1].imag() - a[i + 1].imag() * b[i + 1].real();
  }
  for (; i < n; ++i) {
    re0 += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im0 += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re0 + re1, im0 + im1};
}

void cmul_scalar(const std::complex<double>* a, const std::complex<double>* b,
                 std::complex<double>* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    const double im = a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    out[i] = {re, im};
  }
}

double norm2_scalar(const std::complex<double>* a, std::size_t n) {
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) s += std::norm(a[i]);
  return s;
}

}  // namespace detail

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(TSOLVE_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

namespace {

Isa detect() {
  // TSOLVE_ISA=scalar pins the reference path, e.g. for bisecting numerics.
  if (const char* env = std::getenv("TSOLVE_ISA"); env && std::strcmp(env, "scalar") == 0)
    return Isa::scalar;
  return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

}  // namespace

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

std::complex<double> cdot(const std::complex<double>* a, const std::complex<double>* b,
                          std::size_t n, Isa isa) {
#if defined(TSOLVE_HAVE_AVX2)
  if (isa == Isa::avx2) return detail::cdot_avx2(a, b, n);
#endif
  (void)isa;
  return detail::cdot_scalar(a, b, n);
}

void cmul(const std::complex<double>* a, const std::complex<double>* b,
          std::complex<double>* out, std::size_t n, Isa isa) {
#if defined(TSOLVE_HAVE_AVX2)
  if (isa == Isa::avx2) return detail::cmul_avx2(a, b, out, n);
#endif
  (void)isa;
  detail::cmul_scalar(a, b, out, n);
}

double norm2(const std::complex<double>* a, std::size_t n, Isa isa) {
#if defined(TSOLVE_HAVE_AVX2)
  if (isa == Isa::avx2) return detail::norm2_avx2(a, n);
#endif
  (void)isa;
  return detail::norm2_scalar(a, n);
}

std::complex<double> cdot(const std::complex<double>* a, const std::complex<double>* b,
                          std::size_t n) {
  return cdot(a, b, n, active_isa());
}

void cmul(const std::complex<double>* a, const std::complex<double>* b,
          std::complex<double>* out, std::size_t n) {
  cmul(a, b, out, n, active_isa());
}

double norm2(const std::complex<double>* a, std::size_t n) { return norm2(a, n, active_isa()); }

}  // namespace tsolve::kernels
