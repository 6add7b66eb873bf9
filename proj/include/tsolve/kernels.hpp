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

// Hot loops of the statevector oracle. Each kernel has a scalar reference
// and an AVX2+FMA variant; the variant is picked once at runtime from CPUID.
// The explicit-Isa overloads exist so tests can compare implementations.

#pragma once

#include <complex>
#include <cstddef>

namespace tsolve::kernels {

enum class Isa { scalar, avx2 };

bool isa_available(Isa isa);
Isa active_isa();
const char* isa_name(Isa isa);

// sum_i conj(a_i) * b_i
std::complex<double> cdot(const std::complex<double>* a, const std::complex<double>* b,
                          std::size_t n);
std::complex<double> cdot(const std::complex<double>* a, const std::complex<double>* b,
                          std::size_t n, Isa isa);

// out_i = a_i * b_i (out may alias either input)
void cmul(const std::complex<double>* a, const std::complex<double>* b,
          std::complex<double>* out, std::size_t n);
void cmul(const std::complex<double>* a, const std::complex<double>* b,
          std::complex<double>* out, std::size_t n, Isa isa);

// sum_i |a_i|^2
double norm2(const std::complex<double>* a, std::size_t n);
double norm2(const std::complex<double>* a, std::size_t n, Isa isa);

namespace detail {
std::complex<double> cdot_scalar(const std::complex<double>*, const std::complex<double>*,
                                 std::size_t);
void cmul_scalar(const std::complex<double>*, const std::complex<double>*,
                 std::complex<double>*, std::size_t);
double norm2_scalar(const std::complex<double>*, std::size_t);
#if defined(TSOLVE_HAVE_AVX2)
std::complex<double> cdot_avx2(const std::complex<double>*, const std::complex<double>*,
                               std::size_t);
void cmul_avx2(const std::complex<double>*, const std::complex<double>*,
               std::complex<double>*, std::size_t);
double norm2_avx2(const std::complex<double>*, std::size_t);
#endif
}  // namespace detail

}  // namespace tsolve::kernels
