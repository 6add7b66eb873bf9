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

#include <stdexcept>

#include "tsolve/lp.hpp"

namespace tsolve {

double chebyshev_T(int k, double t) {
  if (k < 0) throw std::invalid_argument(fmt::format("T_{} is undefined", k));
  if (k == 0) return 1.0;
  double prev = 1.0, cur = t;
  for (int j = 2; j <= k; ++j) {
    const double next = 2 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double chebyshev_W(int k, double t) {
  if (k < -1) throw std::invalid_argument(fmt::format("W_{} is undefined", k));
  if (k == -1) return -1.0;
  double prev = -1.0, cur = 1.0;  // W_{-1}, W_0
  for (int j = 1; j <= k; ++j) {
    const double next = 2 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("IntPoly coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("IntPoly coefficient overflow");
  return r;
}

}  // namespace

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::derivative(int order) const {
  IntPoly p = *this;
  for (int r = 0; r < order && !p.c_.empty(); ++r) {
    std::vector<std::int64_t> d(p.c_.size() - 1);
    for (std::size_t k = 1; k < p.c_.size(); ++k)
      d[k - 1] = checked_mul(static_cast<std::int64_t>(k), p.c_[k]);
    p = IntPoly(std::move(d));
  }
  return p;
}

double IntPoly::eval(double t) const {
  double s = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * t + static_cast<double>(*it);
  return s;
}

std::string IntPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const std::int64_t v = c_[k];
    if (v == 0) continue;
    if (!s.empty()) s += v < 0 ? " - " : " + ";
    else if (v < 0) s += "-";
    const std::int64_t a = v < 0 ? -v : v;
    if (a != 1 || k == 0) s += std::to_string(a);
    if (k >= 1) s += "t";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = checked_add(a[static_cast<int>(k)], b[static_cast<int>(k)]);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-1) * b; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(a.c_[i], b.c_[j]));
  return IntPoly(std::move(c));
}

IntPoly operator*(std::int64_t s, const IntPoly& a) {
  std::vector<std::int64_t> c(a.c_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = checked_mul(s, a.c_[k]);
  return IntPoly(std::move(c));
}

IntPoly chebyshev_T_poly(int k) {
  if (k < 0) throw std::invalid_argument(fmt::format("T_{} is undefined", k));
  IntPoly prev = IntPoly::constant(1), cur = IntPoly::t();
  if (k == 0) return prev;
  for (int j = 2; j <= k; ++j) {
    IntPoly next = 2 * (IntPoly::t() * cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly chebyshev_W_poly(int k) {
  if (k < -1) throw std::invalid_argument(fmt::format("W_{} is undefined", k));
  IntPoly prev = IntPoly::constant(-1), cur = IntPoly::constant(1);
  if (k == -1) return prev;
  for (int j = 1; j <= k; ++j) {
    IntPoly next = 2 * (IntPoly::t() * cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace tsolve
