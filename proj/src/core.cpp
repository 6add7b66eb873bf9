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

#include "tsolve/core.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tsolve/kernels.hpp"

namespace tsolve {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, long& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  // from_chars for double is missing in some libstdc++ builds; strtod is fine.
  std::string buf(s);
  char* end = nullptr;
  out = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size();
}

}  // namespace

Mask reverse_bits(Mask m, int n) {
  Mask r = 0;
  for (int k = 0; k < n; ++k)
    if ((m >> k) & 1) r |= Mask{1} << (n - 1 - k);
  return r;
}

void check_qubit_count(int n, int max) {
  if (n < 0 || n > max)
    throw std::invalid_argument(fmt::format("qubit count {} outside [0, {}]", n, max));
}

// ---- BitString ----

BitString::BitString(int n, Mask bits) : n_(n), bits_(bits) {
  check_qubit_count(n);
  if (bits & ~full_mask(n))
    throw std::invalid_argument(fmt::format("bit-string mask has bits beyond n={}", n));
}

BitString BitString::parse(std::string_view text) {
  text = trim(text);
  if (text.empty() || text.size() > kMaxQubits)
    throw std::invalid_argument(fmt::format("bad bit-string '{}'", text));
  Mask bits = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '1')
      bits |= Mask{1} << k;
    else if (text[k] != '0')
      throw std::invalid_argument(fmt::format("bad bit-string '{}'", text));
  }
  return BitString(static_cast<int>(text.size()), bits);
}

BitString BitString::from_index(int n, std::uint64_t index) {
  return BitString(n, reverse_bits(index, n));
}

std::string BitString::str() const {
  std::string s(n_, '0');
  for (int k = 0; k < n_; ++k)
    if ((bits_ >> k) & 1) s[k] = '1';
  return s;
}

int weight(const BitString& b) { return std::popcount(b.bits()); }

BitString flip_all(const BitString& b) { return BitString(b.n(), b.bits() ^ full_mask(b.n())); }

// ---- Trajectory ----

Trajectory::Trajectory(int n, Mask members) : n_(n), mask_(members) {
  check_qubit_count(n);
  if (members & ~full_mask(n))
    throw std::invalid_argument(fmt::format("trajectory has qubits beyond n={}", n));
}

Trajectory Trajectory::from_members(int n, const std::vector<int>& qubits) {
  check_qubit_count(n);
  Mask m = 0;
  for (int q : qubits) {
    if (q < 1 || q > n)
      throw std::invalid_argument(fmt::format("qubit {} outside 1..{}", q, n));
    m |= Mask{1} << (q - 1);
  }
  return Trajectory(n, m);
}

Trajectory Trajectory::parse(std::string_view text, int n) {
  const std::string_view orig = text;
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw std::invalid_argument(fmt::format("bad trajectory '{}': expected {{i,j,...}}", orig));
  text = trim(text.substr(1, text.size() - 2));
  std::vector<int> qubits;
  while (!text.empty()) {
    const auto comma = text.find(',');
    long q = 0;
    if (!parse_int(text.substr(0, comma), q))
      throw std::invalid_argument(fmt::format("bad trajectory '{}'", orig));
    if (q < 1 || q > n)
      throw std::invalid_argument(
          fmt::format("bad trajectory '{}': qubit {} outside 1..{}", orig, q, n));
    if (std::find(qubits.begin(), qubits.end(), q) != qubits.end())
      throw std::invalid_argument(fmt::format("bad trajectory '{}': repeated qubit {}", orig, q));
    qubits.push_back(static_cast<int>(q));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
    if (trim(text).empty()) throw std::invalid_argument(fmt::format("bad trajectory '{}'", orig));
  }
  return from_members(n, qubits);
}

Trajectory Trajectory::first(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument(fmt::format("m={} outside [0, {}]", m, n));
  return Trajectory(n, full_mask(m));
}

int Trajectory::size() const { return std::popcount(mask_); }

std::vector<int> Trajectory::members() const {
  std::vector<int> out;
  for (Mask m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string Trajectory::str() const {
  std::string s = "{";
  bool first = true;
  for (int q : members()) {
    if (!first) s += ',';
    s += std::to_string(q);
    first = false;
  }
  return s + "}";
}

std::strong_ordering operator<=>(const Trajectory& a, const Trajectory& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  Mask x = a.mask_, y = b.mask_;
  while (x && y) {
    const int qx = std::countr_zero(x), qy = std::countr_zero(y);
    if (qx != qy) return qx <=> qy;
    x &= x - 1;
    y &= y - 1;
  }
  // One list is a prefix of the other; the shorter sorts first.
  return (x != 0) <=> (y != 0);
}

int pair_degree(const Trajectory& t, const Trajectory& t2) {
  if (t.n() != t2.n() || t.size() != t2.size())
    throw std::invalid_argument(
        fmt::format("pair_degree needs equal sizes: {} vs {}", t.str(), t2.str()));
  return std::popcount(t.mask() & ~t2.mask());
}

// ---- TrajectorySet ----

TrajectorySet::TrajectorySet(int n, std::vector<Trajectory> trajectories)
    : n_(n), items_(std::move(trajectories)) {
  check_qubit_count(n);
  m_ = items_.empty() ? 0 : items_.front().size();
  sorted_.reserve(items_.size());
  for (std::size_t i = 0; i < items_.size(); ++i) {
    const Trajectory& t = items_[i];
    if (t.n() != n)
      throw std::invalid_argument(fmt::format("trajectory {} has n={}, expected {}", t.str(), t.n(), n));
    if (t.size() != m_)
      throw std::invalid_argument(fmt::format(
          "trajectory {} has size {}, expected {} (all trajectories must be equal size)", t.str(),
          t.size(), m_));
    sorted_.emplace_back(t.mask(), static_cast<long>(i));
  }
  std::sort(sorted_.begin(), sorted_.end());
  for (std::size_t i = 1; i < sorted_.size(); ++i)
    if (sorted_[i].first == sorted_[i - 1].first)
      throw std::invalid_argument(
          fmt::format("duplicate trajectory {}", items_[sorted_[i].second].str()));
}

TrajectorySet TrajectorySet::parse(std::string_view text, int n) {
  std::vector<Trajectory> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      out.push_back(Trajectory::parse(line, n));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(fmt::format("line {}: {}", line_no, e.what()));
    }
  }
  return TrajectorySet(n, std::move(out));
}

long TrajectorySet::find(const Trajectory& t) const {
  if (t.n() != n_) return -1;
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), std::make_pair(t.mask(), long{-1}));
  if (it == sorted_.end() || it->first != t.mask()) return -1;
  return it->second;
}

// ---- Angle ----

Angle::Angle(double radians) : theta(radians) {
  constexpr double pi = std::numbers::pi;
  if (!(radians >= -1e-12 && radians <= pi + 1e-12))
    throw std::invalid_argument(fmt::format("theta={} outside [0, pi]", radians));
  theta = std::clamp(radians, 0.0, pi);
  t = std::cos(theta);
}

Angle Angle::parse(std::string_view text) {
  const std::string_view orig = text;
  text = trim(text);
  const auto pi_pos = text.find("pi");
  if (pi_pos == std::string_view::npos) {
    double v = 0;
    if (!parse_double(text, v)) throw std::invalid_argument(fmt::format("bad angle '{}'", orig));
    return Angle(v);
  }
  // [p][*]pi[/q], p a decimal multiplier
  std::string_view num = trim(text.substr(0, pi_pos));
  if (!num.empty() && num.back() == '*') num = trim(num.substr(0, num.size() - 1));
  std::string_view rest = trim(text.substr(pi_pos + 2));
  double p = 1;
  long q = 1;
  if (num == "-")
    p = -1;
  else if (!num.empty() && num != "+" && !parse_double(num, p))
    throw std::invalid_argument(fmt::format("bad angle '{}'", orig));
  if (!rest.empty()) {
    if (rest.front() != '/' || !parse_int(rest.substr(1), q) || q <= 0)
      throw std::invalid_argument(fmt::format("bad angle '{}'", orig));
  }
  return Angle(p * std::numbers::pi / static_cast<double>(q));
}

// ---- StateVector ----

namespace {
void check_state_qubits(int n) {
  if (n > kMaxStateQubits)
    throw ResourceLimitError(
        fmt::format("{} qubits exceed the {}-qubit statevector limit", n, kMaxStateQubits));
  check_qubit_count(n, kMaxStateQubits);
}
}  // namespace

StateVector::StateVector(int n) : n_(n) {
  check_state_qubits(n);
  amps_.assign(std::size_t{1} << n, cplx{0, 0});
}

StateVector::StateVector(int n, std::vector<cplx> amplitudes) : n_(n), amps_(std::move(amplitudes)) {
  check_state_qubits(n);
  if (amps_.size() != (std::size_t{1} << n))
    throw std::invalid_argument(
        fmt::format("state has {} amplitudes, expected 2^{}", amps_.size(), n));
}

StateVector StateVector::basis(int n, std::uint64_t index) {
  StateVector s(n);
  s.amps_.at(index) = 1.0;
  return s;
}

StateVector StateVector::parse(std::string_view text, int n) {
  struct Entry {
    BitString b;
    cplx a;
  };
  std::vector<Entry> entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream in{std::string(line)};
    std::string bits, re_s, im_s, extra;
    in >> bits >> re_s >> im_s;
    double re = 0, im = 0;
    if (bits.empty() || re_s.empty() || im_s.empty() || (in >> extra) || !parse_double(re_s, re) ||
        !parse_double(im_s, im))
      throw std::invalid_argument(
          fmt::format("line {}: expected 'bitstring re im', got '{}'", line_no, line));
    BitString b;
    try {
      b = BitString::parse(bits);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(fmt::format("line {}: {}", line_no, e.what()));
    }
    if (n == 0) n = b.n();
    if (b.n() != n)
      throw std::invalid_argument(
          fmt::format("line {}: bit-string length {} but n={}", line_no, b.n(), n));
    entries.push_back({b, {re, im}});
  }
  if (n == 0) throw std::invalid_argument("empty state file");
  if (n > kMaxStateQubits)
    throw ResourceLimitError(fmt::format("state on {} qubits exceeds cap {}", n, kMaxStateQubits));
  StateVector s(n);
  for (const auto& e : entries) s.amps_[e.b.index()] += e.a;
  return s;
}

double StateVector::norm() const { return std::sqrt(kernels::norm2(amps_.data(), amps_.size())); }

void StateVector::normalize() {
  const double nrm = norm();
  if (nrm == 0) throw std::invalid_argument("cannot normalize the zero vector");
  for (auto& a : amps_) a /= nrm;
}

void StateVector::canonicalize_phase(double eps) {
  for (const auto& a : amps_) {
    if (std::abs(a) > eps) {
      const cplx rot = std::conj(a) / std::abs(a);
      for (auto& b : amps_) b *= rot;
      return;
    }
  }
}

std::string StateVector::str(double eps) const {
  std::string out;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (std::abs(amps_[i]) <= eps) continue;
    out += fmt::format("{} {:.17g} {:.17g}\n", BitString::from_index(n_, i).str(), amps_[i].real(),
                       amps_[i].imag());
  }
  return out;
}

cplx inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
  return kernels::cdot(a.data(), b.data(), a.dim());
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  const int n = a.n() + b.n();
  if (n > kMaxStateQubits)
    throw ResourceLimitError(fmt::format("tensor product on {} qubits exceeds cap", n));
  StateVector out(n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[(i << b.n()) | j] = a[i] * b[j];
  return out;
}

}  // namespace tsolve
