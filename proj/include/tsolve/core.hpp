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

#include <compare>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tsolve {

// Qubits are numbered 1..n at every user-facing boundary. Internally qubit k
// lives at bit k-1 of a 64-bit mask. The dense basis index of a string
// j_1...j_n is sum_k j_k 2^(n-k), so qubit 1 is the most significant bit.
using Mask = std::uint64_t;
using cplx = std::complex<double>;

inline constexpr int kMaxQubits = 64;
inline constexpr int kMaxStateQubits = 24;

// Input exceeds a configured size cap (CLI exit code 2).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed (CLI exit code 3).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Reverses the low n bits: converts between qubit-bit masks and basis-index
// masks. It is its own inverse.
Mask reverse_bits(Mask m, int n);

void check_qubit_count(int n, int max = kMaxQubits);

class BitString {
 public:
  BitString() = default;
  BitString(int n, Mask bits);

  static BitString parse(std::string_view text);
  static BitString from_index(int n, std::uint64_t index);

  int n() const { return n_; }
  Mask bits() const { return bits_; }
  bool get(int qubit) const { return (bits_ >> (qubit - 1)) & 1; }
  std::uint64_t index() const { return reverse_bits(bits_, n_); }
  std::string str() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  // Lexicographic in j_1...j_n, which coincides with basis-index order.
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.index() <=> b.index();
  }

 private:
  int n_ = 0;
  Mask bits_ = 0;
};

int weight(const BitString& b);
BitString flip_all(const BitString& b);

class Trajectory {
 public:
  Trajectory() = default;
  Trajectory(int n, Mask members);
  static Trajectory from_members(int n, const std::vector<int>& qubits);
  // "{1,3,4,5}"; "{}" is the empty trajectory.
  static Trajectory parse(std::string_view text, int n);
  // The generator trajectory [m] = {1,...,m}.
  static Trajectory first(int n, int m);

  int n() const { return n_; }
  Mask mask() const { return mask_; }
  int size() const;
  bool contains(int qubit) const { return (mask_ >> (qubit - 1)) & 1; }
  std::vector<int> members() const;
  std::string str() const;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
  // Lexicographic on the sorted member lists, e.g. {1,2} < {1,3} < {2}.
  friend std::strong_ordering operator<=>(const Trajectory& a, const Trajectory& b);

 private:
  int n_ = 0;
  Mask mask_ = 0;
};

using TrajectoryPair = std::pair<Trajectory, Trajectory>;

// |T \ T2| for equal-size trajectories.
int pair_degree(const Trajectory& t, const Trajectory& t2);

class TrajectorySet {
 public:
  TrajectorySet() = default;
  TrajectorySet(int n, std::vector<Trajectory> trajectories);

  // One trajectory per non-blank line; '#' starts a comment.
  static TrajectorySet parse(std::string_view text, int n);

  int n() const { return n_; }
  int m() const { return m_; }
  std::size_t size() const { return items_.size(); }
  const Trajectory& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Trajectory>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  // Index of t, or -1.
  long find(const Trajectory& t) const;
  bool contains(const Trajectory& t) const { return find(t) >= 0; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Trajectory> items_;
  std::vector<std::pair<Mask, long>> sorted_;  // mask -> index, sorted by mask
};

struct Angle {
  double theta = 0.0;
  double t = 1.0;

  Angle() = default;
  explicit Angle(double radians);
  // Accepts plain radians ("2.356") or pi fractions ("3pi/4", "pi", "pi/2",
  // "2*pi/3", "0.9pi").
  static Angle parse(std::string_view text);
};

class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(int n);  // all-zero amplitudes
  StateVector(int n, std::vector<cplx> amplitudes);

  static StateVector basis(int n, std::uint64_t index);
  // Lines of "bitstring re im"; omitted strings have zero amplitude.
  static StateVector parse(std::string_view text, int n = 0);

  int n() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  cplx& operator[](std::size_t i) { return amps_[i]; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }
  cplx* data() { return amps_.data(); }
  const cplx* data() const { return amps_.data(); }
  const std::vector<cplx>& amplitudes() const { return amps_; }

  double norm() const;
  void normalize();
  // Rotates the global phase so the first amplitude above eps is real and
  // positive.
  void canonicalize_phase(double eps = 1e-12);
  std::string str(double eps = 1e-15) const;

 private:
  int n_ = 0;
  std::vector<cplx> amps_;
};

cplx inner(const StateVector& a, const StateVector& b);  // <a|b>
StateVector tensor(const StateVector& a, const StateVector& b);

}  // namespace tsolve
