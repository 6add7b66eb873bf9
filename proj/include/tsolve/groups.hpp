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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsolve/core.hpp"

namespace tsolve {

class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  // image[k-1] = pi(k), 1-based values.
  static Permutation from_image(const std::vector<int>& image);
  // Whitespace- or comma-separated 1-based image array, e.g. "2 3 1".
  static Permutation parse_image(std::string_view text);
  // Cycle notation, e.g. "(1 2)(4 8)"; "()" is the identity.
  static Permutation parse_cycles(std::string_view text, int n);
  // The n-cycle z = (1 2 ... n).
  static Permutation cycle(int n);
  static Permutation transposition(int n, int a, int b);

  int n() const { return static_cast<int>(image_.size()); }
  int operator()(int k) const { return image_[k - 1] + 1; }  // 1-based
  bool is_identity() const;

  // Moves bit k-1 to bit pi(k)-1. This is both pi(T) for a trajectory mask
  // and the string action (pi j)_k = j_{pi^-1(k)}.
  Mask apply(Mask m) const;
  Trajectory apply(const Trajectory& t) const;
  BitString apply(const BitString& b) const;

  Permutation inverse() const;
  std::string str() const;  // cycle notation

  // (a * b)(k) = a(b(k))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;  // 0-based
};

// A subset of qubits whose contents are exchanged between the two members of
// a trajectory pair. Composition is symmetric difference.
struct SwapElement {
  int n = 0;
  Mask subset = 0;

  static SwapElement none(int n) { return {n, 0}; }
  static SwapElement all(int n) { return {n, full_mask(n)}; }
  friend SwapElement operator*(const SwapElement& a, const SwapElement& b) {
    return {a.n, a.subset ^ b.subset};
  }
  friend bool operator==(const SwapElement&, const SwapElement&) = default;
};

// (varsigma, pi) with composition (s, p)(s', p') = (s xor p(s'), p p').
// With s restricted to {empty, [n]} these are the elements of the doubled
// group {empty,[n]} x G used for orbit enumeration.
struct GroupElement {
  SwapElement swap;
  Permutation perm;

  static GroupElement identity(int n) { return {SwapElement::none(n), Permutation::identity(n)}; }
  static GroupElement flip(int n) { return {SwapElement::all(n), Permutation::identity(n)}; }
  static GroupElement of(const Permutation& p) { return {SwapElement::none(p.n()), p}; }
  bool is_tilde() const { return swap.subset == 0 || swap.subset == full_mask(swap.n); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

BitString act_on_bitstring(const GroupElement& g, const BitString& b);
TrajectoryPair act_on_pair(const GroupElement& g, const TrajectoryPair& p);
// Exchanges the qubits in s between the two trajectories.
TrajectoryPair swap_pair(const SwapElement& s, const TrajectoryPair& p);

enum class GroupKind { symmetric, cyclic, generic };
const char* kind_name(GroupKind k);

class PermutationGroup {
 public:
  static PermutationGroup symmetric(int n);
  static PermutationGroup cyclic(int n);
  static PermutationGroup generic(int n, std::vector<Permutation> generators);
  // One image array per line; blank lines and '#' comments are skipped.
  static PermutationGroup parse_generators(std::string_view text);

  int n() const { return n_; }
  GroupKind kind() const { return kind_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  // |G|; closed form for symmetric/cyclic (nullopt if n! overflows), closure
  // enumeration for generic kind (ResourceLimitError beyond cap).
  std::optional<std::uint64_t> order(std::size_t cap = 1 << 22) const;
  // All elements, sorted. ResourceLimitError when the group exceeds cap.
  std::vector<Permutation> elements(std::size_t cap = 1 << 22) const;

 private:
  int n_ = 0;
  GroupKind kind_ = GroupKind::generic;
  std::vector<Permutation> gens_;
};

struct StringOrbit {
  BitString rep;
  std::uint64_t size = 0;
  std::vector<BitString> members;  // sorted; empty when not materialized
};

struct PairOrbit {
  TrajectoryPair rep;
  std::uint64_t size = 0;
  std::vector<TrajectoryPair> members;  // sorted; empty when not materialized
};

struct OrbitOptions {
  bool force_generic = false;        // skip the closed-form fast paths
  std::uint64_t materialize_cap = std::uint64_t{1} << 22;  // max elements listed
  // Strings the cyclic and generic paths may enumerate; they cannot skip it.
  std::uint64_t string_cap = std::uint64_t{1} << kMaxStateQubits;
  int max_generic_qubits = kMaxStateQubits;
};

// Orbit tables are sorted by representative (the lexicographically smallest
// member); pair orbit 0 is always the diagonal orbit {(T,T)}.
struct OrbitTable {
  int n = 0;
  GroupKind kind = GroupKind::generic;
  TrajectorySet ts;
  std::vector<StringOrbit> strings;
  std::vector<PairOrbit> pairs;

  std::size_t N() const { return strings.size(); }
  std::size_t M() const { return pairs.size(); }
  bool strings_materialized() const;
  bool pairs_materialized() const;
};

// The orbit of [m] under G, ordered: lexicographic for symmetric, by window
// start for cyclic, lexicographic for generic.
TrajectorySet generate_transitive_set(const PermutationGroup& g, int m,
                                      std::uint64_t cap = std::uint64_t{1} << 22);

// Throws NotInvariantError naming a generator and a pair it maps outside T^2.
void check_pair_invariance(const PermutationGroup& g, const TrajectorySet& ts);
bool is_transitive(const PermutationGroup& g, const TrajectorySet& ts);

class NotInvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<StringOrbit> orbits_bitstrings(const PermutationGroup& g, const OrbitOptions& opt = {});
std::vector<PairOrbit> orbits_pairs(const PermutationGroup& g, const TrajectorySet& ts,
                                    const OrbitOptions& opt = {});
OrbitTable build_orbit_table(const PermutationGroup& g, const TrajectorySet& ts,
                             const OrbitOptions& opt = {});

// Closed-form counts.
std::uint64_t symmetric_string_orbit_count(int n);
std::uint64_t symmetric_pair_orbit_count(int n, int m);
std::uint64_t cyclic_string_orbit_count(int n);  // divisor-sum necklace formula
std::uint64_t cyclic_pair_orbit_count(int n, int m);

struct BurnsideBounds {
  double lower_M = 0, upper_M = 0, lower_N = 0, upper_N = 0;
};
BurnsideBounds burnside_bounds(const PermutationGroup& g, const TrajectorySet& ts);

std::uint64_t binomial(int n, int k);  // 0 outside 0 <= k <= n

// One orbit per line, representative first, members space-separated.
std::string dump_string_orbits(const std::vector<StringOrbit>& orbits);
std::string dump_pair_orbits(const std::vector<PairOrbit>& orbits);
std::string pair_str(const TrajectoryPair& p);

}  // namespace tsolve
