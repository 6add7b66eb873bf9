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

#include "tsolve/groups.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace tsolve {

// ---- Permutation ----

Permutation Permutation::identity(int n) {
  check_qubit_count(n);
  Permutation p;
  p.image_.resize(n);
  std::iota(p.image_.begin(), p.image_.end(), 0);
  return p;
}

Permutation Permutation::from_image(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  check_qubit_count(n);
  Permutation p;
  p.image_.resize(n);
  std::vector<bool> seen(n, false);
  for (int k = 0; k < n; ++k) {
    const int v = image[k];
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument(fmt::format("image array is not a permutation of 1..{}", n));
    seen[v - 1] = true;
    p.image_[k] = v - 1;
  }
  return p;
}

Permutation Permutation::parse_image(std::string_view text) {
  std::string buf(text);
  std::replace(buf.begin(), buf.end(), ',', ' ');
  std::istringstream in(buf);
  std::vector<int> image;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      image.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument(fmt::format("bad permutation entry '{}'", tok));
    }
  }
  if (image.empty()) throw std::invalid_argument("empty permutation");
  return from_image(image);
}

Permutation Permutation::parse_cycles(std::string_view text, int n) {
  Permutation p = identity(n);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument(fmt::format("bad cycle notation '{}'", text));
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw std::invalid_argument(fmt::format("bad cycle notation '{}'", text));
      const int v = std::stoi(std::string(text.substr(i, j - i)));
      if (v < 1 || v > n || std::find(cyc.begin(), cyc.end(), v) != cyc.end())
        throw std::invalid_argument(fmt::format("bad cycle entry {} for n={}", v, n));
      cyc.push_back(v);
      i = j;
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    Permutation c = identity(n);
    for (std::size_t k = 0; k < cyc.size(); ++k)
      c.image_[cyc[k] - 1] = cyc[(k + 1) % cyc.size()] - 1;
    p = c * p;  // cycles written left to right act right to left; they are
                // disjoint in normal use, where order is irrelevant
    skip_ws();
  }
  return p;
}

Permutation Permutation::cycle(int n) {
  Permutation p = identity(n);
  for (int k = 0; k < n; ++k) p.image_[k] = (k + 1) % n;
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("transposition out of range");
  std::swap(p.image_[a - 1], p.image_[b - 1]);
  return p;
}

bool Permutation::is_identity() const {
  for (int k = 0; k < n(); ++k)
    if (image_[k] != k) return false;
  return true;
}

Mask Permutation::apply(Mask m) const {
  Mask out = 0;
  for (; m; m &= m - 1) out |= Mask{1} << image_[std::countr_zero(m)];
  return out;
}

Trajectory Permutation::apply(const Trajectory& t) const { return Trajectory(t.n(), apply(t.mask())); }

BitString Permutation::apply(const BitString& b) const { return BitString(b.n(), apply(b.bits())); }

Permutation Permutation::inverse() const {
  Permutation p;
  p.image_.resize(image_.size());
  for (int k = 0; k < n(); ++k) p.image_[image_[k]] = k;
  return p;
}

std::string Permutation::str() const {
  std::string s;
  std::vector<bool> seen(n(), false);
  for (int k = 0; k < n(); ++k) {
    if (seen[k] || image_[k] == k) continue;
    s += '(';
    for (int j = k; !seen[j]; j = image_[j]) {
      if (j != k) s += ' ';
      s += std::to_string(j + 1);
      seen[j] = true;
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("composing permutations of different degree");
  Permutation p;
  p.image_.resize(a.image_.size());
  for (int k = 0; k < a.n(); ++k) p.image_[k] = a.image_[b.image_[k]];
  return p;
}

// ---- group elements and actions ----

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  return {SwapElement{a.swap.n, a.swap.subset ^ a.perm.apply(b.swap.subset)}, a.perm * b.perm};
}

BitString act_on_bitstring(const GroupElement& g, const BitString& b) {
  return BitString(b.n(), g.perm.apply(b.bits()) ^ g.swap.subset);
}

TrajectoryPair swap_pair(const SwapElement& s, const TrajectoryPair& p) {
  const Mask a = p.first.mask(), b = p.second.mask(), sw = s.subset;
  return {Trajectory(p.first.n(), (a & ~sw) | (b & sw)),
          Trajectory(p.second.n(), (b & ~sw) | (a & sw))};
}

TrajectoryPair act_on_pair(const GroupElement& g, const TrajectoryPair& p) {
  return swap_pair(g.swap, {g.perm.apply(p.first), g.perm.apply(p.second)});
}

const char* kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::symmetric:
      return "sym";
    case GroupKind::cyclic:
      return "cyc";
    case GroupKind::generic:
      return "generic";
  }
  return "?";
}

// ---- PermutationGroup ----

PermutationGroup PermutationGroup::symmetric(int n) {
  check_qubit_count(n);
  PermutationGroup g;
  g.n_ = n;
  g.kind_ = GroupKind::symmetric;
  if (n >= 2) g.gens_.push_back(Permutation::transposition(n, 1, 2));
  if (n >= 3) g.gens_.push_back(Permutation::cycle(n));
  return g;
}

PermutationGroup PermutationGroup::cyclic(int n) {
  check_qubit_count(n);
  PermutationGroup g;
  g.n_ = n;
  g.kind_ = GroupKind::cyclic;
  if (n >= 2) g.gens_.push_back(Permutation::cycle(n));
  return g;
}

PermutationGroup PermutationGroup::generic(int n, std::vector<Permutation> generators) {
  check_qubit_count(n);
  PermutationGroup g;
  g.n_ = n;
  g.kind_ = GroupKind::generic;
  for (auto& p : generators) {
    if (p.n() != n)
      throw std::invalid_argument(fmt::format("generator {} has degree {}, expected {}", p.str(), p.n(), n));
    if (!p.is_identity()) g.gens_.push_back(std::move(p));
  }
  return g;
}

PermutationGroup PermutationGroup::parse_generators(std::string_view text) {
  std::vector<Permutation> gens;
  std::size_t line_no = 0;
  int n = -1;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      gens.push_back(Permutation::parse_image(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(fmt::format("line {}: {}", line_no, e.what()));
    }
    if (n >= 0 && gens.back().n() != n)
      throw std::invalid_argument(fmt::format("line {}: generator degree {} differs from {}",
                                              line_no, gens.back().n(), n));
    n = gens.back().n();
  }
  if (gens.empty()) throw std::invalid_argument("generator file has no permutations");
  return generic(n, std::move(gens));
}

std::vector<Permutation> PermutationGroup::elements(std::size_t cap) const {
  std::set<Permutation> seen{Permutation::identity(n_)};
  std::deque<Permutation> queue{Permutation::identity(n_)};
  while (!queue.empty()) {
    const Permutation p = queue.front();
    queue.pop_front();
    for (const auto& g : gens_) {
      Permutation q = g * p;
      if (seen.insert(q).second) {
        if (seen.size() > cap)
          throw ResourceLimitError(fmt::format("group has more than {} elements", cap));
        queue.push_back(std::move(q));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::optional<std::uint64_t> PermutationGroup::order(std::size_t cap) const {
  switch (kind_) {
    case GroupKind::symmetric: {
      if (n_ > 20) return std::nullopt;
      std::uint64_t f = 1;
      for (int k = 2; k <= n_; ++k) f *= k;
      return f;
    }
    case GroupKind::cyclic:
      return n_ == 0 ? 1 : n_;
    case GroupKind::generic:
      return elements(cap).size();
  }
  return std::nullopt;
}

// ---- combinatorics ----

std::uint64_t binomial(int n, int k) {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 65>, 65> t{};
    for (int a = 0; a <= 64; ++a) {
      t[a][0] = 1;
      for (int b = 1; b <= a; ++b) t[a][b] = t[a - 1][b - 1] + (b < a ? t[a - 1][b] : 0);
    }
    return t;
  }();
  if (n < 0 || k < 0 || k > n || n > 64) return 0;
  return table[n][k];
}

std::uint64_t symmetric_string_orbit_count(int n) { return n / 2 + 1; }

std::uint64_t symmetric_pair_orbit_count(int n, int m) {
  return m <= n / 2 ? m + 1 : n - m + 1;
}

std::uint64_t cyclic_string_orbit_count(int n) {
  if (n < 1) throw std::invalid_argument("cyclic orbit count needs n >= 1");
  auto phi = [](std::uint64_t x) {
    std::uint64_t r = x;
    for (std::uint64_t p = 2; p * p <= x; ++p) {
      if (x % p) continue;
      while (x % p == 0) x /= p;
      r -= r / p;
    }
    if (x > 1) r -= r / x;
    return r;
  };
  std::uint64_t total = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) total += phi(2 * d) << (n / d - 1);
  return total / n;
}

std::uint64_t cyclic_pair_orbit_count(int n, int m) {
  return (m == 0 || m == n) ? 1 : n / 2 + 1;
}

// ---- transitive sets and invariance ----

namespace {

std::vector<Trajectory> lex_combinations(int n, int m, std::uint64_t cap) {
  if (binomial(n, m) > cap)
    throw ResourceLimitError(fmt::format("C({},{}) trajectories exceed cap {}", n, m, cap));
  std::vector<Trajectory> out;
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    out.push_back(Trajectory::from_members(n, idx));
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i + 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

Mask window(int n, int start, int m) {  // qubits start..start+m-1 mod n, 0-based start
  Mask w = 0;
  for (int k = 0; k < m; ++k) w |= Mask{1} << ((start + k) % n);
  return w;
}

}  // namespace

TrajectorySet generate_transitive_set(const PermutationGroup& g, int m, std::uint64_t cap) {
  const int n = g.n();
  if (m < 0 || m > n) throw std::invalid_argument(fmt::format("m={} outside [0, {}]", m, n));
  if (m == 0 || m == n) return TrajectorySet(n, {Trajectory::first(n, m)});
  switch (g.kind()) {
    case GroupKind::symmetric:
      return TrajectorySet(n, lex_combinations(n, m, cap));
    case GroupKind::cyclic: {
      std::vector<Trajectory> out;
      for (int s = 0; s < n; ++s) out.emplace_back(n, window(n, s, m));
      return TrajectorySet(n, std::move(out));
    }
    case GroupKind::generic:
      break;
  }
  std::set<Mask> seen{full_mask(m)};
  std::deque<Mask> queue{full_mask(m)};
  while (!queue.empty()) {
    const Mask t = queue.front();
    queue.pop_front();
    for (const auto& p : g.generators()) {
      const Mask u = p.apply(t);
      if (seen.insert(u).second) {
        if (seen.size() > cap)
          throw ResourceLimitError(fmt::format("transitive set exceeds cap {}", cap));
        queue.push_back(u);
      }
    }
  }
  std::vector<Trajectory> out;
  for (Mask t : seen) out.emplace_back(n, t);
  std::sort(out.begin(), out.end());
  return TrajectorySet(n, std::move(out));
}

void check_pair_invariance(const PermutationGroup& g, const TrajectorySet& ts) {
  if (ts.n() != g.n())
    throw std::invalid_argument(fmt::format("group on {} qubits, trajectories on {}", g.n(), ts.n()));
  // T^2 is invariant iff every generator maps T into itself; the global flip
  // only exchanges the two entries of a pair.
  for (const auto& p : g.generators())
    for (const auto& t : ts)
      if (!ts.contains(p.apply(t)))
        throw NotInvariantError(fmt::format(
            "trajectory pairs are not invariant: generator {} maps pair ({},{}) to ({},{})", p.str(),
            t.str(), t.str(), p.apply(t).str(), p.apply(t).str()));
}

bool is_transitive(const PermutationGroup& g, const TrajectorySet& ts) {
  if (ts.size() <= 1) return true;
  std::vector<bool> seen(ts.size(), false);
  std::deque<long> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const long a = queue.front();
    queue.pop_front();
    for (const auto& p : g.generators()) {
      const long b = ts.find(p.apply(ts[a]));
      if (b >= 0 && !seen[b]) {
        seen[b] = true;
        ++count;
        queue.push_back(b);
      }
    }
  }
  return count == ts.size();
}

// ---- string orbits ----

namespace {

// Permutes bits of a <= 64-bit word through eight byte-indexed tables.
class BitPermuter {
 public:
  BitPermuter(int n, const std::vector<int>& dest) : bytes_((n + 7) / 8) {
    for (int byte = 0; byte < bytes_; ++byte)
      for (int v = 0; v < 256; ++v) {
        Mask out = 0;
        for (int b = 0; b < 8; ++b) {
          const int bit = 8 * byte + b;
          if (bit < n && ((v >> b) & 1)) out |= Mask{1} << dest[bit];
        }
        table_[byte][v] = out;
      }
  }
  Mask operator()(Mask x) const {
    Mask out = 0;
    for (int byte = 0; byte < bytes_; ++byte) out |= table_[byte][(x >> (8 * byte)) & 0xff];
    return out;
  }

 private:
  int bytes_;
  std::array<std::array<Mask, 256>, 8> table_{};
};

// Generator action on basis indices (qubit k lives at index bit n-k).
BitPermuter index_permuter(const Permutation& p) {
  const int n = p.n();
  std::vector<int> dest(n);
  for (int bit = 0; bit < n; ++bit) dest[bit] = n - p(n - bit);
  return BitPermuter(n, dest);
}

std::vector<StringOrbit> symmetric_string_orbits(int n, const OrbitOptions& opt) {
  const int N = n / 2 + 1;
  std::vector<StringOrbit> out(N);
  for (int nu = 0; nu < N; ++nu) {
    out[nu].rep = BitString::from_index(n, full_mask(nu));
    out[nu].size = binomial(n, nu) + (2 * nu == n ? 0 : binomial(n, n - nu));
  }
  if (n <= 63 && (std::uint64_t{1} << n) <= opt.materialize_cap) {
    for (int nu = 0; nu < N; ++nu) out[nu].members.reserve(out[nu].size);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const int w = std::popcount(i);
      out[std::min(w, n - w)].members.push_back(BitString::from_index(n, i));
    }
  }
  return out;
}

std::vector<StringOrbit> cyclic_string_orbits(int n) {
  // Canonical form: least index over all rotations of the string and of its
  // complement. Scanning indices upward meets each orbit first at its rep.
  const Mask full = full_mask(n);
  auto rotl = [&](Mask x) { return ((x << 1) | (x >> (n - 1))) & full; };
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<std::int32_t> id_of(dim, -1);
  std::vector<StringOrbit> out;
  for (std::uint64_t i = 0; i < dim; ++i) {
    Mask best = i, x = i, y = i ^ full;
    for (int r = 0; r < n; ++r) {
      best = std::min({best, x, y});
      x = rotl(x);
      y = rotl(y);
    }
    if (best == i) {
      id_of[i] = static_cast<std::int32_t>(out.size());
      out.push_back({BitString::from_index(n, i), 0, {}});
    }
    auto& orb = out[id_of[best]];
    orb.members.push_back(BitString::from_index(n, i));
    ++orb.size;
  }
  return out;
}

std::vector<StringOrbit> generic_string_orbits(const PermutationGroup& g) {
  const int n = g.n();
  std::vector<BitPermuter> perms;
  for (const auto& p : g.generators()) perms.push_back(index_permuter(p));
  const Mask full = full_mask(n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<bool> seen(dim, false);
  std::vector<StringOrbit> out;
  std::vector<Mask> stack;
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (seen[i]) continue;
    std::vector<Mask> members;
    seen[i] = true;
    stack.push_back(i);
    while (!stack.empty()) {
      const Mask x = stack.back();
      stack.pop_back();
      members.push_back(x);
      auto visit = [&](Mask y) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      };
      visit(x ^ full);
      for (const auto& p : perms) visit(p(x));
    }
    std::sort(members.begin(), members.end());
    StringOrbit orb;
    orb.rep = BitString::from_index(n, members.front());
    orb.size = members.size();
    orb.members.reserve(members.size());
    for (Mask m : members) orb.members.push_back(BitString::from_index(n, m));
    out.push_back(std::move(orb));
  }
  return out;
}

}  // namespace

std::vector<StringOrbit> orbits_bitstrings(const PermutationGroup& g, const OrbitOptions& opt) {
  const int n = g.n();
  if (n < 1) throw std::invalid_argument("orbits need n >= 1");
  if (g.kind() == GroupKind::symmetric && !opt.force_generic) return symmetric_string_orbits(n, opt);
  if (n > opt.max_generic_qubits || n > 63 || (std::uint64_t{1} << n) > opt.string_cap)
    throw ResourceLimitError(fmt::format(
        "string orbit enumeration over 2^{} strings exceeds cap (max {} qubits, {} elements)", n,
        opt.max_generic_qubits, opt.string_cap));
  if (g.kind() == GroupKind::cyclic && !opt.force_generic) return cyclic_string_orbits(n);
  return generic_string_orbits(g);
}

// ---- pair orbits ----

namespace {

void finish_pair_orbits(std::vector<PairOrbit>& orbits) {
  for (auto& o : orbits) {
    if (!o.members.empty()) {
      // Fast paths emit members in order when the trajectory set is sorted.
      if (!std::is_sorted(o.members.begin(), o.members.end())) std::sort(o.members.begin(), o.members.end());
      o.rep = o.members.front();
      o.size = o.members.size();
    }
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const PairOrbit& a, const PairOrbit& b) { return a.rep < b.rep; });
  auto diag = std::find_if(orbits.begin(), orbits.end(),
                           [](const PairOrbit& o) { return o.rep.first == o.rep.second; });
  if (diag != orbits.end()) std::rotate(orbits.begin(), diag, diag + 1);
}

std::vector<PairOrbit> symmetric_pair_orbits(const TrajectorySet& ts, const OrbitOptions& opt) {
  const int n = ts.n(), m = ts.m();
  const int M = static_cast<int>(symmetric_pair_orbit_count(n, m));
  std::vector<PairOrbit> out(M);
  for (int mu = 0; mu < M; ++mu) {
    const Mask t2 = full_mask(m - mu) | (full_mask(mu) << m);
    out[mu].rep = {Trajectory::first(n, m), Trajectory(n, t2)};
    out[mu].size = ts.size() * binomial(m, mu) * binomial(n - m, mu);
  }
  const std::uint64_t total = static_cast<std::uint64_t>(ts.size()) * ts.size();
  if (total <= opt.materialize_cap) {
    for (int mu = 0; mu < M; ++mu) out[mu].members.reserve(out[mu].size);
    for (const auto& a : ts)
      for (const auto& b : ts) out[pair_degree(a, b)].members.emplace_back(a, b);
    finish_pair_orbits(out);
  }
  return out;
}

// Start offset s when t = z^s([m]), else -1.
int window_start(const Trajectory& t, int m) {
  const int n = t.n();
  for (int s = 0; s < n; ++s)
    if (window(n, s, m) == t.mask()) return s;
  return -1;
}

std::vector<PairOrbit> cyclic_pair_orbits(const TrajectorySet& ts) {
  const int n = ts.n(), m = ts.m();
  std::vector<int> start(ts.size());
  for (std::size_t a = 0; a < ts.size(); ++a) start[a] = window_start(ts[a], m);
  std::vector<PairOrbit> out(n / 2 + 1);
  for (std::size_t a = 0; a < ts.size(); ++a)
    for (std::size_t b = 0; b < ts.size(); ++b) {
      const int d = ((start[a] - start[b]) % n + n) % n;
      out[std::min(d, n - d)].members.emplace_back(ts[a], ts[b]);
    }
  finish_pair_orbits(out);
  return out;
}

std::vector<PairOrbit> generic_pair_orbits(const PermutationGroup& g, const TrajectorySet& ts,
                                           const OrbitOptions& opt) {
  const std::size_t T = ts.size();
  if (static_cast<std::uint64_t>(T) * T > opt.materialize_cap)
    throw ResourceLimitError(
        fmt::format("{}^2 trajectory pairs exceed cap {}", T, opt.materialize_cap));
  std::vector<std::vector<long>> image;  // image[gen][a] = index of gen(T_a)
  for (const auto& p : g.generators()) {
    std::vector<long> row(T);
    for (std::size_t a = 0; a < T; ++a) row[a] = ts.find(p.apply(ts[a]));
    image.push_back(std::move(row));
  }
  std::vector<bool> seen(T * T, false);
  std::vector<PairOrbit> out;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < T * T; ++start) {
    if (seen[start]) continue;
    PairOrbit orb;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      const std::size_t a = x / T, b = x % T;
      orb.members.emplace_back(ts[a], ts[b]);
      auto visit = [&](std::size_t y) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      };
      visit(b * T + a);
      for (const auto& row : image) visit(row[a] * T + row[b]);
    }
    out.push_back(std::move(orb));
  }
  finish_pair_orbits(out);
  return out;
}

}  // namespace

std::vector<PairOrbit> orbits_pairs(const PermutationGroup& g, const TrajectorySet& ts,
                                    const OrbitOptions& opt) {
  check_pair_invariance(g, ts);
  if (ts.size() == 0) throw std::invalid_argument("empty trajectory set");
  const int n = ts.n(), m = ts.m();
  if (ts.size() == 1) {
    PairOrbit o{{ts[0], ts[0]}, 1, {{ts[0], ts[0]}}};
    return {o};
  }
  if (!opt.force_generic) {
    // Invariance under the full symmetric group forces T = all m-subsets.
    if (g.kind() == GroupKind::symmetric) return symmetric_pair_orbits(ts, opt);
    if (g.kind() == GroupKind::cyclic && ts.size() == static_cast<std::size_t>(n) && m > 0 &&
        m < n &&
        std::all_of(ts.begin(), ts.end(), [&](const Trajectory& t) { return window_start(t, m) >= 0; }))
      return cyclic_pair_orbits(ts);
  }
  return generic_pair_orbits(g, ts, opt);
}

OrbitTable build_orbit_table(const PermutationGroup& g, const TrajectorySet& ts,
                             const OrbitOptions& opt) {
  OrbitTable table;
  table.n = g.n();
  table.kind = opt.force_generic ? GroupKind::generic : g.kind();
  table.ts = ts;
  table.pairs = orbits_pairs(g, ts, opt);
  table.strings = orbits_bitstrings(g, opt);
  return table;
}

bool OrbitTable::strings_materialized() const {
  return std::all_of(strings.begin(), strings.end(),
                     [](const StringOrbit& o) { return o.members.size() == o.size; });
}

bool OrbitTable::pairs_materialized() const {
  return std::all_of(pairs.begin(), pairs.end(),
                     [](const PairOrbit& o) { return o.members.size() == o.size; });
}

// ---- Burnside ----

BurnsideBounds burnside_bounds(const PermutationGroup& g, const TrajectorySet& ts) {
  double order = 0;
  if (auto o = g.order())
    order = static_cast<double>(*o);
  else
    order = std::tgamma(g.n() + 1.0);
  const double T = static_cast<double>(ts.size());
  const double half = std::ldexp(1.0, g.n() - 1);
  BurnsideBounds b;
  b.upper_M = T;
  b.upper_N = half;
  b.lower_M = (T * T + T) / (2 * order);
  b.lower_N = (half + order - 1) / order;
  return b;
}

// ---- dumps ----

std::string pair_str(const TrajectoryPair& p) {
  return fmt::format("({},{})", p.first.str(), p.second.str());
}

std::string dump_string_orbits(const std::vector<StringOrbit>& orbits) {
  std::string out;
  for (const auto& o : orbits) {
    out += o.rep.str();
    for (const auto& b : o.members)
      if (b != o.rep) out += ' ' + b.str();
    out += '\n';
  }
  return out;
}

std::string dump_pair_orbits(const std::vector<PairOrbit>& orbits) {
  std::string out;
  for (const auto& o : orbits) {
    out += pair_str(o.rep);
    for (const auto& p : o.members)
      if (p != o.rep) out += ' ' + pair_str(p);
    out += '\n';
  }
  return out;
}

}  // namespace tsolve
