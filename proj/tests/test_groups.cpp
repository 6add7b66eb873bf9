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

#include <random>

#include "oracles.hpp"
#include "tsolve/groups.hpp"

namespace tsolve {
namespace {

TEST(Permutation, CyclesAndImages) {
  const Permutation p = Permutation::parse_cycles("(1 2 3)", 4);
  EXPECT_EQ(p(1), 2);
  EXPECT_EQ(p(3), 1);
  EXPECT_EQ(p(4), 4);
  EXPECT_EQ(p, Permutation::parse_image("2 3 1 4"));
  EXPECT_EQ(p.str(), "(1 2 3)");
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(Permutation::cycle(4), Permutation::parse_cycles("(1 2 3 4)", 4));
  EXPECT_THROW(Permutation::parse_image("1 1 2"), std::invalid_argument);
}

TEST(Permutation, CompositionAppliesRightFactorFirst) {
  const Permutation a = Permutation::transposition(3, 1, 2);
  const Permutation b = Permutation::cycle(3);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ((a * b)(k), a(b(k)));
}

TEST(Actions, DocumentedExamples) {
  const int n = 4;
  EXPECT_EQ(act_on_bitstring(GroupElement::identity(n), BitString::parse("0110")).str(), "0110");
  EXPECT_EQ(act_on_bitstring(GroupElement::flip(n), BitString::parse("0001")).str(), "1110");
  EXPECT_EQ(act_on_bitstring(GroupElement::of(Permutation::cycle(n)), BitString::parse("1000")).str(), "0100");

  const TrajectoryPair p{Trajectory::parse("{1,2}", n), Trajectory::parse("{3,4}", n)};
  const TrajectoryPair swapped = act_on_pair(GroupElement::flip(n), p);
  EXPECT_EQ(swapped.first, p.second);
  EXPECT_EQ(swapped.second, p.first);

  const TrajectoryPair q{Trajectory::parse("{1,2}", n), Trajectory::parse("{1,3}", n)};
  const TrajectoryPair r = act_on_pair(GroupElement::of(Permutation::transposition(n, 1, 3)), q);
  EXPECT_EQ(r.first, Trajectory::parse("{2,3}", n));
  EXPECT_EQ(r.second, Trajectory::parse("{1,3}", n));
}

TEST(Actions, SwapPairExchangesSelectedQubits) {
  const int n = 4;
  const TrajectoryPair p{Trajectory::parse("{1,2}", n), Trajectory::parse("{3}", n)};
  const auto r = swap_pair({n, 0b0101}, p);  // qubits 1 and 3
  EXPECT_EQ(r.first, Trajectory::parse("{2,3}", n));
  EXPECT_EQ(r.second, Trajectory::parse("{1}", n));
}

TEST(TransitiveSets, SymmetricAndCyclic) {
  EXPECT_EQ(generate_transitive_set(PermutationGroup::symmetric(4), 2).size(), 6u);
  const TrajectorySet cyc = generate_transitive_set(PermutationGroup::cyclic(6), 3);
  ASSERT_EQ(cyc.size(), 6u);
  EXPECT_EQ(cyc[0].str(), "{1,2,3}");
  EXPECT_EQ(cyc[5].str(), "{1,2,6}");
  const TrajectorySet empty = generate_transitive_set(PermutationGroup::cyclic(5), 0);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty[0].size(), 0);
}

TEST(Orbits, SymmetricStringsAreWeightClasses) {
  const auto orbits = orbits_bitstrings(PermutationGroup::symmetric(3));
  ASSERT_EQ(orbits.size(), 2u);
  EXPECT_EQ(orbits[0].rep.str(), "000");
  EXPECT_EQ(orbits[0].size, 2u);
  EXPECT_EQ(orbits[1].size, 6u);
  for (int n = 1; n <= 9; ++n)
    for (const auto& o : orbits_bitstrings(PermutationGroup::symmetric(n))) {
      const int w = weight(o.rep);
      for (const auto& b : o.members) EXPECT_TRUE(weight(b) == w || weight(b) == n - w);
    }
}

TEST(Orbits, SymmetricPairsHaveConstantDegree) {
  for (int n = 2; n <= 7; ++n)
    for (int m = 0; m <= n; ++m) {
      const PermutationGroup g = PermutationGroup::symmetric(n);
      const auto pairs = orbits_pairs(g, generate_transitive_set(g, m));
      EXPECT_EQ(pairs.size(), symmetric_pair_orbit_count(n, m));
      EXPECT_EQ(pairs[0].rep.first, pairs[0].rep.second);
      for (const auto& o : pairs) {
        const int d = pair_degree(o.rep.first, o.rep.second);
        for (const auto& p : o.members) EXPECT_EQ(pair_degree(p.first, p.second), d);
      }
    }
}

TEST(Orbits, FastPathsMatchUnionFindOracle) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& g : {PermutationGroup::symmetric(n), PermutationGroup::cyclic(n)}) {
      // Whole-group closure where it is small; generator components beyond.
      const auto elems = n <= 6 ? oracle::closure(oracle::images(g), n) : oracle::images(g);
      EXPECT_EQ(oracle::as_partition(orbits_bitstrings(g)), oracle::string_partition(elems, n));
      for (int m = 0; m <= n; ++m) {
        const TrajectorySet ts = generate_transitive_set(g, m);
        EXPECT_EQ(oracle::as_partition(orbits_pairs(g, ts)), oracle::pair_partition(elems, ts))
            << kind_name(g.kind()) << " n=" << n << " m=" << m;
      }
    }
}

TEST(Orbits, GenericGroupMatchesOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 6;
    std::vector<Permutation> gens{oracle::random_permutation(n, rng)};
    if (trial % 2) gens.push_back(oracle::random_permutation(n, rng));
    const PermutationGroup g = PermutationGroup::generic(n, gens);
    const auto elems = oracle::closure(oracle::images(g), n);
    EXPECT_EQ(oracle::as_partition(orbits_bitstrings(g)), oracle::string_partition(elems, n));
    const int m = static_cast<int>(rng() % (n + 1));
    const TrajectorySet ts = generate_transitive_set(g, m);
    EXPECT_EQ(oracle::as_partition(orbits_pairs(g, ts)), oracle::pair_partition(elems, ts));
    EXPECT_EQ(g.order().value(), elems.size());
  }
}

TEST(Orbits, PartitionAndClosureUnderGenerators) {
  const PermutationGroup g = PermutationGroup::cyclic(7);
  const auto strings = orbits_bitstrings(g);
  std::set<Mask> seen;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    total += strings[i].size;
    for (const auto& b : strings[i].members) {
      EXPECT_TRUE(seen.insert(b.bits()).second);
      for (const auto& p : g.generators()) {
        const BitString img = p.apply(b);
        EXPECT_TRUE(std::binary_search(strings[i].members.begin(), strings[i].members.end(), img));
      }
    }
  }
  EXPECT_EQ(total, 128u);
  EXPECT_EQ(seen.size(), 128u);
}

TEST(Orbits, OrderedByRepresentativeWithDiagonalFirst) {
  const PermutationGroup g = PermutationGroup::cyclic(8);
  const auto strings = orbits_bitstrings(g);
  for (std::size_t i = 1; i < strings.size(); ++i) EXPECT_LT(strings[i - 1].rep, strings[i].rep);
  for (const auto& o : strings) EXPECT_EQ(o.rep, o.members.front());
  const auto pairs = orbits_pairs(g, generate_transitive_set(g, 3));
  EXPECT_EQ(pairs[0].rep.first, pairs[0].rep.second);
  for (std::size_t i = 2; i < pairs.size(); ++i) EXPECT_LT(pairs[i - 1].rep, pairs[i].rep);
}

TEST(Orbits, ForcedGenericMatchesFastPath) {
  OrbitOptions generic;
  generic.force_generic = true;
  for (int n = 1; n <= 10; ++n)
    for (const auto& g : {PermutationGroup::symmetric(n), PermutationGroup::cyclic(n)}) {
      EXPECT_EQ(oracle::as_partition(orbits_bitstrings(g)),
                oracle::as_partition(orbits_bitstrings(g, generic)));
      const int m = n / 2;
      const TrajectorySet ts = generate_transitive_set(g, m);
      EXPECT_EQ(oracle::as_partition(orbits_pairs(g, ts)),
                oracle::as_partition(orbits_pairs(g, ts, generic)));
    }
}

TEST(Counts, NecklaceFormulaAndListing) {
  const std::vector<std::uint64_t> listing{1, 2, 2, 4, 4, 8, 10, 20, 30};
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(cyclic_string_orbit_count(n), listing[n - 1]);
  for (int n = 1; n <= 30; ++n) EXPECT_EQ(cyclic_string_orbit_count(n), oracle::necklace_flip_count(n));
}

TEST(Counts, ClosedFormsForPairs) {
  EXPECT_EQ(symmetric_pair_orbit_count(4, 2), 3u);
  EXPECT_EQ(symmetric_pair_orbit_count(7, 5), 3u);
  EXPECT_EQ(symmetric_pair_orbit_count(7, 0), 1u);
  EXPECT_EQ(cyclic_pair_orbit_count(9, 4), 5u);
  EXPECT_EQ(cyclic_pair_orbit_count(9, 0), 1u);
}

TEST(Invariance, NonInvariantSetIsRejected) {
  const PermutationGroup g = PermutationGroup::cyclic(4);
  const TrajectorySet ts(4, {Trajectory::parse("{1,2}", 4), Trajectory::parse("{3,4}", 4)});
  EXPECT_THROW(check_pair_invariance(g, ts), NotInvariantError);
  EXPECT_THROW(orbits_pairs(g, ts), NotInvariantError);
  EXPECT_FALSE(is_transitive(g, ts));
}

TEST(Burnside, DocumentedBounds) {
  const PermutationGroup s4 = PermutationGroup::symmetric(4);
  const auto b = burnside_bounds(s4, generate_transitive_set(s4, 2));
  EXPECT_EQ(b.upper_M, 6);
  EXPECT_EQ(b.upper_N, 8);
  const PermutationGroup c8 = PermutationGroup::cyclic(8);
  const auto c = burnside_bounds(c8, generate_transitive_set(c8, 3));
  EXPECT_DOUBLE_EQ(c.lower_N, 135.0 / 8.0);
  EXPECT_LE(c.lower_N, 20);
}

TEST(Generators, ParseFile) {
  const PermutationGroup g = PermutationGroup::parse_generators("# C4 plus a reflection\n2 3 4 1\n\n4 3 2 1\n");
  EXPECT_EQ(g.n(), 4);
  EXPECT_EQ(g.order().value(), 8u);
  EXPECT_THROW(PermutationGroup::parse_generators("1 2\n1 2 3\n"), std::invalid_argument);
}

TEST(Dump, OneOrbitPerLineRepresentativeFirst) {
  const auto s = dump_string_orbits(orbits_bitstrings(PermutationGroup::symmetric(2)));
  EXPECT_EQ(s, "00 11\n01 10\n");
}

}  // namespace
}  // namespace tsolve
