// Copyright 2026 The bks Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "bks/catalog.hpp"
#include "bks/coloring.hpp"
#include "bks/error.hpp"
#include "bks/gf2.hpp"
#include "bks/quantum.hpp"
#include "oracles.hpp"

namespace bks {
namespace {

std::vector<int> total_values(const Assignment& a) {
  std::vector<int> v;
  for (RayId id = 0; id < a.size(); ++id) {
    v.push_back(*a.get(id) ? 1 : 0);
  }
  return v;
}

// Induced system on a subset of rays, re-indexed, built from scratch.
ConstraintSystem induced(const RaySet& parent, const std::vector<RayId>& ids, Semantics mode) {
  return build_constraints(parent.subset(ids), mode);
}

void expect_matches_brute_force(const ConstraintSystem& cs) {
  ASSERT_LE(cs.num_rays(), 12u);
  const auto count = oracle::count_colorings(cs.num_rays(), cs.constraints(), cs.pairs());
  const auto result = colorable(cs);
  EXPECT_EQ(result.colorable, count > 0);
  if (result.witness) {
    EXPECT_TRUE(result.witness->is_total());
    EXPECT_TRUE(oracle::valid_coloring(cs.constraints(), cs.pairs(), total_values(*result.witness)));
  }
  if (parity_certificate(cs)) {
    EXPECT_EQ(count, 0u);
  }
}

TEST(Semantics, NamesRoundTrip) {
  for (auto m : {Semantics::BasesOnly, Semantics::BasesAndPairs}) {
    EXPECT_EQ(parse_semantics(to_string(m)), m);
  }
  // Derived systems come only from state reduction and cannot be requested.
  EXPECT_FALSE(parse_semantics(to_string(Semantics::Derived)).has_value());
  EXPECT_FALSE(parse_semantics("pairs").has_value());
}

TEST(Assignment, SetGetClear) {
  Assignment a(3);
  EXPECT_EQ(a.count_set(), 0u);
  a.set(1, true);
  a.set(2, false);
  EXPECT_EQ(a.get(1), true);
  EXPECT_EQ(a.get(2), false);
  EXPECT_FALSE(a.get(0).has_value());
  a.clear(1);
  EXPECT_EQ(a.count_set(), 1u);
  EXPECT_THROW(a.set(3, true), Error);
}

TEST(BuildConstraints, Ceg18HasNineBasesAndNoPairsByDefault) {
  const auto cs = build_constraints(ceg18().ray_set, Semantics::BasesOnly);
  EXPECT_EQ(cs.constraints().size(), 9u);
  EXPECT_TRUE(cs.pairs().empty());
  const auto with_pairs = build_constraints(ceg18().ray_set, Semantics::BasesAndPairs);
  EXPECT_EQ(with_pairs.pairs().size(), 63u);
}

TEST(BuildConstraints, EmptyAndSingleBasis) {
  const auto empty = build_constraints(RaySet{}, Semantics::BasesOnly);
  EXPECT_EQ(empty.num_rays(), 0u);
  EXPECT_TRUE(empty.constraints().empty());
  const RaySet basis({Ray::of({1, 0, 0, 0}), Ray::of({0, 1, 0, 0}), Ray::of({0, 0, 1, 1}),
                      Ray::of({0, 0, 1, -1})});
  EXPECT_EQ(build_constraints(basis, Semantics::BasesOnly).constraints().size(), 1u);
}

TEST(ConstraintSystem, RejectsUnknownIdsAndDeduplicates) {
  auto s = std::make_shared<const RaySet>(RaySet({Ray::of({1, 0}), Ray::of({0, 1})}));
  EXPECT_THROW(ConstraintSystem(s, {{0, 2}}, {}, Semantics::BasesOnly), Error);
  const ConstraintSystem cs(s, {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}, Semantics::BasesAndPairs);
  EXPECT_EQ(cs.constraints().size(), 1u);
  EXPECT_EQ(cs.constraints()[0], (Constraint{0, 1}));
  EXPECT_EQ(cs.pairs().size(), 1u);
}

TEST(Propagate, FirstBasisForcesTheLastRay) {
  const auto cs = build_constraints(ceg18().ray_set, Semantics::BasesOnly);
  const auto& s = cs.universe();
  Assignment a(s.size());
  a.set(*s.find(Ray::of({0, 0, 0, 1})), false);
  a.set(*s.find(Ray::of({1, 1, 0, 0})), false);
  a.set(*s.find(Ray::of({1, -1, 0, 0})), false);
  const auto r = propagate(cs, a, true);
  ASSERT_FALSE(r.contradiction());
  EXPECT_EQ(r.assignment.get(*s.find(Ray::of({0, 0, 1, 0}))), true);
  ASSERT_FALSE(r.trace.empty());
  EXPECT_EQ(r.trace.front().round, 1);
  EXPECT_EQ(r.trace.front().ray, *s.find(Ray::of({0, 0, 1, 0})));
}

TEST(Propagate, EmptyAssignmentIsUnchanged) {
  const RaySet basis({Ray::of({1, 0}), Ray::of({0, 1})});
  const auto cs = build_constraints(basis, Semantics::BasesOnly);
  const auto r = propagate(cs, Assignment(2));
  EXPECT_FALSE(r.contradiction());
  EXPECT_EQ(r.assignment, Assignment(2));
}

TEST(Propagate, WrongUniverseSizeIsAnError) {
  const auto cs = build_constraints(ceg18().ray_set, Semantics::BasesOnly);
  try {
    (void)propagate(cs, Assignment(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownRayId);
  }
}

TEST(Propagate, ConflictKinds) {
  const RaySet basis({Ray::of({1, 0}), Ray::of({0, 1})});
  const auto cs = build_constraints(basis, Semantics::BasesAndPairs);
  Assignment ones(2);
  ones.set(0, true);
  ones.set(1, true);
  const auto r1 = propagate(cs, ones);
  ASSERT_TRUE(r1.contradiction());
  EXPECT_EQ(r1.conflict->kind, Conflict::Kind::PairClash);
  Assignment zeros(2);
  zeros.set(0, false);
  zeros.set(1, false);
  const auto r2 = propagate(cs, zeros);
  ASSERT_TRUE(r2.contradiction());
  EXPECT_EQ(r2.conflict->kind, Conflict::Kind::AllZero);
  const auto plain = build_constraints(basis, Semantics::BasesOnly);
  const auto r3 = propagate(plain, ones);
  ASSERT_TRUE(r3.contradiction());
  EXPECT_EQ(r3.conflict->kind, Conflict::Kind::TwoOnes);
}

TEST(Propagate, MonotoneAndIdempotent) {
  const auto cs = build_constraints(peres24().ray_set, Semantics::BasesAndPairs);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coin(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    Assignment a(cs.num_rays());
    for (RayId id = 0; id < cs.num_rays(); ++id) {
      const int c = coin(rng);
      if (c == 0) a.set(id, true);
      if (c == 1) a.set(id, false);
    }
    const auto r = propagate(cs, a);
    if (r.contradiction()) {
      continue;
    }
    for (RayId id = 0; id < cs.num_rays(); ++id) {
      if (a.is_set(id)) {
        EXPECT_EQ(r.assignment.get(id), a.get(id));
      }
    }
    const auto again = propagate(cs, r.assignment);
    EXPECT_FALSE(again.contradiction());
    EXPECT_EQ(again.assignment, r.assignment);
  }
}

TEST(Colorable, Ceg18IsUncolorable) {
  for (auto mode : {Semantics::BasesOnly, Semantics::BasesAndPairs}) {
    const auto r = colorable(build_constraints(ceg18().ray_set, mode));
    EXPECT_FALSE(r.colorable);
    EXPECT_FALSE(r.witness.has_value());
  }
}

TEST(Colorable, SingleBasisHasExactlyFourColorings) {
  const RaySet basis({Ray::of({1, 0, 0, 0}), Ray::of({0, 1, 0, 0}), Ray::of({0, 0, 1, 1}),
                      Ray::of({0, 0, 1, -1})});
  const auto cs = build_constraints(basis, Semantics::BasesOnly);
  EXPECT_EQ(oracle::count_colorings(4, cs.constraints(), cs.pairs()), 4u);
  const auto r = colorable(cs);
  ASSERT_TRUE(r.colorable);
  // Lowest id first, value 1 first.
  EXPECT_EQ(total_values(*r.witness), (std::vector<int>{1, 0, 0, 0}));
}

TEST(Colorable, EverySingleDeletionOfCeg18IsColorable) {
  const auto& s = ceg18().ray_set;
  for (RayId drop = 0; drop < s.size(); ++drop) {
    std::vector<RayId> ids;
    for (RayId id = 0; id < s.size(); ++id) {
      if (id != drop) ids.push_back(id);
    }
    const auto cs = induced(s, ids, Semantics::BasesOnly);
    const auto r = colorable(cs);
    ASSERT_TRUE(r.colorable) << "drop " << drop;
    EXPECT_TRUE(satisfies(cs, *r.witness));
    EXPECT_TRUE(oracle::valid_coloring(cs.constraints(), cs.pairs(), total_values(*r.witness)));
  }
}

TEST(Colorable, SeededSearchRespectsTheSeed) {
  const auto cs = build_constraints(peres24().ray_set, Semantics::BasesOnly);
  Assignment seed(cs.num_rays());
  seed.set(0, false);
  seed.set(1, false);
  const auto r = colorable(cs, seed);
  EXPECT_FALSE(r.colorable);
}

TEST(Colorable, MatchesBruteForceOnEverySmallSubsystem) {
  // Every subset of at most 12 rays drawn from Peres24 that contains at least
  // one basis: sample many, in both semantics.
  const auto& p = peres24().ray_set;
  std::mt19937 rng(17);
  std::vector<RayId> all(p.size());
  std::iota(all.begin(), all.end(), RayId{0});
  int with_constraints = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t k = 4 + trial % 9;
    std::vector<RayId> ids(all.begin(), all.begin() + static_cast<long>(k));
    std::sort(ids.begin(), ids.end());
    for (auto mode : {Semantics::BasesOnly, Semantics::BasesAndPairs}) {
      const auto cs = induced(p, ids, mode);
      with_constraints += cs.constraints().empty() ? 0 : 1;
      expect_matches_brute_force(cs);
    }
  }
  EXPECT_GT(with_constraints, 50);
}

TEST(Colorable, MatchesBruteForceOnReducedSinglet) {
  const auto& c = ceg18();
  const auto r = state_reduce(c.ray_set, enumerate_bases(c.ray_set), state("singlet"));
  ASSERT_EQ(r.system.num_rays(), 10u);
  EXPECT_EQ(oracle::count_colorings(10, r.system.constraints(), r.system.pairs()), 0u);
  expect_matches_brute_force(r.system);
}

TEST(Colorable, MonotoneOnRandomSubsets) {
  // If a subset is colorable, every subset of it is too.
  const auto& p = peres24().ray_set;
  std::mt19937 rng(23);
  std::bernoulli_distribution keep(0.8);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<RayId> ids;
    for (RayId id = 0; id < p.size(); ++id) {
      if (keep(rng)) ids.push_back(id);
    }
    if (!colorable(induced(p, ids, Semantics::BasesOnly)).colorable) {
      continue;
    }
    std::vector<RayId> smaller;
    for (auto id : ids) {
      if (keep(rng)) smaller.push_back(id);
    }
    EXPECT_TRUE(colorable(induced(p, smaller, Semantics::BasesOnly)).colorable);
  }
}

TEST(Colorable, WitnessesOnColorableCatalogSubsetsPassTheValidator) {
  const auto& h = hardy_rays().ray_set;
  for (auto mode : {Semantics::BasesOnly, Semantics::BasesAndPairs}) {
    const auto cs = build_constraints(h, mode);
    const auto r = colorable(cs);
    if (r.colorable) {
      EXPECT_TRUE(oracle::valid_coloring(cs.constraints(), cs.pairs(), total_values(*r.witness)));
    }
  }
}

TEST(ParityCertificate, Ceg18SelectsAllNineBases) {
  const auto cs = build_constraints(ceg18().ray_set, Semantics::BasesOnly);
  const auto cert = parity_certificate(cs);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->constraint_indices.size(), 9u);
  const auto cover = coverage(cs, *cert);
  EXPECT_TRUE(std::all_of(cover.begin(), cover.end(), [](int c) { return c == 2; }));
}

TEST(ParityCertificate, SingleBasisHasNone) {
  const RaySet basis({Ray::of({1, 0}), Ray::of({0, 1})});
  EXPECT_FALSE(parity_certificate(build_constraints(basis, Semantics::BasesOnly)).has_value());
  EXPECT_FALSE(parity_certificate(build_constraints(RaySet{}, Semantics::BasesOnly)).has_value());
}

TEST(ParityCertificate, ReducedSingletSelectsAllSeven) {
  const auto& c = ceg18();
  const auto r = state_reduce(c.ray_set, enumerate_bases(c.ray_set), state("singlet"));
  const auto cert = parity_certificate(r.system);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->constraint_indices.size(), 7u);
  EXPECT_TRUE(oracle::has_parity_subset(10, r.system.constraints()));
}

TEST(ParityCertificate, SoundOnEveryCatalogSystem) {
  for (const auto& key : catalog_keys()) {
    for (auto mode : {Semantics::BasesOnly, Semantics::BasesAndPairs}) {
      const auto cs = build_constraints(catalog_entry(key).ray_set, mode);
      if (const auto cert = parity_certificate(cs)) {
        EXPECT_EQ(cert->constraint_indices.size() % 2, 1u);
        const auto cover = coverage(cs, *cert);
        EXPECT_TRUE(std::all_of(cover.begin(), cover.end(), [](int c) { return c % 2 == 0; }));
        EXPECT_FALSE(colorable(cs).colorable) << key;
      }
    }
  }
}

TEST(ParityCertificate, AgreesWithSubsetSearchOnSmallSystems) {
  const auto& p = peres24().ray_set;
  const auto bases = enumerate_bases(p);
  std::mt19937 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Constraint> chosen;
    for (const auto& b : bases) {
      if (rng() % 3 == 0) chosen.push_back(b.ray_ids);
    }
    if (chosen.size() > 14) chosen.resize(14);
    const ConstraintSystem cs(std::make_shared<const RaySet>(p), chosen, {}, Semantics::BasesOnly);
    EXPECT_EQ(parity_certificate(cs).has_value(),
              oracle::has_parity_subset(p.size(), cs.constraints()));
  }
}

TEST(Gf2, SolvesAndDetectsInconsistency) {
  Gf2Matrix a(2, 2);
  a.set(0, 0, true);
  a.set(0, 1, true);
  a.set(1, 1, true);
  const auto x = solve_gf2(a, {true, true});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (std::vector<bool>{false, true}));
  Gf2Matrix b(2, 1);
  b.set(0, 0, true);
  b.set(1, 0, true);
  EXPECT_FALSE(solve_gf2(b, {true, false}).has_value());
}

TEST(Gf2, WideMatricesSpanSeveralWords) {
  Gf2Matrix a(1, 130);
  a.set(0, 129, true);
  a.flip(0, 70);
  EXPECT_TRUE(a.get(0, 70));
  const auto x = solve_gf2(a, {true});
  ASSERT_TRUE(x.has_value());
  EXPECT_NE((*x)[70], (*x)[129]);
}

}  // namespace
}  // namespace bks
