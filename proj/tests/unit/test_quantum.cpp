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
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "bks/catalog.hpp"
#include "bks/error.hpp"
#include "bks/quantum.hpp"
#include "oracles.hpp"

namespace bks {
namespace {

const State kHardy = State(Ray::of({1, -1, -1, 0}));
const State kPhi = State(Ray::of({1, 1, 1, 1}));
const State kSinglet = State(Ray::of({0, 1, -1, 0}));

Rational frac(const oracle::Fraction& f) { return Rational(f.num, f.den); }

oracle::Vec to_vec(const Ray& r) {
  oracle::Vec v;
  for (Eigen::Index i = 0; i < r.dim(); ++i) v.push_back(r[i].get_si());
  return v;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no bks::Error thrown";
  return ErrorKind::ParseError;
}

ProductObservable obs(Pauli a, Pauli b) { return ProductObservable{a, b}; }

TEST(Born, Examples) {
  EXPECT_EQ(born(kHardy, Ray::of({0, 0, 0, 1})), 0);
  EXPECT_EQ(born(kSinglet, Ray::of({0, 1, -1, 0})), 1);
  EXPECT_EQ(born(kHardy, Ray::of({1, 1, 1, 1})), Rational(1, 12));
  EXPECT_EQ(born(kHardy, Ray::of({1, 1, 1, 1})), frac(oracle::born({1, -1, -1, 0}, {1, 1, 1, 1})));
  EXPECT_EQ(kind_of([] { (void)born(kHardy, Ray::of({1, 0})); }), ErrorKind::DimensionMismatch);
}

TEST(Born, MatchesPlainIntegerOracle) {
  for (const auto& key : catalog_keys()) {
    for (const auto& u : catalog_entry(key).ray_set) {
      for (const auto& s : {kHardy, kPhi, kSinglet}) {
        EXPECT_EQ(born(s, u), frac(oracle::born(to_vec(s.ray), to_vec(u))));
      }
    }
  }
}

TEST(Born, CompleteOverEveryEnumeratedBasis) {
  std::vector<State> states = {kHardy, kPhi, kSinglet};
  for (const auto& r : hardy_rays().ray_set) states.emplace_back(r);
  for (const auto& key : catalog_keys()) {
    const auto& s = catalog_entry(key).ray_set;
    for (const auto& b : enumerate_bases(s)) {
      for (const auto& st : states) {
        Rational sum = 0;
        for (auto id : b.ray_ids) sum += born(st, s[id]);
        EXPECT_EQ(sum, 1) << key;
      }
    }
  }
}

TEST(Born, ScaleInvariant) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    IntVector v(4), u(4);
    for (int i = 0; i < 4; ++i) {
      v(i) = entry(rng);
      u(i) = entry(rng);
    }
    if (v.isZero() || u.isZero()) continue;
    const Integer k = 1 + static_cast<long>(rng() % 7);
    const State s{Ray(v)};
    const State s_scaled{Ray(IntVector(v * k))};
    const Ray w(u);
    EXPECT_EQ(born(s, w), born(s_scaled, Ray(IntVector(u * Integer(-3)))));
    EXPECT_GE(born(s, w), 0);
    EXPECT_LE(born(s, w), 1);
  }
}

TEST(EigenCheck, Examples) {
  const auto u = Ray::of({1, -1, 1, 1});
  EXPECT_EQ(eigen_check(u, obs(Pauli::Z, Pauli::X)), -1);
  EXPECT_EQ(eigen_check(u, obs(Pauli::X, Pauli::Z)), +1);
  EXPECT_EQ(eigen_check(kSinglet.ray, obs(Pauli::Z, Pauli::Z)), -1);
  EXPECT_FALSE(eigen_check(Ray::of({1, 1, 0, 0}), obs(Pauli::X, Pauli::X)).has_value());
}

TEST(EigenCheck, MatricesAreTensorProducts) {
  IntMatrix zx(4, 4);
  zx << 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1, 0;
  EXPECT_EQ(obs(Pauli::Z, Pauli::X).matrix(), zx);
  EXPECT_EQ(ProductObservable::nontrivial().size(), 8u);
}

TEST(EigenCheck, EveryEntangledCeg18RayIsAJointEigenvector) {
  int entangled = 0;
  for (const auto& r : ceg18().ray_set) {
    if (factorize(r)) {
      continue;
    }
    ++entangled;
    const auto all = ProductObservable::nontrivial();
    EXPECT_TRUE(std::any_of(all.begin(), all.end(), [&](const auto& o) {
      return o.first != Pauli::I && o.second != Pauli::I && eigen_check(r, o).has_value();
    })) << r.str();
  }
  EXPECT_EQ(entangled, 6);
}

TEST(EigenCheck, FactorizableCeg18RaysAreProductsOfLocalEigenvectors) {
  const auto local = [](const Ray& q) {
    return q == Ray::of({1, 0}) || q == Ray::of({0, 1}) || q == Ray::of({1, 1}) ||
           q == Ray::of({1, -1});
  };
  for (const auto& r : ceg18().ray_set) {
    if (const auto f = factorize(r)) {
      EXPECT_TRUE(local(f->first) && local(f->second)) << r.str();
    }
  }
}

TEST(LocalEvent, LabelsAndText) {
  const auto e = LocalEvent::along(1, Axis::Z, -1);
  EXPECT_EQ(e.direction, Ray::of({0, 1}));
  EXPECT_EQ(e.str(), "sz(1)=-1");
  EXPECT_EQ(LocalEvent::along(2, Axis::X, +1).str(), "sx(2)=+1");
  EXPECT_FALSE((LocalEvent{1, Ray::of({1, 2})}.axis_label().has_value()));
  EXPECT_THROW((void)LocalEvent::along(3, Axis::Z, 1), Error);
}

TEST(Probability, HardyConditionals) {
  const auto z1m = LocalEvent::along(1, Axis::Z, -1);
  const auto z2m = LocalEvent::along(2, Axis::Z, -1);
  const auto x1p = LocalEvent::along(1, Axis::X, +1);
  const auto x2p = LocalEvent::along(2, Axis::X, +1);
  EXPECT_EQ(conditional_probability(kHardy, z1m, x2p), 1);
  EXPECT_EQ(conditional_probability(kHardy, z2m, x1p), 1);
  EXPECT_EQ(probability(kHardy, x2p), Rational(1, 6));
  // P(sx(2)=+1) from the two product rays spanning the event.
  const auto p = oracle::born({1, -1, -1, 0}, {1, 1, 0, 0});
  const auto q = oracle::born({1, -1, -1, 0}, {0, 0, 1, 1});
  EXPECT_EQ(probability(kHardy, x2p), frac(p) + frac(q));
  EXPECT_EQ(joint_probability(kHardy, z1m, z2m), 0);
  EXPECT_EQ(joint_probability(kHardy, x1p, x2p), Rational(1, 12));
}

TEST(Probability, Errors) {
  const auto z1p = LocalEvent::along(1, Axis::Z, +1);
  const auto z2p = LocalEvent::along(2, Axis::Z, +1);
  const auto z1m = LocalEvent::along(1, Axis::Z, -1);
  const State down_down(Ray::of({0, 0, 0, 1}));
  EXPECT_EQ(kind_of([&] { (void)conditional_probability(down_down, z2p, z1p); }),
            ErrorKind::ConditionHasZeroProbability);
  EXPECT_EQ(kind_of([&] { (void)conditional_probability(kHardy, z1p, z1m); }),
            ErrorKind::InvalidEvent);
}

TEST(ForcedValues, PreselectionOnly) {
  const auto& s = ceg18().ray_set;
  const auto a = forced_values(s, kHardy, std::nullopt);
  for (const auto& r : {Ray::of({0, 0, 0, 1}), Ray::of({1, 1, 0, 0}), Ray::of({1, 0, 1, 0})}) {
    EXPECT_EQ(a.get(*s.find(r)), false) << r.str();
  }
  // (0,1,-1,0) is also orthogonal to the preparation.
  EXPECT_EQ(a.get(*s.find(Ray::of({0, 1, -1, 0}))), false);
  std::size_t orthogonal_count = 0;
  for (const auto& r : s) {
    orthogonal_count += oracle::dot(to_vec(r), {1, -1, -1, 0}) == 0 ? 1 : 0;
  }
  EXPECT_EQ(a.count_set(), orthogonal_count);
}

TEST(ForcedValues, WithPostselection) {
  const auto& s = ceg18().ray_set;
  const auto a = forced_values(s, kHardy, kPhi);
  for (const auto& r : {Ray::of({0, 0, 0, 1}), Ray::of({1, 1, 0, 0}), Ray::of({1, 0, 1, 0}),
                        Ray::of({1, -1, 0, 0}), Ray::of({1, 0, -1, 0})}) {
    EXPECT_EQ(a.get(*s.find(r)), false) << r.str();
  }
  EXPECT_EQ(a.get(*s.find(Ray::of({1, 1, 1, 1}))), true);
  EXPECT_EQ(kind_of([&] { (void)forced_values(s, kSinglet, State(Ray::of({1, 1, 1, 1}))); }),
            ErrorKind::ImpossiblePostselection);
}

TEST(ForcedValues, Singlet) {
  const auto& s = ceg18().ray_set;
  const auto a = forced_values(s, kSinglet, std::nullopt);
  EXPECT_EQ(a.get(*s.find(kSinglet.ray)), true);
  std::size_t zeros = 0;
  for (RayId id = 0; id < s.size(); ++id) {
    zeros += a.get(id) == false ? 1 : 0;
  }
  EXPECT_EQ(zeros, 7u);
}

TEST(StateReduce, SingletGivesSevenConstraintsOverTenRays) {
  const auto& s = ceg18().ray_set;
  const auto r = state_reduce(s, enumerate_bases(s), kSinglet);
  EXPECT_EQ(r.removed.size(), 8u);
  EXPECT_EQ(r.kept.size(), 10u);
  EXPECT_EQ(r.dropped_bases.size(), 2u);
  ASSERT_EQ(r.constraints.size(), 7u);
  EXPECT_TRUE(r.all_span_checks());
  std::vector<int> cover(10, 0);
  for (const auto& c : r.system.constraints()) {
    for (auto id : c) ++cover[id];
  }
  EXPECT_TRUE(std::all_of(cover.begin(), cover.end(), [](int c) { return c == 2; }));
  EXPECT_FALSE(colorable(r.system).colorable);
  const auto cert = parity_certificate(r.system);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->constraint_indices.size(), 7u);
}

TEST(StateReduce, SingletMatchesFullSystemWithForcedValues) {
  const auto& s = ceg18().ray_set;
  const auto cs = build_constraints(s, Semantics::BasesOnly);
  EXPECT_FALSE(colorable(cs, forced_values(s, kSinglet, std::nullopt)).colorable);
}

TEST(StateReduce, GenericStateRemovesNothing) {
  const auto& s = ceg18().ray_set;
  const auto r = state_reduce(s, enumerate_bases(s), State(Ray::of({1, 2, 3, 5})));
  EXPECT_TRUE(r.removed.empty());
  EXPECT_FALSE(r.state_id.has_value());
  ASSERT_EQ(r.constraints.size(), 9u);
  // A complete basis always spans the state.
  EXPECT_TRUE(r.all_span_checks());
}

TEST(StateReduce, CompleteBasesAlwaysSpanTheState) {
  // The state is the sum of its projections onto a complete basis, and the
  // removed members contribute nothing.
  const auto& s = peres24().ray_set;
  const auto bases = enumerate_bases(s);
  for (const auto& st : {kHardy, kPhi, kSinglet, State(Ray::of({1, 0, 0, 0}))}) {
    EXPECT_TRUE(state_reduce(s, bases, st).all_span_checks()) << st.ray.str();
  }
}

TEST(StateReduce, FailedSpanChecksBecomeExclusivityOnly) {
  const auto& s = ceg18().ray_set;
  // Three rays that do not span (1,0,0,0) and are not orthogonal to it.
  const std::vector<Basis> partial = {Basis{{2, 5, 7}}, Basis{{0, 1, 2, 3}}};
  const auto r = state_reduce(s, partial, State(Ray::of({1, 0, 0, 0})));
  ASSERT_EQ(r.constraints.size(), 2u);
  EXPECT_FALSE(r.constraints[0].span_check);
  EXPECT_TRUE(r.constraints[1].span_check);
  EXPECT_FALSE(r.all_span_checks());
  EXPECT_EQ(r.system.constraints().size(), 1u);
  EXPECT_EQ(r.system.pairs().size(), 3u);
}

TEST(HardyRun, ReachesContradictionOnThePrintedArgument) {
  const auto& s = ceg18().ray_set;
  const auto run = hardy_run(s, kHardy, kPhi);
  ASSERT_TRUE(run.contradiction());
  const auto& conflict = *run.propagation.conflict;
  EXPECT_EQ(conflict.kind, Conflict::Kind::PairClash);
  const auto z = *s.find(Ray::of({0, 0, 1, 0}));
  const auto y = *s.find(Ray::of({0, 1, 0, 0}));
  EXPECT_EQ(run.system.pairs()[conflict.index], (ExclusivityPair{std::min(z, y), std::max(z, y)}));
  const auto forced_one = [&](RayId id) {
    return std::any_of(run.propagation.trace.begin(), run.propagation.trace.end(),
                       [&](const Forcing& f) { return f.ray == id && f.value; });
  };
  EXPECT_TRUE(forced_one(z));
  EXPECT_TRUE(forced_one(y));
  // Propagation is sound: the seeded system has no coloring.
  EXPECT_FALSE(colorable(run.system, run.seed).colorable);
}

TEST(HardyRun, SingletWithoutPostselectionHasNoPropagationContradiction) {
  const auto run = hardy_run(ceg18().ray_set, kSinglet, std::nullopt);
  EXPECT_FALSE(run.contradiction());
  // Only the full search exposes the state-specific contradiction.
  EXPECT_FALSE(colorable(build_constraints(ceg18().ray_set, Semantics::BasesAndPairs), run.seed).colorable);
}

TEST(HardyRun, AllSixteenTransportedHardyRaysReachContradiction) {
  const auto seed_ray = Ray::of({1, -1, -1, 0});
  for (const auto& target : hardy_rays().ray_set) {
    const auto g = find_symmetry(seed_ray, target);
    ASSERT_TRUE(g.has_value()) << target.str();
    const auto set = apply_symmetry(*g, ceg18().ray_set);
    const State post(apply_symmetry(*g, kPhi.ray));
    const auto run = hardy_run(set, State(target), post);
    EXPECT_TRUE(run.contradiction()) << target.str();
    if (run.contradiction()) {
      EXPECT_FALSE(colorable(run.system, run.seed).colorable);
    }
  }
}

TEST(HardyRun, OrthogonalPostselectionIsAnError) {
  EXPECT_EQ(kind_of([] { (void)hardy_run(ceg18().ray_set, kHardy, State(Ray::of({0, 0, 0, 1}))); }),
            ErrorKind::ImpossiblePostselection);
}

TEST(NonlocalityReport, HardyAndPhi) {
  const auto rec = nonlocality_report(kHardy, kPhi);
  EXPECT_EQ(rec.p34, 1);
  EXPECT_EQ(rec.p35, 1);
  EXPECT_EQ(rec.p36, 0);
  EXPECT_EQ(rec.p37, Rational(1, 12));
  EXPECT_EQ(rec.x1.str(), "sx(1)=+1");
  EXPECT_EQ(rec.x2.str(), "sx(2)=+1");
  EXPECT_EQ(rec.z1.str(), "sz(1)=-1");
  EXPECT_EQ(rec.z2.str(), "sz(2)=-1");
  // p36 is the Born weight of the product ray (0,0,0,1).
  EXPECT_EQ(born(kHardy, Ray::of({0, 0, 0, 1})), 0);
  ASSERT_EQ(rec.forced.size(), 6u);
  EXPECT_EQ(rec.forced[2].event.str(), "sz(1)=+1");
  EXPECT_FALSE(rec.forced[2].value);
  EXPECT_EQ(rec.forced[3].event.str(), "sz(1)=-1");
  EXPECT_TRUE(rec.forced[3].value);
}

TEST(NonlocalityReport, ProductPostselectionOnItself) {
  const auto rec = nonlocality_report(kPhi, kPhi);
  EXPECT_EQ(rec.p37, 1);
  EXPECT_EQ(rec.p34, 1);
  EXPECT_EQ(rec.p35, 1);
}

TEST(NonlocalityReport, Errors) {
  EXPECT_EQ(kind_of([] { (void)nonlocality_report(kHardy, kSinglet); }), ErrorKind::NotFactorizable);
  EXPECT_EQ(kind_of([] { (void)nonlocality_report(kHardy, State(Ray::of({0, 0, 0, 1}))); }),
            ErrorKind::ImpossiblePostselection);
}

}  // namespace
}  // namespace bks
