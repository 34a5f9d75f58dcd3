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

#include "bks/quantum.hpp"

#include <algorithm>
#include <memory>

#include "bks/error.hpp"

namespace bks {

namespace {

IntMatrix pauli_matrix(Pauli p) {
  IntMatrix m = IntMatrix::Zero(2, 2);
  switch (p) {
    case Pauli::I:
      m(0, 0) = 1;
      m(1, 1) = 1;
      break;
    case Pauli::X:
      m(0, 1) = 1;
      m(1, 0) = 1;
      break;
    case Pauli::Z:
      m(0, 0) = 1;
      m(1, 1) = -1;
      break;
  }
  return m;
}

const char* pauli_name(Pauli p) {
  switch (p) {
    case Pauli::I:
      return "I";
    case Pauli::X:
      return "sx";
    case Pauli::Z:
      return "sz";
  }
  return "?";
}

void require_two_qubits(const Ray& r) {
  if (r.dim() != 4) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected a two-qubit ray, got dimension " + std::to_string(r.dim()));
  }
}

void require_event(const LocalEvent& e) {
  if (e.particle != 1 && e.particle != 2) {
    throw Error(ErrorKind::InvalidEvent, "particle must be 1 or 2");
  }
  if (e.direction.dim() != 2) {
    throw Error(ErrorKind::InvalidEvent, "local direction must be a qubit ray");
  }
}

// Ray of particle 1 along `d1` and particle 2 along `d2`.
Ray product_ray(const LocalEvent& a, const LocalEvent& b) {
  return a.particle == 1 ? tensor(a.direction, b.direction) : tensor(b.direction, a.direction);
}

}  // namespace

IntMatrix ProductObservable::matrix() const {
  const IntMatrix a = pauli_matrix(first);
  const IntMatrix b = pauli_matrix(second);
  IntMatrix m(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      m.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
    }
  }
  return m;
}

std::string ProductObservable::name() const {
  return std::string(pauli_name(first)) + "(x)" + pauli_name(second);
}

std::vector<ProductObservable> ProductObservable::nontrivial() {
  std::vector<ProductObservable> out;
  for (Pauli a : {Pauli::I, Pauli::X, Pauli::Z}) {
    for (Pauli b : {Pauli::I, Pauli::X, Pauli::Z}) {
      if (a != Pauli::I || b != Pauli::I) {
        out.push_back({a, b});
      }
    }
  }
  return out;
}

std::optional<int> eigen_check(const Ray& u, const ProductObservable& obs) {
  require_two_qubits(u);
  const IntVector image = obs.matrix() * u.components();
  if (image == u.components()) {
    return 1;
  }
  if (image == IntVector(-u.components())) {
    return -1;
  }
  return std::nullopt;
}

LocalEvent LocalEvent::along(int particle, Axis axis, int outcome) {
  if (outcome != 1 && outcome != -1) {
    throw Error(ErrorKind::InvalidEvent, "outcome must be +1 or -1");
  }
  Ray dir = axis == Axis::Z ? (outcome == 1 ? Ray::of({1, 0}) : Ray::of({0, 1}))
                            : (outcome == 1 ? Ray::of({1, 1}) : Ray::of({1, -1}));
  LocalEvent e{particle, std::move(dir)};
  require_event(e);
  return e;
}

std::optional<std::pair<Axis, int>> LocalEvent::axis_label() const {
  if (direction == Ray::of({1, 0})) return std::pair{Axis::Z, 1};
  if (direction == Ray::of({0, 1})) return std::pair{Axis::Z, -1};
  if (direction == Ray::of({1, 1})) return std::pair{Axis::X, 1};
  if (direction == Ray::of({1, -1})) return std::pair{Axis::X, -1};
  return std::nullopt;
}

std::string LocalEvent::str() const {
  if (auto label = axis_label()) {
    return std::string(label->first == Axis::Z ? "sz" : "sx") + "(" + std::to_string(particle) +
           ")=" + (label->second == 1 ? "+1" : "-1");
  }
  return direction.str() + "@" + std::to_string(particle);
}

Rational born(const State& state, const Ray& u) {
  const Rational overlap = inner(u, state.ray);
  const Rational uu = inner(u, u);
  const Rational pp = inner(state.ray, state.ray);
  return Rational(overlap * overlap / (uu * pp));
}

Rational probability(const State& state, const LocalEvent& event) {
  require_event(event);
  require_two_qubits(state.ray);
  // Spanning pair: the event direction times each computational basis ray of
  // the other particle.
  Rational p = 0;
  for (const Ray& other : {Ray::of({1, 0}), Ray::of({0, 1})}) {
    const Ray r = event.particle == 1 ? tensor(event.direction, other)
                                      : tensor(other, event.direction);
    p += born(state, r);
  }
  return p;
}

Rational joint_probability(const State& state, const LocalEvent& a, const LocalEvent& b) {
  require_event(a);
  require_event(b);
  require_two_qubits(state.ray);
  if (a.particle == b.particle) {
    throw Error(ErrorKind::InvalidEvent, "joint events must concern different particles");
  }
  return born(state, product_ray(a, b));
}

Rational conditional_probability(const State& state, const LocalEvent& a,
                                 const LocalEvent& given) {
  const Rational joint = joint_probability(state, a, given);
  const Rational p_given = probability(state, given);
  if (p_given == 0) {
    throw Error(ErrorKind::ConditionHasZeroProbability,
                "P(" + given.str() + ") = 0 in state " + state.ray.str());
  }
  return Rational(joint / p_given);
}

Assignment forced_values(const RaySet& s, const State& pre, const std::optional<State>& post) {
  if (post && inner(post->ray, pre.ray) == 0) {
    throw Error(ErrorKind::ImpossiblePostselection,
                post->ray.str() + " is orthogonal to " + pre.ray.str());
  }
  Assignment a(s.size());
  for (RayId id = 0; id < s.size(); ++id) {
    const Ray& r = s[id];
    const bool one = r == pre.ray || (post && r == post->ray);
    const bool zero = orthogonal(r, pre.ray) || (post && orthogonal(r, post->ray));
    if (one) {
      a.set(id, true);
    } else if (zero) {
      a.set(id, false);
    }
  }
  return a;
}

bool ReducedSystem::all_span_checks() const {
  return std::all_of(constraints.begin(), constraints.end(),
                     [](const ReducedConstraint& c) { return c.span_check; });
}

std::vector<RayId> ReducedSystem::reduced_ids(const ReducedConstraint& c) const {
  std::vector<RayId> out;
  for (RayId id : c.members) {
    auto it = std::lower_bound(kept.begin(), kept.end(), id);
    out.push_back(static_cast<RayId>(it - kept.begin()));
  }
  return out;
}

ReducedSystem state_reduce(const RaySet& s, const std::vector<Basis>& bases, const State& state) {
  ReducedSystem out;
  out.state_id = s.find(state.ray);
  std::vector<bool> removed(s.size(), false);
  for (RayId id = 0; id < s.size(); ++id) {
    if (s[id] == state.ray || orthogonal(s[id], state.ray)) {
      removed[id] = true;
      out.removed.push_back(id);
    } else {
      out.kept.push_back(id);
    }
  }

  for (std::size_t b = 0; b < bases.size(); ++b) {
    const auto& ids = bases[b].ray_ids;
    if (out.state_id && std::find(ids.begin(), ids.end(), *out.state_id) != ids.end()) {
      out.dropped_bases.push_back(b);
      continue;
    }
    ReducedConstraint c{b, {}, false};
    std::vector<Ray> generators;
    for (RayId id : ids) {
      if (!removed.at(id)) {
        c.members.push_back(id);
        generators.push_back(s[id]);
      }
    }
    c.span_check = in_span(state.ray, generators);
    out.constraints.push_back(std::move(c));
  }

  std::vector<Constraint> sum_one;
  std::vector<ExclusivityPair> pairs;
  for (const auto& c : out.constraints) {
    auto ids = out.reduced_ids(c);
    if (c.span_check) {
      sum_one.push_back(std::move(ids));
    } else {
      for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
          pairs.emplace_back(ids[i], ids[j]);
        }
      }
    }
  }
  out.system = ConstraintSystem(std::make_shared<const RaySet>(s.subset(out.kept)),
                                std::move(sum_one), std::move(pairs), Semantics::Derived);
  return out;
}

HardyRun hardy_run(const RaySet& s, const State& pre, const std::optional<State>& post) {
  Assignment seed = forced_values(s, pre, post);
  ConstraintSystem system = build_constraints(s, Semantics::BasesAndPairs);
  PropagationResult result = propagate(system, seed, /*record_trace=*/true);
  return HardyRun{std::move(system), std::move(seed), std::move(result)};
}

HardyRecord nonlocality_report(const State& pre, const State& post) {
  require_two_qubits(pre.ray);
  auto factors = factorize(post.ray);
  if (!factors) {
    throw Error(ErrorKind::NotFactorizable, post.ray.str() + " is entangled");
  }
  if (inner(pre.ray, post.ray) == 0) {
    throw Error(ErrorKind::ImpossiblePostselection,
                post.ray.str() + " is orthogonal to " + pre.ray.str());
  }
  const Ray& a = factors->first;
  const Ray& b = factors->second;
  const IntVector& psi = pre.ray.components();

  // Conditional (unnormalized) state of one particle once the other is found
  // along its postselected factor.
  IntVector alpha(2), beta(2);
  for (int i = 0; i < 2; ++i) {
    alpha(i) = b[0] * psi(2 * i) + b[1] * psi(2 * i + 1);
    beta(i) = a[0] * psi(i) + a[1] * psi(2 + i);
  }
  const LocalEvent x1{1, a};
  const LocalEvent x2{2, b};
  if (alpha.isZero()) {
    throw Error(ErrorKind::ConditionHasZeroProbability, "P(" + x2.str() + ") = 0");
  }
  if (beta.isZero()) {
    throw Error(ErrorKind::ConditionHasZeroProbability, "P(" + x1.str() + ") = 0");
  }
  const LocalEvent z1{1, Ray(alpha)};
  const LocalEvent z2{2, Ray(beta)};
  // The directions ruled out by the preparation: c (x) b and a (x) d are
  // orthogonal to pre.
  IntVector c(2), d(2);
  c << alpha(1), -alpha(0);
  d << beta(1), -beta(0);

  HardyRecord rec{x1, x2, z1, z2, 0, 0, 0, 0, {}};
  rec.p34 = conditional_probability(pre, z1, x2);
  rec.p35 = conditional_probability(pre, z2, x1);
  rec.p36 = joint_probability(pre, z1, z2);
  rec.p37 = joint_probability(pre, x1, x2);
  rec.forced = {
      {x1, true}, {x2, true}, {LocalEvent{1, Ray(c)}, false}, {z1, true},
      {LocalEvent{2, Ray(d)}, false}, {z2, true},
  };
  return rec;
}

}  // namespace bks
