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

#ifndef BKS_QUANTUM_HPP
#define BKS_QUANTUM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bks/coloring.hpp"
#include "bks/ray.hpp"
#include "bks/scalar.hpp"

namespace bks {

/// Unnormalized pure state. Born ratios never need the normalization, so
/// everything stays rational.
struct State {
  Ray ray;

  explicit State(Ray r) : ray(std::move(r)) {}
};

enum class Pauli { I, X, Z };

/// sigma_a (x) sigma_b on two qubits, basis order |++>,|+->,|-+>,|-->.
struct ProductObservable {
  Pauli first = Pauli::I;
  Pauli second = Pauli::I;

  IntMatrix matrix() const;
  std::string name() const;

  /// The eight products with at least one non-identity factor.
  static std::vector<ProductObservable> nontrivial();
};

/// +1 or -1 if `u` is an eigenvector of `obs`, std::nullopt otherwise.
std::optional<int> eigen_check(const Ray& u, const ProductObservable& obs);

enum class Axis { X, Z };

/// "Particle p is found along direction e": a rank-2 projector on two qubits.
struct LocalEvent {
  int particle = 1;  // 1 or 2
  Ray direction;     // qubit ray

  /// sigma_axis = outcome on one particle. z: +1 -> (1,0), -1 -> (0,1);
  /// x: +1 -> (1,1), -1 -> (1,-1).
  static LocalEvent along(int particle, Axis axis, int outcome);

  /// Axis/outcome when the direction is a sigma_z or sigma_x eigenvector.
  std::optional<std::pair<Axis, int>> axis_label() const;
  /// "sz(1)=-1", or "(1,2)@1" for other directions.
  std::string str() const;
};

/// <u,psi>^2 / (<u,u><psi,psi>).
Rational born(const State& state, const Ray& u);

/// P(event), summed over an orthogonal integer ray pair spanning the projector.
Rational probability(const State& state, const LocalEvent& event);
/// P(a and b) for events on different particles (a rank-1 product ray).
Rational joint_probability(const State& state, const LocalEvent& a, const LocalEvent& b);
/// P(a | given). Throws ConditionHasZeroProbability or InvalidEvent.
Rational conditional_probability(const State& state, const LocalEvent& a,
                                 const LocalEvent& given);

/// Values fixed by preparing `pre` and (optionally) postselecting `post`:
/// 1 on rays parallel to either, 0 on rays orthogonal to either.
/// Throws ImpossiblePostselection if <post,pre> = 0.
Assignment forced_values(const RaySet& s, const State& pre, const std::optional<State>& post);

struct ReducedConstraint {
  std::size_t source_basis;      // index into the bases passed in
  std::vector<RayId> members;    // parent ids still present
  bool span_check;               // state lies in span(members)
};

/// Result of conditioning a basis system on a prepared state.
struct ReducedSystem {
  std::optional<RayId> state_id;          // parent id of the state ray, if present
  std::vector<RayId> removed;             // state ray and rays orthogonal to it
  std::vector<RayId> kept;                // the remaining parent ids, ascending
  std::vector<std::size_t> dropped_bases; // bases containing the state ray
  std::vector<ReducedConstraint> constraints;
  /// Over `kept` (re-indexed in order): span-checked constraints are
  /// exactly-one, failed ones only contribute exclusivity pairs.
  ConstraintSystem system;

  bool all_span_checks() const;
  std::vector<RayId> reduced_ids(const ReducedConstraint& c) const;
};

/// Drops the state's ray and everything orthogonal to it. Every basis not
/// containing the state keeps its surviving members as a constraint, which
/// sums to 1 when the state lies in their span; otherwise it is flagged and
/// kept only as pairwise exclusivity.
ReducedSystem state_reduce(const RaySet& s, const std::vector<Basis>& bases, const State& state);

struct HardyRun {
  ConstraintSystem system;  // BasesAndPairs over the ray set
  Assignment seed;          // forced_values(pre, post)
  PropagationResult propagation;

  bool contradiction() const { return propagation.contradiction(); }
};

/// Pre/postselection argument: seed the forced values and propagate.
HardyRun hardy_run(const RaySet& s, const State& pre, const std::optional<State>& post);

struct LocalValue {
  LocalEvent event;
  bool value;
};

/// The four Hardy probabilities for a preselected `pre` and a factorizable
/// postselection `post` = x1 (x) x2.
///
/// z1 is the particle-1 direction inferred once particle 2 is found along x2
/// (the conditional state of particle 1), z2 likewise with the roles swapped.
/// p34 = P(z1 | x2), p35 = P(z2 | x1), p36 = P(z1, z2), p37 = P(x1, x2).
struct HardyRecord {
  LocalEvent x1, x2;
  LocalEvent z1, z2;
  Rational p34, p35, p36, p37;
  /// Local values forced by the argument, particle 1 first then mirrored.
  std::vector<LocalValue> forced;
};

/// Throws NotFactorizable, ImpossiblePostselection or ConditionHasZeroProbability.
HardyRecord nonlocality_report(const State& pre, const State& post);

}  // namespace bks

#endif  // BKS_QUANTUM_HPP
