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

#ifndef BKS_COLORING_HPP
#define BKS_COLORING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bks/ray.hpp"

namespace bks {

/// Which orthogonality facts become constraints.
///
/// BasesOnly: one exactly-one constraint per complete basis.
/// BasesAndPairs: additionally, every orthogonal pair is at-most-one.
/// Derived: explicit constraints handed in by another construction (for
/// example a state reduction); no structural invariant is implied.
enum class Semantics { BasesOnly, BasesAndPairs, Derived };

const char* to_string(Semantics mode);
/// Accepts "bases" and "bases+pairs".
std::optional<Semantics> parse_semantics(std::string_view text);

/// Partial 0/1 valuation of the rays of a universe.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t num_rays) : values_(num_rays, kUnset) {}

  std::size_t size() const { return values_.size(); }
  std::optional<bool> get(RayId id) const;
  bool is_set(RayId id) const { return values_.at(id) != kUnset; }
  /// Throws Error(UnknownRayId) for ids outside the universe.
  void set(RayId id, bool value);
  void clear(RayId id);

  std::size_t count_set() const;
  bool is_total() const { return count_set() == size(); }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  friend class Propagator;
  static constexpr std::int8_t kUnset = -1;
  std::vector<std::int8_t> values_;
};

using Constraint = std::vector<RayId>;
using ExclusivityPair = std::pair<RayId, RayId>;

/// Exactly-one constraints (and optional at-most-one pairs) over a ray set.
/// Immutable once built; constraints are stored sorted and deduplicated.
class ConstraintSystem {
 public:
  ConstraintSystem();
  /// Throws Error(UnknownRayId) if any id is outside `universe`.
  ConstraintSystem(std::shared_ptr<const RaySet> universe, std::vector<Constraint> sum_one,
                   std::vector<ExclusivityPair> pairs, Semantics mode);

  const RaySet& universe() const { return *universe_; }
  const std::shared_ptr<const RaySet>& shared_universe() const { return universe_; }
  std::size_t num_rays() const { return universe_->size(); }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<ExclusivityPair>& pairs() const { return pairs_; }
  Semantics mode() const { return mode_; }

  /// Keeps the constraints and pairs lying entirely inside `keep` (indexed by
  /// ray id). Ray ids are unchanged; dropped rays become unconstrained.
  ConstraintSystem restricted(const std::vector<bool>& keep) const;

 private:
  std::shared_ptr<const RaySet> universe_;
  std::vector<Constraint> constraints_;
  std::vector<ExclusivityPair> pairs_;
  Semantics mode_ = Semantics::BasesOnly;
};

ConstraintSystem build_constraints(const RaySet& s, Semantics mode);
ConstraintSystem build_constraints(std::shared_ptr<const RaySet> s, Semantics mode);

struct Conflict {
  enum class Kind {
    PairClash,  // an exclusivity pair has both rays valued 1
    TwoOnes,    // a constraint has two members valued 1
    AllZero,    // a constraint has every member valued 0
  };
  Kind kind;
  std::size_t index;          // into pairs() for PairClash, constraints() otherwise
  std::vector<RayId> rays;    // the clashing 1-rays, or the all-zero members
};

const char* to_string(Conflict::Kind kind);

/// One forced value, recorded in the order propagation derived it.
struct Forcing {
  enum class Source { Constraint, Pair };
  int round;
  Source source;
  std::size_t index;
  RayId ray;
  bool value;
};

struct PropagationResult {
  Assignment assignment;
  std::optional<Conflict> conflict;
  std::vector<Forcing> trace;

  bool contradiction() const { return conflict.has_value(); }
};

/// Unit propagation to the least fixpoint.
///
/// Rules: a constraint with one member at 1 sets the rest to 0; a constraint
/// with all but one member at 0 sets the last to 1; a pair with one ray at 1
/// sets the other to 0. Runs in rounds: every rule is evaluated against the
/// assignment at the start of the round, the results applied, then the
/// assignment re-checked (pairs before constraints) for a clash.
/// Throws Error(UnknownRayId) if `a` is sized for a different universe.
PropagationResult propagate(const ConstraintSystem& cs, Assignment a, bool record_trace = false);

struct ColoringResult {
  bool colorable = false;
  std::optional<Assignment> witness;
  std::uint64_t nodes = 0;
};

/// Exhaustive backtracking with propagation at every node. Branches on the
/// lowest unassigned id, trying 1 before 0, so witnesses are reproducible.
ColoringResult colorable(const ConstraintSystem& cs);
ColoringResult colorable(const ConstraintSystem& cs, const Assignment& seed);

/// True iff `a` is total, every constraint has exactly one 1 and no pair has two.
bool satisfies(const ConstraintSystem& cs, const Assignment& a);

/// Odd set of constraints covering every ray an even number of times.
struct ParityCertificate {
  std::vector<std::size_t> constraint_indices;
};

std::optional<ParityCertificate> parity_certificate(const ConstraintSystem& cs);

/// Number of selected constraints containing each ray.
std::vector<int> coverage(const ConstraintSystem& cs, const ParityCertificate& cert);

}  // namespace bks

#endif  // BKS_COLORING_HPP
