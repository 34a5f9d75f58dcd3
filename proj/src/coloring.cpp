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

#include "bks/coloring.hpp"

#include <algorithm>

#include "bks/error.hpp"
#include "bks/gf2.hpp"

namespace bks {

const char* to_string(Semantics mode) {
  switch (mode) {
    case Semantics::BasesOnly:
      return "bases";
    case Semantics::BasesAndPairs:
      return "bases+pairs";
    case Semantics::Derived:
      return "derived";
  }
  return "?";
}

std::optional<Semantics> parse_semantics(std::string_view text) {
  if (text == "bases") {
    return Semantics::BasesOnly;
  }
  if (text == "bases+pairs") {
    return Semantics::BasesAndPairs;
  }
  return std::nullopt;
}

const char* to_string(Conflict::Kind kind) {
  switch (kind) {
    case Conflict::Kind::PairClash:
      return "pair-clash";
    case Conflict::Kind::TwoOnes:
      return "two-ones";
    case Conflict::Kind::AllZero:
      return "all-zero";
  }
  return "?";
}

std::optional<bool> Assignment::get(RayId id) const {
  std::int8_t v = values_.at(id);
  if (v == kUnset) {
    return std::nullopt;
  }
  return v == 1;
}

void Assignment::set(RayId id, bool value) {
  if (id >= values_.size()) {
    throw Error(ErrorKind::UnknownRayId, "ray id " + std::to_string(id) + " outside universe of " +
                                             std::to_string(values_.size()));
  }
  values_[id] = value ? 1 : 0;
}

void Assignment::clear(RayId id) {
  if (id >= values_.size()) {
    throw Error(ErrorKind::UnknownRayId, "ray id " + std::to_string(id));
  }
  values_[id] = kUnset;
}

std::size_t Assignment::count_set() const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](std::int8_t v) { return v != kUnset; }));
}

ConstraintSystem::ConstraintSystem() : universe_(std::make_shared<const RaySet>()) {}

ConstraintSystem::ConstraintSystem(std::shared_ptr<const RaySet> universe,
                                   std::vector<Constraint> sum_one,
                                   std::vector<ExclusivityPair> pairs, Semantics mode)
    : universe_(std::move(universe)),
      constraints_(std::move(sum_one)),
      pairs_(std::move(pairs)),
      mode_(mode) {
  const auto n = universe_->size();
  auto check = [n](RayId id) {
    if (id >= n) {
      throw Error(ErrorKind::UnknownRayId,
                  "ray id " + std::to_string(id) + " outside universe of " + std::to_string(n));
    }
  };
  for (auto& c : constraints_) {
    std::for_each(c.begin(), c.end(), check);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  std::sort(constraints_.begin(), constraints_.end());
  constraints_.erase(std::unique(constraints_.begin(), constraints_.end()), constraints_.end());
  for (auto& [a, b] : pairs_) {
    check(a);
    check(b);
    if (b < a) {
      std::swap(a, b);
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

ConstraintSystem ConstraintSystem::restricted(const std::vector<bool>& keep) const {
  std::vector<Constraint> cs;
  for (const auto& c : constraints_) {
    if (std::all_of(c.begin(), c.end(), [&](RayId id) { return keep.at(id); })) {
      cs.push_back(c);
    }
  }
  std::vector<ExclusivityPair> ps;
  for (const auto& p : pairs_) {
    if (keep.at(p.first) && keep.at(p.second)) {
      ps.push_back(p);
    }
  }
  return ConstraintSystem(universe_, std::move(cs), std::move(ps), mode_);
}

ConstraintSystem build_constraints(std::shared_ptr<const RaySet> s, Semantics mode) {
  std::vector<Constraint> cs;
  for (auto& b : enumerate_bases(*s)) {
    cs.push_back(std::move(b.ray_ids));
  }
  std::vector<ExclusivityPair> pairs;
  if (mode == Semantics::BasesAndPairs) {
    pairs = orthogonality_graph(*s).edges();
  }
  return ConstraintSystem(std::move(s), std::move(cs), std::move(pairs), mode);
}

ConstraintSystem build_constraints(const RaySet& s, Semantics mode) {
  return build_constraints(std::make_shared<const RaySet>(s), mode);
}

// Propagation engine over the raw value vector.
class Propagator {
 public:
  explicit Propagator(const ConstraintSystem& cs) : cs_(cs) {}

  static std::vector<std::int8_t>& values(Assignment& a) { return a.values_; }

  std::optional<Conflict> run(std::vector<std::int8_t>& v, std::vector<Forcing>* trace) const {
    struct Pending {
      Forcing::Source source;
      std::size_t index;
      RayId ray;
      bool value;
    };
    std::vector<Pending> pending;
    for (int round = 1;; ++round) {
      if (auto conflict = check(v)) {
        return conflict;
      }
      pending.clear();
      const auto& constraints = cs_.constraints();
      for (std::size_t k = 0; k < constraints.size(); ++k) {
        int ones = 0;
        int unset = 0;
        RayId last_unset = 0;
        for (RayId id : constraints[k]) {
          if (v[id] == 1) {
            ++ones;
          } else if (v[id] == kUnset) {
            ++unset;
            last_unset = id;
          }
        }
        if (ones == 1 && unset > 0) {
          for (RayId id : constraints[k]) {
            if (v[id] == kUnset) {
              pending.push_back({Forcing::Source::Constraint, k, id, false});
            }
          }
        } else if (ones == 0 && unset == 1) {
          pending.push_back({Forcing::Source::Constraint, k, last_unset, true});
        }
      }
      const auto& pairs = cs_.pairs();
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto [a, b] = pairs[k];
        if (v[a] == 1 && v[b] == kUnset) {
          pending.push_back({Forcing::Source::Pair, k, b, false});
        } else if (v[b] == 1 && v[a] == kUnset) {
          pending.push_back({Forcing::Source::Pair, k, a, false});
        }
      }
      if (pending.empty()) {
        return std::nullopt;
      }
      // If two rules disagree on a ray the first one wins; the other rule is
      // violated afterwards and the next check reports it.
      for (const auto& p : pending) {
        if (v[p.ray] != kUnset) {
          continue;
        }
        v[p.ray] = p.value ? 1 : 0;
        if (trace) {
          trace->push_back(Forcing{round, p.source, p.index, p.ray, p.value});
        }
      }
    }
  }

 private:
  static constexpr std::int8_t kUnset = -1;

  std::optional<Conflict> check(const std::vector<std::int8_t>& v) const {
    const auto& pairs = cs_.pairs();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto [a, b] = pairs[k];
      if (v[a] == 1 && v[b] == 1) {
        return Conflict{Conflict::Kind::PairClash, k, {a, b}};
      }
    }
    const auto& constraints = cs_.constraints();
    for (std::size_t k = 0; k < constraints.size(); ++k) {
      std::vector<RayId> ones;
      bool all_zero = true;
      for (RayId id : constraints[k]) {
        if (v[id] == 1) {
          ones.push_back(id);
        }
        if (v[id] != 0) {
          all_zero = false;
        }
      }
      if (ones.size() >= 2) {
        ones.resize(2);
        return Conflict{Conflict::Kind::TwoOnes, k, ones};
      }
      if (all_zero) {
        return Conflict{Conflict::Kind::AllZero, k, constraints[k]};
      }
    }
    return std::nullopt;
  }

  const ConstraintSystem& cs_;
};

PropagationResult propagate(const ConstraintSystem& cs, Assignment a, bool record_trace) {
  if (a.size() != cs.num_rays()) {
    throw Error(ErrorKind::UnknownRayId, "assignment covers " + std::to_string(a.size()) +
                                             " ids but the universe has " +
                                             std::to_string(cs.num_rays()));
  }
  PropagationResult result;
  Propagator engine(cs);
  result.conflict =
      engine.run(Propagator::values(a), record_trace ? &result.trace : nullptr);
  result.assignment = std::move(a);
  return result;
}

namespace {

bool search(const Propagator& engine, std::vector<std::int8_t> v, std::uint64_t& nodes,
            std::optional<std::vector<std::int8_t>>& witness) {
  ++nodes;
  if (engine.run(v, nullptr)) {
    return false;
  }
  auto next = std::find(v.begin(), v.end(), std::int8_t{-1});
  if (next == v.end()) {
    witness = std::move(v);
    return true;
  }
  const auto id = static_cast<std::size_t>(next - v.begin());
  for (std::int8_t value : {std::int8_t{1}, std::int8_t{0}}) {
    auto child = v;
    child[id] = value;
    if (search(engine, std::move(child), nodes, witness)) {
      return true;
    }
  }
  return false;
}

}  // namespace

ColoringResult colorable(const ConstraintSystem& cs, const Assignment& seed) {
  if (seed.size() != cs.num_rays()) {
    throw Error(ErrorKind::UnknownRayId, "seed assignment has the wrong size");
  }
  Propagator engine(cs);
  Assignment start = seed;
  std::optional<std::vector<std::int8_t>> found;
  ColoringResult result;
  result.colorable = search(engine, Propagator::values(start), result.nodes, found);
  if (found) {
    Assignment w(cs.num_rays());
    Propagator::values(w) = std::move(*found);
    result.witness = std::move(w);
  }
  return result;
}

ColoringResult colorable(const ConstraintSystem& cs) {
  return colorable(cs, Assignment(cs.num_rays()));
}

bool satisfies(const ConstraintSystem& cs, const Assignment& a) {
  if (a.size() != cs.num_rays() || !a.is_total()) {
    return false;
  }
  for (const auto& c : cs.constraints()) {
    int ones = 0;
    for (RayId id : c) {
      ones += *a.get(id) ? 1 : 0;
    }
    if (ones != 1) {
      return false;
    }
  }
  for (const auto& [x, y] : cs.pairs()) {
    if (*a.get(x) && *a.get(y)) {
      return false;
    }
  }
  return true;
}

std::optional<ParityCertificate> parity_certificate(const ConstraintSystem& cs) {
  const std::size_t n = cs.num_rays();
  const auto& constraints = cs.constraints();
  // One equation per ray (even coverage) plus one for the odd total.
  Gf2Matrix a(n + 1, constraints.size());
  std::vector<bool> rhs(n + 1, false);
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    for (RayId id : constraints[k]) {
      a.set(id, k, true);
    }
    a.set(n, k, true);
  }
  rhs[n] = true;
  auto x = solve_gf2(std::move(a), rhs);
  if (!x) {
    return std::nullopt;
  }
  ParityCertificate cert;
  for (std::size_t k = 0; k < x->size(); ++k) {
    if ((*x)[k]) {
      cert.constraint_indices.push_back(k);
    }
  }
  return cert;
}

std::vector<int> coverage(const ConstraintSystem& cs, const ParityCertificate& cert) {
  std::vector<int> count(cs.num_rays(), 0);
  for (std::size_t k : cert.constraint_indices) {
    for (RayId id : cs.constraints().at(k)) {
      ++count[id];
    }
  }
  return count;
}

}  // namespace bks
