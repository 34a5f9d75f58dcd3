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

#ifndef BKS_CRITICAL_HPP
#define BKS_CRITICAL_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "bks/coloring.hpp"
#include "bks/ray.hpp"

namespace bks {

/// Subset of a parent ray set, bit i standing for ray id i.
using RayMask = std::uint64_t;

inline constexpr std::size_t kMaxCensusRays = 64;

RayMask mask_of(std::span<const RayId> ids);
std::vector<RayId> ids_of(RayMask mask);

/// Colorability of induced subsystems of one parent, memoized by mask.
///
/// The induced system of a subset keeps the parent's constraints (and, in
/// BasesAndPairs mode, pairs) that lie entirely inside it. Safe to call from
/// several threads; concurrent misses on the same mask may both compute, and
/// both store the same answer.
class ColorabilityOracle {
 public:
  ColorabilityOracle(const RaySet& parent, Semantics mode);

  std::size_t num_rays() const { return system_.num_rays(); }
  RayMask full_mask() const;

  bool colorable(RayMask subset);
  bool colorable_uncached(RayMask subset) const;
  std::size_t memo_size() const;

 private:
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<RayMask, bool> memo;
  };
  static constexpr std::size_t kShards = 64;

  ConstraintSystem system_;
  std::unique_ptr<std::array<Shard, kShards>> shards_;
};

/// Minimal uncolorable subset, as sorted ids into the parent.
struct CriticalSet {
  std::vector<RayId> ray_ids;

  std::size_t size() const { return ray_ids.size(); }
  friend auto operator<=>(const CriticalSet&, const CriticalSet&) = default;
};

struct Census {
  RaySet parent;
  Semantics mode = Semantics::BasesOnly;
  std::size_t size_min = 0;
  std::size_t size_max = 0;
  /// Ordered by size, then lexicographically by ids.
  std::vector<CriticalSet> sets;
  /// Only sizes that occur.
  std::map<std::size_t, std::size_t> counts_by_size;
};

struct CensusOptions {
  unsigned threads = 1;
};

/// Induced system uncolorable and every one-ray deletion colorable.
bool is_critical(const RaySet& parent, std::span<const RayId> ids, Semantics mode);

/// All critical subsets with size in [size_min, size_max].
///
/// Walks down from the full set one size level at a time, keeping only
/// uncolorable subsets (uncolorability is closed under adding rays, so every
/// critical set is reached). A set is critical when none of its one-ray
/// deletions stay uncolorable. The output does not depend on `threads`.
/// Throws Error(TooManyRays) above kMaxCensusRays.
Census enumerate_critical(const RaySet& parent, Semantics mode, std::size_t size_min,
                          std::size_t size_max, CensusOptions options = {});

}  // namespace bks

#endif  // BKS_CRITICAL_HPP
