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

#include "bks/critical.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "bks/error.hpp"

namespace bks {

RayMask mask_of(std::span<const RayId> ids) {
  RayMask m = 0;
  for (RayId id : ids) {
    if (id >= kMaxCensusRays) {
      throw Error(ErrorKind::TooManyRays, "ray id " + std::to_string(id) + " exceeds mask width");
    }
    m |= RayMask{1} << id;
  }
  return m;
}

std::vector<RayId> ids_of(RayMask mask) {
  std::vector<RayId> ids;
  ids.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask) {
    ids.push_back(static_cast<RayId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return ids;
}

ColorabilityOracle::ColorabilityOracle(const RaySet& parent, Semantics mode)
    : system_(build_constraints(parent, mode)),
      shards_(std::make_unique<std::array<Shard, kShards>>()) {
  if (parent.size() > kMaxCensusRays) {
    throw Error(ErrorKind::TooManyRays, std::to_string(parent.size()) + " rays; at most " +
                                            std::to_string(kMaxCensusRays) + " supported");
  }
}

RayMask ColorabilityOracle::full_mask() const {
  const auto n = num_rays();
  return n == 64 ? ~RayMask{0} : (RayMask{1} << n) - 1;
}

bool ColorabilityOracle::colorable_uncached(RayMask subset) const {
  std::vector<bool> keep(num_rays());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    keep[i] = (subset >> i) & 1u;
  }
  return bks::colorable(system_.restricted(keep)).colorable;
}

bool ColorabilityOracle::colorable(RayMask subset) {
  // Mix the bits so neighbouring masks land in different shards.
  Shard& shard = (*shards_)[(subset * 0x9E3779B97F4A7C15ull) >> 58];
  {
    std::lock_guard lock(shard.mutex);
    if (auto it = shard.memo.find(subset); it != shard.memo.end()) {
      return it->second;
    }
  }
  const bool result = colorable_uncached(subset);
  std::lock_guard lock(shard.mutex);
  shard.memo.emplace(subset, result);
  return result;
}

std::size_t ColorabilityOracle::memo_size() const {
  std::size_t total = 0;
  for (const auto& shard : *shards_) {
    std::lock_guard lock(shard.mutex);
    total += shard.memo.size();
  }
  return total;
}

bool is_critical(const RaySet& parent, std::span<const RayId> ids, Semantics mode) {
  ColorabilityOracle oracle(parent, mode);
  for (RayId id : ids) {
    if (id >= parent.size()) {
      throw Error(ErrorKind::UnknownRayId, "ray id " + std::to_string(id));
    }
  }
  const RayMask mask = mask_of(ids);
  if (oracle.colorable_uncached(mask)) {
    return false;
  }
  for (RayMask rest = mask; rest; rest &= rest - 1) {
    const RayMask bit = rest & (~rest + 1);
    if (!oracle.colorable_uncached(mask & ~bit)) {
      return false;
    }
  }
  return true;
}

namespace {

struct LevelResult {
  std::vector<RayMask> next;
  std::vector<RayMask> critical;
};

void expand(ColorabilityOracle& oracle, RayMask mask, bool keep_children, bool record,
            LevelResult& out) {
  bool critical = true;
  for (RayMask rest = mask; rest; rest &= rest - 1) {
    const RayMask child = mask & ~(rest & (~rest + 1));
    if (!oracle.colorable(child)) {
      critical = false;
      if (keep_children) {
        out.next.push_back(child);
      }
    }
  }
  if (critical && record) {
    out.critical.push_back(mask);
  }
}

}  // namespace

Census enumerate_critical(const RaySet& parent, Semantics mode, std::size_t size_min,
                          std::size_t size_max, CensusOptions options) {
  if (parent.size() > kMaxCensusRays) {
    throw Error(ErrorKind::TooManyRays, std::to_string(parent.size()) + " rays; at most " +
                                            std::to_string(kMaxCensusRays) + " supported");
  }
  Census census;
  census.parent = parent;
  census.mode = mode;
  census.size_min = size_min;
  census.size_max = size_max;

  ColorabilityOracle oracle(parent, mode);
  const unsigned threads = std::max(1u, options.threads);
  std::vector<RayMask> critical;
  std::vector<RayMask> level;
  if (parent.size() >= size_min && size_min <= size_max && !oracle.colorable(oracle.full_mask())) {
    level.push_back(oracle.full_mask());
  }

  for (std::size_t k = parent.size(); !level.empty() && k >= size_min && k > 0; --k) {
    const bool keep_children = k - 1 >= size_min && k - 1 > 0;
    const bool record = k <= size_max;
    std::vector<LevelResult> partial(threads);
    std::atomic<std::size_t> cursor{0};
    auto worker = [&](unsigned w) {
      for (std::size_t i = cursor++; i < level.size(); i = cursor++) {
        expand(oracle, level[i], keep_children, record, partial[w]);
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back(worker, w);
      }
    }
    std::vector<RayMask> next;
    for (auto& p : partial) {
      next.insert(next.end(), p.next.begin(), p.next.end());
      critical.insert(critical.end(), p.critical.begin(), p.critical.end());
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }

  for (RayMask m : critical) {
    census.sets.push_back(CriticalSet{ids_of(m)});
  }
  std::sort(census.sets.begin(), census.sets.end(), [](const CriticalSet& a, const CriticalSet& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a.ray_ids < b.ray_ids;
  });
  for (const auto& s : census.sets) {
    ++census.counts_by_size[s.size()];
  }
  return census;
}

}  // namespace bks
