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

#include "bks/catalog.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "bks/error.hpp"

namespace bks {

namespace {

// Load-time self checks. A failure here is a bug in this file, not bad input.
void verify(bool ok, const std::string& what) {
  if (!ok) {
    throw std::logic_error("catalog self-check failed: " + what);
  }
}

void verify_declared_bases(const CatalogEntry& e) {
  if (!e.declared_bases) {
    return;
  }
  for (const auto& b : *e.declared_bases) {
    verify(static_cast<Eigen::Index>(b.ray_ids.size()) == e.ray_set.dim(),
           e.key + ": basis size");
    for (std::size_t i = 0; i < b.ray_ids.size(); ++i) {
      for (std::size_t j = i + 1; j < b.ray_ids.size(); ++j) {
        verify(orthogonal(e.ray_set[b.ray_ids[i]], e.ray_set[b.ray_ids[j]]),
               e.key + ": declared basis not orthogonal");
      }
    }
  }
}

// Every 4-vector over {-1,0,1} with `nonzero` nonzero entries, one per
// projective class, sorted.
std::vector<Ray> sign_pattern_family(int nonzero) {
  std::set<Ray> family;
  std::array<long, 3> values{-1, 0, 1};
  for (long a : values)
    for (long b : values)
      for (long c : values)
        for (long d : values) {
          if ((a != 0) + (b != 0) + (c != 0) + (d != 0) == nonzero) {
            family.insert(Ray::of({a, b, c, d}));
          }
        }
  return {family.begin(), family.end()};
}

CatalogEntry make_ceg18() {
  // The nine bases as written, one row per basis.
  const std::array<std::array<std::array<long, 4>, 4>, 9> printed{{
      {{{0, 0, 0, 1}, {0, 0, 1, 0}, {1, 1, 0, 0}, {1, -1, 0, 0}}},
      {{{0, 0, 0, 1}, {0, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, -1, 0}}},
      {{{1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}}},
      {{{1, -1, 1, -1}, {1, 1, 1, 1}, {1, 0, -1, 0}, {0, 1, 0, -1}}},
      {{{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 1}, {1, 0, 0, -1}}},
      {{{1, -1, -1, 1}, {1, 1, 1, 1}, {1, 0, 0, -1}, {0, 1, -1, 0}}},
      {{{1, 1, -1, 1}, {1, 1, 1, -1}, {1, -1, 0, 0}, {0, 0, 1, 1}}},
      {{{1, 1, -1, 1}, {-1, 1, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, -1}}},
      {{{1, 1, 1, -1}, {-1, 1, 1, 1}, {1, 0, 0, 1}, {0, 1, -1, 0}}},
  }};
  std::vector<Ray> rays;
  std::vector<Basis> bases;
  for (const auto& row : printed) {
    Basis b;
    for (const auto& v : row) {
      Ray r = Ray::of({v[0], v[1], v[2], v[3]});
      auto it = std::find(rays.begin(), rays.end(), r);
      if (it == rays.end()) {
        rays.push_back(r);
        it = rays.end() - 1;
      }
      b.ray_ids.push_back(static_cast<RayId>(it - rays.begin()));
    }
    std::sort(b.ray_ids.begin(), b.ray_ids.end());
    bases.push_back(std::move(b));
  }
  CatalogEntry e{"ceg18", RaySet(std::move(rays)), std::move(bases),
                 "18 rays in 9 complete bases, every ray in exactly two of them; "
                 "uncolorable by parity"};
  verify(e.ray_set.size() == 18, "ceg18 ray count");
  verify(e.declared_bases->size() == 9, "ceg18 basis count");
  verify_declared_bases(e);
  return e;
}

CatalogEntry make_peres24() {
  std::vector<Ray> rays;
  for (int nonzero : {1, 2, 4}) {
    auto family = sign_pattern_family(nonzero);
    rays.insert(rays.end(), family.begin(), family.end());
  }
  CatalogEntry e{"peres24", RaySet(std::move(rays)), std::nullopt,
                 "tesseract center to 8 cube centers (4 rays), 24 square centers (12), "
                 "16 vertices (8), opposite directions identified"};
  verify(e.ray_set.size() == 24, "peres24 ray count");
  for (const Ray& r : ceg18().ray_set) {
    verify(e.ray_set.contains(r), "peres24 must contain ceg18");
  }
  return e;
}

CatalogEntry make_hardy_rays() {
  CatalogEntry e{"hardy16", RaySet(sign_pattern_family(3)), std::nullopt,
                 "tesseract center to the 32 edge centers, opposite directions identified; "
                 "all entangled two-qubit states"};
  verify(e.ray_set.size() == 16, "hardy ray count");
  verify(e.ray_set.contains(Ray::of({1, -1, -1, 0})), "hardy rays contain (1,-1,-1,0)");
  for (const Ray& r : e.ray_set) {
    verify(!factorize(r).has_value(), "hardy rays are entangled");
    verify(!peres24().ray_set.contains(r), "hardy rays are disjoint from peres24");
  }
  return e;
}

}  // namespace

const CatalogEntry& ceg18() {
  static const CatalogEntry entry = make_ceg18();
  return entry;
}

const CatalogEntry& peres24() {
  static const CatalogEntry entry = make_peres24();
  return entry;
}

const CatalogEntry& hardy_rays() {
  static const CatalogEntry entry = make_hardy_rays();
  return entry;
}

std::vector<std::string> catalog_keys() { return {"ceg18", "peres24", "hardy16"}; }

const CatalogEntry& catalog_entry(std::string_view key) {
  if (key == "ceg18") return ceg18();
  if (key == "peres24") return peres24();
  if (key == "hardy16") return hardy_rays();
  throw Error(ErrorKind::UnknownKey, "no catalog set named '" + std::string(key) + "'");
}

std::vector<std::string> state_keys() { return {"singlet", "hardy", "phi-xx"}; }

State state(std::string_view key) {
  if (key == "singlet") return State(Ray::of({0, 1, -1, 0}));
  if (key == "hardy") return State(Ray::of({1, -1, -1, 0}));
  if (key == "phi-xx") return State(Ray::of({1, 1, 1, 1}));
  throw Error(ErrorKind::UnknownKey, "no state named '" + std::string(key) + "'");
}

}  // namespace bks
