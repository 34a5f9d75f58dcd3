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

#ifndef BKS_CATALOG_HPP
#define BKS_CATALOG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bks/quantum.hpp"
#include "bks/ray.hpp"

namespace bks {

struct CatalogEntry {
  std::string key;
  RaySet ray_set;
  std::optional<std::vector<Basis>> declared_bases;
  std::string notes;
};

/// The 18-ray four-dimensional uncolorable set with its nine declared bases.
/// Ray ids follow first appearance in the declared bases.
const CatalogEntry& ceg18();

/// The 24 tesseract directions: 4 cube-face centers, 12 square centers and
/// 8 vertex pairs, generated from sign/position patterns. Each family is
/// sorted canonically.
const CatalogEntry& peres24();

/// The 16 edge-center directions of the tesseract: one zero component and
/// three +-1 entries, up to sign.
const CatalogEntry& hardy_rays();

/// Keys accepted by catalog_entry(), in listing order.
std::vector<std::string> catalog_keys();
/// Throws Error(UnknownKey).
const CatalogEntry& catalog_entry(std::string_view key);

/// singlet (0,1,-1,0), hardy (1,-1,-1,0), phi-xx (1,1,1,1).
std::vector<std::string> state_keys();
/// Throws Error(UnknownKey).
State state(std::string_view key);

}  // namespace bks

#endif  // BKS_CATALOG_HPP
