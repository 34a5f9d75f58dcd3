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

#ifndef BKS_REPORT_HPP
#define BKS_REPORT_HPP

#include <string>

#include "json.hpp"

#include "bks/catalog.hpp"
#include "bks/coloring.hpp"
#include "bks/critical.hpp"
#include "bks/quantum.hpp"

namespace bks {

using Json = nlohmann::ordered_json;

/// "fnv1a64:<16 hex digits>" over the canonical text form of the set.
std::string fingerprint(const RaySet& set);

Json to_json(const RaySet& set);
Json to_json(const CatalogEntry& entry);
Json to_json(const OrthogonalityGraph& g, const RaySet& set);
Json to_json(const std::vector<Basis>& bases, const RaySet& set);

Json to_json(const ConstraintSystem& cs, const ColoringResult& result,
             const std::optional<ParityCertificate>& cert);
Json to_json(const ConstraintSystem& cs, const ParityCertificate& cert);
Json to_json(const ConstraintSystem& cs, const Assignment& a);
Json to_json(const ConstraintSystem& cs, const PropagationResult& r);

Json to_json(const Census& census);
Json to_json(const ReducedSystem& r, const RaySet& parent, const ColoringResult& color,
             const std::optional<ParityCertificate>& cert);
Json to_json(const HardyRecord& record);

/// "(0,0,0,1) = 0" per ray, in id order; unassigned rays are skipped.
std::string assignment_text(const ConstraintSystem& cs, const Assignment& a);
/// One selected constraint per line: "#k (r1) (r2) ...".
std::string certificate_text(const ConstraintSystem& cs, const ParityCertificate& cert);
/// "each ray covered 2x", or a breakdown when coverage is uneven.
std::string coverage_summary(const ConstraintSystem& cs, const ParityCertificate& cert);
/// "(r1) (r2) ..." for the members of constraint k.
std::string constraint_text(const ConstraintSystem& cs, std::size_t k);
std::string propagation_text(const ConstraintSystem& cs, const PropagationResult& r);
std::string census_text(const Census& census);

}  // namespace bks

#endif  // BKS_REPORT_HPP
