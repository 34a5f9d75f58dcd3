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

#include "bks/report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "bks/rayset_io.hpp"

namespace bks {

std::string fingerprint(const RaySet& set) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : format_rayset(set)) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

Json ray_strings(const RaySet& set, const std::vector<RayId>& ids) {
  Json out = Json::array();
  for (RayId id : ids) {
    out.push_back(set[id].str());
  }
  return out;
}

Json certificate_body(const ConstraintSystem& cs, const ParityCertificate& cert) {
  Json selected = Json::array();
  for (std::size_t k : cert.constraint_indices) {
    selected.push_back(
        Json{{"index", k}, {"rays", ray_strings(cs.universe(), cs.constraints()[k])}});
  }
  const auto cov = coverage(cs, cert);
  return Json{{"size", cert.constraint_indices.size()},
              {"constraints", selected},
              {"coverage", cov},
              {"summary", coverage_summary(cs, cert)}};
}

}  // namespace

Json to_json(const RaySet& set) {
  Json rays = Json::array();
  for (const Ray& r : set) {
    rays.push_back(r.str());
  }
  return Json{{"dim", set.dim()}, {"size", set.size()}, {"fingerprint", fingerprint(set)},
              {"rays", rays}};
}

Json to_json(const CatalogEntry& entry) {
  Json j{{"key", entry.key}, {"notes", entry.notes}, {"set", to_json(entry.ray_set)}};
  if (entry.declared_bases) {
    Json bases = Json::array();
    for (const auto& b : *entry.declared_bases) {
      bases.push_back(b.ray_ids);
    }
    j["declared_bases"] = bases;
  }
  return j;
}

Json to_json(const OrthogonalityGraph& g, const RaySet& set) {
  Json vertices = Json::array();
  for (RayId i = 0; i < set.size(); ++i) {
    vertices.push_back(Json{{"id", i}, {"ray", set[i].str()}, {"degree", g.degree(i)},
                            {"neighbors", g.adjacency[i]}});
  }
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) {
    edges.push_back(Json::array({a, b}));
  }
  return Json{{"rays", set.size()}, {"edges", edges.size()}, {"vertices", vertices},
              {"edge_list", edges}};
}

Json to_json(const std::vector<Basis>& bases, const RaySet& set) {
  Json list = Json::array();
  for (std::size_t k = 0; k < bases.size(); ++k) {
    list.push_back(Json{{"index", k}, {"ids", bases[k].ray_ids},
                        {"rays", ray_strings(set, bases[k].ray_ids)}});
  }
  return Json{{"count", bases.size()}, {"bases", list}};
}

Json to_json(const ConstraintSystem& cs, const ParityCertificate& cert) {
  return certificate_body(cs, cert);
}

Json to_json(const ConstraintSystem& cs, const Assignment& a) {
  Json values = Json::array();
  for (RayId id = 0; id < a.size(); ++id) {
    if (auto v = a.get(id)) {
      values.push_back(Json{{"id", id}, {"ray", cs.universe()[id].str()}, {"value", *v ? 1 : 0}});
    }
  }
  return values;
}

Json to_json(const ConstraintSystem& cs, const ColoringResult& result,
             const std::optional<ParityCertificate>& cert) {
  Json j{{"verdict", result.colorable ? "COLORABLE" : "UNCOLORABLE"},
         {"mode", to_string(cs.mode())},
         {"rays", cs.num_rays()},
         {"constraints", cs.constraints().size()},
         {"pairs", cs.pairs().size()},
         {"search_nodes", result.nodes}};
  j["witness"] = result.witness ? to_json(cs, *result.witness) : Json(nullptr);
  j["parity_certificate"] = cert ? certificate_body(cs, *cert) : Json(nullptr);
  return j;
}

Json to_json(const ConstraintSystem& cs, const PropagationResult& r) {
  Json trace = Json::array();
  for (const auto& f : r.trace) {
    const bool from_constraint = f.source == Forcing::Source::Constraint;
    Json rays = from_constraint
                    ? ray_strings(cs.universe(), cs.constraints()[f.index])
                    : ray_strings(cs.universe(), {cs.pairs()[f.index].first,
                                                  cs.pairs()[f.index].second});
    trace.push_back(Json{{"round", f.round},
                         {"ray", cs.universe()[f.ray].str()},
                         {"value", f.value ? 1 : 0},
                         {"source", from_constraint ? "constraint" : "pair"},
                         {"index", f.index},
                         {"source_rays", rays}});
  }
  Json j{{"verdict", r.contradiction() ? "CONTRADICTION" : "NO CONTRADICTION"},
         {"trace", trace}};
  if (r.conflict) {
    j["conflict"] = Json{{"kind", to_string(r.conflict->kind)},
                         {"index", r.conflict->index},
                         {"rays", ray_strings(cs.universe(), r.conflict->rays)}};
  } else {
    j["conflict"] = nullptr;
  }
  j["final"] = to_json(cs, r.assignment);
  return j;
}

Json to_json(const Census& census) {
  Json counts = Json::object();
  for (auto [size, n] : census.counts_by_size) {
    counts[std::to_string(size)] = n;
  }
  Json sets = Json::array();
  for (const auto& s : census.sets) {
    std::vector<Ray> rays;
    for (RayId id : s.ray_ids) {
      rays.push_back(census.parent[id]);
    }
    std::sort(rays.begin(), rays.end());
    Json ray_list = Json::array();
    for (const Ray& r : rays) {
      ray_list.push_back(r.str());
    }
    sets.push_back(Json{{"size", s.size()}, {"ids", s.ray_ids}, {"rays", ray_list}});
  }
  return Json{{"parent", Json{{"fingerprint", fingerprint(census.parent)},
                              {"dim", census.parent.dim()},
                              {"size", census.parent.size()}}},
              {"mode", to_string(census.mode)},
              {"size_min", census.size_min},
              {"size_max", census.size_max},
              {"counts", counts},
              {"total", census.sets.size()},
              {"sets", sets}};
}

Json to_json(const ReducedSystem& r, const RaySet& parent, const ColoringResult& color,
             const std::optional<ParityCertificate>& cert) {
  Json constraints = Json::array();
  for (const auto& c : r.constraints) {
    constraints.push_back(Json{{"source_basis", c.source_basis},
                               {"rays", ray_strings(parent, c.members)},
                               {"span_check", c.span_check}});
  }
  Json j{{"state_in_set", r.state_id.has_value()},
         {"removed", ray_strings(parent, r.removed)},
         {"kept", ray_strings(parent, r.kept)},
         {"dropped_bases", r.dropped_bases},
         {"constraints", constraints},
         {"all_span_checks", r.all_span_checks()},
         {"verdict", color.colorable ? "COLORABLE" : "UNCOLORABLE"}};
  j["parity_certificate"] = cert ? certificate_body(r.system, *cert) : Json(nullptr);
  return j;
}

Json to_json(const HardyRecord& rec) {
  Json forced = Json::array();
  for (const auto& lv : rec.forced) {
    forced.push_back(Json{{"particle", lv.event.particle},
                          {"direction", lv.event.direction.str()},
                          {"event", lv.event.str()},
                          {"value", lv.value ? 1 : 0}});
  }
  return Json{{"events", Json{{"x1", rec.x1.str()}, {"x2", rec.x2.str()},
                              {"z1", rec.z1.str()}, {"z2", rec.z2.str()}}},
              {"p34", to_string(rec.p34)},
              {"p35", to_string(rec.p35)},
              {"p36", to_string(rec.p36)},
              {"p37", to_string(rec.p37)},
              {"forced_local_values", forced}};
}

std::string assignment_text(const ConstraintSystem& cs, const Assignment& a) {
  std::string out;
  for (RayId id = 0; id < a.size(); ++id) {
    if (auto v = a.get(id)) {
      out += cs.universe()[id].str() + " = " + (*v ? "1" : "0") + "\n";
    }
  }
  return out;
}

std::string constraint_text(const ConstraintSystem& cs, std::size_t k) {
  std::string out;
  for (RayId id : cs.constraints().at(k)) {
    if (!out.empty()) {
      out += ' ';
    }
    out += cs.universe()[id].str();
  }
  return out;
}

std::string certificate_text(const ConstraintSystem& cs, const ParityCertificate& cert) {
  std::string out;
  for (std::size_t k : cert.constraint_indices) {
    out += "#" + std::to_string(k) + " " + constraint_text(cs, k) + "\n";
  }
  return out;
}

std::string coverage_summary(const ConstraintSystem& cs, const ParityCertificate& cert) {
  const auto cov = coverage(cs, cert);
  std::set<int> distinct(cov.begin(), cov.end());
  if (distinct.size() == 1) {
    return "each ray covered " + std::to_string(*distinct.begin()) + "x";
  }
  std::string out = "rays covered ";
  bool first = true;
  for (int c : distinct) {
    const auto n = std::count(cov.begin(), cov.end(), c);
    out += (first ? "" : ", ") + std::to_string(n) + " at " + std::to_string(c) + "x";
    first = false;
  }
  return out;
}

std::string propagation_text(const ConstraintSystem& cs, const PropagationResult& r) {
  std::ostringstream out;
  for (const auto& f : r.trace) {
    out << "round " << f.round << ": v" << cs.universe()[f.ray].str() << "=" << (f.value ? 1 : 0)
        << " via ";
    if (f.source == Forcing::Source::Constraint) {
      out << "constraint #" << f.index << " [" << constraint_text(cs, f.index) << "]";
    } else {
      const auto [a, b] = cs.pairs()[f.index];
      out << "pair #" << f.index << " [" << cs.universe()[a].str() << " "
          << cs.universe()[b].str() << "]";
    }
    out << "\n";
  }
  if (r.conflict) {
    const auto& c = *r.conflict;
    out << "CONTRADICTION: " << to_string(c.kind) << ": ";
    switch (c.kind) {
      case Conflict::Kind::PairClash:
        out << "v" << cs.universe()[c.rays[0]].str() << "=v" << cs.universe()[c.rays[1]].str()
            << "=1 on orthogonal pair #" << c.index;
        break;
      case Conflict::Kind::TwoOnes:
        out << "v" << cs.universe()[c.rays[0]].str() << "=v" << cs.universe()[c.rays[1]].str()
            << "=1 in constraint #" << c.index << " [" << constraint_text(cs, c.index) << "]";
        break;
      case Conflict::Kind::AllZero:
        out << "every member of constraint #" << c.index << " [" << constraint_text(cs, c.index)
            << "] is 0";
        break;
    }
    out << "\n";
  } else {
    out << "NO CONTRADICTION (fixpoint with " << r.assignment.count_set() << " of "
        << r.assignment.size() << " values fixed)\n";
  }
  return out.str();
}

std::string census_text(const Census& census) {
  std::ostringstream out;
  out << "critical sets of " << census.parent.size() << " rays (" << fingerprint(census.parent)
      << "), mode " << to_string(census.mode) << ", sizes " << census.size_min << ".."
      << census.size_max << "\n";
  out << "counts:";
  if (census.counts_by_size.empty()) {
    out << " none";
  }
  for (auto [size, n] : census.counts_by_size) {
    out << " " << size << ":" << n;
  }
  out << "\n";
  for (const auto& s : census.sets) {
    out << s.size() << " {";
    for (std::size_t i = 0; i < s.ray_ids.size(); ++i) {
      out << (i ? "," : "") << s.ray_ids[i];
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace bks
