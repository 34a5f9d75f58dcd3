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

#include "bks/cli.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "bks/catalog.hpp"
#include "bks/coloring.hpp"
#include "bks/critical.hpp"
#include "bks/error.hpp"
#include "bks/quantum.hpp"
#include "bks/rayset_io.hpp"
#include "bks/report.hpp"

namespace bks::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputSource {
  std::string set_key;
  std::string file;

  RaySet load() const {
    if (set_key.empty() == file.empty()) {
      throw UsageError("give exactly one of --set <key> or --file <path>");
    }
    if (!set_key.empty()) {
      return catalog_entry(set_key).ray_set;
    }
    return parse_rayset_file(file);
  }
};

void add_input(CLI::App* cmd, InputSource& src) {
  cmd->add_option("--set", src.set_key, "catalog key (ceg18, peres24, hardy16)");
  cmd->add_option("--file", src.file, "ray-set file");
}

Semantics parse_mode(const std::string& text) {
  if (auto m = parse_semantics(text)) {
    return *m;
  }
  throw UsageError("unknown mode '" + text + "' (expected bases or bases+pairs)");
}

// A catalog key or an inline component list such as "1,-1,-1,0".
State parse_state(const std::string& text) {
  if (text.find_first_of(",0123456789") == std::string::npos) {
    return state(text);
  }
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  RaySet one = parse_rayset(spaced, "<state>");
  if (one.size() != 1) {
    throw UsageError("expected one state vector, got '" + text + "'");
  }
  return State(one[0]);
}

Ray parse_ray(const std::string& text) { return parse_state(text).ray; }

// "z1=-1", "x2=+1".
LocalEvent parse_event(const std::string& text) {
  if (text.size() < 4 || (text[0] != 'x' && text[0] != 'z') || (text[1] != '1' && text[1] != '2') ||
      text[2] != '=') {
    throw UsageError("bad event '" + text + "' (expected e.g. z1=-1 or x2=+1)");
  }
  const std::string outcome = text.substr(3);
  int value = 0;
  if (outcome == "+1" || outcome == "1") {
    value = 1;
  } else if (outcome == "-1") {
    value = -1;
  } else {
    throw UsageError("bad outcome in '" + text + "'");
  }
  return LocalEvent::along(text[1] - '0', text[0] == 'x' ? Axis::X : Axis::Z, value);
}

std::string system_size(const ConstraintSystem& cs) {
  std::string s = std::to_string(cs.num_rays()) + " rays, " +
                  std::to_string(cs.constraints().size()) + " bases";
  if (cs.mode() == Semantics::BasesAndPairs) {
    s += ", " + std::to_string(cs.pairs().size()) + " pairs";
  }
  return s;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void cmd_catalog_list(bool json, std::ostream& out) {
  if (json) {
    Json list = Json::array();
    for (const auto& key : catalog_keys()) {
      const auto& e = catalog_entry(key);
      list.push_back(Json{{"key", key}, {"size", e.ray_set.size()}, {"dim", e.ray_set.dim()},
                          {"notes", e.notes}});
    }
    Json states = Json::array();
    for (const auto& key : state_keys()) {
      states.push_back(Json{{"key", key}, {"ray", state(key).ray.str()}});
    }
    emit(out, Json{{"sets", list}, {"states", states}});
    return;
  }
  for (const auto& key : catalog_keys()) {
    const auto& e = catalog_entry(key);
    out << key << "\t" << e.ray_set.size() << " rays\tdim " << e.ray_set.dim() << "\t" << e.notes
        << "\n";
  }
  for (const auto& key : state_keys()) {
    out << key << "\tstate " << state(key).ray.str() << "\n";
  }
}

void cmd_catalog_show(const std::string& key, bool json, std::ostream& out) {
  const auto& e = catalog_entry(key);
  if (json) {
    emit(out, to_json(e));
    return;
  }
  out << format_rayset(e.ray_set, e.key + ": " + e.notes);
}

void cmd_graph(const RaySet& set, bool json, std::ostream& out) {
  const auto g = orthogonality_graph(set);
  if (json) {
    emit(out, to_json(g, set));
    return;
  }
  out << set.size() << " rays, " << g.edges().size() << " orthogonal pairs\n";
  for (RayId i = 0; i < set.size(); ++i) {
    out << i << " " << set[i].str() << " degree " << g.degree(i) << ":";
    for (RayId j : g.adjacency[i]) {
      out << " " << j;
    }
    out << "\n";
  }
}

void cmd_bases(const RaySet& set, bool json, std::ostream& out) {
  const auto bases = enumerate_bases(set);
  if (json) {
    emit(out, to_json(bases, set));
    return;
  }
  out << bases.size() << " bases\n";
  for (std::size_t k = 0; k < bases.size(); ++k) {
    out << "#" << k << " {";
    for (std::size_t i = 0; i < bases[k].ray_ids.size(); ++i) {
      out << (i ? "," : "") << bases[k].ray_ids[i];
    }
    out << "}";
    for (RayId id : bases[k].ray_ids) {
      out << " " << set[id].str();
    }
    out << "\n";
  }
}

void cmd_color(const RaySet& set, Semantics mode, bool json, std::ostream& out) {
  const auto cs = build_constraints(set, mode);
  const auto result = colorable(cs);
  const auto cert = parity_certificate(cs);
  if (json) {
    emit(out, to_json(cs, result, cert));
    return;
  }
  if (result.colorable) {
    out << "COLORABLE (" << system_size(cs) << "); witness:\n";
    out << assignment_text(cs, *result.witness);
    return;
  }
  out << "UNCOLORABLE (" << system_size(cs) << ")";
  if (cert) {
    out << "; parity certificate: " << cert->constraint_indices.size() << " bases, "
        << coverage_summary(cs, *cert) << "\n";
    out << certificate_text(cs, *cert);
  } else {
    out << "; no parity certificate\n";
  }
}

void cmd_parity(const RaySet& set, bool json, std::ostream& out) {
  const auto cs = build_constraints(set, Semantics::BasesOnly);
  const auto cert = parity_certificate(cs);
  if (json) {
    emit(out, Json{{"rays", cs.num_rays()},
                   {"bases", cs.constraints().size()},
                   {"certificate", cert ? to_json(cs, *cert) : Json(nullptr)}});
    return;
  }
  if (!cert) {
    out << "NO CERTIFICATE (" << system_size(cs) << ")\n";
    return;
  }
  out << "CERTIFICATE: " << cert->constraint_indices.size() << " of " << cs.constraints().size()
      << " bases, " << coverage_summary(cs, *cert) << "\n";
  out << certificate_text(cs, *cert);
}

void cmd_critical(const RaySet& set, const std::string& mode_text, std::size_t lo,
                  std::size_t hi, unsigned threads, bool json, std::ostream& out) {
  CensusOptions options{threads};
  if (mode_text != "both") {
    const auto census = enumerate_critical(set, parse_mode(mode_text), lo, hi, options);
    if (json) {
      emit(out, to_json(census));
    } else {
      out << census_text(census);
    }
    return;
  }
  const auto a = enumerate_critical(set, Semantics::BasesOnly, lo, hi, options);
  const auto b = enumerate_critical(set, Semantics::BasesAndPairs, lo, hi, options);
  const bool discrepancy = a.counts_by_size != b.counts_by_size || a.sets != b.sets;
  if (json) {
    emit(out, Json{{"discrepancy", discrepancy}, {"censuses", Json::array({to_json(a), to_json(b)})}});
    return;
  }
  out << census_text(a) << census_text(b);
  out << (discrepancy ? "DISCREPANCY between bases and bases+pairs\n"
                      : "bases and bases+pairs agree\n");
}

void cmd_reduce(const RaySet& set, const State& st, bool json, std::ostream& out) {
  const auto r = state_reduce(set, enumerate_bases(set), st);
  const auto color = colorable(r.system);
  const auto cert = parity_certificate(r.system);
  if (json) {
    emit(out, to_json(r, set, color, cert));
    return;
  }
  out << "state " << st.ray.str() << (r.state_id ? " (in set)" : " (not in set)") << "; removed "
      << r.removed.size() << " rays:";
  for (RayId id : r.removed) {
    out << " " << set[id].str();
  }
  out << "\n";
  out << r.constraints.size() << " constraints over " << r.kept.size() << " rays";
  if (!r.dropped_bases.empty()) {
    out << " (" << r.dropped_bases.size() << " bases dropped)";
  }
  out << ":\n";
  for (const auto& c : r.constraints) {
    std::string lhs;
    for (RayId id : c.members) {
      lhs += (lhs.empty() ? "v" : " + v") + set[id].str();
    }
    out << "  " << lhs << (c.span_check ? " = 1" : " <= 1") << "   [basis #" << c.source_basis
        << ", span check " << (c.span_check ? "ok" : "FAILED, exclusivity only") << "]\n";
  }
  out << (color.colorable ? "COLORABLE" : "UNCOLORABLE");
  if (cert) {
    out << "; parity certificate: " << cert->constraint_indices.size() << " constraints, "
        << coverage_summary(r.system, *cert);
  } else {
    out << "; no parity certificate";
  }
  out << "\n";
}

void cmd_hardy(const RaySet& set, const State& pre, const std::optional<State>& post,
               bool all_hardy, bool json, std::ostream& out) {
  if (!all_hardy) {
    const auto run = hardy_run(set, pre, post);
    if (json) {
      emit(out, to_json(run.system, run.propagation));
      return;
    }
    out << "seeded " << run.seed.count_set() << " values from pre " << pre.ray.str();
    if (post) {
      out << " and post " << post->ray.str();
    }
    out << ":\n" << assignment_text(run.system, run.seed);
    out << propagation_text(run.system, run.propagation);
    return;
  }
  // Carry the whole configuration to each catalogued Hardy direction by a
  // signed permutation of coordinates.
  Json results = Json::array();
  for (const Ray& target : hardy_rays().ray_set) {
    const auto g = find_symmetry(pre.ray, target);
    if (!g) {
      throw Error(ErrorKind::InvalidEvent, "no signed permutation maps " + pre.ray.str() +
                                               " to " + target.str());
    }
    const RaySet moved = apply_symmetry(*g, set);
    std::optional<State> moved_post;
    if (post) {
      moved_post = State(apply_symmetry(*g, post->ray));
    }
    const auto run = hardy_run(moved, State(target), moved_post);
    const auto& c = run.propagation.conflict;
    if (json) {
      results.push_back(Json{{"pre", target.str()},
                             {"post", moved_post ? Json(moved_post->ray.str()) : Json(nullptr)},
                             {"verdict", c ? "CONTRADICTION" : "NO CONTRADICTION"},
                             {"conflict", c ? Json(to_string(c->kind)) : Json(nullptr)}});
      continue;
    }
    out << target.str() << ": " << (c ? "CONTRADICTION" : "NO CONTRADICTION");
    if (c) {
      out << " (" << to_string(c->kind) << " on";
      for (RayId id : c->rays) {
        out << " " << moved[id].str();
      }
      out << ")";
    }
    out << "\n";
  }
  if (json) {
    emit(out, results);
  }
}

void cmd_prob(const State& st, const std::string& ray, const std::string& event,
              const std::string& given, bool json, std::ostream& out) {
  Rational p;
  std::string what;
  if (!ray.empty()) {
    if (!event.empty() || !given.empty()) {
      throw UsageError("--ray cannot be combined with --event/--given");
    }
    const Ray u = parse_ray(ray);
    p = born(st, u);
    what = "P(" + u.str() + ")";
  } else if (!event.empty()) {
    const LocalEvent a = parse_event(event);
    if (given.empty()) {
      p = probability(st, a);
      what = "P(" + a.str() + ")";
    } else {
      const LocalEvent g = parse_event(given);
      p = conditional_probability(st, a, g);
      what = "P(" + a.str() + " | " + g.str() + ")";
    }
  } else {
    throw UsageError("prob needs --ray or --event");
  }
  if (json) {
    emit(out, Json{{"state", st.ray.str()}, {"quantity", what}, {"value", to_string(p)}});
  } else {
    out << what << " = " << to_string(p) << "\n";
  }
}

void cmd_report(const State& pre, const State& post, bool json, std::ostream& out) {
  const auto rec = nonlocality_report(pre, post);
  if (json) {
    emit(out, to_json(rec));
    return;
  }
  out << "pre " << pre.ray.str() << ", post " << post.ray.str() << " = "
      << rec.x1.direction.str() << "(x)" << rec.x2.direction.str() << "\n";
  out << "p34 = P(" << rec.z1.str() << " | " << rec.x2.str() << ") = " << to_string(rec.p34)
      << "\n";
  out << "p35 = P(" << rec.z2.str() << " | " << rec.x1.str() << ") = " << to_string(rec.p35)
      << "\n";
  out << "p36 = P(" << rec.z1.str() << ", " << rec.z2.str() << ") = " << to_string(rec.p36)
      << "\n";
  out << "p37 = P(" << rec.x1.str() << ", " << rec.x2.str() << ") = " << to_string(rec.p37)
      << "\n";
  out << "forced local values:";
  for (const auto& lv : rec.forced) {
    out << " v" << lv.event.direction.str() << "^(" << lv.event.particle
        << ")=" << (lv.value ? 1 : 0);
  }
  out << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact workbench for Kochen-Specker sets and Hardy-type arguments", "bks"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "structured JSON output");

  std::function<void()> action;

  auto* catalog = app.add_subcommand("catalog", "list or show built-in ray sets");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "list catalog keys and named states");
  cat_list->add_flag("--json", json);
  std::string show_key;
  auto* cat_show = catalog->add_subcommand("show", "print a catalog set in ray-set format");
  cat_show->add_option("key", show_key)->required();
  cat_show->add_flag("--json", json);
  cat_list->callback([&] { action = [&] { cmd_catalog_list(json, out); }; });
  cat_show->callback([&] { action = [&] { cmd_catalog_show(show_key, json, out); }; });

  InputSource src;
  std::string mode_text = "bases";

  auto* graph = app.add_subcommand("graph", "orthogonality graph");
  add_input(graph, src);
  graph->add_flag("--json", json);
  graph->callback([&] { action = [&] { cmd_graph(src.load(), json, out); }; });

  auto* bases = app.add_subcommand("bases", "enumerate complete orthogonal bases");
  add_input(bases, src);
  bases->add_flag("--json", json);
  bases->callback([&] { action = [&] { cmd_bases(src.load(), json, out); }; });

  auto* color = app.add_subcommand("color", "decide 0/1 colorability");
  add_input(color, src);
  color->add_option("--mode", mode_text, "bases | bases+pairs");
  color->add_flag("--json", json);
  color->callback([&] { action = [&] { cmd_color(src.load(), parse_mode(mode_text), json, out); }; });

  auto* parity = app.add_subcommand("parity", "search for a GF(2) parity certificate");
  add_input(parity, src);
  parity->add_flag("--json", json);
  parity->callback([&] { action = [&] { cmd_parity(src.load(), json, out); }; });

  std::size_t lo = 1;
  std::size_t hi = kMaxCensusRays;
  unsigned threads = 1;
  auto* critical = app.add_subcommand("critical", "enumerate critical (minimal uncolorable) subsets");
  add_input(critical, src);
  critical->add_option("--mode", mode_text, "bases | bases+pairs | both");
  critical->add_option("--min", lo, "smallest size reported");
  critical->add_option("--max", hi, "largest size reported");
  critical->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
  critical->add_flag("--json", json);
  critical->callback(
      [&] { action = [&] { cmd_critical(src.load(), mode_text, lo, hi, threads, json, out); }; });

  std::string state_text;
  auto* reduce = app.add_subcommand("reduce", "condition the basis system on a prepared state");
  add_input(reduce, src);
  reduce->add_option("--state", state_text, "state key or components")->required();
  reduce->add_flag("--json", json);
  reduce->callback(
      [&] { action = [&] { cmd_reduce(src.load(), parse_state(state_text), json, out); }; });

  std::string pre_text;
  std::string post_text;
  bool all_hardy = false;
  auto* hardy = app.add_subcommand("hardy", "pre/postselection propagation argument");
  add_input(hardy, src);
  hardy->add_option("--pre", pre_text, "preselected state")->required();
  hardy->add_option("--post", post_text, "postselected state");
  hardy->add_flag("--all-hardy-rays", all_hardy,
                  "repeat for every catalogued Hardy direction via signed permutations");
  hardy->add_flag("--json", json);
  hardy->callback([&] {
    action = [&] {
      std::optional<State> post;
      if (!post_text.empty()) {
        post = parse_state(post_text);
      }
      cmd_hardy(src.load(), parse_state(pre_text), post, all_hardy, json, out);
    };
  });

  std::string ray_text;
  std::string event_text;
  std::string given_text;
  auto* prob = app.add_subcommand("prob", "exact Born probabilities");
  prob->add_option("--state", state_text, "state key or components")->required();
  prob->add_option("--ray", ray_text, "projector onto this ray");
  prob->add_option("--event", event_text, "local event, e.g. z1=-1");
  prob->add_option("--given", given_text, "conditioning local event, e.g. x2=+1");
  prob->add_flag("--json", json);
  prob->callback([&] {
    action = [&] {
      cmd_prob(parse_state(state_text), ray_text, event_text, given_text, json, out);
    };
  });

  auto* report = app.add_subcommand("report", "Hardy nonlocality probabilities");
  report->add_option("--pre", pre_text, "preselected state")->required();
  report->add_option("--post", post_text, "factorizable postselected state")->required();
  report->add_flag("--json", json);
  report->callback(
      [&] { action = [&] { cmd_report(parse_state(pre_text), parse_state(post_text), json, out); }; });

  std::vector<const char*> argv{"bks"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (!action) {
    err << app.help();
    return kExitUsage;
  }
  try {
    action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_domain_error() ? kExitDomain : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace bks::cli
