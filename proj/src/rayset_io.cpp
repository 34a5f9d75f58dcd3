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

#include "bks/rayset_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "bks/error.hpp"

namespace bks {

RaySet parse_rayset(std::istream& in, std::string_view source) {
  std::vector<Ray> rays;
  std::map<Ray, std::size_t> first_line;
  Eigen::Index dim = 0;
  std::string line;
  std::size_t line_no = 0;
  auto where = [&] { return std::string(source) + ":" + std::to_string(line_no); };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<Rational> values;
    std::string token;
    while (fields >> token) {
      try {
        values.push_back(parse_rational(token));
      } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, where() + ": " + e.what());
      }
    }
    if (values.empty()) {
      continue;
    }
    if (dim == 0) {
      if (values.size() < 2) {
        throw Error(ErrorKind::ParseError, where() + ": a ray needs at least 2 components");
      }
      dim = static_cast<Eigen::Index>(values.size());
    } else if (static_cast<Eigen::Index>(values.size()) != dim) {
      throw Error(ErrorKind::MixedDimension, where() + ": " + std::to_string(values.size()) +
                                                 " components, expected " + std::to_string(dim));
    }
    RationalVector raw(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      raw(i) = values[static_cast<std::size_t>(i)];
    }
    Ray ray = [&] {
      try {
        return Ray(raw);
      } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, where() + ": " + e.what());
      }
    }();
    auto [it, inserted] = first_line.emplace(ray, line_no);
    if (!inserted) {
      throw Error(ErrorKind::DuplicateRay, std::string(source) + ": ray " + ray.str() +
                                               " on lines " + std::to_string(it->second) +
                                               " and " + std::to_string(line_no));
    }
    rays.push_back(std::move(ray));
  }
  return RaySet(std::move(rays));
}

RaySet parse_rayset(std::string_view text, std::string_view source) {
  std::istringstream in{std::string(text)};
  return parse_rayset(in, source);
}

RaySet parse_rayset_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  }
  return parse_rayset(in, path.string());
}

std::string format_rayset(const RaySet& set, std::string_view comment) {
  std::string out;
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    std::string line;
    while (std::getline(lines, line)) {
      out += "# " + line + "\n";
    }
  }
  for (const Ray& r : set) {
    out += r.text();
    out += '\n';
  }
  return out;
}

}  // namespace bks
