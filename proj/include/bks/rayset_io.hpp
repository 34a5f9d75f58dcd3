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

#ifndef BKS_RAYSET_IO_HPP
#define BKS_RAYSET_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "bks/ray.hpp"

namespace bks {

// Text format: one ray per line, whitespace separated integers or "p/q"
// rationals. '#' starts a comment. Blank lines are skipped. The first ray
// fixes the dimension. Rays are canonicalized on read, and two lines naming
// the same projective ray are an error.

RaySet parse_rayset(std::istream& in, std::string_view source = "<input>");
RaySet parse_rayset(std::string_view text, std::string_view source = "<input>");
RaySet parse_rayset_file(const std::filesystem::path& path);

/// One canonical ray per line. `comment`, if non-empty, is emitted first as
/// '#'-prefixed lines.
std::string format_rayset(const RaySet& set, std::string_view comment = {});

}  // namespace bks

#endif  // BKS_RAYSET_IO_HPP
