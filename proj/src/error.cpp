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

#include "bks/error.hpp"

namespace bks {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector:
      return "ZeroVector";
    case ErrorKind::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorKind::UnknownRayId:
      return "UnknownRayId";
    case ErrorKind::TooManyRays:
      return "TooManyRays";
    case ErrorKind::ImpossiblePostselection:
      return "ImpossiblePostselection";
    case ErrorKind::ConditionHasZeroProbability:
      return "ConditionHasZeroProbability";
    case ErrorKind::NotFactorizable:
      return "NotFactorizable";
    case ErrorKind::InvalidEvent:
      return "InvalidEvent";
    case ErrorKind::UnknownKey:
      return "UnknownKey";
    case ErrorKind::ParseError:
      return "ParseError";
    case ErrorKind::DuplicateRay:
      return "DuplicateRay";
    case ErrorKind::MixedDimension:
      return "MixedDimension";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

bool Error::is_domain_error() const noexcept {
  switch (kind_) {
    case ErrorKind::ZeroVector:
    case ErrorKind::ImpossiblePostselection:
    case ErrorKind::ConditionHasZeroProbability:
    case ErrorKind::NotFactorizable:
      return true;
    default:
      return false;
  }
}

}  // namespace bks
