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

#ifndef BKS_ERROR_HPP
#define BKS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bks {

enum class ErrorKind {
  ZeroVector,
  DimensionMismatch,
  UnknownRayId,
  TooManyRays,
  ImpossiblePostselection,
  ConditionHasZeroProbability,
  NotFactorizable,
  InvalidEvent,
  UnknownKey,
  ParseError,
  DuplicateRay,
  MixedDimension,
};

const char* to_string(ErrorKind kind);

/// The single exception type thrown by the library. `kind()` lets callers
/// (the CLI in particular) tell domain failures from input mistakes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

  /// True for failures where the inputs were well formed but the requested
  /// quantity does not exist (e.g. conditioning on a probability-zero event).
  bool is_domain_error() const noexcept;

 private:
  ErrorKind kind_;
};

}  // namespace bks

#endif  // BKS_ERROR_HPP
