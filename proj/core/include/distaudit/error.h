/*
 * Copyright 2026 The distaudit Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DISTAUDIT_ERROR_H_
#define DISTAUDIT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace distaudit {

enum class ErrorCode {
  kEmptyInput,
  kDuplicateId,
  kNonFiniteUtility,
  kEmptyAfterFilter,
  kEmptyGroup,
  kNegativeValues,
  kZeroMean,
  kNonPositiveMinimum,
  kNonPositiveValues,
  kInvalidFraction,
  kInvalidTheory,
  kInvalidConfig,
  kOptimizationTypeTheory,
  kNoFeasibleCandidate,
  kDuplicateCandidate,
  kMissingHeader,
  kBadRow,
  kIo,
};

// Stable snake_case name of an error code, used in diagnostics.
std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. The code identifies the failure class;
// what() carries the human-readable context (row numbers, group labels,
// candidate names).
class AuditError : public std::runtime_error {
 public:
  AuditError(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace distaudit

#endif  // DISTAUDIT_ERROR_H_
