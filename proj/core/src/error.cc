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

#include "distaudit/error.h"

#include <string>

namespace distaudit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "empty_input";
    case ErrorCode::kDuplicateId: return "duplicate_id";
    case ErrorCode::kNonFiniteUtility: return "non_finite_utility";
    case ErrorCode::kEmptyAfterFilter: return "empty_after_filter";
    case ErrorCode::kEmptyGroup: return "empty_group";
    case ErrorCode::kNegativeValues: return "negative_values";
    case ErrorCode::kZeroMean: return "zero_mean";
    case ErrorCode::kNonPositiveMinimum: return "non_positive_minimum";
    case ErrorCode::kNonPositiveValues: return "non_positive_values";
    case ErrorCode::kInvalidFraction: return "invalid_fraction";
    case ErrorCode::kInvalidTheory: return "invalid_theory";
    case ErrorCode::kInvalidConfig: return "invalid_config";
    case ErrorCode::kOptimizationTypeTheory: return "optimization_type_theory";
    case ErrorCode::kNoFeasibleCandidate: return "no_feasible_candidate";
    case ErrorCode::kDuplicateCandidate: return "duplicate_candidate";
    case ErrorCode::kMissingHeader: return "missing_header";
    case ErrorCode::kBadRow: return "bad_row";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

AuditError::AuditError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace distaudit
