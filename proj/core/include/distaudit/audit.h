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

#ifndef DISTAUDIT_AUDIT_H_
#define DISTAUDIT_AUDIT_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "distaudit/config.h"
#include "distaudit/fairness.h"
#include "distaudit/justice.h"
#include "distaudit/population.h"

namespace distaudit {

// A group measure with its verdict and the configured disparity.
struct GroupAssessment {
  GroupMeasureTable table;
  FairnessVerdict verdict;
  std::string reported_disparity_name;
  // Absent when the configured disparity is undefined for this table (a
  // max-ratio over a zero value); a warning explains why.
  std::optional<double> reported_disparity;
};

// Contrast-only results of the naive group-level operationalizations.
struct NaiveBaselines {
  std::optional<std::map<std::string, bool>> sufficientarian_group_check;
  std::optional<naive::WorstGroup> maximin_worst_group;
};

struct AuditReport {
  TheorySpec theory = TheorySpec::Egalitarian();
  AuditConfig config;
  std::size_t records_total = 0;
  std::size_t records_excluded = 0;
  std::map<std::string, std::size_t> group_sizes;
  JusticeVerdict justice;
  std::vector<GroupAssessment> fairness;
  std::optional<NaiveBaselines> naive;
  std::vector<std::string> warnings;

  // Justice verdict passes and every fairness verdict passes. Naive
  // baselines never contribute.
  bool Passes() const;
};

// Both evaluation tracks on one population: deserving records are kept,
// justice is evaluated over individuals and every group measure of the
// theory is checked for structural injustice.
AuditReport Audit(const Population& population, const TheorySpec& theory,
                  const AuditConfig& config);

}  // namespace distaudit

#endif  // DISTAUDIT_AUDIT_H_
