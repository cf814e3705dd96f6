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

#include "distaudit/audit.h"

#include <algorithm>
#include <string>

#include "distaudit/error.h"

namespace distaudit {

bool AuditReport::Passes() const {
  return justice.Passes() &&
         std::all_of(fairness.begin(), fairness.end(),
                     [](const GroupAssessment& a) { return a.verdict.Passes(); });
}

AuditReport Audit(const Population& population, const TheorySpec& theory,
                  const AuditConfig& config) {
  config.Validate();
  AuditReport report{.theory = theory, .config = config};
  report.records_total = population.size();

  const Population deserving = FilterDeserving(population);
  report.records_excluded = population.size() - deserving.size();
  if (report.records_excluded > 0) {
    report.warnings.push_back(std::to_string(report.records_excluded) +
                              " non-deserving record(s) excluded");
  }

  const GroupedPopulation groups = GroupView(deserving, config.expected_groups);
  for (const auto& [label, slice] : groups.groups()) {
    report.group_sizes[label] = slice.size();
    if (slice.size() < config.min_group_size) {
      report.warnings.push_back("group '" + label + "' has " +
                                std::to_string(slice.size()) +
                                " member(s), below the minimum group size " +
                                std::to_string(config.min_group_size));
    }
  }

  report.justice = EvaluateJustice(deserving, theory, config);

  for (auto& table : GroupMeasuresForTheory(groups, theory)) {
    GroupAssessment assessment{
        .verdict = EvaluateFairness(table, config),
        .reported_disparity_name = std::string(ToString(config.disparity)),
    };
    try {
      assessment.reported_disparity = Disparity(table, config.disparity);
    } catch (const AuditError& e) {
      if (e.code() != ErrorCode::kNonPositiveValues) throw;
      report.warnings.push_back(e.what());
    }
    if (config.pattern == FairnessPattern::kLevelingUp &&
        !table.higher_is_better) {
      report.warnings.push_back("leveling-up does not apply to '" +
                                table.measure_name +
                                "' (lower is better); judged by equality");
    }
    assessment.table = std::move(table);
    report.fairness.push_back(std::move(assessment));
  }

  if (config.include_naive) {
    NaiveBaselines naive;
    if (theory.kind() == TheoryKind::kSufficientarian) {
      naive.sufficientarian_group_check =
          naive::SufficientarianGroupCheck(groups, *theory.threshold());
    }
    if (theory.kind() == TheoryKind::kMaximin) {
      naive.maximin_worst_group = naive::MaximinObjective(groups);
    }
    report.naive = std::move(naive);
  }
  return report;
}

}  // namespace distaudit
