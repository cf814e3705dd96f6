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

#include "distaudit/fairness.h"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "distaudit/error.h"
#include "distaudit/metrics.h"

namespace distaudit {
namespace {

std::vector<double> TableValues(const GroupMeasureTable& table) {
  std::vector<double> values;
  values.reserve(table.per_group.size());
  for (const auto& [label, value] : table.per_group) values.push_back(value);
  return values;
}

double MaxGap(const GroupMeasureTable& table) {
  const std::vector<double> values = TableValues(table);
  return values.empty() ? 0.0 : RangeDifference(values);
}

}  // namespace

GroupMeasureTable EgalitarianGroupMeasures(const GroupedPopulation& groups) {
  groups.RequireNonEmptyGroups();
  GroupMeasureTable table{.measure_name = "group_mean_utility"};
  for (const auto& [label, slice] : groups.groups()) {
    table.per_group[label] = Mean(slice.utilities);
  }
  return table;
}

GroupMeasureTable SufficientarianGroupMeasures(const GroupedPopulation& groups,
                                               double threshold) {
  groups.RequireNonEmptyGroups();
  GroupMeasureTable table{
      .measure_name = "group_share_above_threshold",
      .basis_theory = TheorySpec::Sufficientarian(threshold),
  };
  for (const auto& [label, slice] : groups.groups()) {
    table.per_group[label] = ShareAbove(slice.utilities, threshold);
  }
  return table;
}

GroupMeasureTable MaximinMembershipRates(const GroupedPopulation& groups,
                                         double tail_fraction) {
  groups.RequireNonEmptyGroups();
  GroupMeasureTable table{
      .measure_name = "worst_off_membership_rate",
      .basis_theory = TheorySpec::Maximin(tail_fraction),
      .higher_is_better = false,
  };

  struct Member {
    double utility;
    const std::string* id;
    const std::string* group;
  };
  std::vector<Member> members;
  members.reserve(groups.total_size());
  for (const auto& [label, slice] : groups.groups()) {
    for (std::size_t i = 0; i < slice.size(); ++i) {
      members.push_back({slice.utilities[i], &slice.ids[i], &label});
    }
  }
  const std::size_t k = TailSize(tail_fraction, members.size());
  std::partial_sort(members.begin(), members.begin() + static_cast<long>(k),
                    members.end(), [](const Member& a, const Member& b) {
                      return std::tie(a.utility, *a.id, *a.group) <
                             std::tie(b.utility, *b.id, *b.group);
                    });

  std::map<std::string, std::size_t> in_tail;
  for (std::size_t i = 0; i < k; ++i) ++in_tail[*members[i].group];
  for (const auto& [label, slice] : groups.groups()) {
    table.per_group[label] = static_cast<double>(in_tail[label]) /
                             static_cast<double>(slice.size());
  }
  return table;
}

GroupMeasureTable MaximinGroupTailMeans(const GroupedPopulation& groups,
                                        double tail_fraction) {
  groups.RequireNonEmptyGroups();
  GroupMeasureTable table{
      .measure_name = "group_worst_off_tail_mean",
      .basis_theory = TheorySpec::Maximin(tail_fraction),
  };
  for (const auto& [label, slice] : groups.groups()) {
    table.per_group[label] = TailMean(slice.utilities, tail_fraction);
  }
  return table;
}

double Disparity(const GroupMeasureTable& table, DisparityChoice kind) {
  if (table.per_group.empty()) {
    throw AuditError(ErrorCode::kEmptyGroup,
                     "disparity of a table without groups");
  }
  const std::vector<double> values = TableValues(table);
  switch (kind) {
    case DisparityChoice::kMaxGap:
      return RangeDifference(values);
    case DisparityChoice::kMaxRatio:
      for (const auto& [label, value] : table.per_group) {
        if (value <= 0.0) {
          throw AuditError(ErrorCode::kNonPositiveValues,
                           "max-ratio disparity of '" + table.measure_name +
                               "' is undefined: group '" + label +
                               "' has a non-positive value");
        }
      }
      return RangeRatio(values);
    case DisparityChoice::kVariance:
      return Variance(values);
  }
  throw AuditError(ErrorCode::kInvalidConfig, "unknown disparity");
}

bool FairnessVerdict::Passes() const {
  if (pattern == FairnessPattern::kLevelingUp && leveling_up) {
    return AllGroupsPass(*leveling_up);
  }
  return criterion_holds;
}

FairnessVerdict FairnessCriterion(const GroupMeasureTable& table,
                                  double tolerance) {
  FairnessVerdict verdict{.measure_name = table.measure_name};
  verdict.disparity_value = MaxGap(table);
  verdict.criterion_holds = verdict.disparity_value <= tolerance;
  for (auto a = table.per_group.begin(); a != table.per_group.end(); ++a) {
    for (auto b = std::next(a); b != table.per_group.end(); ++b) {
      verdict.pairwise_gaps[{a->first, b->first}] =
          std::abs(a->second - b->second);
    }
  }
  return verdict;
}

std::map<std::string, bool> LevelingUpCheck(const GroupMeasureTable& table,
                                            double floor) {
  std::map<std::string, bool> checks;
  for (const auto& [label, value] : table.per_group) {
    checks[label] = value > floor;
  }
  return checks;
}

bool AllGroupsPass(const std::map<std::string, bool>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const auto& entry) { return entry.second; });
}

FairnessVerdict EvaluateFairness(const GroupMeasureTable& table,
                                 const AuditConfig& config) {
  FairnessVerdict verdict = FairnessCriterion(table, config.equality_tolerance);
  if (config.leveling_up_threshold && table.higher_is_better) {
    verdict.leveling_up = LevelingUpCheck(table, *config.leveling_up_threshold);
    verdict.pattern = config.pattern;
  }
  return verdict;
}

std::vector<GroupMeasureTable> GroupMeasuresForTheory(
    const GroupedPopulation& groups, const TheorySpec& theory) {
  switch (theory.kind()) {
    case TheoryKind::kEgalitarian:
      return {EgalitarianGroupMeasures(groups)};
    case TheoryKind::kSufficientarian:
      return {SufficientarianGroupMeasures(groups, *theory.threshold())};
    case TheoryKind::kMaximin:
      return {MaximinMembershipRates(groups, *theory.tail_fraction()),
              MaximinGroupTailMeans(groups, *theory.tail_fraction())};
  }
  return {};
}

GroupMeasureTable PrimaryGroupMeasure(const GroupedPopulation& groups,
                                      const TheorySpec& theory,
                                      const AuditConfig& config) {
  if (theory.kind() == TheoryKind::kMaximin &&
      config.maximin_measure == MaximinFairnessMeasure::kMembershipRates) {
    return MaximinMembershipRates(groups, *theory.tail_fraction());
  }
  if (theory.kind() == TheoryKind::kMaximin) {
    return MaximinGroupTailMeans(groups, *theory.tail_fraction());
  }
  return GroupMeasuresForTheory(groups, theory).front();
}

namespace naive {

std::map<std::string, bool> SufficientarianGroupCheck(
    const GroupedPopulation& groups, double threshold) {
  groups.RequireNonEmptyGroups();
  std::map<std::string, bool> checks;
  for (const auto& [label, slice] : groups.groups()) {
    checks[label] = Mean(slice.utilities) > threshold;
  }
  return checks;
}

WorstGroup MaximinObjective(const GroupedPopulation& groups) {
  groups.RequireNonEmptyGroups();
  std::optional<WorstGroup> worst;
  for (const auto& [label, slice] : groups.groups()) {
    const double mean = Mean(slice.utilities);
    if (!worst || mean < worst->mean) worst = WorstGroup{label, mean};
  }
  return *worst;
}

}  // namespace naive

}  // namespace distaudit
