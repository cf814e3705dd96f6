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

#include "distaudit/population.h"

#include <cmath>
#include <string>
#include <unordered_set>
#include <utility>

#include "distaudit/error.h"

namespace distaudit {

Population Population::Build(std::vector<PopulationRecord> records) {
  if (records.empty()) {
    throw AuditError(ErrorCode::kEmptyInput, "population has no records");
  }
  std::unordered_set<std::string> seen;
  seen.reserve(records.size());
  for (const auto& record : records) {
    if (!std::isfinite(record.utility)) {
      throw AuditError(ErrorCode::kNonFiniteUtility,
                       "record '" + record.id + "' has a non-finite utility");
    }
    if (!seen.insert(record.id).second) {
      throw AuditError(ErrorCode::kDuplicateId,
                       "record id '" + record.id + "' appears more than once");
    }
  }
  return Population(std::move(records));
}

std::vector<double> Population::Utilities() const {
  std::vector<double> out;
  out.reserve(records_.size());
  for (const auto& record : records_) out.push_back(record.utility);
  return out;
}

Population FilterDeserving(const Population& population) {
  std::vector<PopulationRecord> kept;
  for (const auto& record : population.records()) {
    if (record.deserving) kept.push_back(record);
  }
  if (kept.empty()) {
    throw AuditError(ErrorCode::kEmptyAfterFilter,
                     "no deserving records remain out of " +
                         std::to_string(population.size()));
  }
  return Population::Build(std::move(kept));
}

GroupedPopulation GroupedPopulation::FromPopulation(
    const Population& population,
    std::span<const std::string> expected_groups) {
  GroupedPopulation out;
  for (const auto& label : expected_groups) out.groups_[label];
  for (const auto& record : population.records()) {
    auto& slice = out.groups_[record.group];
    slice.ids.push_back(record.id);
    slice.utilities.push_back(record.utility);
  }
  out.total_size_ = population.size();
  return out;
}

GroupedPopulation GroupedPopulation::FromUtilities(
    const std::map<std::string, std::vector<double>>& groups) {
  GroupedPopulation out;
  for (const auto& [label, utilities] : groups) {
    auto& slice = out.groups_[label];
    slice.utilities = utilities;
    slice.ids.reserve(utilities.size());
    for (std::size_t i = 0; i < utilities.size(); ++i) {
      if (!std::isfinite(utilities[i])) {
        throw AuditError(ErrorCode::kNonFiniteUtility,
                         "group '" + label + "' has a non-finite utility");
      }
      slice.ids.push_back(label + "#" + std::to_string(i));
    }
    out.total_size_ += utilities.size();
  }
  return out;
}

void GroupedPopulation::RequireNonEmptyGroups() const {
  if (groups_.empty()) {
    throw AuditError(ErrorCode::kEmptyGroup, "no groups to evaluate");
  }
  for (const auto& [label, slice] : groups_) {
    if (slice.empty()) {
      throw AuditError(ErrorCode::kEmptyGroup,
                       "group '" + label + "' has no members");
    }
  }
}

}  // namespace distaudit
