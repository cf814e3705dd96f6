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

#ifndef DISTAUDIT_POPULATION_H_
#define DISTAUDIT_POPULATION_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace distaudit {

// One audited individual: a group label, the utility a decision conferred on
// them, and whether they belong to the equally-deserving set under audit.
struct PopulationRecord {
  std::string id;
  std::string group;
  double utility = 0.0;
  bool deserving = true;

  friend bool operator==(const PopulationRecord&,
                         const PopulationRecord&) = default;
};

// Validated, immutable, insertion-ordered set of records with unique ids and
// finite utilities.
class Population {
 public:
  // Throws AuditError: kEmptyInput, kDuplicateId, kNonFiniteUtility.
  static Population Build(std::vector<PopulationRecord> records);

  std::span<const PopulationRecord> records() const { return records_; }
  std::size_t size() const { return records_.size(); }

  // Utilities in record order.
  std::vector<double> Utilities() const;

  friend bool operator==(const Population&, const Population&) = default;

 private:
  explicit Population(std::vector<PopulationRecord> records)
      : records_(std::move(records)) {}

  std::vector<PopulationRecord> records_;
};

// Keeps the deserving records, order preserved. Throws kEmptyAfterFilter if
// none remain.
Population FilterDeserving(const Population& population);

// Members of one group, in source record order. ids[i] belongs to
// utilities[i].
struct GroupSlice {
  std::vector<std::string> ids;
  std::vector<double> utilities;

  std::size_t size() const { return utilities.size(); }
  bool empty() const { return utilities.empty(); }
};

// A population partitioned by group label. Labels iterate in ascending
// order. A slice can be empty only when the label was declared as expected
// but no record carries it.
class GroupedPopulation {
 public:
  // Every label in `expected_groups` gets a slice even if empty.
  static GroupedPopulation FromPopulation(
      const Population& population,
      std::span<const std::string> expected_groups = {});

  // Direct construction, mainly for tests and synthetic tables. Ids are
  // synthesized as "<label>#<index>". Slices may be empty.
  static GroupedPopulation FromUtilities(
      const std::map<std::string, std::vector<double>>& groups);

  const std::map<std::string, GroupSlice>& groups() const { return groups_; }
  std::size_t total_size() const { return total_size_; }
  std::size_t group_count() const { return groups_.size(); }

  // Throws kEmptyGroup naming the first empty slice, if any.
  void RequireNonEmptyGroups() const;

 private:
  std::map<std::string, GroupSlice> groups_;
  std::size_t total_size_ = 0;
};

inline GroupedPopulation GroupView(
    const Population& population,
    std::span<const std::string> expected_groups = {}) {
  return GroupedPopulation::FromPopulation(population, expected_groups);
}

}  // namespace distaudit

#endif  // DISTAUDIT_POPULATION_H_
