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

#ifndef DISTAUDIT_FAIRNESS_H_
#define DISTAUDIT_FAIRNESS_H_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distaudit/config.h"
#include "distaudit/population.h"

namespace distaudit {

// One measure evaluated per group, e.g. mean utility or the share above a
// threshold. Structural injustice shows up as an unequal (or too low)
// measure across groups.
struct GroupMeasureTable {
  std::string measure_name;
  std::map<std::string, double> per_group;
  TheorySpec basis_theory = TheorySpec::Egalitarian();
  // False for measures where a larger value means worse off (membership in
  // the worst-off tail). Leveling up is only meaningful when true.
  bool higher_is_better = true;
};

// Per-group mean utility, E(U | group).
GroupMeasureTable EgalitarianGroupMeasures(const GroupedPopulation& groups);

// Per-group share strictly above `threshold`, i.e. E(I(U > t) | group).
GroupMeasureTable SufficientarianGroupMeasures(const GroupedPopulation& groups,
                                               double threshold);

// Selects the global worst-off set of TailSize(q, n) members, ordered by
// (utility, id), and reports for each group the fraction of its members in
// that set.
GroupMeasureTable MaximinMembershipRates(const GroupedPopulation& groups,
                                         double tail_fraction);

// Per-group worst-off tail mean, each group's tail taken independently.
GroupMeasureTable MaximinGroupTailMeans(const GroupedPopulation& groups,
                                        double tail_fraction);

// Spread of a table's per-group values: max - min, max / min (throws
// kNonPositiveValues unless all > 0), or population variance.
double Disparity(const GroupMeasureTable& table, DisparityChoice kind);

using GroupPair = std::pair<std::string, std::string>;

struct FairnessVerdict {
  std::string measure_name;
  FairnessPattern pattern = FairnessPattern::kEgalitarian;
  // max-gap disparity <= tolerance, whatever disparity is configured.
  bool criterion_holds = false;
  std::string disparity_name = "max_gap";
  double disparity_value = 0.0;
  // |value(first) - value(second)| for every unordered pair, first < second.
  std::map<GroupPair, double> pairwise_gaps;
  // Per-group "measure > t_lu"; set when a leveling-up threshold applies.
  std::optional<std::map<std::string, bool>> leveling_up;

  // Under the leveling-up pattern every group must clear the floor;
  // otherwise the equality criterion decides.
  bool Passes() const;
};

// Equality criterion M(a) = M(b) for all groups, within `tolerance`. A single
// group holds vacuously.
FairnessVerdict FairnessCriterion(const GroupMeasureTable& table,
                                  double tolerance);

// Strict per-group floor check, measure > floor.
std::map<std::string, bool> LevelingUpCheck(const GroupMeasureTable& table,
                                            double floor);

bool AllGroupsPass(const std::map<std::string, bool>& checks);

// Equality criterion plus, when a leveling-up threshold is configured and
// the measure is higher-is-better, the leveling-up check. The verdict's
// pattern is leveling-up only if both the configuration asks for it and the
// measure supports it.
FairnessVerdict EvaluateFairness(const GroupMeasureTable& table,
                                 const AuditConfig& config);

// Group measures appropriate to a theory: group means (egalitarian), shares
// above t (sufficientarian), membership rates and tail means (maximin).
std::vector<GroupMeasureTable> GroupMeasuresForTheory(
    const GroupedPopulation& groups, const TheorySpec& theory);

// The single measure used as fairness objective when comparing candidates.
GroupMeasureTable PrimaryGroupMeasure(const GroupedPopulation& groups,
                                      const TheorySpec& theory,
                                      const AuditConfig& config);

// Individual-level theories transplanted verbatim to the group level. These
// are contrast baselines only: they are reported, never used for verdicts or
// selection constraints.
namespace naive {

// Per group: mean utility > threshold.
std::map<std::string, bool> SufficientarianGroupCheck(
    const GroupedPopulation& groups, double threshold);

struct WorstGroup {
  std::string group;
  double mean = 0.0;
};

// The group with the lowest mean utility. Ties go to the smallest label.
WorstGroup MaximinObjective(const GroupedPopulation& groups);

}  // namespace naive

}  // namespace distaudit

#endif  // DISTAUDIT_FAIRNESS_H_
