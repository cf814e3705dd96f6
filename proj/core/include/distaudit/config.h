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

#ifndef DISTAUDIT_CONFIG_H_
#define DISTAUDIT_CONFIG_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace distaudit {

enum class TheoryKind { kEgalitarian, kSufficientarian, kMaximin };

// Egalitarian and sufficientarian fulfilment can be read off the actual
// distribution. Maximin needs a comparison against alternatives.
enum class TheoryType { kCriterion, kOptimization };

// Which theory of distributive justice the audited system should follow,
// with its parameters. Construct through the named factories; they validate.
class TheorySpec {
 public:
  static constexpr double kDefaultTailFraction = 0.05;

  static TheorySpec Egalitarian();
  // Throws kInvalidTheory unless `threshold` is finite.
  static TheorySpec Sufficientarian(double threshold);
  // Throws kInvalidFraction unless 0 < tail_fraction <= 1.
  static TheorySpec Maximin(double tail_fraction = kDefaultTailFraction);

  TheoryKind kind() const { return kind_; }
  TheoryType type() const {
    return kind_ == TheoryKind::kMaximin ? TheoryType::kOptimization
                                         : TheoryType::kCriterion;
  }
  // Set for sufficientarian specs only.
  std::optional<double> threshold() const { return threshold_; }
  // Set for maximin specs only.
  std::optional<double> tail_fraction() const { return tail_fraction_; }

  friend bool operator==(const TheorySpec&, const TheorySpec&) = default;

 private:
  TheorySpec() = default;

  TheoryKind kind_ = TheoryKind::kEgalitarian;
  std::optional<double> threshold_;
  std::optional<double> tail_fraction_;
};

enum class JusticeMetricChoice { kGini, kVariance, kRangeDifference, kRangeRatio };

enum class DisparityChoice { kMaxGap, kMaxRatio, kVariance };

// How deviations are required to be spread across groups: equal per-group
// measures, or every group's measure above a floor.
enum class FairnessPattern { kEgalitarian, kLevelingUp };

// Maximin has two group-level measures. This picks the one used as the
// fairness objective during candidate selection; audits report both.
enum class MaximinFairnessMeasure { kGroupTailMeans, kMembershipRates };

enum class Direction { kMinimize, kMaximize };

struct AuditConfig {
  // Absolute tolerance for "equal", used by the exact justice criterion and
  // by the max-gap fairness criterion.
  double equality_tolerance = 0.0;
  // Egalitarian theories only.
  JusticeMetricChoice justice_metric = JusticeMetricChoice::kVariance;
  // Reported alongside the max-gap verdict and used as the selection
  // objective.
  DisparityChoice disparity = DisparityChoice::kMaxGap;
  FairnessPattern pattern = FairnessPattern::kEgalitarian;
  std::optional<double> leveling_up_threshold;
  std::optional<double> approximate_justice_threshold;
  MaximinFairnessMeasure maximin_measure =
      MaximinFairnessMeasure::kGroupTailMeans;
  // Groups smaller than this produce a report warning. 1 disables it.
  std::size_t min_group_size = 1;
  // Labels that must be present after filtering; a missing one is an
  // empty-group error.
  std::vector<std::string> expected_groups;
  // Adds the naive group-level baselines to reports. Never affects verdicts.
  bool include_naive = false;
  // Candidate selection: largest admissible disparity for a candidate to
  // pass the fairness constraint. Falls back to equality_tolerance.
  std::optional<double> fairness_constraint;

  // Throws kInvalidConfig.
  void Validate() const;
};

std::string_view ToString(TheoryKind kind);
std::string_view ToString(JusticeMetricChoice choice);
std::string_view ToString(DisparityChoice choice);
std::string_view ToString(FairnessPattern pattern);
std::string_view ToString(MaximinFairnessMeasure measure);
std::string_view ToString(Direction direction);

// Parse the command-line spellings ("egalitarian", "range-diff", "max-gap",
// "leveling-up", ...). Return nullopt for unknown names.
std::optional<TheoryKind> ParseTheoryKind(std::string_view name);
std::optional<JusticeMetricChoice> ParseJusticeMetric(std::string_view name);
std::optional<DisparityChoice> ParseDisparity(std::string_view name);
std::optional<FairnessPattern> ParsePattern(std::string_view name);
std::optional<MaximinFairnessMeasure> ParseMaximinMeasure(
    std::string_view name);

}  // namespace distaudit

#endif  // DISTAUDIT_CONFIG_H_
