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

#include "distaudit/config.h"

#include <cmath>
#include <string>

#include "distaudit/error.h"

namespace distaudit {

TheorySpec TheorySpec::Egalitarian() { return TheorySpec(); }

TheorySpec TheorySpec::Sufficientarian(double threshold) {
  if (!std::isfinite(threshold)) {
    throw AuditError(ErrorCode::kInvalidTheory,
                     "sufficientarian threshold must be finite");
  }
  TheorySpec spec;
  spec.kind_ = TheoryKind::kSufficientarian;
  spec.threshold_ = threshold;
  return spec;
}

TheorySpec TheorySpec::Maximin(double tail_fraction) {
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0)) {
    throw AuditError(ErrorCode::kInvalidFraction,
                     "maximin tail fraction must lie in (0, 1], got " +
                         std::to_string(tail_fraction));
  }
  TheorySpec spec;
  spec.kind_ = TheoryKind::kMaximin;
  spec.tail_fraction_ = tail_fraction;
  return spec;
}

void AuditConfig::Validate() const {
  if (!(equality_tolerance >= 0.0) || !std::isfinite(equality_tolerance)) {
    throw AuditError(ErrorCode::kInvalidConfig,
                     "equality tolerance must be a finite value >= 0");
  }
  if (leveling_up_threshold && !std::isfinite(*leveling_up_threshold)) {
    throw AuditError(ErrorCode::kInvalidConfig,
                     "leveling-up threshold must be finite");
  }
  if (approximate_justice_threshold &&
      !std::isfinite(*approximate_justice_threshold)) {
    throw AuditError(ErrorCode::kInvalidConfig,
                     "approximate justice threshold must be finite");
  }
  if (pattern == FairnessPattern::kLevelingUp && !leveling_up_threshold) {
    throw AuditError(ErrorCode::kInvalidConfig,
                     "the leveling-up pattern needs a leveling-up threshold");
  }
  if (fairness_constraint && !(*fairness_constraint >= 0.0 &&
                              std::isfinite(*fairness_constraint))) {
    throw AuditError(ErrorCode::kInvalidConfig,
                     "fairness constraint must be a finite value >= 0");
  }
  if (min_group_size == 0) {
    throw AuditError(ErrorCode::kInvalidConfig, "min group size must be >= 1");
  }
}

std::string_view ToString(TheoryKind kind) {
  switch (kind) {
    case TheoryKind::kEgalitarian: return "egalitarian";
    case TheoryKind::kSufficientarian: return "sufficientarian";
    case TheoryKind::kMaximin: return "maximin";
  }
  return "unknown";
}

std::string_view ToString(JusticeMetricChoice choice) {
  switch (choice) {
    case JusticeMetricChoice::kGini: return "gini";
    case JusticeMetricChoice::kVariance: return "variance";
    case JusticeMetricChoice::kRangeDifference: return "range-diff";
    case JusticeMetricChoice::kRangeRatio: return "range-ratio";
  }
  return "unknown";
}

std::string_view ToString(DisparityChoice choice) {
  switch (choice) {
    case DisparityChoice::kMaxGap: return "max-gap";
    case DisparityChoice::kMaxRatio: return "max-ratio";
    case DisparityChoice::kVariance: return "variance";
  }
  return "unknown";
}

std::string_view ToString(FairnessPattern pattern) {
  switch (pattern) {
    case FairnessPattern::kEgalitarian: return "egalitarian";
    case FairnessPattern::kLevelingUp: return "leveling-up";
  }
  return "unknown";
}

std::string_view ToString(MaximinFairnessMeasure measure) {
  switch (measure) {
    case MaximinFairnessMeasure::kGroupTailMeans: return "tail-means";
    case MaximinFairnessMeasure::kMembershipRates: return "membership-rates";
  }
  return "unknown";
}

std::string_view ToString(Direction direction) {
  return direction == Direction::kMinimize ? "minimize" : "maximize";
}

std::optional<TheoryKind> ParseTheoryKind(std::string_view name) {
  for (auto kind : {TheoryKind::kEgalitarian, TheoryKind::kSufficientarian,
                    TheoryKind::kMaximin}) {
    if (ToString(kind) == name) return kind;
  }
  return std::nullopt;
}

std::optional<JusticeMetricChoice> ParseJusticeMetric(std::string_view name) {
  for (auto choice :
       {JusticeMetricChoice::kGini, JusticeMetricChoice::kVariance,
        JusticeMetricChoice::kRangeDifference,
        JusticeMetricChoice::kRangeRatio}) {
    if (ToString(choice) == name) return choice;
  }
  return std::nullopt;
}

std::optional<DisparityChoice> ParseDisparity(std::string_view name) {
  for (auto choice : {DisparityChoice::kMaxGap, DisparityChoice::kMaxRatio,
                      DisparityChoice::kVariance}) {
    if (ToString(choice) == name) return choice;
  }
  return std::nullopt;
}

std::optional<FairnessPattern> ParsePattern(std::string_view name) {
  for (auto pattern :
       {FairnessPattern::kEgalitarian, FairnessPattern::kLevelingUp}) {
    if (ToString(pattern) == name) return pattern;
  }
  return std::nullopt;
}

std::optional<MaximinFairnessMeasure> ParseMaximinMeasure(
    std::string_view name) {
  for (auto measure : {MaximinFairnessMeasure::kGroupTailMeans,
                       MaximinFairnessMeasure::kMembershipRates}) {
    if (ToString(measure) == name) return measure;
  }
  return std::nullopt;
}

}  // namespace distaudit
