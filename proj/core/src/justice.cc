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

#include "distaudit/justice.h"

#include <algorithm>
#include <vector>

#include "distaudit/error.h"
#include "distaudit/metrics.h"

namespace distaudit {

bool JusticeVerdict::Passes() const {
  if (approximate_holds) return *approximate_holds;
  if (criterion_holds) return *criterion_holds;
  return true;
}

bool CheckJusticeCriterion(const Population& population,
                           const TheorySpec& theory, double tolerance) {
  const std::vector<double> utilities = population.Utilities();
  switch (theory.kind()) {
    case TheoryKind::kEgalitarian:
      return RangeDifference(utilities) <= tolerance;
    case TheoryKind::kSufficientarian: {
      const double t = *theory.threshold();
      return std::all_of(utilities.begin(), utilities.end(),
                         [t](double u) { return u > t; });
    }
    case TheoryKind::kMaximin:
      break;
  }
  throw AuditError(ErrorCode::kOptimizationTypeTheory,
                   "maximin has no criterion; compare candidates on its "
                   "metric instead");
}

MetricValue JusticeMetric(const Population& population,
                          const TheorySpec& theory, const AuditConfig& config) {
  const std::vector<double> utilities = population.Utilities();
  switch (theory.kind()) {
    case TheoryKind::kEgalitarian:
      switch (config.justice_metric) {
        case JusticeMetricChoice::kGini:
          return {"gini", Gini(utilities), Direction::kMinimize};
        case JusticeMetricChoice::kVariance:
          return {"variance", Variance(utilities), Direction::kMinimize};
        case JusticeMetricChoice::kRangeDifference:
          return {"range_difference", RangeDifference(utilities),
                  Direction::kMinimize};
        case JusticeMetricChoice::kRangeRatio:
          return {"range_ratio", RangeRatio(utilities), Direction::kMinimize};
      }
      break;
    case TheoryKind::kSufficientarian:
      return {"share_above_threshold",
              ShareAbove(utilities, *theory.threshold()),
              Direction::kMaximize};
    case TheoryKind::kMaximin:
      return {"worst_off_tail_mean",
              TailMean(utilities, *theory.tail_fraction()),
              Direction::kMaximize};
  }
  throw AuditError(ErrorCode::kInvalidConfig, "unknown justice metric");
}

bool ApproximateCriterion(double metric_value, Direction direction,
                          double threshold) {
  return direction == Direction::kMinimize ? metric_value < threshold
                                           : metric_value > threshold;
}

JusticeVerdict EvaluateJustice(const Population& population,
                               const TheorySpec& theory,
                               const AuditConfig& config) {
  JusticeVerdict verdict{.theory = theory};
  if (theory.type() == TheoryType::kCriterion) {
    verdict.criterion_holds =
        CheckJusticeCriterion(population, theory, config.equality_tolerance);
  }
  verdict.metric = JusticeMetric(population, theory, config);
  if (config.approximate_justice_threshold) {
    verdict.approximate_holds =
        ApproximateCriterion(verdict.metric.value, verdict.metric.direction,
                             *config.approximate_justice_threshold);
  }
  return verdict;
}

}  // namespace distaudit
