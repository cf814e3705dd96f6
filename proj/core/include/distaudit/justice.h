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

#ifndef DISTAUDIT_JUSTICE_H_
#define DISTAUDIT_JUSTICE_H_

#include <optional>
#include <string>

#include "distaudit/config.h"
#include "distaudit/population.h"

namespace distaudit {

// A justice metric value with the direction in which it improves.
struct MetricValue {
  std::string name;
  double value = 0.0;
  Direction direction = Direction::kMinimize;
};

// Individual-level evaluation of a theory of distributive justice.
struct JusticeVerdict {
  TheorySpec theory = TheorySpec::Egalitarian();
  // Absent for optimization-type theories (maximin).
  std::optional<bool> criterion_holds;
  MetricValue metric;
  // Present iff an approximate justice threshold was configured.
  std::optional<bool> approximate_holds;

  // The approximate criterion when configured, otherwise the exact one.
  // Maximin without an approximate threshold has nothing to gate on and
  // passes.
  bool Passes() const;
};

// Exact criterion. Egalitarian: max - min <= tolerance. Sufficientarian:
// every utility strictly above the threshold. Throws
// kOptimizationTypeTheory for maximin, which admits no criterion without
// counterfactual distributions.
bool CheckJusticeCriterion(const Population& population,
                           const TheorySpec& theory, double tolerance);

// Egalitarian: the configured inequality metric, minimized.
// Sufficientarian: share strictly above the threshold, maximized.
// Maximin: mean utility of the worst-off tail, maximized.
// Group labels are never consulted.
MetricValue JusticeMetric(const Population& population,
                          const TheorySpec& theory, const AuditConfig& config);

// Strict comparison: value < threshold when minimizing, value > threshold
// when maximizing.
bool ApproximateCriterion(double metric_value, Direction direction,
                          double threshold);

// Runs the criterion (when defined), the metric and the approximate
// criterion (when configured). The population is expected to be filtered to
// deserving records already.
JusticeVerdict EvaluateJustice(const Population& population,
                               const TheorySpec& theory,
                               const AuditConfig& config);

}  // namespace distaudit

#endif  // DISTAUDIT_JUSTICE_H_
