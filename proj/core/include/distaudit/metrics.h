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

#ifndef DISTAUDIT_METRICS_H_
#define DISTAUDIT_METRICS_H_

#include <cstddef>
#include <span>
#include <vector>

namespace distaudit {

// Non-empty vector of finite utilities.
class UtilityVector {
 public:
  // Throws kEmptyInput or kNonFiniteUtility.
  explicit UtilityVector(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  operator std::span<const double>() const { return values_; }

 private:
  std::vector<double> values_;
};

// All functions below take a span and enforce the UtilityVector invariant
// on it (kEmptyInput, kNonFiniteUtility) before computing anything.

// Arithmetic mean. Accumulates offsets from the first element, so a constant
// vector returns that constant exactly.
double Mean(std::span<const double> values);

// Population variance (divides by n). Exactly 0 for constant input.
double Variance(std::span<const double> values);

// Mean-absolute-difference Gini coefficient,
//   G = sum_i sum_j |u_i - u_j| / (2 n^2 mean),
// without small-sample correction. O(n log n). Result lies in [0, 1).
// Throws kNegativeValues if any value < 0 and kZeroMean if all are 0.
double Gini(std::span<const double> values);

// max - min.
double RangeDifference(std::span<const double> values);

// max / min. Throws kNonPositiveMinimum when min <= 0.
double RangeRatio(std::span<const double> values);

// Fraction of values strictly above `threshold`. `threshold` may be
// infinite; NaN is rejected with kInvalidConfig.
double ShareAbove(std::span<const double> values, double threshold);

// Number of worst-off members for a tail fraction q over n members:
// ceil(q * n), clamped to [1, n]. A product within 1e-9 (relative) of an
// integer is snapped to it first, so q = 0.7, n = 10 gives 7 and not 8.
// Throws kInvalidFraction unless 0 < q <= 1.
std::size_t TailSize(double tail_fraction, std::size_t n);

// Mean of the TailSize(q, n) smallest values. Which of several tied values
// enter the tail does not affect the mean.
double TailMean(std::span<const double> values, double tail_fraction);

}  // namespace distaudit

#endif  // DISTAUDIT_METRICS_H_
