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

#include "distaudit/metrics.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "distaudit/error.h"

namespace distaudit {
namespace {

void CheckUtilities(std::span<const double> values) {
  if (values.empty()) {
    throw AuditError(ErrorCode::kEmptyInput, "utility vector is empty");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw AuditError(ErrorCode::kNonFiniteUtility,
                       "utility vector contains a non-finite value");
    }
  }
}

double UncheckedMean(std::span<const double> values) {
  const double origin = values.front();
  double offset_sum = 0.0;
  for (double v : values) offset_sum += v - origin;
  return origin + offset_sum / static_cast<double>(values.size());
}

}  // namespace

UtilityVector::UtilityVector(std::vector<double> values)
    : values_(std::move(values)) {
  CheckUtilities(values_);
}

double Mean(std::span<const double> values) {
  CheckUtilities(values);
  return UncheckedMean(values);
}

double Variance(std::span<const double> values) {
  CheckUtilities(values);
  const double mean = UncheckedMean(values);
  double sum_sq = 0.0;
  for (double v : values) {
    const double d = v - mean;
    sum_sq += d * d;
  }
  return sum_sq / static_cast<double>(values.size());
}

double Gini(std::span<const double> values) {
  CheckUtilities(values);
  double total = 0.0;
  for (double v : values) {
    if (v < 0.0) {
      throw AuditError(ErrorCode::kNegativeValues,
                       "gini is undefined for negative utilities");
    }
    total += v;
  }
  if (total == 0.0) {
    throw AuditError(ErrorCode::kZeroMean,
                     "gini is undefined when the mean utility is 0");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  // sum_{i<j} |x_i - x_j| over sorted x equals sum_i (2i - n + 1) x_i.
  // The coefficients sum to zero, so subtracting the minimum leaves the
  // result unchanged and makes constant input come out as exactly 0.
  const double n = static_cast<double>(sorted.size());
  const double lowest = sorted.front();
  double weighted = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    weighted += (2.0 * static_cast<double>(i) - n + 1.0) * (sorted[i] - lowest);
  }
  return weighted / (n * total);
}

double RangeDifference(std::span<const double> values) {
  CheckUtilities(values);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi - *lo;
}

double RangeRatio(std::span<const double> values) {
  CheckUtilities(values);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*lo <= 0.0) {
    throw AuditError(ErrorCode::kNonPositiveMinimum,
                     "range ratio needs a positive minimum utility");
  }
  return *hi / *lo;
}

double ShareAbove(std::span<const double> values, double threshold) {
  CheckUtilities(values);
  if (std::isnan(threshold)) {
    throw AuditError(ErrorCode::kInvalidConfig, "threshold is NaN");
  }
  const auto above = std::count_if(values.begin(), values.end(),
                                   [threshold](double v) { return v > threshold; });
  return static_cast<double>(above) / static_cast<double>(values.size());
}

std::size_t TailSize(double tail_fraction, std::size_t n) {
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0)) {
    throw AuditError(ErrorCode::kInvalidFraction,
                     "tail fraction must lie in (0, 1], got " +
                         std::to_string(tail_fraction));
  }
  if (n == 0) {
    throw AuditError(ErrorCode::kEmptyInput, "tail of an empty set");
  }
  const double product = tail_fraction * static_cast<double>(n);
  const double nearest = std::round(product);
  const double k = std::abs(product - nearest) <= 1e-9 * std::max(1.0, product)
                       ? nearest
                       : std::ceil(product);
  return std::clamp<std::size_t>(static_cast<std::size_t>(k), 1, n);
}

double TailMean(std::span<const double> values, double tail_fraction) {
  CheckUtilities(values);
  const std::size_t k = TailSize(tail_fraction, values.size());
  std::vector<double> sorted(values.begin(), values.end());
  std::partial_sort(sorted.begin(), sorted.begin() + static_cast<long>(k),
                    sorted.end());
  return UncheckedMean(std::span<const double>(sorted.data(), k));
}

}  // namespace distaudit
