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
#include <random>
#include <vector>

#include "distaudit/fixtures.h"
#include "distaudit/metrics.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

namespace distaudit {
namespace {

Population FromUtilities(const std::vector<double>& utilities,
                         const std::string& group = "g") {
  std::vector<PopulationRecord> records;
  for (std::size_t i = 0; i < utilities.size(); ++i) {
    records.push_back({"r" + std::to_string(i), group, utilities[i]});
  }
  return Population::Build(std::move(records));
}

TEST(CheckJusticeCriterion, EqualUtilitiesAreEgalitarian) {
  const auto p = FromUtilities({42, 42, 42});
  EXPECT_TRUE(CheckJusticeCriterion(p, TheorySpec::Egalitarian(), 0.0));
}

TEST(CheckJusticeCriterion, ExamGradingFailsEgalitarian) {
  const auto p = FilterDeserving(fixtures::ExamGrading());
  EXPECT_FALSE(CheckJusticeCriterion(p, TheorySpec::Egalitarian(), 0.0));
  // Within a tolerance spanning one grade step the difference is tolerated.
  EXPECT_TRUE(CheckJusticeCriterion(p, TheorySpec::Egalitarian(), 1.0));
}

TEST(CheckJusticeCriterion, SufficientarianIsStrict) {
  const auto theory = TheorySpec::Sufficientarian(10);
  EXPECT_TRUE(CheckJusticeCriterion(FromUtilities({10.5, 11}), theory, 0));
  EXPECT_FALSE(CheckJusticeCriterion(FromUtilities({10, 11}), theory, 0));
}

TEST(CheckJusticeCriterion, MaximinIsOptimizationType) {
  EXPECT_EQ(CodeOf([] {
              CheckJusticeCriterion(fixtures::WageDistribution1(),
                                    TheorySpec::Maximin(0.05), 0.0);
            }),
            ErrorCode::kOptimizationTypeTheory);
}

TEST(JusticeMetric, Examples) {
  AuditConfig config;
  config.justice_metric = JusticeMetricChoice::kVariance;
  const auto egalitarian =
      JusticeMetric(FromUtilities({1, 2, 3}), TheorySpec::Egalitarian(), config);
  EXPECT_DOUBLE_EQ(egalitarian.value, 2.0 / 3.0);
  EXPECT_EQ(egalitarian.direction, Direction::kMinimize);

  std::vector<double> group2(95, 9.9);
  group2.insert(group2.end(), 5, 200.0);
  const auto sufficientarian = JusticeMetric(
      FromUtilities(group2), TheorySpec::Sufficientarian(10), config);
  EXPECT_EQ(sufficientarian.value, 0.05);
  EXPECT_EQ(sufficientarian.direction, Direction::kMaximize);

  const auto maximin = JusticeMetric(fixtures::WageDistribution1(),
                                     TheorySpec::Maximin(1.0 / 3.0), config);
  EXPECT_EQ(maximin.value, 15);
  EXPECT_EQ(maximin.direction, Direction::kMaximize);
}

TEST(JusticeMetric, EgalitarianChoices) {
  const auto p = fixtures::WageDistribution1();
  AuditConfig config;
  config.justice_metric = JusticeMetricChoice::kRangeDifference;
  EXPECT_EQ(JusticeMetric(p, TheorySpec::Egalitarian(), config).value, 50);
  config.justice_metric = JusticeMetricChoice::kRangeRatio;
  EXPECT_EQ(JusticeMetric(p, TheorySpec::Egalitarian(), config).value, 6);
  config.justice_metric = JusticeMetricChoice::kGini;
  EXPECT_DOUBLE_EQ(JusticeMetric(p, TheorySpec::Egalitarian(), config).value,
                   oracle::Gini({10, 20, 30, 40, 50, 60}));
}

TEST(JusticeMetric, PropagatesMetricErrors) {
  AuditConfig config;
  config.justice_metric = JusticeMetricChoice::kRangeRatio;
  EXPECT_EQ(CodeOf([&] {
              JusticeMetric(FromUtilities({0, 5}), TheorySpec::Egalitarian(),
                            config);
            }),
            ErrorCode::kNonPositiveMinimum);
}

TEST(ApproximateCriterion, StrictComparisons) {
  EXPECT_TRUE(ApproximateCriterion(0.04, Direction::kMinimize, 0.05));
  EXPECT_FALSE(ApproximateCriterion(0.05, Direction::kMinimize, 0.05));
  // 95% of individuals above the threshold is deemed sufficient.
  EXPECT_TRUE(ApproximateCriterion(0.95, Direction::kMaximize, 0.9));
  // Only 1% above the threshold is not.
  EXPECT_FALSE(ApproximateCriterion(0.01, Direction::kMaximize, 0.9));
  EXPECT_FALSE(ApproximateCriterion(0.9, Direction::kMaximize, 0.9));
}

TEST(EvaluateJustice, FieldsFollowTheoryType) {
  AuditConfig config;
  const auto maximin = EvaluateJustice(fixtures::WageDistribution2(),
                                       TheorySpec::Maximin(1.0 / 3.0), config);
  EXPECT_FALSE(maximin.criterion_holds.has_value());
  EXPECT_FALSE(maximin.approximate_holds.has_value());
  EXPECT_TRUE(maximin.Passes());

  config.approximate_justice_threshold = 20.0;
  const auto gated = EvaluateJustice(fixtures::WageDistribution2(),
                                     TheorySpec::Maximin(1.0 / 3.0), config);
  ASSERT_TRUE(gated.approximate_holds.has_value());
  EXPECT_FALSE(*gated.approximate_holds);
  EXPECT_FALSE(gated.Passes());

  const auto egalitarian = EvaluateJustice(fixtures::WageDistribution2(),
                                           TheorySpec::Egalitarian(), AuditConfig{});
  ASSERT_TRUE(egalitarian.criterion_holds.has_value());
  EXPECT_FALSE(*egalitarian.criterion_holds);
}

TEST(JusticeProperties, ExactEgalitarianAgreesWithEveryInequalityMetric) {
  oracle::PopulationGenerator gen(29);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = gen.Size(1, 20);
    std::vector<double> v(n, std::floor(gen.Uniform(1, 4)));
    if (gen.rng()() & 1) v[gen.Size(0, n - 1)] += 1.0;
    const auto p = FromUtilities(v);
    const bool holds = CheckJusticeCriterion(p, TheorySpec::Egalitarian(), 0.0);
    EXPECT_EQ(holds, Variance(v) == 0.0);
    EXPECT_EQ(holds, Gini(v) == 0.0);
    EXPECT_EQ(holds, RangeDifference(v) == 0.0);
  }
}

TEST(JusticeProperties, SufficientarianCriterionIffFullShare) {
  oracle::PopulationGenerator gen(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = gen.Make(gen.Size(1, 30), 3, 0, 20);
    const auto theory = TheorySpec::Sufficientarian(gen.Uniform(-2, 10));
    const bool holds = CheckJusticeCriterion(p, theory, 0.0);
    EXPECT_EQ(holds, JusticeMetric(p, theory, AuditConfig{}).value == 1.0);
  }
}

TEST(JusticeProperties, GroupLabelsAreIgnored) {
  oracle::PopulationGenerator gen(37);
  const std::vector<TheorySpec> theories = {
      TheorySpec::Egalitarian(), TheorySpec::Sufficientarian(5),
      TheorySpec::Maximin(0.2)};
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = gen.Make(gen.Size(1, 40), 4, 1, 10);
    std::vector<PopulationRecord> relabeled(p.records().begin(),
                                            p.records().end());
    std::vector<std::string> labels;
    for (const auto& r : relabeled) labels.push_back(r.group);
    std::shuffle(labels.begin(), labels.end(), gen.rng());
    for (std::size_t i = 0; i < labels.size(); ++i) relabeled[i].group = labels[i];
    const auto q = Population::Build(relabeled);
    for (const auto& theory : theories) {
      for (auto metric : {JusticeMetricChoice::kGini, JusticeMetricChoice::kVariance,
                          JusticeMetricChoice::kRangeDifference,
                          JusticeMetricChoice::kRangeRatio}) {
        AuditConfig config;
        config.justice_metric = metric;
        EXPECT_EQ(JusticeMetric(p, theory, config).value,
                  JusticeMetric(q, theory, config).value);
      }
    }
  }
}

TEST(TheorySpec, ValidatesParameters) {
  EXPECT_EQ(CodeOf([] { TheorySpec::Sufficientarian(NAN); }),
            ErrorCode::kInvalidTheory);
  EXPECT_EQ(CodeOf([] { TheorySpec::Maximin(0.0); }), ErrorCode::kInvalidFraction);
  EXPECT_EQ(CodeOf([] { TheorySpec::Maximin(1.5); }), ErrorCode::kInvalidFraction);
  EXPECT_EQ(*TheorySpec::Maximin().tail_fraction(), 0.05);
  EXPECT_EQ(TheorySpec::Maximin().type(), TheoryType::kOptimization);
  EXPECT_EQ(TheorySpec::Sufficientarian(1).type(), TheoryType::kCriterion);
}

TEST(AuditConfig, Validate) {
  AuditConfig config;
  config.equality_tolerance = -1;
  EXPECT_EQ(CodeOf([&] { config.Validate(); }), ErrorCode::kInvalidConfig);
  config = AuditConfig{};
  config.pattern = FairnessPattern::kLevelingUp;
  EXPECT_EQ(CodeOf([&] { config.Validate(); }), ErrorCode::kInvalidConfig);
  config.leveling_up_threshold = 3;
  EXPECT_NO_THROW(config.Validate());
}

}  // namespace
}  // namespace distaudit
