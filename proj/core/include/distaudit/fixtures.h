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

#ifndef DISTAUDIT_FIXTURES_H_
#define DISTAUDIT_FIXTURES_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "distaudit/population.h"

// Canonical populations for the worked examples of the two-track audit.
namespace distaudit::fixtures {

// Hourly wages of six people; the first letter of the name is the group.
// Distribution 1: Anna 10, Berta 20, Anton 30, Basti 40, Adriana 50,
// Barbara 60. Distribution 2: Berta 10, Basti 20, Barbara 30, Anna 40,
// Anton 50, Adriana 60. Both have the same worst-off person (10); in the
// second, all of group B is below all of group A.
Population WageDistribution1();
Population WageDistribution2();

// Threshold 10. Group g1: 95 members at 10.1 and 5 at -100 (mean 4.595).
// Group g2: 95 members at 9.9 and 5 at 200 (mean 19.405). Comparing group
// means against the threshold ranks the groups opposite to comparing the
// shares above it.
inline constexpr double kSufficientarianThreshold = 10.0;
Population SufficientarianDivergence();

// Group g1: {1, 1, 100, 100} (mean 50.5), group g2: {20, 20, 30, 30}
// (mean 25). The worst-off individuals sit in the group with the higher
// mean.
Population MaximinDivergence();

// Exam grades as grade points (B = 3, C = 2) for students who all deserve a
// B: 18 in group g1 receive a B, 2 in group g2 receive a C. Four further
// students (deserving other grades) are flagged not deserving.
inline constexpr double kGradeB = 3.0;
inline constexpr double kGradeC = 2.0;
Population ExamGrading();

// Loans decided by a fair coin: utility 1 if granted, 0 otherwise, for
// `per_group` applicants in each of groups g1 and g2. The coin is the top
// bit of std::mt19937_64 seeded with `seed`, which is specified by the
// standard and therefore identical on every platform.
inline constexpr std::uint64_t kCoinTossSeed = 20240517;
inline constexpr std::size_t kCoinTossPerGroup = 1000;
Population CoinTossLoans(std::uint64_t seed = kCoinTossSeed,
                         std::size_t per_group = kCoinTossPerGroup);

struct NamedFixture {
  std::string file_name;
  Population population;
};

// All six fixtures with their canonical file names.
std::vector<NamedFixture> AllFixtures();

}  // namespace distaudit::fixtures

#endif  // DISTAUDIT_FIXTURES_H_
