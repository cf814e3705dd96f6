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

#include "distaudit/fixtures.h"

#include <cstdio>
#include <random>
#include <utility>

namespace distaudit::fixtures {
namespace {

PopulationRecord Named(std::string name, double wage) {
  std::string group(1, name.front());
  return {std::move(name), std::move(group), wage, true};
}

// "<prefix>_<index>" with the index zero-padded to keep ids sortable.
std::string IndexedId(const std::string& prefix, std::size_t index) {
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "%04zu", index);
  return prefix + "_" + buffer;
}

}  // namespace

Population WageDistribution1() {
  return Population::Build({Named("Anna", 10), Named("Berta", 20),
                            Named("Anton", 30), Named("Basti", 40),
                            Named("Adriana", 50), Named("Barbara", 60)});
}

Population WageDistribution2() {
  return Population::Build({Named("Berta", 10), Named("Basti", 20),
                            Named("Barbara", 30), Named("Anna", 40),
                            Named("Anton", 50), Named("Adriana", 60)});
}

Population SufficientarianDivergence() {
  std::vector<PopulationRecord> records;
  for (std::size_t i = 0; i < 100; ++i) {
    records.push_back({IndexedId("g1", i), "g1", i < 95 ? 10.1 : -100.0});
  }
  for (std::size_t i = 0; i < 100; ++i) {
    records.push_back({IndexedId("g2", i), "g2", i < 95 ? 9.9 : 200.0});
  }
  return Population::Build(std::move(records));
}

Population MaximinDivergence() {
  std::vector<PopulationRecord> records;
  const double g1[] = {1, 1, 100, 100};
  const double g2[] = {20, 20, 30, 30};
  for (std::size_t i = 0; i < 4; ++i) {
    records.push_back({IndexedId("g1", i), "g1", g1[i]});
  }
  for (std::size_t i = 0; i < 4; ++i) {
    records.push_back({IndexedId("g2", i), "g2", g2[i]});
  }
  return Population::Build(std::move(records));
}

Population ExamGrading() {
  std::vector<PopulationRecord> records;
  for (std::size_t i = 0; i < 18; ++i) {
    records.push_back({IndexedId("student_g1", i), "g1", kGradeB});
  }
  for (std::size_t i = 0; i < 2; ++i) {
    records.push_back({IndexedId("student_g2", i), "g2", kGradeC});
  }
  records.push_back({"other_g1_0000", "g1", 4.0, false});
  records.push_back({"other_g1_0001", "g1", 1.0, false});
  records.push_back({"other_g2_0000", "g2", 4.0, false});
  records.push_back({"other_g2_0001", "g2", 1.0, false});
  return Population::Build(std::move(records));
}

Population CoinTossLoans(std::uint64_t seed, std::size_t per_group) {
  std::mt19937_64 coin(seed);
  std::vector<PopulationRecord> records;
  records.reserve(2 * per_group);
  for (std::size_t i = 0; i < 2 * per_group; ++i) {
    const bool granted = (coin() >> 63) != 0;
    records.push_back({IndexedId("applicant", i), i % 2 == 0 ? "g1" : "g2",
                       granted ? 1.0 : 0.0});
  }
  return Population::Build(std::move(records));
}

std::vector<NamedFixture> AllFixtures() {
  std::vector<NamedFixture> all;
  all.push_back({"wages_dist1.csv", WageDistribution1()});
  all.push_back({"wages_dist2.csv", WageDistribution2()});
  all.push_back({"sufficientarian_divergence.csv", SufficientarianDivergence()});
  all.push_back({"maximin_divergence.csv", MaximinDivergence()});
  all.push_back({"exam_grading.csv", ExamGrading()});
  all.push_back({"coin_toss_loans.csv", CoinTossLoans()});
  return all;
}

}  // namespace distaudit::fixtures
