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

#include "distaudit/csv.h"

#include <sstream>
#include <string>

#include "distaudit/fixtures.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

namespace distaudit {
namespace {

using ::testing::HasSubstr;

Population Parse(const std::string& text) {
  std::istringstream in(text);
  return ParsePopulationCsv(in);
}

std::string Write(const Population& p) {
  std::ostringstream out;
  WritePopulationCsv(p, out);
  return out.str();
}

std::string ErrorMessage(const std::string& text) {
  try {
    Parse(text);
  } catch (const AuditError& e) {
    return e.what();
  }
  return "";
}

TEST(ParsePopulationCsv, WageRows) {
  const auto p = Parse(
      "id,group,utility\nAnna,A,10\nBerta,B,20\nAnton,A,30\nBasti,B,40\n"
      "Adriana,A,50\nBarbara,B,60\n");
  EXPECT_EQ(p, fixtures::WageDistribution1());
}

TEST(ParsePopulationCsv, CrlfAndDeservingColumn) {
  const auto p = Parse(
      "id,group,utility,deserving\r\na,X,1.5,true\r\nb,Y,-2e3,0\r\n"
      "c,X,3,1\r\nd,Y,4,false\r\n");
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p.records()[1].utility, -2000);
  EXPECT_FALSE(p.records()[1].deserving);
  EXPECT_TRUE(p.records()[2].deserving);
  EXPECT_FALSE(p.records()[3].deserving);
}

TEST(ParsePopulationCsv, NoTrailingNewlineAndBlankLines) {
  EXPECT_EQ(Parse("id,group,utility\na,A,1\n\nb,A,2").size(), 2u);
}

TEST(ParsePopulationCsv, HeaderOnlyIsEmptyInput) {
  EXPECT_EQ(CodeOf([] { Parse("id,group,utility\n"); }), ErrorCode::kEmptyInput);
}

TEST(ParsePopulationCsv, MissingHeader) {
  EXPECT_EQ(CodeOf([] { Parse(""); }), ErrorCode::kMissingHeader);
  EXPECT_EQ(CodeOf([] { Parse("a,A,1\n"); }), ErrorCode::kMissingHeader);
  EXPECT_EQ(CodeOf([] { Parse("id,utility,group\n"); }), ErrorCode::kMissingHeader);
}

TEST(ParsePopulationCsv, BadRowsCarryRowNumbers) {
  EXPECT_EQ(CodeOf([] { Parse("id,group,utility\nx,A,abc\n"); }),
            ErrorCode::kBadRow);
  EXPECT_THAT(ErrorMessage("id,group,utility\nx,A,abc\n"), HasSubstr("row 2"));
  EXPECT_THAT(ErrorMessage("id,group,utility\na,A,1\nb,A\n"), HasSubstr("row 3"));
  EXPECT_EQ(CodeOf([] { Parse("id,group,utility\na,A,1,true\n"); }),
            ErrorCode::kBadRow);
  EXPECT_EQ(CodeOf([] { Parse("id,group,utility\na,A,12x\n"); }),
            ErrorCode::kBadRow);
  EXPECT_EQ(CodeOf([] { Parse("id,group,utility\n,A,1\n"); }), ErrorCode::kBadRow);
  EXPECT_EQ(CodeOf([] { Parse("id,group,utility,deserving\na,A,1,yes\n"); }),
            ErrorCode::kBadRow);
}

TEST(ParsePopulationCsv, NonFiniteAndDuplicates) {
  EXPECT_EQ(CodeOf([] { Parse("id,group,utility\na,A,nan\n"); }),
            ErrorCode::kNonFiniteUtility);
  EXPECT_EQ(CodeOf([] { Parse("id,group,utility\na,A,inf\n"); }),
            ErrorCode::kNonFiniteUtility);
  EXPECT_EQ(CodeOf([] { Parse("id,group,utility\na,A,1e999\n"); }),
            ErrorCode::kNonFiniteUtility);
  EXPECT_EQ(CodeOf([] { Parse("id,group,utility\na,A,1\na,B,2\n"); }),
            ErrorCode::kDuplicateId);
  EXPECT_THAT(ErrorMessage("id,group,utility\na,A,1\na,B,2\n"), HasSubstr("row 3"));
}

TEST(ReadPopulationCsv, MissingFileIsIoError) {
  EXPECT_EQ(CodeOf([] { ReadPopulationCsv("/nonexistent/dir/x.csv"); }),
            ErrorCode::kIo);
}

TEST(WritePopulationCsv, RejectsCommasInFields) {
  const auto p = Population::Build({{"a,b", "A", 1}});
  EXPECT_EQ(CodeOf([&] { Write(p); }), ErrorCode::kBadRow);
}

TEST(WritePopulationCsv, RoundTripsRandomPopulations) {
  oracle::PopulationGenerator gen(71);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<PopulationRecord> records;
    const std::size_t n = gen.Size(1, 50);
    for (std::size_t i = 0; i < n; ++i) {
      const double scale = std::pow(10.0, gen.Uniform(-300, 300));
      records.push_back({"id" + std::to_string(i),
                         "grp" + std::to_string(gen.Size(0, 3)),
                         gen.Uniform(-1, 1) * scale, (gen.rng()() % 4) != 0});
    }
    const auto p = Population::Build(records);
    const std::string text = Write(p);
    const auto parsed = Parse(text);
    EXPECT_EQ(parsed, p);
    EXPECT_EQ(Write(parsed), text);
  }
}

TEST(FormatShortest, RoundTrips) {
  EXPECT_EQ(FormatShortest(10), "10");
  EXPECT_EQ(FormatShortest(0.1), "0.1");
  EXPECT_EQ(FormatShortest(-100), "-100");
  EXPECT_EQ(std::stod(FormatShortest(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
}  // namespace distaudit
