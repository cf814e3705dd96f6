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

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "distaudit/error.h"

namespace distaudit {
namespace {

constexpr std::string_view kHeader = "id,group,utility";
constexpr std::string_view kHeaderWithDeserving = "id,group,utility,deserving";

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

[[noreturn]] void Fail(ErrorCode code, std::size_t line_number,
                       const std::string& reason) {
  throw AuditError(code, "row " + std::to_string(line_number) + ": " + reason);
}

void StripCarriageReturn(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

Population ParsePopulationCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw AuditError(ErrorCode::kMissingHeader, "input is empty");
  }
  StripCarriageReturn(line);
  if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
  bool has_deserving = false;
  if (line == kHeaderWithDeserving) {
    has_deserving = true;
  } else if (line != kHeader) {
    throw AuditError(ErrorCode::kMissingHeader,
                     "expected header 'id,group,utility[,deserving]', got '" +
                         line + "'");
  }
  const std::size_t expected_fields = has_deserving ? 4 : 3;

  std::vector<PopulationRecord> records;
  std::unordered_set<std::string> seen;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    StripCarriageReturn(line);
    if (line.empty()) continue;

    const auto fields = SplitFields(line);
    if (fields.size() != expected_fields) {
      Fail(ErrorCode::kBadRow, line_number,
           "expected " + std::to_string(expected_fields) + " fields, got " +
               std::to_string(fields.size()));
    }
    PopulationRecord record;
    record.id = std::string(fields[0]);
    record.group = std::string(fields[1]);
    if (record.id.empty()) Fail(ErrorCode::kBadRow, line_number, "empty id");
    if (record.group.empty()) {
      Fail(ErrorCode::kBadRow, line_number, "empty group");
    }

    const std::string_view text = fields[2];
    const auto [end, ec] =
        std::from_chars(text.data(), text.data() + text.size(), record.utility);
    if (ec == std::errc::result_out_of_range) {
      Fail(ErrorCode::kNonFiniteUtility, line_number,
           "utility '" + std::string(text) + "' is out of range");
    }
    if (ec != std::errc() || end != text.data() + text.size()) {
      Fail(ErrorCode::kBadRow, line_number,
           "utility '" + std::string(text) + "' is not a number");
    }
    if (!std::isfinite(record.utility)) {
      Fail(ErrorCode::kNonFiniteUtility, line_number,
           "utility '" + std::string(text) + "' is not finite");
    }

    if (has_deserving) {
      const std::string_view flag = fields[3];
      if (flag == "true" || flag == "1") {
        record.deserving = true;
      } else if (flag == "false" || flag == "0") {
        record.deserving = false;
      } else {
        Fail(ErrorCode::kBadRow, line_number,
             "deserving must be true, false, 1 or 0, got '" +
                 std::string(flag) + "'");
      }
    }
    if (!seen.insert(record.id).second) {
      Fail(ErrorCode::kDuplicateId, line_number,
           "id '" + record.id + "' appears more than once");
    }
    records.push_back(std::move(record));
  }
  if (in.bad()) throw AuditError(ErrorCode::kIo, "read error");
  if (records.empty()) {
    throw AuditError(ErrorCode::kEmptyInput, "no data rows after the header");
  }
  return Population::Build(std::move(records));
}

Population ReadPopulationCsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw AuditError(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  }
  try {
    return ParsePopulationCsv(in);
  } catch (const AuditError& e) {
    throw AuditError(e.code(), path.string() + ": " + e.what());
  }
}

void WritePopulationCsv(const Population& population, std::ostream& out) {
  const auto records = population.records();
  const bool with_deserving =
      std::any_of(records.begin(), records.end(),
                  [](const PopulationRecord& r) { return !r.deserving; });
  out << (with_deserving ? kHeaderWithDeserving : kHeader) << '\n';
  for (const auto& record : records) {
    for (const std::string* field : {&record.id, &record.group}) {
      if (field->find_first_of(",\r\n") != std::string::npos) {
        throw AuditError(ErrorCode::kBadRow,
                         "'" + *field + "' cannot be written unquoted");
      }
    }
    out << record.id << ',' << record.group << ','
        << FormatShortest(record.utility);
    if (with_deserving) out << ',' << (record.deserving ? "true" : "false");
    out << '\n';
  }
}

std::string FormatShortest(double value) {
  std::array<char, 32> buffer{};
  const auto [end, ec] =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), end);
}

}  // namespace distaudit
