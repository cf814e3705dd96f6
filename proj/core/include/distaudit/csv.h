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

#ifndef DISTAUDIT_CSV_H_
#define DISTAUDIT_CSV_H_

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include "distaudit/population.h"

namespace distaudit {

// Population CSV: header exactly "id,group,utility" or
// "id,group,utility,deserving", comma separated, no quoting, LF or CRLF line
// endings. deserving accepts true/false/1/0 and defaults to true. Blank lines
// are skipped. Errors carry 1-based line numbers (the header is line 1):
// kMissingHeader, kBadRow, kDuplicateId, kNonFiniteUtility, kEmptyInput.
Population ParsePopulationCsv(std::istream& in);

// Opens and parses a file; kIo if it cannot be read.
Population ReadPopulationCsv(const std::filesystem::path& path);

// Writes the population in the format above, utilities in shortest
// round-trip form. The deserving column is written only if some record is
// not deserving. Throws kBadRow if an id or group contains a comma or line
// break.
void WritePopulationCsv(const Population& population, std::ostream& out);

// Shortest decimal string that parses back to exactly `value`.
std::string FormatShortest(double value);

}  // namespace distaudit

#endif  // DISTAUDIT_CSV_H_
