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

#ifndef DISTAUDIT_REPORT_H_
#define DISTAUDIT_REPORT_H_

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "distaudit/audit.h"
#include "distaudit/selection.h"

namespace distaudit {

enum class ReportFormat { kJson, kText };

std::optional<ReportFormat> ParseReportFormat(std::string_view name);

// json: top-level keys config, justice, fairness, groups, warnings, in that
// order, full-precision numbers, byte-identical for identical reports.
// text: aligned tables, numbers rounded to 4 decimals.
void EmitReport(const AuditReport& report, ReportFormat format,
                std::ostream& out);

std::string ReportToJson(const AuditReport& report);

// CSV "name,justice_value,fairness_disparity,on_front", rows sorted by name.
void EmitParetoPoints(std::span<const CandidateScore> scores,
                      std::span<const std::string> front, std::ostream& out);

}  // namespace distaudit

#endif  // DISTAUDIT_REPORT_H_
