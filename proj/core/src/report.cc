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

#include "distaudit/report.h"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <vector>

#include "distaudit/csv.h"
#include "json.hpp"

namespace distaudit {
namespace {

using Json = nlohmann::ordered_json;

template <typename T>
Json OrNull(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json ConfigJson(const AuditReport& report) {
  const AuditConfig& config = report.config;
  Json theory = {
      {"kind", ToString(report.theory.kind())},
      {"threshold", OrNull(report.theory.threshold())},
      {"tail_fraction", OrNull(report.theory.tail_fraction())},
  };
  return {
      {"theory", theory},
      {"equality_tolerance", config.equality_tolerance},
      {"justice_metric", ToString(config.justice_metric)},
      {"disparity", ToString(config.disparity)},
      {"pattern", ToString(config.pattern)},
      {"leveling_up_threshold", OrNull(config.leveling_up_threshold)},
      {"approximate_justice_threshold",
       OrNull(config.approximate_justice_threshold)},
      {"maximin_measure", ToString(config.maximin_measure)},
      {"min_group_size", config.min_group_size},
      {"expected_groups", config.expected_groups},
      {"include_naive", config.include_naive},
  };
}

Json JusticeJson(const JusticeVerdict& justice) {
  return {
      {"criterion_holds", OrNull(justice.criterion_holds)},
      {"metric_name", justice.metric.name},
      {"metric_value", justice.metric.value},
      {"direction", ToString(justice.metric.direction)},
      {"approximate_holds", OrNull(justice.approximate_holds)},
      {"passes", justice.Passes()},
  };
}

Json VerdictJson(const GroupAssessment& assessment) {
  const FairnessVerdict& verdict = assessment.verdict;
  Json gaps = Json::array();
  for (const auto& [pair, gap] : verdict.pairwise_gaps) {
    gaps.push_back({{"groups", {pair.first, pair.second}}, {"gap", gap}});
  }
  Json leveling_up = nullptr;
  if (verdict.leveling_up) {
    leveling_up = Json::object();
    for (const auto& [label, pass] : *verdict.leveling_up) {
      leveling_up[label] = pass;
    }
  }
  return {
      {"measure", verdict.measure_name},
      {"pattern", ToString(verdict.pattern)},
      {"criterion_holds", verdict.criterion_holds},
      {"disparity_name", verdict.disparity_name},
      {"disparity_value", verdict.disparity_value},
      {"reported_disparity",
       {{"name", assessment.reported_disparity_name},
        {"value", OrNull(assessment.reported_disparity)}}},
      {"pairwise_gaps", gaps},
      {"leveling_up", leveling_up},
      {"passes", verdict.Passes()},
  };
}

Json NaiveJson(const NaiveBaselines& naive) {
  Json out = {{"contrast_only", true}};
  if (naive.sufficientarian_group_check) {
    Json checks = Json::object();
    for (const auto& [label, pass] : *naive.sufficientarian_group_check) {
      checks[label] = pass;
    }
    out["sufficientarian_group_mean_above_threshold"] = checks;
  }
  if (naive.maximin_worst_group) {
    out["maximin_worst_off_group"] = {
        {"group", naive.maximin_worst_group->group},
        {"mean", naive.maximin_worst_group->mean},
    };
  }
  return out;
}

Json ReportJson(const AuditReport& report) {
  Json verdicts = Json::array();
  for (const auto& assessment : report.fairness) {
    verdicts.push_back(VerdictJson(assessment));
  }
  const bool fairness_passes =
      std::all_of(report.fairness.begin(), report.fairness.end(),
                  [](const GroupAssessment& a) { return a.verdict.Passes(); });
  Json fairness = {{"passes", fairness_passes}, {"verdicts", verdicts}};
  if (report.naive) fairness["naive_baselines"] = NaiveJson(*report.naive);

  Json measures = Json::object();
  for (const auto& assessment : report.fairness) {
    Json per_group = Json::object();
    for (const auto& [label, value] : assessment.table.per_group) {
      per_group[label] = value;
    }
    measures[assessment.table.measure_name] = per_group;
  }
  Json sizes = Json::object();
  for (const auto& [label, size] : report.group_sizes) sizes[label] = size;

  return {
      {"config", ConfigJson(report)},
      {"justice", JusticeJson(report.justice)},
      {"fairness", fairness},
      {"groups",
       {{"records_total", report.records_total},
        {"records_excluded", report.records_excluded},
        {"sizes", sizes},
        {"measures", measures}}},
      {"warnings", report.warnings},
  };
}

std::string Fixed4(double value) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << value;
  return out.str();
}

std::string_view PassFail(bool pass) { return pass ? "PASS" : "FAIL"; }

void EmitText(const AuditReport& report, std::ostream& out) {
  const int kLabel = 26;
  auto row = [&](std::string_view label, const std::string& value) {
    out << "  " << std::left << std::setw(kLabel) << label << value << '\n';
  };

  std::string theory(ToString(report.theory.kind()));
  if (report.theory.threshold()) {
    theory += " (threshold " + Fixed4(*report.theory.threshold()) + ")";
  }
  if (report.theory.tail_fraction()) {
    theory += " (tail fraction " + Fixed4(*report.theory.tail_fraction()) + ")";
  }
  out << "Audit report\n";
  row("theory", theory);
  row("records", std::to_string(report.records_total) + " total, " +
                     std::to_string(report.records_excluded) + " excluded");
  row("equality tolerance", Fixed4(report.config.equality_tolerance));

  const JusticeVerdict& justice = report.justice;
  out << "\nJustice (individuals)\n";
  row("metric", justice.metric.name + " = " + Fixed4(justice.metric.value) +
                    " (" + std::string(ToString(justice.metric.direction)) +
                    ")");
  row("criterion", justice.criterion_holds
                       ? std::string(PassFail(*justice.criterion_holds))
                       : "n/a (optimization-type theory)");
  row("approximate criterion",
      justice.approximate_holds
          ? std::string(PassFail(*justice.approximate_holds)) + " (threshold " +
                Fixed4(*report.config.approximate_justice_threshold) + ")"
          : "not configured");
  row("verdict", std::string(PassFail(justice.Passes())));

  out << "\nStructural injustice (groups)\n";
  for (const auto& assessment : report.fairness) {
    const FairnessVerdict& verdict = assessment.verdict;
    out << "  " << assessment.table.measure_name << '\n';
    out << "    " << std::left << std::setw(16) << "group" << std::setw(8)
        << "size" << std::right << std::setw(14) << "value";
    if (verdict.leveling_up) out << std::setw(12) << "level-up";
    out << '\n';
    for (const auto& [label, value] : assessment.table.per_group) {
      const auto size = report.group_sizes.find(label);
      out << "    " << std::left << std::setw(16) << label << std::setw(8)
          << (size == report.group_sizes.end() ? 0 : size->second)
          << std::right << std::setw(14) << Fixed4(value);
      if (verdict.leveling_up) {
        out << std::setw(12) << PassFail(verdict.leveling_up->at(label));
      }
      out << '\n';
    }
    out << "    max gap " << Fixed4(verdict.disparity_value);
    if (assessment.reported_disparity_name != "max-gap") {
      out << ", " << assessment.reported_disparity_name << ' '
          << (assessment.reported_disparity
                  ? Fixed4(*assessment.reported_disparity)
                  : std::string("undefined"));
    }
    out << '\n';
    out << "    equality criterion " << PassFail(verdict.criterion_holds)
        << ", pattern " << ToString(verdict.pattern) << ", verdict "
        << PassFail(verdict.Passes()) << '\n';
  }

  if (report.naive) {
    out << "\nNaive baselines (contrast only)\n";
    if (report.naive->sufficientarian_group_check) {
      for (const auto& [label, pass] : *report.naive->sufficientarian_group_check) {
        row("group mean > t: " + label, std::string(PassFail(pass)));
      }
    }
    if (report.naive->maximin_worst_group) {
      row("worst-off group by mean",
          report.naive->maximin_worst_group->group + " (" +
              Fixed4(report.naive->maximin_worst_group->mean) + ")");
    }
  }

  out << "\nWarnings\n";
  if (report.warnings.empty()) out << "  none\n";
  for (const auto& warning : report.warnings) out << "  - " << warning << '\n';

  out << "\nOverall: " << PassFail(report.Passes()) << '\n';
}

}  // namespace

std::optional<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "text") return ReportFormat::kText;
  return std::nullopt;
}

std::string ReportToJson(const AuditReport& report) {
  return ReportJson(report).dump(2) + "\n";
}

void EmitReport(const AuditReport& report, ReportFormat format,
                std::ostream& out) {
  if (format == ReportFormat::kJson) {
    out << ReportToJson(report);
  } else {
    EmitText(report, out);
  }
}

void EmitParetoPoints(std::span<const CandidateScore> scores,
                      std::span<const std::string> front, std::ostream& out) {
  const std::set<std::string> on_front(front.begin(), front.end());
  std::vector<const CandidateScore*> rows;
  for (const auto& score : scores) rows.push_back(&score);
  std::sort(rows.begin(), rows.end(),
            [](const CandidateScore* a, const CandidateScore* b) {
              return a->name < b->name;
            });
  out << "name,justice_value,fairness_disparity,on_front\n";
  for (const CandidateScore* score : rows) {
    out << score->name << ',' << FormatShortest(score->justice_value) << ','
        << FormatShortest(score->fairness_disparity) << ','
        << (on_front.contains(score->name) ? "true" : "false") << '\n';
  }
}

}  // namespace distaudit
