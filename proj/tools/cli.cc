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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "distaudit/audit.h"
#include "distaudit/csv.h"
#include "distaudit/error.h"
#include "distaudit/fixtures.h"
#include "distaudit/report.h"
#include "distaudit/selection.h"

namespace distaudit::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raw flag values shared by `audit` and `select`.
struct AuditFlags {
  std::string theory;
  std::optional<double> threshold;
  double quantile = TheorySpec::kDefaultTailFraction;
  std::string pattern = "egalitarian";
  std::optional<double> leveling_up_threshold;
  double tolerance = 0.0;
  std::string justice_metric = "variance";
  std::string disparity = "max-gap";
  std::string maximin_measure = "tail-means";
  std::optional<double> approximate_threshold;
  std::size_t min_group_size = 1;
  std::vector<std::string> groups;
  std::string format = "json";
  std::string out;
  bool include_naive = false;

  CLI::Option* quantile_option = nullptr;
};

void AddAuditFlags(CLI::App& app, AuditFlags& flags) {
  app.add_option("--theory", flags.theory, "Theory of distributive justice")
      ->required()
      ->check(CLI::IsMember({"egalitarian", "sufficientarian", "maximin"}));
  app.add_option("--threshold", flags.threshold,
                 "Sufficientarian utility threshold t (required for "
                 "sufficientarian)");
  flags.quantile_option =
      app.add_option("--quantile", flags.quantile,
                     "Maximin worst-off tail fraction q in (0, 1]")
          ->capture_default_str();
  app.add_option("--pattern", flags.pattern,
                 "Pattern for structural injustice")
      ->check(CLI::IsMember({"egalitarian", "leveling-up"}))
      ->capture_default_str();
  app.add_option("--leveling-up-threshold", flags.leveling_up_threshold,
                 "Floor every group's measure must exceed");
  app.add_option("--tolerance", flags.tolerance,
                 "Absolute tolerance for equality checks")
      ->capture_default_str();
  app.add_option("--justice-metric", flags.justice_metric,
                 "Egalitarian justice metric")
      ->check(CLI::IsMember({"gini", "variance", "range-diff", "range-ratio"}))
      ->capture_default_str();
  app.add_option("--disparity", flags.disparity,
                 "Disparity reported across groups")
      ->check(CLI::IsMember({"max-gap", "max-ratio", "variance"}))
      ->capture_default_str();
  app.add_option("--maximin-measure", flags.maximin_measure,
                 "Maximin group measure used when comparing candidates")
      ->check(CLI::IsMember({"tail-means", "membership-rates"}))
      ->capture_default_str();
  app.add_option("--approximate-threshold", flags.approximate_threshold,
                 "Threshold turning the justice metric into an approximate "
                 "criterion");
  app.add_option("--min-group-size", flags.min_group_size,
                 "Warn about groups smaller than this")
      ->capture_default_str();
  app.add_option("--groups", flags.groups,
                 "Group labels that must be present (comma separated)")
      ->delimiter(',');
  app.add_option("--format", flags.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", flags.out, "Write output here instead of stdout");
  app.add_flag("--include-naive", flags.include_naive,
               "Add naive group-level baselines to the report");
}

TheorySpec BuildTheory(const AuditFlags& flags) {
  const auto kind = ParseTheoryKind(flags.theory);
  if (!kind) throw UsageError("unknown theory '" + flags.theory + "'");
  if (flags.threshold && *kind != TheoryKind::kSufficientarian) {
    throw UsageError("--threshold only applies to --theory sufficientarian");
  }
  if (flags.quantile_option->count() > 0 && *kind != TheoryKind::kMaximin) {
    throw UsageError("--quantile only applies to --theory maximin");
  }
  switch (*kind) {
    case TheoryKind::kEgalitarian:
      return TheorySpec::Egalitarian();
    case TheoryKind::kSufficientarian:
      if (!flags.threshold) {
        throw UsageError("--theory sufficientarian requires --threshold");
      }
      return TheorySpec::Sufficientarian(*flags.threshold);
    case TheoryKind::kMaximin:
      if (!(flags.quantile > 0.0 && flags.quantile <= 1.0)) {
        throw UsageError("--quantile must lie in (0, 1]");
      }
      return TheorySpec::Maximin(flags.quantile);
  }
  throw UsageError("unknown theory");
}

AuditConfig BuildConfig(const AuditFlags& flags) {
  AuditConfig config;
  config.equality_tolerance = flags.tolerance;
  config.justice_metric = *ParseJusticeMetric(flags.justice_metric);
  config.disparity = *ParseDisparity(flags.disparity);
  config.pattern = *ParsePattern(flags.pattern);
  config.maximin_measure = *ParseMaximinMeasure(flags.maximin_measure);
  config.leveling_up_threshold = flags.leveling_up_threshold;
  config.approximate_justice_threshold = flags.approximate_threshold;
  config.min_group_size = flags.min_group_size;
  config.expected_groups = flags.groups;
  config.include_naive = flags.include_naive;
  if (config.pattern == FairnessPattern::kLevelingUp &&
      !config.leveling_up_threshold) {
    throw UsageError("--pattern leveling-up requires --leveling-up-threshold");
  }
  if (!(config.equality_tolerance >= 0.0)) {
    throw UsageError("--tolerance must be >= 0");
  }
  if (config.min_group_size == 0) {
    throw UsageError("--min-group-size must be >= 1");
  }
  return config;
}

// Writes `text` to --out when given, otherwise to `out`.
void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) throw AuditError(ErrorCode::kIo, "cannot write '" + path + "'");
}

int RunAudit(const AuditFlags& flags, const std::string& input,
             std::ostream& out) {
  const TheorySpec theory = BuildTheory(flags);
  const AuditConfig config = BuildConfig(flags);
  const Population population = ReadPopulationCsv(input);
  const AuditReport report = Audit(population, theory, config);
  std::ostringstream text;
  EmitReport(report, *ParseReportFormat(flags.format), text);
  WriteOutput(flags.out, text.str(), out);
  return report.Passes() ? kExitPass : kExitFail;
}

int RunSelect(const AuditFlags& flags, const std::string& mode,
              std::optional<double> fairness_constraint,
              const std::vector<std::string>& inputs, std::ostream& out,
              std::ostream& err) {
  const TheorySpec theory = BuildTheory(flags);
  AuditConfig config = BuildConfig(flags);
  if (fairness_constraint && !(*fairness_constraint >= 0.0)) {
    throw UsageError("--fairness-constraint must be >= 0");
  }
  config.fairness_constraint = fairness_constraint;

  std::vector<Candidate> candidates;
  for (const auto& input : inputs) {
    candidates.push_back({std::filesystem::path(input).stem().string(),
                          ReadPopulationCsv(input)});
  }
  const std::vector<CandidateScore> scores =
      ScoreCandidates(candidates, theory, config);

  if (mode == "pareto") {
    std::ostringstream text;
    EmitParetoPoints(scores, ParetoFront(scores), text);
    WriteOutput(flags.out, text.str(), out);
    return kExitPass;
  }
  try {
    WriteOutput(flags.out, LexicalSelect(scores) + "\n", out);
    return kExitPass;
  } catch (const AuditError& e) {
    if (e.code() != ErrorCode::kNoFeasibleCandidate) throw;
    err << "distaudit: " << e.what() << '\n';
    return kExitFail;
  }
}

int RunFixtures(const std::string& directory, std::ostream& out) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) {
    throw AuditError(ErrorCode::kIo, "cannot create '" + directory +
                                         "': " + ec.message());
  }
  for (const auto& fixture : fixtures::AllFixtures()) {
    const auto path = std::filesystem::path(directory) / fixture.file_name;
    std::ofstream file(path, std::ios::binary);
    WritePopulationCsv(fixture.population, file);
    file.close();
    if (!file) {
      throw AuditError(ErrorCode::kIo, "cannot write '" + path.string() + "'");
    }
    out << path.string() << '\n';
  }
  return kExitPass;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Audit utility distributions for distributive justice and "
               "structural injustice",
               "distaudit"};
  app.require_subcommand(1);

  AuditFlags audit_flags;
  std::string audit_input;
  auto* audit = app.add_subcommand(
      "audit", "Audit one population CSV; exit 0 if all criteria hold");
  AddAuditFlags(*audit, audit_flags);
  audit->add_option("input", audit_input, "Population CSV")
      ->required()
      ->check(CLI::ExistingFile);

  AuditFlags select_flags;
  std::string mode = "lexical";
  std::optional<double> fairness_constraint;
  std::vector<std::string> select_inputs;
  auto* select = app.add_subcommand(
      "select", "Choose among candidate populations (one CSV each)");
  AddAuditFlags(*select, select_flags);
  select->add_option("--mode", mode, "lexical: fairness first; pareto: front")
      ->check(CLI::IsMember({"lexical", "pareto"}))
      ->capture_default_str();
  select->add_option("--fairness-constraint", fairness_constraint,
                     "Largest admissible disparity (default: --tolerance)");
  select->add_option("inputs", select_inputs, "Candidate CSVs")
      ->required()
      ->check(CLI::ExistingFile);

  std::string fixtures_dir;
  auto* fixtures_cmd = app.add_subcommand(
      "fixtures", "Write the canonical example populations as CSV files");
  fixtures_cmd->add_option("--out", fixtures_dir, "Output directory")
      ->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    if (*audit) return RunAudit(audit_flags, audit_input, out);
    if (*select) {
      return RunSelect(select_flags, mode, fairness_constraint, select_inputs,
                       out, err);
    }
    return RunFixtures(fixtures_dir, out);
  } catch (const UsageError& e) {
    err << "distaudit: usage: " << e.what() << '\n';
  } catch (const AuditError& e) {
    err << "distaudit: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace distaudit::cli
