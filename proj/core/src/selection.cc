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

#include "distaudit/selection.h"

#include <algorithm>
#include <set>

#include "distaudit/error.h"
#include "distaudit/fairness.h"
#include "distaudit/justice.h"

namespace distaudit {
namespace {

// Justice value flipped so that larger is always better.
double OrientedJustice(const CandidateScore& score) {
  return score.justice_direction == Direction::kMaximize ? score.justice_value
                                                         : -score.justice_value;
}

CandidateScore ScoreOne(const Candidate& candidate, const TheorySpec& theory,
                        const AuditConfig& config) {
  const Population deserving = FilterDeserving(candidate.population);
  const MetricValue justice = JusticeMetric(deserving, theory, config);
  const GroupedPopulation groups = GroupView(deserving, config.expected_groups);
  const GroupMeasureTable table = PrimaryGroupMeasure(groups, theory, config);

  CandidateScore score{
      .name = candidate.name,
      .justice_value = justice.value,
      .justice_direction = justice.direction,
      .fairness_disparity = Disparity(table, config.disparity),
  };
  if (config.leveling_up_threshold && table.higher_is_better) {
    score.passes_leveling_up =
        AllGroupsPass(LevelingUpCheck(table, *config.leveling_up_threshold));
  }
  if (config.pattern == FairnessPattern::kLevelingUp &&
      score.passes_leveling_up) {
    score.passes_fairness = *score.passes_leveling_up;
  } else {
    score.passes_fairness =
        score.fairness_disparity <=
        config.fairness_constraint.value_or(config.equality_tolerance);
  }
  return score;
}

}  // namespace

std::vector<CandidateScore> ScoreCandidates(std::span<const Candidate> candidates,
                                            const TheorySpec& theory,
                                            const AuditConfig& config) {
  if (candidates.empty()) {
    throw AuditError(ErrorCode::kEmptyInput, "no candidates to score");
  }
  config.Validate();
  std::set<std::string> names;
  for (const auto& candidate : candidates) {
    if (!names.insert(candidate.name).second) {
      throw AuditError(ErrorCode::kDuplicateCandidate,
                       "candidate name '" + candidate.name + "' is repeated");
    }
  }
  std::vector<CandidateScore> scores;
  scores.reserve(candidates.size());
  for (const auto& candidate : candidates) {
    try {
      scores.push_back(ScoreOne(candidate, theory, config));
    } catch (const AuditError& e) {
      throw AuditError(e.code(),
                       "candidate '" + candidate.name + "': " + e.what());
    }
  }
  return scores;
}

std::string LexicalSelect(std::span<const CandidateScore> scores) {
  if (scores.empty()) {
    throw AuditError(ErrorCode::kEmptyInput, "no candidate scores");
  }
  const CandidateScore* best = nullptr;
  for (const auto& score : scores) {
    if (!score.passes_fairness) continue;
    if (best == nullptr) {
      best = &score;
      continue;
    }
    const double a = OrientedJustice(score);
    const double b = OrientedJustice(*best);
    if (a > b || (a == b && score.name < best->name)) best = &score;
  }
  if (best == nullptr) {
    throw AuditError(ErrorCode::kNoFeasibleCandidate,
                     "no candidate satisfies the fairness constraint");
  }
  return best->name;
}

bool Dominates(const CandidateScore& a, const CandidateScore& b) {
  const double ja = OrientedJustice(a);
  const double jb = OrientedJustice(b);
  const bool no_worse = ja >= jb && a.fairness_disparity <= b.fairness_disparity;
  const bool better = ja > jb || a.fairness_disparity < b.fairness_disparity;
  return no_worse && better;
}

std::vector<std::string> ParetoFront(std::span<const CandidateScore> scores) {
  std::vector<std::string> front;
  for (const auto& candidate : scores) {
    const bool dominated =
        std::any_of(scores.begin(), scores.end(), [&](const CandidateScore& other) {
          return Dominates(other, candidate);
        });
    if (!dominated) front.push_back(candidate.name);
  }
  std::sort(front.begin(), front.end());
  return front;
}

}  // namespace distaudit
