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

#ifndef DISTAUDIT_SELECTION_H_
#define DISTAUDIT_SELECTION_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "distaudit/config.h"
#include "distaudit/population.h"

namespace distaudit {

// One model or distribution under consideration.
struct Candidate {
  std::string name;
  Population population;
};

struct CandidateScore {
  std::string name;
  double justice_value = 0.0;
  Direction justice_direction = Direction::kMaximize;
  // Configured disparity over the primary group measure. Lower is better.
  double fairness_disparity = 0.0;
  bool passes_fairness = false;
  // Set when a leveling-up threshold applies to the primary measure.
  std::optional<bool> passes_leveling_up;
};

// Scores every candidate under the same theory and configuration: deserving
// records only, justice metric over individuals, configured disparity over
// the primary group measure. A candidate passes the fairness constraint if
// its disparity is <= config.fairness_constraint (default: the equality
// tolerance), or, under the leveling-up pattern, if every group clears the
// floor.
// Throws kEmptyInput for no candidates, kDuplicateCandidate for repeated
// names; metric errors are rethrown with the candidate name prepended.
std::vector<CandidateScore> ScoreCandidates(std::span<const Candidate> candidates,
                                            const TheorySpec& theory,
                                            const AuditConfig& config);

// Fairness first, justice second: among candidates passing the fairness
// constraint, the one with the best justice value. Ties go to the smallest
// name. Throws kNoFeasibleCandidate.
std::string LexicalSelect(std::span<const CandidateScore> scores);

// True iff `a` is at least as good as `b` on both objectives (justice in its
// direction, disparity minimized) and strictly better on one.
bool Dominates(const CandidateScore& a, const CandidateScore& b);

// Names of the non-dominated candidates, sorted ascending. Exhaustive
// pairwise check; candidate sets are small.
std::vector<std::string> ParetoFront(std::span<const CandidateScore> scores);

}  // namespace distaudit

#endif  // DISTAUDIT_SELECTION_H_
