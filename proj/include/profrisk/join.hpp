// Copyright 2026 The profrisk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROFRISK_JOIN_HPP_
#define PROFRISK_JOIN_HPP_

#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "profrisk/complexity.hpp"
#include "profrisk/proficiency.hpp"

namespace profrisk {

/// Raised when join inputs cannot come from a correctly wired pipeline.
class InconsistentInput : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A C1/C2 occurrence paired with its innermost enclosing A- or F-ranked
/// block. level_category is Advance or Mastery; risk_category is Safe or
/// Risky.
struct JoinedCase {
  ProficiencyOccurrence occurrence;
  ComplexityBlock block;
  LevelCategory level_category = LevelCategory::Advance;
  RiskCategory risk_category = RiskCategory::Safe;

  friend bool operator==(const JoinedCase&, const JoinedCase&) = default;
};

struct JoinResult {
  std::vector<JoinedCase> cases;
  /// Occurrences that no block contains.
  std::size_t module_level_discards = 0;
  /// Occurrences whose innermost block is ranked outside keep_ranks.
  std::size_t rank_discards = 0;
};

/// Pairs each occurrence with the smallest function/method block of the
/// same file containing its whole span, falling back to the smallest
/// containing class block. Blocks of one file must nest (any two are
/// disjoint or one contains the other).
///
/// `analyzed_files` lists every file whose blocks were computed, including
/// files with no blocks; an occurrence from any other file throws
/// InconsistentInput, as does an occurrence below C1. Only Safe/Risky
/// ranks can produce cases; `keep_ranks` may narrow that further.
///
/// Cases are ordered by (file, occurrence start line, construct class).
JoinResult join_cases(std::span<const ProficiencyOccurrence> occs,
                      std::span<const ComplexityBlock> blocks,
                      std::span<const FileRef> analyzed_files,
                      const std::set<Rank>& keep_ranks = {Rank::A, Rank::F});

/// Convenience overload: the analyzed files are the files of `blocks` plus
/// the files of `occs`. Use the full form to detect wiring errors.
JoinResult join_cases(std::span<const ProficiencyOccurrence> occs,
                      std::span<const ComplexityBlock> blocks);

std::pair<LevelCategory, RiskCategory> category_of(const JoinedCase& c);

/// Strict weak order used for case output.
bool case_order(const JoinedCase& a, const JoinedCase& b);

}  // namespace profrisk

#endif  // PROFRISK_JOIN_HPP_
