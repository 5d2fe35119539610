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

#ifndef PROFRISK_COMPLEXITY_HPP_
#define PROFRISK_COMPLEXITY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "profrisk/proficiency.hpp"
#include "profrisk/syntax.hpp"

namespace profrisk {

/// McCabe cyclomatic complexity: decision points + 1. Always >= 1.
class ComplexityScore {
 public:
  explicit ComplexityScore(int value);
  int value() const { return value_; }
  auto operator<=>(const ComplexityScore&) const = default;

 private:
  int value_;
};

enum class Rank : std::uint8_t { A, B, C, D, E, F };

/// A is Safe, F is Risky, B-E sit between and are not studied.
enum class RiskCategory : std::uint8_t { Safe, Intermediate, Risky };

/// A 1-5, B 6-10, C 11-20, D 21-30, E 31-40, F 41+.
Rank rank_of(ComplexityScore score);
/// Throws std::invalid_argument when score < 1.
Rank rank_of(int score);
RiskCategory risk_of(Rank rank);
std::string_view to_string(Rank rank);
std::string_view to_string(RiskCategory category);
std::optional<Rank> parse_rank(std::string_view text);

struct ComplexityBlock {
  std::string project;
  std::string directory;
  std::string file;
  BlockKind kind = BlockKind::Function;
  std::string qualified_name;
  ComplexityScore score{1};
  Rank rank = Rank::A;
  int start_line = 0;
  int end_line = 0;

  FileRef file_ref() const { return {project, directory, file}; }
  friend bool operator==(const ComplexityBlock&, const ComplexityBlock&) = default;
};

/// Complexity of a function or method block: 1 plus the decision points in
/// its body, not counting nested definitions (scored on their own), the
/// decorators, or parameter defaults. Decision points: if/elif, conditional
/// expression, for/async for and while (+1 more with an `else` clause),
/// each except handler (+1 for a try `else`), assert, each and/or operator,
/// each comprehension `for` and `if` clause, and each match case except a
/// bare capture/wildcard case.
///
/// For a class block the score follows the reference tool's class metric:
/// with n methods and total = 1 + class-body decisions + sum of method
/// scores, the score is floor(total / n) + (n > 1 ? 1 : 0). A class with no
/// methods scores 1 + its body decisions.
ComplexityScore cyclomatic_complexity(const BlockSpan& block, const SyntaxTree& tree);

/// One block per function and method plus one per class that has methods,
/// in source order.
std::vector<ComplexityBlock> analyze_file_complexity(const SyntaxTree& tree,
                                                     const FileRef& where = {});

}  // namespace profrisk

#endif  // PROFRISK_COMPLEXITY_HPP_
