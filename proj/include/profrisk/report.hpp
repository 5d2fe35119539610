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

#ifndef PROFRISK_REPORT_HPP_
#define PROFRISK_REPORT_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "profrisk/join.hpp"

namespace profrisk {

/// The four Advance/Mastery x Safe/Risky cells, in a fixed order.
enum class Cell : std::uint8_t { AdvanceSafe, MasterySafe, AdvanceRisky, MasteryRisky };

inline constexpr std::array<Cell, 4> kCells = {Cell::AdvanceSafe, Cell::MasterySafe,
                                               Cell::AdvanceRisky, Cell::MasteryRisky};

std::string_view to_string(Cell cell);

struct CategoryMatrix {
  std::array<std::size_t, 4> counts{};

  std::size_t count(Cell c) const { return counts[static_cast<std::size_t>(c)]; }
  std::size_t total() const;
  /// count / total, or 0 when the matrix is empty.
  double percentage(Cell c) const;

  /// Cell-wise sum; aggregation is associative and commutative.
  CategoryMatrix& operator+=(const CategoryMatrix& other);
  friend bool operator==(const CategoryMatrix&, const CategoryMatrix&) = default;
};

CategoryMatrix category_matrix(std::span<const JoinedCase> cases);

/// Phi coefficient of the 2x2 table (rows: Advance/Mastery, columns:
/// Safe/Risky). 0 when a marginal is zero. Throws std::invalid_argument on
/// an empty matrix.
double association_score(const CategoryMatrix& matrix);

/// Printed next to the statistic in reports.
inline constexpr std::string_view kAssociationDefinition =
    "phi = (AS*MR - AR*MS) / sqrt((AS+AR)(MS+MR)(AS+MS)(AR+MR)); "
    "rows Advance/Mastery, columns Safe/Risky; 0 when any marginal is zero";

struct ClassTableRow {
  std::string construct_class;
  LevelCategory level_category = LevelCategory::Advance;
  RiskCategory risk_category = RiskCategory::Safe;
  std::size_t case_count = 0;

  friend bool operator==(const ClassTableRow&, const ClassTableRow&) = default;
};

/// Rows for one risk category, by count descending then class name; at
/// most n rows. Throws std::invalid_argument when n == 0.
std::vector<ClassTableRow> top_classes(std::span<const JoinedCase> cases, std::size_t n,
                                       RiskCategory risk);

struct ProjectOverviewRow {
  std::string project;
  std::size_t file_count = 0;
  std::size_t c1_count = 0;
  std::size_t c2_count = 0;
  std::size_t rank_a_count = 0;
  std::size_t rank_f_count = 0;

  friend bool operator==(const ProjectOverviewRow&, const ProjectOverviewRow&) = default;
};

/// Files attempted per project, parseable or not.
using FileTally = std::map<std::string, std::size_t, std::less<>>;

/// One row per project (every project in `files`, plus any that only show
/// up in occurrences or blocks), sorted by name.
std::vector<ProjectOverviewRow> project_overview(const FileTally& files,
                                                 std::span<const ProficiencyOccurrence> occs,
                                                 std::span<const ComplexityBlock> blocks);

/// Decimal with ',' thousands separators, for human-readable tables only.
std::string with_thousands(std::size_t value);

}  // namespace profrisk

#endif  // PROFRISK_REPORT_HPP_
