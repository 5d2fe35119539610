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

#ifndef PROFRISK_OUTPUT_HPP_
#define PROFRISK_OUTPUT_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "profrisk/join.hpp"
#include "profrisk/report.hpp"

namespace profrisk {

inline constexpr std::string_view kOccurrenceHeader =
    "project,directory,file,class,start_line,end_line,level";
inline constexpr std::string_view kBlockHeader =
    "project,directory,file,kind,name,cc,rank,line_start,line_end";
inline constexpr std::string_view kCaseHeader =
    "project,directory,file,class,start_line,end_line,level,block_kind,block_name,block_cc,"
    "block_rank,block_line_start,block_line_end,level_category,risk_category";

/// Raised when a CSV document does not match its schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All writers emit UTF-8 with LF line endings and a header row.
std::string occurrences_csv(std::span<const ProficiencyOccurrence> occs);
std::string blocks_csv(std::span<const ComplexityBlock> blocks);
std::string cases_csv(std::span<const JoinedCase> cases);

// Readers validate the header and every domain invariant of each row.
std::vector<ProficiencyOccurrence> parse_occurrences_csv(std::string_view text);
std::vector<ComplexityBlock> parse_blocks_csv(std::string_view text);
std::vector<JoinedCase> parse_cases_csv(std::string_view text);

/// Everything the summary and table renderers need.
struct Summary {
  CategoryMatrix matrix;
  std::vector<ProjectOverviewRow> projects;
  std::vector<ClassTableRow> top_safe;
  std::vector<ClassTableRow> top_risky;
  std::size_t module_level_discards = 0;
  std::size_t rank_discards = 0;
};

inline constexpr std::size_t kTopClassRows = 5;

Summary summarize(std::span<const JoinedCase> cases, std::vector<ProjectOverviewRow> projects,
                  std::size_t module_level_discards, std::size_t rank_discards,
                  std::size_t top_n = kTopClassRows);

/// Deterministic JSON (fixed key order, exact ratios, no timestamps).
std::string summary_json(const Summary& summary);
/// Human-readable tables; percentages rounded to 2 decimals here only.
std::string summary_table(const Summary& summary);

}  // namespace profrisk

#endif  // PROFRISK_OUTPUT_HPP_
