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

#include "profrisk/report.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace profrisk {

std::string_view to_string(Cell cell) {
  switch (cell) {
    case Cell::AdvanceSafe: return "Advance-Safe";
    case Cell::MasterySafe: return "Mastery-Safe";
    case Cell::AdvanceRisky: return "Advance-Risky";
    case Cell::MasteryRisky: return "Mastery-Risky";
  }
  return "?";
}

std::size_t CategoryMatrix::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

double CategoryMatrix::percentage(Cell c) const {
  const std::size_t n = total();
  return n == 0 ? 0.0 : static_cast<double>(count(c)) / static_cast<double>(n);
}

CategoryMatrix& CategoryMatrix::operator+=(const CategoryMatrix& other) {
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  return *this;
}

CategoryMatrix category_matrix(std::span<const JoinedCase> cases) {
  CategoryMatrix m;
  for (const JoinedCase& c : cases) {
    const bool mastery = c.level_category == LevelCategory::Mastery;
    const bool risky = c.risk_category == RiskCategory::Risky;
    const Cell cell = risky ? (mastery ? Cell::MasteryRisky : Cell::AdvanceRisky)
                            : (mastery ? Cell::MasterySafe : Cell::AdvanceSafe);
    ++m.counts[static_cast<std::size_t>(cell)];
  }
  return m;
}

double association_score(const CategoryMatrix& matrix) {
  if (matrix.total() == 0) throw std::invalid_argument("association of an empty matrix");
  const auto as = static_cast<double>(matrix.count(Cell::AdvanceSafe));
  const auto ar = static_cast<double>(matrix.count(Cell::AdvanceRisky));
  const auto ms = static_cast<double>(matrix.count(Cell::MasterySafe));
  const auto mr = static_cast<double>(matrix.count(Cell::MasteryRisky));
  const double denom = (as + ar) * (ms + mr) * (as + ms) * (ar + mr);
  if (denom == 0.0) return 0.0;
  return (as * mr - ar * ms) / std::sqrt(denom);
}

std::vector<ClassTableRow> top_classes(std::span<const JoinedCase> cases, std::size_t n,
                                       RiskCategory risk) {
  if (n == 0) throw std::invalid_argument("top_classes needs n >= 1");
  std::map<std::pair<std::string, LevelCategory>, std::size_t> tally;
  for (const JoinedCase& c : cases) {
    if (c.risk_category != risk) continue;
    ++tally[{c.occurrence.construct_class, c.level_category}];
  }
  std::vector<ClassTableRow> rows;
  rows.reserve(tally.size());
  for (const auto& [key, count] : tally) rows.push_back({key.first, key.second, risk, count});
  std::stable_sort(rows.begin(), rows.end(), [](const ClassTableRow& a, const ClassTableRow& b) {
    if (a.case_count != b.case_count) return a.case_count > b.case_count;
    return std::tie(a.construct_class, a.level_category) <
           std::tie(b.construct_class, b.level_category);
  });
  if (rows.size() > n) rows.resize(n);
  return rows;
}

std::vector<ProjectOverviewRow> project_overview(const FileTally& files,
                                                 std::span<const ProficiencyOccurrence> occs,
                                                 std::span<const ComplexityBlock> blocks) {
  std::map<std::string, ProjectOverviewRow, std::less<>> rows;
  auto row = [&](const std::string& project) -> ProjectOverviewRow& {
    auto [it, inserted] = rows.try_emplace(project);
    if (inserted) it->second.project = project;
    return it->second;
  };
  for (const auto& [project, count] : files) row(project).file_count = count;
  for (const ProficiencyOccurrence& o : occs) {
    if (o.level == CompetencyLevel::C1) ++row(o.project).c1_count;
    if (o.level == CompetencyLevel::C2) ++row(o.project).c2_count;
  }
  for (const ComplexityBlock& b : blocks) {
    if (b.rank == Rank::A) ++row(b.project).rank_a_count;
    if (b.rank == Rank::F) ++row(b.project).rank_f_count;
  }
  std::vector<ProjectOverviewRow> out;
  out.reserve(rows.size());
  for (auto& [name, r] : rows) out.push_back(std::move(r));
  return out;
}

std::string with_thousands(std::size_t value) {
  const std::string digits = std::to_string(value);
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (digits.size() - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return out;
}

}  // namespace profrisk
