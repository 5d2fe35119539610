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

#include "profrisk/join.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace profrisk {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Blocks of one kind group in one file, ordered by (start asc, end desc)
// so that every block follows the blocks containing it.
class SpanForest {
 public:
  void add(const ComplexityBlock* block) { blocks_.push_back(block); }

  void build() {
    std::stable_sort(blocks_.begin(), blocks_.end(),
                     [](const ComplexityBlock* a, const ComplexityBlock* b) {
                       return std::tie(a->start_line, b->end_line) <
                              std::tie(b->start_line, a->end_line);
                     });
    parent_.assign(blocks_.size(), kNone);
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      const ComplexityBlock& b = *blocks_[i];
      while (!open.empty() && blocks_[open.back()]->end_line < b.start_line) open.pop_back();
      if (!open.empty()) {
        if (blocks_[open.back()]->end_line < b.end_line) {
          throw InconsistentInput("blocks '" + blocks_[open.back()]->qualified_name +
                                  "' and '" + b.qualified_name + "' in " + b.file +
                                  " overlap without nesting");
        }
        parent_[i] = open.back();
      }
      open.push_back(i);
    }
  }

  // Smallest block containing [start, end], or nullptr.
  const ComplexityBlock* innermost(int start, int end) const {
    const auto it = std::upper_bound(
        blocks_.begin(), blocks_.end(), start,
        [](int line, const ComplexityBlock* b) { return line < b->start_line; });
    if (it == blocks_.begin()) return nullptr;
    for (std::size_t i = static_cast<std::size_t>(it - blocks_.begin()) - 1; i != kNone;
         i = parent_[i]) {
      if (blocks_[i]->end_line >= end) return blocks_[i];
    }
    return nullptr;
  }

 private:
  std::vector<const ComplexityBlock*> blocks_;
  std::vector<std::size_t> parent_;
};

struct FileBlocks {
  SpanForest functions;
  SpanForest classes;
};

JoinResult join_impl(std::span<const ProficiencyOccurrence> occs,
                     std::map<FileRef, FileBlocks>& by_file,
                     std::span<const ComplexityBlock> blocks,
                     const std::set<Rank>& keep_ranks) {
  for (const ComplexityBlock& b : blocks) {
    FileBlocks& fb = by_file[b.file_ref()];
    (b.kind == BlockKind::Class ? fb.classes : fb.functions).add(&b);
  }
  for (auto& [file, fb] : by_file) {
    fb.functions.build();
    fb.classes.build();
  }

  JoinResult result;
  for (const ProficiencyOccurrence& occ : occs) {
    const LevelCategory level = category_of(occ.level);
    if (level != LevelCategory::Advance && level != LevelCategory::Mastery) {
      throw InconsistentInput("occurrence below C1 passed to join: " + occ.construct_class);
    }
    const auto it = by_file.find(occ.file_ref());
    if (it == by_file.end()) {
      throw InconsistentInput("no block list for " + occ.directory + "/" + occ.file);
    }
    const ComplexityBlock* block = it->second.functions.innermost(occ.start_line, occ.end_line);
    if (block == nullptr) block = it->second.classes.innermost(occ.start_line, occ.end_line);
    if (block == nullptr) {
      ++result.module_level_discards;
      continue;
    }
    const RiskCategory risk = risk_of(block->rank);
    if (risk == RiskCategory::Intermediate || !keep_ranks.contains(block->rank)) {
      ++result.rank_discards;
      continue;
    }
    result.cases.push_back({occ, *block, level, risk});
  }
  std::stable_sort(result.cases.begin(), result.cases.end(), case_order);
  return result;
}

}  // namespace

JoinResult join_cases(std::span<const ProficiencyOccurrence> occs,
                      std::span<const ComplexityBlock> blocks,
                      std::span<const FileRef> analyzed_files,
                      const std::set<Rank>& keep_ranks) {
  std::map<FileRef, FileBlocks> by_file;
  for (const FileRef& f : analyzed_files) by_file[f];
  for (const ComplexityBlock& b : blocks) {
    if (!by_file.contains(b.file_ref())) {
      throw InconsistentInput("block '" + b.qualified_name + "' belongs to unlisted file " +
                              b.directory + "/" + b.file);
    }
  }
  return join_impl(occs, by_file, blocks, keep_ranks);
}

JoinResult join_cases(std::span<const ProficiencyOccurrence> occs,
                      std::span<const ComplexityBlock> blocks) {
  std::map<FileRef, FileBlocks> by_file;
  for (const ProficiencyOccurrence& o : occs) by_file[o.file_ref()];
  return join_impl(occs, by_file, blocks, {Rank::A, Rank::F});
}

std::pair<LevelCategory, RiskCategory> category_of(const JoinedCase& c) {
  return {c.level_category, c.risk_category};
}

bool case_order(const JoinedCase& a, const JoinedCase& b) {
  const auto& x = a.occurrence;
  const auto& y = b.occurrence;
  return std::tie(x.project, x.directory, x.file, x.start_line, x.construct_class, x.end_line,
                  a.block.start_line) <
         std::tie(y.project, y.directory, y.file, y.start_line, y.construct_class, y.end_line,
                  b.block.start_line);
}

}  // namespace profrisk
