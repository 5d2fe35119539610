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

#ifndef PROFRISK_PROFICIENCY_HPP_
#define PROFRISK_PROFICIENCY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "profrisk/syntax.hpp"

namespace profrisk {

/// CEFR-style competency scale, A1 lowest.
enum class CompetencyLevel : std::uint8_t { A1, A2, B1, B2, C1, C2 };

/// C1 is "Advance", C2 is "Mastery"; lower levels fall outside the study.
enum class LevelCategory : std::uint8_t { Basic, Intermediate, Advance, Mastery };

LevelCategory category_of(CompetencyLevel level);
std::string_view to_string(CompetencyLevel level);
std::string_view to_string(LevelCategory category);
std::optional<CompetencyLevel> parse_level(std::string_view text);

/// Identifies the file an analysis result belongs to.
struct FileRef {
  std::string project;
  std::string directory;
  std::string file;

  auto operator<=>(const FileRef&) const = default;
};

class RegistryError : public std::runtime_error {
 public:
  RegistryError(int line, const std::string& message)
      : std::runtime_error("registry line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Maps construct-class names to a level and a syntactic detector.
///
/// Detector ids:
///   simple-list-comprehension      list comprehension, one `for`, element
///                                  not itself a comprehension
///   nested-list-comprehension      any other list comprehension
///   simple-dict-comprehension      same split for dict comprehensions
///   nested-dict-comprehension
///   generator-expression
///   yield                          `yield` and `yield from` expressions
///   call:NAME                      call whose callee is the bare name NAME
///   node:KIND                      any node of the given kind (as printed
///                                  by to_string(NodeKind))
class ConstructRegistry {
 public:
  struct Entry {
    std::string construct_class;
    std::string detector;
    CompetencyLevel level = CompetencyLevel::A1;
  };

  ConstructRegistry() = default;

  /// Adds one entry; throws RegistryError for duplicate classes or unknown
  /// detector ids.
  void add(std::string construct_class, std::string detector,
           CompetencyLevel level, int line = 0);

  /// Parses the `class | detector | level` text format. Blank lines and
  /// lines starting with '#' are ignored.
  static ConstructRegistry parse(std::string_view text);
  static ConstructRegistry load(const std::string& path);

  /// The shipped taxonomy.
  static const ConstructRegistry& builtin();
  static std::string_view builtin_text();

  std::span<const Entry> entries() const { return entries_; }
  const Entry* find(std::string_view construct_class) const;
  /// Serialization in the text format, one entry per line in insertion order.
  std::string to_text() const;
  /// Stable digest of to_text(), "fnv1a64:<16 hex digits>".
  std::string digest() const;

  static bool is_valid_detector(std::string_view detector);

 private:
  std::vector<Entry> entries_;
  std::map<std::string, std::size_t, std::less<>> by_class_;
};

/// One detected construct.
struct ProficiencyOccurrence {
  std::string project;
  std::string directory;
  std::string file;
  std::string construct_class;
  int start_line = 0;
  int end_line = 0;
  CompetencyLevel level = CompetencyLevel::A1;

  FileRef file_ref() const { return {project, directory, file}; }
  friend bool operator==(const ProficiencyOccurrence&, const ProficiencyOccurrence&) = default;
};

/// One occurrence per matching (node, registry entry) pair, in source order.
std::vector<ProficiencyOccurrence> classify_constructs(const SyntaxTree& tree,
                                                       const ConstructRegistry& registry,
                                                       const FileRef& where = {});

std::vector<ProficiencyOccurrence> filter_by_level(std::span<const ProficiencyOccurrence> occs,
                                                   const std::set<CompetencyLevel>& keep);

}  // namespace profrisk

#endif  // PROFRISK_PROFICIENCY_HPP_
