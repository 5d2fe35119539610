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

#ifndef PROFRISK_CORPUS_HPP_
#define PROFRISK_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "profrisk/join.hpp"
#include "profrisk/output.hpp"

namespace profrisk {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class OutputFormat : std::uint8_t { Csv, Json, Table };
std::string_view to_string(OutputFormat format);
std::optional<OutputFormat> parse_format(std::string_view text);

struct ProjectRoot {
  std::string name;
  std::filesystem::path path;
};

struct RunConfig {
  std::vector<ProjectRoot> roots;
  std::string include_glob = "**/*.py";
  std::vector<std::string> exclude_globs;
  std::set<CompetencyLevel> keep_levels = {CompetencyLevel::C1, CompetencyLevel::C2};
  std::set<Rank> keep_ranks = {Rank::A, Rank::F};
  std::optional<std::filesystem::path> registry_path;
  std::filesystem::path output_dir;
  std::set<OutputFormat> formats = {OutputFormat::Csv, OutputFormat::Json, OutputFormat::Table};
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 1;
};

/// Invalid configuration or unusable output location (fatal).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingRoot : public ConfigError {
 public:
  explicit MissingRoot(std::filesystem::path path)
      : ConfigError("project root does not exist: " + path.string()), path_(std::move(path)) {}
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

/// Throws ConfigError for an empty or duplicate project list, an empty
/// project name, or an empty output directory.
void validate(const RunConfig& config);

/// Glob over '/'-separated relative paths. `*`, `?` and `[...]` stay within
/// one segment; a `**` segment matches zero or more whole segments.
bool glob_match(std::string_view pattern, std::string_view path);

struct CorpusFile {
  std::string project;
  /// Path relative to the project root, '/'-separated.
  std::string relative_path;
  std::filesystem::path absolute_path;

  /// directory = parent of relative_path ("." at the root), file = name.
  FileRef ref() const;
};

/// Regular files under each root matching include_glob and none of
/// exclude_globs, ordered by (project, relative_path). Symlinks are
/// neither followed nor listed. Throws MissingRoot.
std::vector<CorpusFile> walk_corpus(const RunConfig& config);

struct SkippedFile {
  std::string project;
  std::string relative_path;
  std::string reason;
};

struct RunManifest {
  std::string tool_version{kToolVersion};
  std::string grammar;
  std::string registry_digest;
  std::size_t attempted = 0;
  std::size_t parsed = 0;
  std::size_t skipped = 0;
  std::vector<SkippedFile> skipped_files;
  std::size_t module_level_discards = 0;
  std::size_t rank_discards = 0;
  /// ISO 8601 UTC, e.g. 2026-01-31T12:00:00Z.
  std::string timestamp;
  RunConfig config;
};

/// Everything a run produces, before serialization.
struct RunResult {
  RunManifest manifest;
  /// Filtered by keep_levels.
  std::vector<ProficiencyOccurrence> occurrences;
  /// Every function, method and class block.
  std::vector<ComplexityBlock> blocks;
  std::vector<JoinedCase> cases;
  Summary summary;
};

/// The in-memory pipeline: walk, parse, classify, score, join and
/// aggregate. Per-file parse or decode failures are recorded as skips.
/// Output is independent of config.jobs.
RunResult analyze_corpus(const RunConfig& config, const ConstructRegistry& registry);

std::string manifest_json(const RunManifest& manifest);

/// Full run: loads the registry (builtin when registry_path is unset),
/// analyzes, and writes the selected formats plus manifest.json into
/// output_dir. Throws ConfigError on an invalid config, an unreadable
/// registry or an unwritable output directory.
RunManifest run_analysis(const RunConfig& config);

}  // namespace profrisk

#endif  // PROFRISK_CORPUS_HPP_
