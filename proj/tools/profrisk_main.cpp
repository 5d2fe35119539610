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

// profrisk analyze --project NAME=PATH ... --out DIR [options]
// Exit codes: 0 success, 1 fatal configuration or I/O error, 2 bad arguments.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "profrisk/corpus.hpp"

namespace {

constexpr int kExitFatal = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw UsageError("empty list: '" + text + "'");
  return out;
}

unsigned parse_jobs(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || value > 1024 || text[0] == '-') {
    throw UsageError(std::string(what) + " must be an integer in 0..1024, got '" + text + "'");
  }
  return static_cast<unsigned>(value);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joins Python construct proficiency with cyclomatic complexity ranks."};
  app.set_version_flag("--version", std::string(profrisk::kToolVersion));
  app.require_subcommand(1);

  CLI::App* analyze = app.add_subcommand("analyze", "Analyze one or more project checkouts");
  std::vector<std::string> projects;
  std::string out_dir;
  std::string levels = "C1,C2";
  std::string ranks = "A,F";
  std::string registry;
  std::string formats = "csv,json,table";
  std::vector<std::string> excludes;
  std::string include = "**/*.py";
  std::string jobs;
  analyze->add_option("--project", projects, "Project as NAME=PATH (repeatable)")->required();
  analyze->add_option("--out", out_dir, "Output directory")->required();
  analyze->add_option("--levels", levels, "Competency levels to keep")->capture_default_str();
  analyze->add_option("--ranks", ranks, "Complexity ranks that produce cases")->capture_default_str();
  analyze->add_option("--registry", registry, "Construct registry file (class | detector | level)");
  analyze->add_option("--format", formats, "Output formats: csv, json, table")->capture_default_str();
  analyze->add_option("--exclude", excludes, "Glob of relative paths to skip (repeatable)");
  analyze->add_option("--include", include, "Glob of relative paths to analyze")->capture_default_str();
  analyze->add_option("--jobs", jobs, "Worker threads, 0 = all cores (env PROFRISK_JOBS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  profrisk::RunConfig config;
  try {
    for (const std::string& p : projects) {
      const std::size_t eq = p.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == p.size()) {
        throw UsageError("--project expects NAME=PATH, got '" + p + "'");
      }
      config.roots.push_back({p.substr(0, eq), p.substr(eq + 1)});
    }
    config.output_dir = out_dir;
    config.include_glob = include;
    config.exclude_globs = excludes;
    config.keep_levels.clear();
    for (const std::string& l : split_list(levels)) {
      const auto level = profrisk::parse_level(l);
      if (!level) throw UsageError("unknown level '" + l + "'");
      config.keep_levels.insert(*level);
    }
    config.keep_ranks.clear();
    for (const std::string& r : split_list(ranks)) {
      const auto rank = profrisk::parse_rank(r);
      if (!rank) throw UsageError("unknown rank '" + r + "'");
      config.keep_ranks.insert(*rank);
    }
    config.formats.clear();
    for (const std::string& f : split_list(formats)) {
      const auto format = profrisk::parse_format(f);
      if (!format) throw UsageError("unknown format '" + f + "'");
      config.formats.insert(*format);
    }
    if (!registry.empty()) config.registry_path = registry;
    if (!jobs.empty()) {
      config.jobs = parse_jobs(jobs, "--jobs");
    } else if (const char* env = std::getenv("PROFRISK_JOBS"); env != nullptr && *env != '\0') {
      config.jobs = parse_jobs(env, "PROFRISK_JOBS");
    }
    profrisk::validate(config);
  } catch (const UsageError& e) {
    std::cerr << "profrisk: " << e.what() << "\n";
    return kExitUsage;
  } catch (const profrisk::ConfigError& e) {
    std::cerr << "profrisk: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const profrisk::RunManifest m = profrisk::run_analysis(config);
    std::cerr << "profrisk: " << m.parsed << "/" << m.attempted << " files parsed, " << m.skipped
              << " skipped; outputs in " << config.output_dir.string() << "\n";
    for (const auto& s : m.skipped_files) {
      std::cerr << "  skipped " << s.project << ":" << s.relative_path << ": " << s.reason << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "profrisk: " << e.what() << "\n";
    return kExitFatal;
  }
  return 0;
}
