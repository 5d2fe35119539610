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

#include "profrisk/corpus.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iterator>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "profrisk/report.hpp"

namespace fs = std::filesystem;

namespace profrisk {

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
    case OutputFormat::Table: return "table";
  }
  return "?";
}

std::optional<OutputFormat> parse_format(std::string_view text) {
  for (OutputFormat f : {OutputFormat::Csv, OutputFormat::Json, OutputFormat::Table}) {
    if (to_string(f) == text) return f;
  }
  return std::nullopt;
}

void validate(const RunConfig& config) {
  if (config.roots.empty()) throw ConfigError("no projects configured");
  std::set<std::string, std::less<>> names;
  for (const ProjectRoot& r : config.roots) {
    if (r.name.empty()) throw ConfigError("empty project name");
    if (!names.insert(r.name).second) throw ConfigError("duplicate project name: " + r.name);
  }
  if (config.include_glob.empty()) throw ConfigError("empty include glob");
  if (config.output_dir.empty()) throw ConfigError("no output directory");
}

namespace {

std::vector<std::string_view> split_path(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t slash = std::min(s.find('/', start), s.size());
    if (slash > start) parts.push_back(s.substr(start, slash - start));
    start = slash + 1;
  }
  return parts;
}

bool match_segments(std::span<const std::string_view> pat, std::span<const std::string_view> path) {
  if (pat.empty()) return path.empty();
  if (pat.front() == "**") {
    for (std::size_t skip = 0; skip <= path.size(); ++skip) {
      if (match_segments(pat.subspan(1), path.subspan(skip))) return true;
    }
    return false;
  }
  if (path.empty()) return false;
  const std::string p(pat.front());
  const std::string name(path.front());
  return fnmatch(p.c_str(), name.c_str(), 0) == 0 && match_segments(pat.subspan(1), path.subspan(1));
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view path) {
  const auto pat = split_path(pattern);
  const auto segs = split_path(path);
  return match_segments(pat, segs);
}

FileRef CorpusFile::ref() const {
  const std::size_t slash = relative_path.rfind('/');
  if (slash == std::string::npos) return {project, ".", relative_path};
  return {project, relative_path.substr(0, slash), relative_path.substr(slash + 1)};
}

std::vector<CorpusFile> walk_corpus(const RunConfig& config) {
  std::vector<CorpusFile> files;
  for (const ProjectRoot& root : config.roots) {
    std::error_code ec;
    const auto status = fs::status(root.path, ec);
    if (ec || !fs::exists(status)) throw MissingRoot(root.path);
    if (!fs::is_directory(status)) {
      throw ConfigError("project root is not a directory: " + root.path.string());
    }
    const fs::path base = fs::absolute(root.path);
    std::vector<CorpusFile> mine;
    fs::recursive_directory_iterator it(base, fs::directory_options::skip_permission_denied, ec);
    if (ec) throw ConfigError("cannot read " + base.string() + ": " + ec.message());
    for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
      if (ec) throw ConfigError("cannot read " + base.string() + ": " + ec.message());
      const fs::directory_entry& entry = *it;
      if (entry.is_symlink(ec)) {
        // Directory symlinks are not followed by the iterator either.
        continue;
      }
      if (!entry.is_regular_file(ec)) continue;
      std::string rel = entry.path().lexically_relative(base).generic_string();
      if (!glob_match(config.include_glob, rel)) continue;
      const bool excluded = std::any_of(config.exclude_globs.begin(), config.exclude_globs.end(),
                                        [&](const std::string& g) { return glob_match(g, rel); });
      if (excluded) continue;
      mine.push_back({root.name, std::move(rel), entry.path()});
    }
    files.insert(files.end(), std::make_move_iterator(mine.begin()),
                 std::make_move_iterator(mine.end()));
  }
  std::sort(files.begin(), files.end(), [](const CorpusFile& a, const CorpusFile& b) {
    return std::tie(a.project, a.relative_path) < std::tie(b.project, b.relative_path);
  });
  return files;
}

namespace {

struct FileOutcome {
  bool parsed = false;
  std::string skip_reason;
  std::vector<ProficiencyOccurrence> occurrences;
  std::vector<ComplexityBlock> blocks;
  JoinResult joined;
};

bool read_file(const fs::path& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return !in.bad();
}

FileOutcome analyze_one(const CorpusFile& file, const RunConfig& config,
                        const ConstructRegistry& registry) {
  FileOutcome out;
  std::string bytes;
  if (!read_file(file.absolute_path, bytes)) {
    out.skip_reason = "unreadable file";
    return out;
  }
  const FileRef ref = file.ref();
  try {
    const SyntaxTree tree = parse_source(bytes, file.relative_path);
    out.occurrences = filter_by_level(classify_constructs(tree, registry, ref), config.keep_levels);
    out.blocks = analyze_file_complexity(tree, ref);
  } catch (const ParseError& e) {
    out.skip_reason = e.what();
    return out;
  } catch (const std::exception& e) {
    // Resource exhaustion on a pathological file must not abort the run.
    out.skip_reason = std::string("analysis error: ") + e.what();
    out.occurrences.clear();
    return out;
  }
  std::vector<ProficiencyOccurrence> joinable;
  for (const auto& o : out.occurrences) {
    const LevelCategory c = category_of(o.level);
    if (c == LevelCategory::Advance || c == LevelCategory::Mastery) joinable.push_back(o);
  }
  const FileRef files[] = {ref};
  out.joined = join_cases(joinable, out.blocks, files, config.keep_ranks);
  out.parsed = true;
  return out;
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

RunResult analyze_corpus(const RunConfig& config, const ConstructRegistry& registry) {
  validate(config);
  const std::vector<CorpusFile> files = walk_corpus(config);

  std::vector<FileOutcome> outcomes(files.size());
  unsigned jobs = config.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(files.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      outcomes[i] = analyze_one(files[i], config, registry);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  RunResult result;
  RunManifest& m = result.manifest;
  m.grammar = std::string(kGrammarLevel);
  m.registry_digest = registry.digest();
  m.timestamp = utc_now();
  m.config = config;
  m.attempted = files.size();

  FileTally tally;
  for (const ProjectRoot& r : config.roots) tally[r.name] = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    FileOutcome& o = outcomes[i];
    ++tally[files[i].project];
    if (!o.parsed) {
      m.skipped_files.push_back({files[i].project, files[i].relative_path, o.skip_reason});
      continue;
    }
    ++m.parsed;
    std::move(o.occurrences.begin(), o.occurrences.end(), std::back_inserter(result.occurrences));
    std::move(o.blocks.begin(), o.blocks.end(), std::back_inserter(result.blocks));
    std::move(o.joined.cases.begin(), o.joined.cases.end(), std::back_inserter(result.cases));
    m.module_level_discards += o.joined.module_level_discards;
    m.rank_discards += o.joined.rank_discards;
  }
  m.skipped = m.skipped_files.size();

  // Walk order is by relative path; outputs are ordered by (directory, file).
  auto by_file = [](const auto& a, const auto& b) { return a.file_ref() < b.file_ref(); };
  std::stable_sort(result.occurrences.begin(), result.occurrences.end(), by_file);
  std::stable_sort(result.blocks.begin(), result.blocks.end(), by_file);
  std::stable_sort(result.cases.begin(), result.cases.end(), case_order);

  result.summary = summarize(result.cases,
                             project_overview(tally, result.occurrences, result.blocks),
                             m.module_level_discards, m.rank_discards);
  return result;
}

std::string manifest_json(const RunManifest& m) {
  using nlohmann::ordered_json;
  ordered_json skipped = ordered_json::array();
  for (const SkippedFile& s : m.skipped_files) {
    skipped.push_back({{"project", s.project}, {"path", s.relative_path}, {"reason", s.reason}});
  }
  ordered_json projects = ordered_json::array();
  for (const ProjectRoot& r : m.config.roots) {
    projects.push_back({{"name", r.name}, {"path", r.path.generic_string()}});
  }
  ordered_json levels = ordered_json::array();
  for (CompetencyLevel l : m.config.keep_levels) levels.push_back(to_string(l));
  ordered_json ranks = ordered_json::array();
  for (Rank r : m.config.keep_ranks) ranks.push_back(to_string(r));
  ordered_json formats = ordered_json::array();
  for (OutputFormat f : m.config.formats) formats.push_back(to_string(f));

  ordered_json config = ordered_json::object();
  config["projects"] = projects;
  config["include_glob"] = m.config.include_glob;
  config["exclude_globs"] = m.config.exclude_globs;
  config["levels"] = levels;
  config["ranks"] = ranks;
  if (m.config.registry_path) {
    config["registry"] = m.config.registry_path->generic_string();
  } else {
    config["registry"] = nullptr;
  }
  config["output_dir"] = m.config.output_dir.generic_string();
  config["formats"] = formats;
  config["jobs"] = m.config.jobs;

  ordered_json doc = ordered_json::object();
  doc["tool_version"] = m.tool_version;
  doc["grammar"] = m.grammar;
  doc["registry_digest"] = m.registry_digest;
  doc["timestamp"] = m.timestamp;
  doc["files"] = {{"attempted", m.attempted}, {"parsed", m.parsed}, {"skipped", m.skipped}};
  doc["skipped_files"] = skipped;
  doc["discards"] = {{"module_level", m.module_level_discards}, {"rank", m.rank_discards}};
  doc["percentages"] = "pooled over all joined cases";
  doc["config"] = config;
  return doc.dump(2) + "\n";
}

namespace {

void write_output(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw ConfigError("cannot write " + path.string());
}

}  // namespace

RunManifest run_analysis(const RunConfig& config) {
  validate(config);
  ConstructRegistry registry;
  if (config.registry_path) {
    try {
      registry = ConstructRegistry::load(config.registry_path->string());
    } catch (const RegistryError& e) {
      throw ConfigError("invalid registry " + config.registry_path->string() + ": " + e.what());
    }
  } else {
    registry = ConstructRegistry::builtin();
  }

  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec || !fs::is_directory(config.output_dir)) {
    throw ConfigError("cannot create output directory " + config.output_dir.string());
  }

  const RunResult r = analyze_corpus(config, registry);
  const fs::path& dir = config.output_dir;
  if (config.formats.contains(OutputFormat::Csv)) {
    write_output(dir / "occurrences.csv", occurrences_csv(r.occurrences));
    write_output(dir / "blocks.csv", blocks_csv(r.blocks));
    write_output(dir / "cases.csv", cases_csv(r.cases));
  }
  if (config.formats.contains(OutputFormat::Json)) {
    write_output(dir / "summary.json", summary_json(r.summary));
  }
  if (config.formats.contains(OutputFormat::Table)) {
    write_output(dir / "report.txt", summary_table(r.summary));
  }
  write_output(dir / "manifest.json", manifest_json(r.manifest));
  return r.manifest;
}

}  // namespace profrisk
