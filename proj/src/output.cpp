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

#include "profrisk/output.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <optional>

#include "json.hpp"

namespace profrisk {

namespace {

using Row = std::vector<std::string>;

void put_field(std::string& out, std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
    out += field;
    return;
  }
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
}

void put_row(std::string& out, std::initializer_list<std::string_view> fields) {
  bool first = true;
  for (std::string_view f : fields) {
    if (!first) out.push_back(',');
    first = false;
    put_field(out, f);
  }
  out.push_back('\n');
}

// RFC 4180 reader; rows end at LF (a preceding CR is dropped).
std::vector<Row> read_csv(std::string_view text) {
  std::vector<Row> rows;
  Row row;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c != '"') {
        field.push_back(c);
      } else if (i + 1 < text.size() && text[i + 1] == '"') {
        field.push_back('"');
        ++i;
      } else {
        quoted = false;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started) throw SchemaError("stray quote in CSV field");
        quoted = true;
        field_started = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        field_started = false;
        break;
      case '\r':
        break;
      case '\n':
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
        field.clear();
        row.clear();
        field_started = false;
        break;
      default:
        field.push_back(c);
        field_started = true;
    }
  }
  if (quoted) throw SchemaError("unterminated quoted CSV field");
  if (field_started || !row.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Row> read_table(std::string_view text, std::string_view header) {
  std::vector<Row> rows = read_csv(text);
  if (rows.empty()) throw SchemaError("missing CSV header");
  std::string got;
  for (std::size_t i = 0; i < rows[0].size(); ++i) {
    if (i) got.push_back(',');
    got += rows[0][i];
  }
  if (got != header) throw SchemaError("unexpected CSV header: " + got);
  const std::size_t width = rows[0].size();
  rows.erase(rows.begin());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) {
      throw SchemaError("row " + std::to_string(i + 2) + " has " +
                        std::to_string(rows[i].size()) + " fields, expected " +
                        std::to_string(width));
    }
  }
  return rows;
}

int to_int(const std::string& s, std::string_view what) {
  int value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw SchemaError("bad integer for " + std::string(what) + ": '" + s + "'");
  }
  return value;
}

void check_span(int start, int end) {
  if (start < 1 || end < start) {
    throw SchemaError("invalid line span " + std::to_string(start) + "-" + std::to_string(end));
  }
}

CompetencyLevel to_level(const std::string& s) {
  const auto level = parse_level(s);
  if (!level) throw SchemaError("bad level '" + s + "'");
  return *level;
}

Rank to_rank(const std::string& s) {
  const auto rank = parse_rank(s);
  if (!rank) throw SchemaError("bad rank '" + s + "'");
  return *rank;
}

BlockKind to_kind(const std::string& s) {
  for (BlockKind k : {BlockKind::Function, BlockKind::Method, BlockKind::Class}) {
    if (to_string(k) == s) return k;
  }
  throw SchemaError("bad block kind '" + s + "'");
}

ProficiencyOccurrence occurrence_from(const Row& r) {
  ProficiencyOccurrence o{r[0], r[1], r[2], r[3], to_int(r[4], "start_line"),
                          to_int(r[5], "end_line"), to_level(r[6])};
  check_span(o.start_line, o.end_line);
  if (o.construct_class.empty()) throw SchemaError("empty construct class");
  return o;
}

ComplexityBlock block_from(const Row& r, std::size_t at) {
  const int cc = to_int(r[at + 2], "cc");
  if (cc < 1) throw SchemaError("cc below 1");
  ComplexityBlock b{r[0],
                    r[1],
                    r[2],
                    to_kind(r[at]),
                    r[at + 1],
                    ComplexityScore(cc),
                    to_rank(r[at + 3]),
                    to_int(r[at + 4], "line_start"),
                    to_int(r[at + 5], "line_end")};
  check_span(b.start_line, b.end_line);
  if (b.rank != rank_of(b.score)) throw SchemaError("rank does not match cc");
  return b;
}

}  // namespace

std::string occurrences_csv(std::span<const ProficiencyOccurrence> occs) {
  std::string out(kOccurrenceHeader);
  out.push_back('\n');
  for (const auto& o : occs) {
    put_row(out, {o.project, o.directory, o.file, o.construct_class,
                  std::to_string(o.start_line), std::to_string(o.end_line), to_string(o.level)});
  }
  return out;
}

std::string blocks_csv(std::span<const ComplexityBlock> blocks) {
  std::string out(kBlockHeader);
  out.push_back('\n');
  for (const auto& b : blocks) {
    put_row(out, {b.project, b.directory, b.file, to_string(b.kind), b.qualified_name,
                  std::to_string(b.score.value()), to_string(b.rank),
                  std::to_string(b.start_line), std::to_string(b.end_line)});
  }
  return out;
}

std::string cases_csv(std::span<const JoinedCase> cases) {
  std::string out(kCaseHeader);
  out.push_back('\n');
  for (const auto& c : cases) {
    const auto& o = c.occurrence;
    const auto& b = c.block;
    put_row(out, {o.project, o.directory, o.file, o.construct_class,
                  std::to_string(o.start_line), std::to_string(o.end_line), to_string(o.level),
                  to_string(b.kind), b.qualified_name, std::to_string(b.score.value()),
                  to_string(b.rank), std::to_string(b.start_line), std::to_string(b.end_line),
                  to_string(c.level_category), to_string(c.risk_category)});
  }
  return out;
}

std::vector<ProficiencyOccurrence> parse_occurrences_csv(std::string_view text) {
  std::vector<ProficiencyOccurrence> out;
  for (const Row& r : read_table(text, kOccurrenceHeader)) out.push_back(occurrence_from(r));
  return out;
}

std::vector<ComplexityBlock> parse_blocks_csv(std::string_view text) {
  std::vector<ComplexityBlock> out;
  for (const Row& r : read_table(text, kBlockHeader)) out.push_back(block_from(r, 3));
  return out;
}

std::vector<JoinedCase> parse_cases_csv(std::string_view text) {
  std::vector<JoinedCase> out;
  for (const Row& r : read_table(text, kCaseHeader)) {
    JoinedCase c{occurrence_from(r), block_from(r, 7), LevelCategory::Advance,
                 RiskCategory::Safe};
    c.level_category = category_of(c.occurrence.level);
    c.risk_category = risk_of(c.block.rank);
    if (to_string(c.level_category) != r[13] || to_string(c.risk_category) != r[14]) {
      throw SchemaError("category columns disagree with level/rank");
    }
    if (c.level_category != LevelCategory::Advance && c.level_category != LevelCategory::Mastery) {
      throw SchemaError("case level below C1");
    }
    if (c.risk_category == RiskCategory::Intermediate) throw SchemaError("case rank B-E");
    if (c.occurrence.start_line < c.block.start_line || c.occurrence.end_line > c.block.end_line) {
      throw SchemaError("occurrence outside its block");
    }
    out.push_back(std::move(c));
  }
  return out;
}

Summary summarize(std::span<const JoinedCase> cases, std::vector<ProjectOverviewRow> projects,
                  std::size_t module_level_discards, std::size_t rank_discards,
                  std::size_t top_n) {
  Summary s;
  s.matrix = category_matrix(cases);
  s.projects = std::move(projects);
  s.top_safe = top_classes(cases, top_n, RiskCategory::Safe);
  s.top_risky = top_classes(cases, top_n, RiskCategory::Risky);
  s.module_level_discards = module_level_discards;
  s.rank_discards = rank_discards;
  return s;
}

std::string summary_json(const Summary& s) {
  using nlohmann::ordered_json;
  ordered_json counts = ordered_json::object();
  ordered_json shares = ordered_json::object();
  for (Cell cell : kCells) {
    counts[std::string(to_string(cell))] = s.matrix.count(cell);
    shares[std::string(to_string(cell))] = s.matrix.percentage(cell);
  }
  ordered_json association = ordered_json::object();
  association["statistic"] = "phi";
  if (s.matrix.total() > 0) {
    association["value"] = association_score(s.matrix);
  } else {
    association["value"] = nullptr;
  }
  association["definition"] = kAssociationDefinition;

  auto class_rows = [](const std::vector<ClassTableRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json row = ordered_json::object();
      row["class"] = r.construct_class;
      row["level_category"] = to_string(r.level_category);
      row["risk_category"] = to_string(r.risk_category);
      row["cases"] = r.case_count;
      arr.push_back(std::move(row));
    }
    return arr;
  };

  ordered_json projects = ordered_json::array();
  for (const auto& p : s.projects) {
    ordered_json row = ordered_json::object();
    row["project"] = p.project;
    row["files"] = p.file_count;
    row["c1"] = p.c1_count;
    row["c2"] = p.c2_count;
    row["rank_a"] = p.rank_a_count;
    row["rank_f"] = p.rank_f_count;
    projects.push_back(std::move(row));
  }

  ordered_json doc = ordered_json::object();
  doc["cases"] = s.matrix.total();
  doc["pooling"] = "pooled over all joined cases";
  doc["matrix"] = {{"counts", counts}, {"shares", shares}};
  doc["association"] = association;
  doc["discards"] = {{"module_level", s.module_level_discards}, {"rank", s.rank_discards}};
  doc["top_classes"] = {{"Safe", class_rows(s.top_safe)}, {"Risky", class_rows(s.top_risky)}};
  doc["projects"] = projects;
  return doc.dump(2) + "\n";
}

namespace {

std::string pad(std::string_view s, std::size_t width, bool right) {
  std::string out;
  const std::size_t fill = s.size() < width ? width - s.size() : 0;
  if (right) out.append(fill, ' ');
  out += s;
  if (!right) out.append(fill, ' ');
  return out;
}

// Column widths fitted to content; first column left-aligned, rest right.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += pad(row[i], width[i], i != 0);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out.push_back('\n');
  }
  return out;
}

std::string percent(double share) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", share * 100.0);
  return buf;
}

void class_table(std::string& out, std::string_view title, const std::vector<ClassTableRow>& rows) {
  out += title;
  out.push_back('\n');
  if (rows.empty()) {
    out += "(none)\n";
    return;
  }
  std::vector<std::vector<std::string>> t{{"class", "level", "risk", "cases"}};
  for (const auto& r : rows) {
    t.push_back({r.construct_class, std::string(to_string(r.level_category)),
                 std::string(to_string(r.risk_category)), with_thousands(r.case_count)});
  }
  out += render_table(t);
}

}  // namespace

std::string summary_table(const Summary& s) {
  std::string out = "Projects\n";
  std::vector<std::vector<std::string>> projects{{"project", "files", "C1", "C2", "A", "F"}};
  for (const auto& p : s.projects) {
    projects.push_back({p.project, with_thousands(p.file_count), with_thousands(p.c1_count),
                        with_thousands(p.c2_count), with_thousands(p.rank_a_count),
                        with_thousands(p.rank_f_count)});
  }
  out += render_table(projects);

  out += "\nCategories (pooled over " + with_thousands(s.matrix.total()) + " cases)\n";
  std::vector<std::vector<std::string>> matrix{{"category", "cases", "share"}};
  for (Cell cell : kCells) {
    matrix.push_back({std::string(to_string(cell)), with_thousands(s.matrix.count(cell)),
                      percent(s.matrix.percentage(cell))});
  }
  out += render_table(matrix);
  if (s.matrix.total() > 0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "phi = %.3f\n", association_score(s.matrix));
    out += buf;
  } else {
    out += "phi = n/a (no cases)\n";
  }
  out += "  ";
  out += kAssociationDefinition;
  out += "\n\n";

  class_table(out, "Top classes, Risky", s.top_risky);
  out.push_back('\n');
  class_table(out, "Top classes, Safe", s.top_safe);

  out += "\nDiscarded occurrences: " + with_thousands(s.module_level_discards) +
         " module-level, " + with_thousands(s.rank_discards) + " in blocks ranked outside the kept ranks\n";
  return out;
}

}  // namespace profrisk
