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

#include "profrisk/proficiency.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace profrisk {

namespace {

constexpr std::string_view kBuiltinRegistry =
    "# construct class | detector | level\n"
    "Simple List Comprehension | simple-list-comprehension | C1\n"
    "Nested/Multi-clause List Comprehension | nested-list-comprehension | C2\n"
    "Generator Expression | generator-expression | C1\n"
    "Generator Function (yield) | yield | C1\n"
    "Simple Dictionary Comprehension | simple-dict-comprehension | C1\n"
    "Nested/Multi-clause Dictionary Comprehension | nested-dict-comprehension | C2\n"
    "'enumerate' call function | call:enumerate | C2\n"
    "'zip' call function | call:zip | C2\n"
    "Super Function | call:super | C2\n";

constexpr std::string_view kFixedDetectors[] = {
    "simple-list-comprehension", "nested-list-comprehension",
    "simple-dict-comprehension", "nested-dict-comprehension",
    "generator-expression",      "yield",
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool is_identifier(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::optional<NodeKind> node_kind_named(std::string_view name) {
  for (int k = 0; k <= static_cast<int>(NodeKind::TypeParam); ++k) {
    const auto kind = static_cast<NodeKind>(k);
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

bool is_comprehension(NodeKind kind) {
  return kind == NodeKind::ListComp || kind == NodeKind::SetComp ||
         kind == NodeKind::DictComp || kind == NodeKind::GeneratorExp;
}

// Single `for` clause and no comprehension directly as the element (or,
// for dicts, as the key or value).
bool is_simple_comprehension(const SyntaxTree& tree, const Node& n) {
  int clauses = 0;
  bool nested_element = false;
  for (NodeId child : n.children) {
    const Node& c = tree.node(child);
    if (c.kind == NodeKind::Comprehension) {
      ++clauses;
    } else if (is_comprehension(c.kind)) {
      nested_element = true;
    }
  }
  return clauses == 1 && !nested_element;
}

bool matches(const SyntaxTree& tree, const Node& n, std::string_view detector) {
  if (detector.starts_with("call:")) {
    if (n.kind != NodeKind::Call) return false;
    const Node& callee = tree.node(n.children.front());
    return callee.kind == NodeKind::Name && callee.name == detector.substr(5);
  }
  if (detector.starts_with("node:")) {
    return to_string(n.kind) == detector.substr(5);
  }
  if (detector == "simple-list-comprehension") {
    return n.kind == NodeKind::ListComp && is_simple_comprehension(tree, n);
  }
  if (detector == "nested-list-comprehension") {
    return n.kind == NodeKind::ListComp && !is_simple_comprehension(tree, n);
  }
  if (detector == "simple-dict-comprehension") {
    return n.kind == NodeKind::DictComp && is_simple_comprehension(tree, n);
  }
  if (detector == "nested-dict-comprehension") {
    return n.kind == NodeKind::DictComp && !is_simple_comprehension(tree, n);
  }
  if (detector == "generator-expression") return n.kind == NodeKind::GeneratorExp;
  if (detector == "yield") {
    return n.kind == NodeKind::Yield || n.kind == NodeKind::YieldFrom;
  }
  return false;
}

}  // namespace

LevelCategory category_of(CompetencyLevel level) {
  switch (level) {
    case CompetencyLevel::A1:
    case CompetencyLevel::A2:
      return LevelCategory::Basic;
    case CompetencyLevel::B1:
    case CompetencyLevel::B2:
      return LevelCategory::Intermediate;
    case CompetencyLevel::C1:
      return LevelCategory::Advance;
    case CompetencyLevel::C2:
      return LevelCategory::Mastery;
  }
  return LevelCategory::Basic;
}

std::string_view to_string(CompetencyLevel level) {
  static constexpr std::string_view kNames[] = {"A1", "A2", "B1", "B2", "C1", "C2"};
  return kNames[static_cast<int>(level)];
}

std::string_view to_string(LevelCategory category) {
  switch (category) {
    case LevelCategory::Basic: return "Basic";
    case LevelCategory::Intermediate: return "Intermediate";
    case LevelCategory::Advance: return "Advance";
    case LevelCategory::Mastery: return "Mastery";
  }
  return "?";
}

std::optional<CompetencyLevel> parse_level(std::string_view text) {
  for (int i = 0; i <= static_cast<int>(CompetencyLevel::C2); ++i) {
    const auto level = static_cast<CompetencyLevel>(i);
    if (to_string(level) == text) return level;
  }
  return std::nullopt;
}

bool ConstructRegistry::is_valid_detector(std::string_view detector) {
  if (std::find(std::begin(kFixedDetectors), std::end(kFixedDetectors), detector) !=
      std::end(kFixedDetectors)) {
    return true;
  }
  if (detector.starts_with("call:")) return is_identifier(detector.substr(5));
  if (detector.starts_with("node:")) return node_kind_named(detector.substr(5)).has_value();
  return false;
}

void ConstructRegistry::add(std::string construct_class, std::string detector,
                            CompetencyLevel level, int line) {
  if (construct_class.empty()) throw RegistryError(line, "empty construct class");
  if (construct_class.find('|') != std::string::npos) {
    throw RegistryError(line, "construct class may not contain '|'");
  }
  if (!is_valid_detector(detector)) {
    throw RegistryError(line, "unknown detector '" + detector + "'");
  }
  if (by_class_.contains(construct_class)) {
    throw RegistryError(line, "duplicate construct class '" + construct_class + "'");
  }
  by_class_.emplace(construct_class, entries_.size());
  entries_.push_back({std::move(construct_class), std::move(detector), level});
}

ConstructRegistry ConstructRegistry::parse(std::string_view text) {
  ConstructRegistry registry;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto bar1 = line.find('|');
    const auto bar2 = bar1 == std::string_view::npos ? bar1 : line.find('|', bar1 + 1);
    if (bar2 == std::string_view::npos ||
        line.find('|', bar2 + 1) != std::string_view::npos) {
      throw RegistryError(line_no, "expected 'class | detector | level'");
    }
    const std::string_view name = trim(line.substr(0, bar1));
    const std::string_view detector = trim(line.substr(bar1 + 1, bar2 - bar1 - 1));
    const std::string_view level_text = trim(line.substr(bar2 + 1));
    const auto level = parse_level(level_text);
    if (!level) {
      throw RegistryError(line_no, "unknown level '" + std::string(level_text) + "'");
    }
    registry.add(std::string(name), std::string(detector), *level, line_no);
  }
  return registry;
}

ConstructRegistry ConstructRegistry::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RegistryError(0, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

const ConstructRegistry& ConstructRegistry::builtin() {
  static const ConstructRegistry registry = parse(kBuiltinRegistry);
  return registry;
}

std::string_view ConstructRegistry::builtin_text() { return kBuiltinRegistry; }

const ConstructRegistry::Entry* ConstructRegistry::find(std::string_view construct_class) const {
  const auto it = by_class_.find(construct_class);
  return it == by_class_.end() ? nullptr : &entries_[it->second];
}

std::string ConstructRegistry::to_text() const {
  std::string out;
  for (const Entry& e : entries_) {
    out += e.construct_class;
    out += " | ";
    out += e.detector;
    out += " | ";
    out += to_string(e.level);
    out += '\n';
  }
  return out;
}

std::string ConstructRegistry::digest() const {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : to_text()) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return std::string("fnv1a64:") + buf;
}

std::vector<ProficiencyOccurrence> classify_constructs(const SyntaxTree& tree,
                                                       const ConstructRegistry& registry,
                                                       const FileRef& where) {
  std::vector<ProficiencyOccurrence> out;
  for (const Node& n : tree.nodes()) {
    for (const auto& entry : registry.entries()) {
      if (!matches(tree, n, entry.detector)) continue;
      out.push_back({where.project, where.directory, where.file, entry.construct_class,
                     n.start_line, n.end_line, entry.level});
    }
  }
  return out;
}

std::vector<ProficiencyOccurrence> filter_by_level(std::span<const ProficiencyOccurrence> occs,
                                                   const std::set<CompetencyLevel>& keep) {
  std::vector<ProficiencyOccurrence> out;
  std::copy_if(occs.begin(), occs.end(), std::back_inserter(out),
               [&](const ProficiencyOccurrence& o) { return keep.contains(o.level); });
  return out;
}

}  // namespace profrisk
