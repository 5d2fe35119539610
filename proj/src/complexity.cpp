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

#include "profrisk/complexity.hpp"

#include <stdexcept>

namespace profrisk {

namespace {

bool is_function(const Node& n) {
  return n.kind == NodeKind::FunctionDef || n.kind == NodeKind::AsyncFunctionDef;
}

// Decision points in the subtree rooted at `id`, stopping at nested
// definitions.
int decisions(const SyntaxTree& tree, NodeId id) {
  const Node& n = tree.node(id);
  int total = 0;
  switch (n.kind) {
    case NodeKind::FunctionDef:
    case NodeKind::AsyncFunctionDef:
    case NodeKind::ClassDef:
    case NodeKind::Decorated:
      return 0;
    case NodeKind::Assert:
      // The asserted expression is not inspected.
      return 1;
    case NodeKind::If:
    case NodeKind::IfExp:
      total = 1;
      break;
    case NodeKind::For:
    case NodeKind::AsyncFor:
    case NodeKind::While:
      total = 1 + (n.has_else ? 1 : 0);
      break;
    case NodeKind::Try:
    case NodeKind::TryStar:
      total = n.count + (n.has_else ? 1 : 0);
      break;
    case NodeKind::BoolOp:
      total = n.count - 1;
      break;
    case NodeKind::Comprehension:
      total = 1 + n.count;
      break;
    case NodeKind::Match: {
      bool has_catch_all = false;
      for (NodeId child : n.children) {
        const Node& c = tree.node(child);
        if (c.kind == NodeKind::MatchCase && c.flag) has_catch_all = true;
      }
      total = std::max(0, n.count - (has_catch_all ? 1 : 0));
      break;
    }
    default:
      break;
  }
  for (NodeId child : n.children) total += decisions(tree, child);
  return total;
}

int function_score(const SyntaxTree& tree, const Node& def) {
  int score = 1;
  for (NodeId stmt : def.body()) score += decisions(tree, stmt);
  return score;
}

// Methods are the functions whose nearest enclosing definition is `cls`.
void collect_methods(const SyntaxTree& tree, NodeId id, std::vector<NodeId>& out) {
  const Node& n = tree.node(id);
  if (is_function(n)) {
    out.push_back(id);
    return;
  }
  if (n.kind == NodeKind::ClassDef) return;
  for (NodeId child : n.children) collect_methods(tree, child, out);
}

struct ClassScore {
  int score = 1;
  std::size_t methods = 0;
};

ClassScore class_score(const SyntaxTree& tree, const Node& cls) {
  int total = 1;
  std::vector<NodeId> methods;
  for (NodeId stmt : cls.body()) {
    total += decisions(tree, stmt);
    collect_methods(tree, stmt, methods);
  }
  for (NodeId m : methods) total += function_score(tree, tree.node(m));
  if (methods.empty()) return {total, 0};
  const int n = static_cast<int>(methods.size());
  return {total / n + (n > 1 ? 1 : 0), methods.size()};
}

}  // namespace

ComplexityScore::ComplexityScore(int value) : value_(value) {
  if (value < 1) throw std::invalid_argument("complexity score must be >= 1");
}

Rank rank_of(ComplexityScore score) {
  const int v = score.value();
  if (v <= 5) return Rank::A;
  if (v <= 10) return Rank::B;
  if (v <= 20) return Rank::C;
  if (v <= 30) return Rank::D;
  if (v <= 40) return Rank::E;
  return Rank::F;
}

Rank rank_of(int score) { return rank_of(ComplexityScore(score)); }

RiskCategory risk_of(Rank rank) {
  if (rank == Rank::A) return RiskCategory::Safe;
  if (rank == Rank::F) return RiskCategory::Risky;
  return RiskCategory::Intermediate;
}

std::string_view to_string(Rank rank) {
  static constexpr std::string_view kNames[] = {"A", "B", "C", "D", "E", "F"};
  return kNames[static_cast<int>(rank)];
}

std::string_view to_string(RiskCategory category) {
  switch (category) {
    case RiskCategory::Safe: return "Safe";
    case RiskCategory::Intermediate: return "Intermediate";
    case RiskCategory::Risky: return "Risky";
  }
  return "?";
}

std::optional<Rank> parse_rank(std::string_view text) {
  if (text.size() != 1 || text[0] < 'A' || text[0] > 'F') return std::nullopt;
  return static_cast<Rank>(text[0] - 'A');
}

ComplexityScore cyclomatic_complexity(const BlockSpan& block, const SyntaxTree& tree) {
  const Node& n = tree.node(block.node);
  if (n.kind == NodeKind::ClassDef) return ComplexityScore(class_score(tree, n).score);
  if (!is_function(n)) throw std::invalid_argument("block does not refer to a definition");
  return ComplexityScore(function_score(tree, n));
}

std::vector<ComplexityBlock> analyze_file_complexity(const SyntaxTree& tree,
                                                     const FileRef& where) {
  std::vector<ComplexityBlock> out;
  for (const BlockSpan& block : enumerate_blocks(tree)) {
    const Node& n = tree.node(block.node);
    int score = 0;
    if (block.kind == BlockKind::Class) {
      const ClassScore cs = class_score(tree, n);
      if (cs.methods == 0) continue;
      score = cs.score;
    } else {
      score = function_score(tree, n);
    }
    const ComplexityScore cc(score);
    out.push_back({where.project, where.directory, where.file, block.kind,
                   block.qualified_name, cc, rank_of(cc), block.start_line,
                   block.end_line});
  }
  return out;
}

}  // namespace profrisk
