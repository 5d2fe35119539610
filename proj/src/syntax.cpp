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

#include "profrisk/syntax.hpp"

#include <unordered_map>
#include <utility>

namespace profrisk {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Module: return "Module";
    case NodeKind::Decorated: return "Decorated";
    case NodeKind::FunctionDef: return "FunctionDef";
    case NodeKind::AsyncFunctionDef: return "AsyncFunctionDef";
    case NodeKind::ClassDef: return "ClassDef";
    case NodeKind::Return: return "Return";
    case NodeKind::Delete: return "Delete";
    case NodeKind::Assign: return "Assign";
    case NodeKind::AugAssign: return "AugAssign";
    case NodeKind::AnnAssign: return "AnnAssign";
    case NodeKind::TypeAlias: return "TypeAlias";
    case NodeKind::For: return "For";
    case NodeKind::AsyncFor: return "AsyncFor";
    case NodeKind::While: return "While";
    case NodeKind::If: return "If";
    case NodeKind::With: return "With";
    case NodeKind::AsyncWith: return "AsyncWith";
    case NodeKind::WithItem: return "WithItem";
    case NodeKind::Match: return "Match";
    case NodeKind::MatchCase: return "MatchCase";
    case NodeKind::Pattern: return "Pattern";
    case NodeKind::Raise: return "Raise";
    case NodeKind::Try: return "Try";
    case NodeKind::TryStar: return "TryStar";
    case NodeKind::ExceptHandler: return "ExceptHandler";
    case NodeKind::Assert: return "Assert";
    case NodeKind::Import: return "Import";
    case NodeKind::ImportFrom: return "ImportFrom";
    case NodeKind::Global: return "Global";
    case NodeKind::Nonlocal: return "Nonlocal";
    case NodeKind::ExprStmt: return "Expr";
    case NodeKind::Pass: return "Pass";
    case NodeKind::Break: return "Break";
    case NodeKind::Continue: return "Continue";
    case NodeKind::BoolOp: return "BoolOp";
    case NodeKind::NamedExpr: return "NamedExpr";
    case NodeKind::BinOp: return "BinOp";
    case NodeKind::UnaryOp: return "UnaryOp";
    case NodeKind::Lambda: return "Lambda";
    case NodeKind::IfExp: return "IfExp";
    case NodeKind::Dict: return "Dict";
    case NodeKind::Set: return "Set";
    case NodeKind::ListComp: return "ListComp";
    case NodeKind::SetComp: return "SetComp";
    case NodeKind::DictComp: return "DictComp";
    case NodeKind::GeneratorExp: return "GeneratorExp";
    case NodeKind::Comprehension: return "comprehension";
    case NodeKind::Await: return "Await";
    case NodeKind::Yield: return "Yield";
    case NodeKind::YieldFrom: return "YieldFrom";
    case NodeKind::Compare: return "Compare";
    case NodeKind::Call: return "Call";
    case NodeKind::Keyword: return "keyword";
    case NodeKind::DictUnpack: return "DictUnpack";
    case NodeKind::JoinedStr: return "JoinedStr";
    case NodeKind::Constant: return "Constant";
    case NodeKind::Attribute: return "Attribute";
    case NodeKind::Subscript: return "Subscript";
    case NodeKind::Starred: return "Starred";
    case NodeKind::Name: return "Name";
    case NodeKind::List: return "List";
    case NodeKind::Tuple: return "Tuple";
    case NodeKind::Slice: return "Slice";
    case NodeKind::Arg: return "arg";
    case NodeKind::TypeParam: return "TypeParam";
  }
  return "?";
}

std::string_view to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::Function: return "function";
    case BlockKind::Method: return "method";
    case BlockKind::Class: return "class";
  }
  return "?";
}

ParseError::ParseError(int line, std::string message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line),
      message_(std::move(message)) {}

SyntaxTree::SyntaxTree(std::vector<Node> nodes, std::string source_path,
                       std::string text, int line_count)
    : nodes_(std::move(nodes)),
      source_path_(std::move(source_path)),
      text_(std::move(text)),
      line_count_(line_count) {
  if (nodes_.empty() || nodes_.front().kind != NodeKind::Module) {
    throw std::invalid_argument("SyntaxTree requires a Module root");
  }
}

std::vector<BlockSpan> enumerate_blocks(const SyntaxTree& tree) {
  std::vector<BlockSpan> blocks;
  // Node ids are assigned in pre-order, so ascending ids are source order.
  std::unordered_map<NodeId, std::size_t> block_of_node;
  const auto nodes = tree.nodes();
  for (NodeId id = 0; id < nodes.size(); ++id) {
    const Node& n = nodes[id];
    if (!n.is_definition()) continue;
    NodeId up = n.parent;
    while (up != kNoNode && !nodes[up].is_definition()) up = nodes[up].parent;

    BlockSpan block;
    block.node = id;
    block.start_line = n.start_line;
    block.end_line = n.end_line;
    block.qualified_name = n.name;
    if (up != kNoNode) {
      const std::size_t parent_index = block_of_node.at(up);
      block.parent = parent_index;
      block.qualified_name = blocks[parent_index].qualified_name + "." + n.name;
    }
    if (n.kind == NodeKind::ClassDef) {
      block.kind = BlockKind::Class;
    } else if (up != kNoNode && nodes[up].kind == NodeKind::ClassDef) {
      block.kind = BlockKind::Method;
    } else {
      block.kind = BlockKind::Function;
    }
    block_of_node.emplace(id, blocks.size());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace profrisk
