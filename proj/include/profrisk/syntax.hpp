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

#ifndef PROFRISK_SYNTAX_HPP_
#define PROFRISK_SYNTAX_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace profrisk {

/// Grammar accepted by parse_source. Recorded in run manifests.
inline constexpr std::string_view kGrammarLevel = "python-3.12";

enum class NodeKind : std::uint8_t {
  // Statements.
  Module,
  Decorated,  // decorators plus the FunctionDef/ClassDef they apply to
  FunctionDef,
  AsyncFunctionDef,
  ClassDef,
  Return,
  Delete,
  Assign,
  AugAssign,
  AnnAssign,
  TypeAlias,
  For,
  AsyncFor,
  While,
  If,
  With,
  AsyncWith,
  WithItem,
  Match,
  MatchCase,
  Pattern,
  Raise,
  Try,
  TryStar,
  ExceptHandler,
  Assert,
  Import,
  ImportFrom,
  Global,
  Nonlocal,
  ExprStmt,
  Pass,
  Break,
  Continue,
  // Expressions.
  BoolOp,
  NamedExpr,
  BinOp,
  UnaryOp,
  Lambda,
  IfExp,
  Dict,
  Set,
  ListComp,
  SetComp,
  DictComp,
  GeneratorExp,
  Comprehension,  // one `for ... in ... [if ...]*` clause
  Await,
  Yield,
  YieldFrom,
  Compare,
  Call,
  Keyword,
  DictUnpack,  // `**expr` inside a dict display
  JoinedStr,
  Constant,
  Attribute,
  Subscript,
  Starred,
  Name,
  List,
  Tuple,
  Slice,
  Arg,
  TypeParam,
};

std::string_view to_string(NodeKind kind);

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = 0xffffffffu;

/// One syntax node. Lines are 1-based, columns are 0-based byte offsets;
/// end_col is one past the last byte of the node.
///
/// Kind-specific fields:
///   name        identifier for Name/Attribute/FunctionDef/ClassDef/Arg/
///               Keyword/TypeParam, callee-free text otherwise empty.
///   count       BoolOp: operand count; Try/TryStar: handler count;
///               Comprehension: number of `if` filters; Match: case count.
///   has_else    For/AsyncFor/While/Try/TryStar: an `else` clause exists.
///   flag        MatchCase: pattern is a bare capture or wildcard;
///               Comprehension: `async for`.
///   body_begin  FunctionDef/AsyncFunctionDef/ClassDef: index into
///               children where the body statements start.
struct Node {
  NodeKind kind = NodeKind::Module;
  int start_line = 0;
  int start_col = 0;
  int end_line = 0;
  int end_col = 0;
  NodeId parent = kNoNode;
  std::string name;
  int count = 0;
  bool has_else = false;
  bool flag = false;
  std::uint32_t body_begin = 0;
  std::vector<NodeId> children;

  std::span<const NodeId> body() const {
    return std::span<const NodeId>(children).subspan(body_begin);
  }
  bool is_definition() const {
    return kind == NodeKind::FunctionDef ||
           kind == NodeKind::AsyncFunctionDef || kind == NodeKind::ClassDef;
  }
};

/// Raised when the source is not valid for the supported grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, std::string message);
  int line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  std::string message_;
};

/// Immutable parsed file. Node 0 is the Module root.
class SyntaxTree {
 public:
  SyntaxTree(std::vector<Node> nodes, std::string source_path,
             std::string text, int line_count);

  const Node& root() const { return nodes_.front(); }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  std::span<const Node> nodes() const { return nodes_; }
  const std::string& source_path() const { return source_path_; }
  /// Decoded text with line endings normalized to LF.
  const std::string& text() const { return text_; }
  int line_count() const { return line_count_; }

 private:
  std::vector<Node> nodes_;
  std::string source_path_;
  std::string text_;
  int line_count_;
};

/// Parses Python source bytes. Throws ParseError.
SyntaxTree parse_source(std::string_view bytes, std::string path = {});

enum class BlockKind : std::uint8_t { Function, Method, Class };

std::string_view to_string(BlockKind kind);

/// A function, method or class definition. The span starts on the
/// `def`/`class` line (decorators excluded) and ends on the last line
/// of the body.
struct BlockSpan {
  BlockKind kind = BlockKind::Function;
  std::string qualified_name;
  int start_line = 0;
  int end_line = 0;
  /// Index of the enclosing block in the list returned by enumerate_blocks.
  std::optional<std::size_t> parent;
  NodeId node = kNoNode;

  friend bool operator==(const BlockSpan&, const BlockSpan&) = default;
};

/// All definitions in source order.
std::vector<BlockSpan> enumerate_blocks(const SyntaxTree& tree);

}  // namespace profrisk

#endif  // PROFRISK_SYNTAX_HPP_
