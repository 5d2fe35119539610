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

// Recursive-descent parser for Python 3 source. Produces the node arena
// behind SyntaxTree. Semantics are not checked beyond what is needed to
// reject malformed input; the tree keeps just enough structure for the
// complexity and construct analyses.

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "profrisk/syntax.hpp"
#include "tokenizer.hpp"

namespace profrisk {

namespace {

using detail::Token;
using detail::TokenKind;

constexpr std::array<std::string_view, 35> kKeywords = {
    "False",  "None",   "True",    "and",      "as",       "assert", "async",
    "await",  "break",  "class",   "continue", "def",      "del",    "elif",
    "else",   "except", "finally", "for",      "from",     "global", "if",
    "import", "in",     "is",      "lambda",   "nonlocal", "not",    "or",
    "pass",   "raise",  "return",  "try",      "while",    "with",   "yield",
};

constexpr std::array<std::string_view, 13> kAugAssign = {
    "+=", "-=", "*=", "/=", "//=", "%=", "@=", "&=", "|=", "^=", ">>=", "<<=", "**=",
};

// Bounds recursion so hostile inputs fail cleanly instead of overflowing
// the stack of a worker thread.
constexpr int kMaxNesting = 200;

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

class Parser {
 public:
  Parser(std::string_view text, std::vector<Token> tokens,
         std::vector<Node>& arena, int nesting)
      : text_(text), tokens_(std::move(tokens)), arena_(arena), nesting_(nesting) {}

  NodeId parse_module(int line_count) {
    const NodeId module = make(NodeKind::Module, 1, 0);
    std::vector<NodeId> body;
    while (peek().kind != TokenKind::End) {
      parse_statement(body);
    }
    node(module).children = std::move(body);
    node(module).end_line = std::max(1, line_count);
    return module;
  }

  NodeId parse_fstring_field() {
    const NodeId expr = at_keyword("yield") ? yield_expr() : star_expressions();
    if (peek().kind != TokenKind::End) fail(peek(), "f-string: expecting '}'");
    return expr;
  }

 private:
  // ---- token helpers -----------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& prev() const { return tokens_[pos_ - 1]; }
  const Token& advance() {
    const Token& token = tokens_[pos_];
    if (token.kind == TokenKind::Error) fail(token, "");
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return token;
  }

  bool at_op(std::string_view op, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == TokenKind::Op && t.text == op;
  }
  bool at_keyword(std::string_view kw, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == TokenKind::Name && t.text == kw;
  }
  bool at_identifier(std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == TokenKind::Name && !is_keyword(t.text);
  }
  bool accept_op(std::string_view op) {
    if (!at_op(op)) return false;
    advance();
    return true;
  }
  bool accept_keyword(std::string_view kw) {
    if (!at_keyword(kw)) return false;
    advance();
    return true;
  }
  const Token& expect_op(std::string_view op) {
    if (!at_op(op)) fail(peek(), "expected '" + std::string(op) + "'");
    return advance();
  }
  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) fail(peek(), "expected '" + std::string(kw) + "'");
    advance();
  }
  const Token& expect_identifier() {
    if (!at_identifier()) fail(peek(), "expected identifier");
    return advance();
  }
  void expect_newline() {
    if (peek().kind != TokenKind::Newline) fail(peek(), "invalid syntax");
    advance();
  }
  bool at_comp_for() const {
    return at_keyword("for") || (at_keyword("async") && at_keyword("for", 1));
  }
  bool at_statement_end() const {
    const TokenKind k = peek().kind;
    return k == TokenKind::Newline || k == TokenKind::End || at_op(";");
  }

  bool can_start_expression(std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    switch (t.kind) {
      case TokenKind::Number:
      case TokenKind::String:
        return true;
      case TokenKind::Name:
        return !is_keyword(t.text) || t.text == "None" || t.text == "True" ||
               t.text == "False" || t.text == "not" || t.text == "lambda" ||
               t.text == "await" || t.text == "yield";
      case TokenKind::Op:
        return t.text == "(" || t.text == "[" || t.text == "{" || t.text == "-" ||
               t.text == "+" || t.text == "~" || t.text == "*" || t.text == "...";
      default:
        return false;
    }
  }

  [[noreturn]] void fail(const Token& at, std::string message) const {
    if (at.kind == TokenKind::Error) throw ParseError(at.line, at.message);
    // A lexical error later in the file outranks a grammar error, except an
    // unclosed bracket, which is only noticed at end of input.
    const Token& last = tokens_.back();
    if (last.kind == TokenKind::Error && !last.message.ends_with("was never closed") &&
        at.kind != TokenKind::Indent && at.kind != TokenKind::Dedent) {
      throw ParseError(last.line, last.message);
    }
    if (at.kind == TokenKind::Indent) message = "unexpected indent";
    if (at.kind == TokenKind::Dedent && message == "invalid syntax") {
      message = "unexpected unindent";
    }
    throw ParseError(at.line, std::move(message));
  }

  // ---- node helpers ------------------------------------------------------

  Node& node(NodeId id) { return arena_[id]; }

  NodeId make(NodeKind kind, int line, int col) {
    Node n;
    n.kind = kind;
    n.start_line = line;
    n.start_col = col;
    n.end_line = line;
    n.end_col = col;
    arena_.push_back(std::move(n));
    return static_cast<NodeId>(arena_.size() - 1);
  }
  NodeId make(NodeKind kind, const Token& first) {
    return make(kind, first.line, first.col);
  }
  NodeId make_from(NodeKind kind, NodeId first_child) {
    const NodeId id = make(kind, node(first_child).start_line, node(first_child).start_col);
    node(id).children.push_back(first_child);
    return id;
  }
  // Ends `id` at the last consumed token.
  NodeId close(NodeId id) {
    const Token& last = prev();
    node(id).end_line = last.end_line;
    node(id).end_col = last.end_col;
    return id;
  }
  // Ends `id` where `last` ends.
  NodeId close_at(NodeId id, NodeId last) {
    node(id).end_line = node(last).end_line;
    node(id).end_col = node(last).end_col;
    return id;
  }
  void add(NodeId parent, NodeId child) { node(parent).children.push_back(child); }
  void add_all(NodeId parent, const std::vector<NodeId>& children) {
    auto& list = node(parent).children;
    list.insert(list.end(), children.begin(), children.end());
  }

  struct NestingGuard {
    NestingGuard(Parser& p) : parser(p) {
      if (++parser.nesting_ > kMaxNesting) {
        --parser.nesting_;
        parser.fail(parser.peek(), "too many nested expressions or blocks");
      }
    }
    ~NestingGuard() { --parser.nesting_; }
    NestingGuard(const NestingGuard&) = delete;
    NestingGuard& operator=(const NestingGuard&) = delete;
    Parser& parser;
  };

  // ---- statements --------------------------------------------------------

  void parse_statement(std::vector<NodeId>& out) {
    NestingGuard guard(*this);
    const Token& t = peek();
    if (t.kind == TokenKind::Indent) fail(t, "unexpected indent");
    if (t.kind == TokenKind::Dedent) fail(t, "unexpected unindent");
    if (at_op("@")) {
      out.push_back(decorated());
      return;
    }
    if (t.kind == TokenKind::Name) {
      const std::string_view w = t.text;
      if (w == "def") return out.push_back(function_def());
      if (w == "class") return out.push_back(class_def());
      if (w == "if") return out.push_back(if_stmt());
      if (w == "while") return out.push_back(while_stmt());
      if (w == "for") return out.push_back(for_stmt());
      if (w == "try") return out.push_back(try_stmt());
      if (w == "with") return out.push_back(with_stmt());
      if (w == "async") {
        if (at_keyword("def", 1)) return out.push_back(function_def());
        if (at_keyword("for", 1)) return out.push_back(for_stmt());
        if (at_keyword("with", 1)) return out.push_back(with_stmt());
        fail(peek(1), "invalid syntax");
      }
      if (w == "match" && looks_like_match()) return out.push_back(match_stmt());
    }
    simple_statements(out);
  }

  void simple_statements(std::vector<NodeId>& out) {
    while (true) {
      out.push_back(simple_statement());
      if (!accept_op(";")) break;
      if (peek().kind == TokenKind::Newline) break;
    }
    expect_newline();
  }

  // Body after ':' — either an indented suite or statements on the same line.
  std::vector<NodeId> block() {
    std::vector<NodeId> body;
    if (peek().kind == TokenKind::Newline) {
      advance();
      if (peek().kind != TokenKind::Indent) fail(peek(), "expected an indented block");
      advance();
      while (peek().kind != TokenKind::Dedent && peek().kind != TokenKind::End) {
        parse_statement(body);
      }
      if (peek().kind == TokenKind::Dedent) advance();
    } else {
      simple_statements(body);
    }
    return body;
  }

  NodeId simple_statement() {
    const Token& t = peek();
    if (t.kind != TokenKind::Name) return expression_statement();
    const std::string_view w = t.text;
    if (w == "pass" || w == "break" || w == "continue") {
      const NodeKind kind = w == "pass"    ? NodeKind::Pass
                            : w == "break" ? NodeKind::Break
                                           : NodeKind::Continue;
      const NodeId id = make(kind, advance());
      return close(id);
    }
    if (w == "return") {
      const NodeId id = make(NodeKind::Return, advance());
      if (!at_statement_end()) add(id, star_expressions());
      return close(id);
    }
    if (w == "raise") {
      const NodeId id = make(NodeKind::Raise, advance());
      if (!at_statement_end()) {
        add(id, expression());
        if (accept_keyword("from")) add(id, expression());
      }
      return close(id);
    }
    if (w == "global" || w == "nonlocal") {
      const NodeId id = make(w == "global" ? NodeKind::Global : NodeKind::Nonlocal, advance());
      do {
        expect_identifier();
      } while (accept_op(","));
      return close(id);
    }
    if (w == "del") {
      const NodeId id = make(NodeKind::Delete, advance());
      do {
        if (at_statement_end()) break;
        add(id, target());
      } while (accept_op(","));
      if (node(id).children.empty()) fail(peek(), "invalid syntax");
      return close(id);
    }
    if (w == "assert") {
      const NodeId id = make(NodeKind::Assert, advance());
      add(id, expression());
      if (accept_op(",")) add(id, expression());
      return close(id);
    }
    if (w == "import") return import_stmt();
    if (w == "from") return import_from_stmt();
    if (w == "type" && at_identifier(1) && (at_op("=", 2) || at_op("[", 2))) {
      return type_alias();
    }
    return expression_statement();
  }

  NodeId expression_statement() {
    const Token& first = peek();
    const NodeId lhs = at_keyword("yield") ? yield_expr() : star_expressions();
    if (at_op(":")) {
      advance();
      const NodeId id = make(NodeKind::AnnAssign, first);
      add(id, lhs);
      add(id, expression());
      if (accept_op("=")) add(id, at_keyword("yield") ? yield_expr() : star_expressions());
      return close(id);
    }
    for (std::string_view op : kAugAssign) {
      if (at_op(op)) {
        advance();
        const NodeId id = make(NodeKind::AugAssign, first);
        add(id, lhs);
        add(id, at_keyword("yield") ? yield_expr() : star_expressions());
        return close(id);
      }
    }
    if (at_op("=")) {
      const NodeId id = make(NodeKind::Assign, first);
      add(id, lhs);
      while (accept_op("=")) {
        add(id, at_keyword("yield") ? yield_expr() : star_expressions());
      }
      return close(id);
    }
    const NodeId id = make(NodeKind::ExprStmt, first);
    add(id, lhs);
    return close(id);
  }

  void dotted_name() {
    expect_identifier();
    while (accept_op(".")) expect_identifier();
  }

  NodeId import_stmt() {
    const NodeId id = make(NodeKind::Import, advance());
    do {
      dotted_name();
      if (accept_keyword("as")) expect_identifier();
    } while (accept_op(","));
    return close(id);
  }

  NodeId import_from_stmt() {
    const NodeId id = make(NodeKind::ImportFrom, advance());
    bool has_dots = false;
    while (at_op(".") || at_op("...")) {
      advance();
      has_dots = true;
    }
    if (!at_keyword("import")) {
      dotted_name();
    } else if (!has_dots) {
      fail(peek(), "invalid syntax");
    }
    expect_keyword("import");
    if (accept_op("*")) return close(id);
    const bool parenthesized = accept_op("(");
    do {
      if (parenthesized && at_op(")")) break;
      expect_identifier();
      if (accept_keyword("as")) expect_identifier();
    } while (accept_op(","));
    if (parenthesized) expect_op(")");
    return close(id);
  }

  NodeId type_alias() {
    const NodeId id = make(NodeKind::TypeAlias, advance());
    const Token& name = expect_identifier();
    const NodeId target = make(NodeKind::Name, name);
    node(target).name = std::string(name.text);
    close(target);
    add(id, target);
    if (at_op("[")) add_all(id, type_params());
    expect_op("=");
    add(id, expression());
    return close(id);
  }

  std::vector<NodeId> decorators() {
    std::vector<NodeId> out;
    while (at_op("@")) {
      advance();
      out.push_back(named_expression());
      expect_newline();
    }
    return out;
  }

  NodeId decorated() {
    const Token& at = peek();
    const NodeId id = make(NodeKind::Decorated, at);
    std::vector<NodeId> decos = decorators();
    NodeId def = kNoNode;
    if (at_keyword("def") || (at_keyword("async") && at_keyword("def", 1))) {
      def = function_def();
    } else if (at_keyword("class")) {
      def = class_def();
    } else {
      fail(peek(), "invalid syntax");
    }
    add_all(id, decos);
    add(id, def);
    return close_at(id, def);
  }

  std::vector<NodeId> type_params() {
    std::vector<NodeId> out;
    expect_op("[");
    do {
      if (at_op("]")) break;
      const Token& first = peek();
      const NodeId id = make(NodeKind::TypeParam, first);
      if (!accept_op("**")) accept_op("*");
      node(id).name = std::string(expect_identifier().text);
      if (accept_op(":")) add(id, expression());
      if (accept_op("=")) add(id, at_op("*") ? star_expression() : expression());
      out.push_back(close(id));
    } while (accept_op(","));
    expect_op("]");
    if (out.empty()) fail(prev(), "type parameter list cannot be empty");
    return out;
  }

  // Parameters up to (not including) `closer`. Lambdas pass
  // annotations=false.
  std::vector<NodeId> parameters(std::string_view closer, bool annotations) {
    std::vector<NodeId> out;
    bool seen_star = false;
    bool seen_double_star = false;
    while (!at_op(closer)) {
      if (seen_double_star) fail(peek(), "arguments cannot follow var-keyword argument");
      if (at_op("/")) {
        advance();
      } else {
        const Token& first = peek();
        const NodeId arg = make(NodeKind::Arg, first);
        if (accept_op("**")) {
          seen_double_star = true;
          node(arg).name = std::string(expect_identifier().text);
          if (annotations && accept_op(":")) add(arg, expression());
        } else if (accept_op("*")) {
          if (seen_star) fail(first, "* argument may appear only once");
          seen_star = true;
          if (at_identifier()) {
            node(arg).name = std::string(advance().text);
            if (annotations && accept_op(":")) {
              add(arg, at_op("*") ? star_expression() : expression());
            }
          }
        } else {
          node(arg).name = std::string(expect_identifier().text);
          if (annotations && accept_op(":")) add(arg, expression());
          if (accept_op("=")) add(arg, expression());
        }
        out.push_back(close(arg));
      }
      if (!accept_op(",")) break;
    }
    return out;
  }

  NodeId function_def() {
    const Token& first = peek();
    const bool is_async = accept_keyword("async");
    const NodeId id = make(is_async ? NodeKind::AsyncFunctionDef : NodeKind::FunctionDef, first);
    expect_keyword("def");
    node(id).name = std::string(expect_identifier().text);
    std::vector<NodeId> header;
    if (at_op("[")) header = type_params();
    expect_op("(");
    std::vector<NodeId> params = parameters(")", true);
    header.insert(header.end(), params.begin(), params.end());
    expect_op(")");
    if (accept_op("->")) header.push_back(expression());
    expect_op(":");
    std::vector<NodeId> body = block();
    add_all(id, header);
    node(id).body_begin = static_cast<std::uint32_t>(header.size());
    add_all(id, body);
    return close_at(id, body.back());
  }

  NodeId class_def() {
    const NodeId id = make(NodeKind::ClassDef, advance());
    node(id).name = std::string(expect_identifier().text);
    std::vector<NodeId> header;
    if (at_op("[")) header = type_params();
    if (accept_op("(")) {
      std::vector<NodeId> bases = call_arguments(prev());
      header.insert(header.end(), bases.begin(), bases.end());
    }
    expect_op(":");
    std::vector<NodeId> body = block();
    add_all(id, header);
    node(id).body_begin = static_cast<std::uint32_t>(header.size());
    add_all(id, body);
    return close_at(id, body.back());
  }

  // Handles both `if` and `elif`; an elif chain becomes nested If nodes.
  NodeId if_stmt() {
    const NodeId id = make(NodeKind::If, advance());
    add(id, named_expression());
    expect_op(":");
    add_all(id, block());
    if (at_keyword("elif")) {
      add(id, if_stmt());
    } else if (at_keyword("else")) {
      advance();
      expect_op(":");
      add_all(id, block());
    }
    return close_at(id, node(id).children.back());
  }

  NodeId while_stmt() {
    const NodeId id = make(NodeKind::While, advance());
    add(id, named_expression());
    expect_op(":");
    add_all(id, block());
    if (accept_keyword("else")) {
      expect_op(":");
      node(id).has_else = true;
      add_all(id, block());
    }
    return close_at(id, node(id).children.back());
  }

  NodeId for_stmt() {
    const Token& first = peek();
    const bool is_async = accept_keyword("async");
    const NodeId id = make(is_async ? NodeKind::AsyncFor : NodeKind::For, first);
    expect_keyword("for");
    add(id, target_list());
    expect_keyword("in");
    add(id, star_expressions());
    expect_op(":");
    add_all(id, block());
    if (accept_keyword("else")) {
      expect_op(":");
      node(id).has_else = true;
      add_all(id, block());
    }
    return close_at(id, node(id).children.back());
  }

  NodeId try_stmt() {
    const NodeId id = make(NodeKind::Try, advance());
    expect_op(":");
    add_all(id, block());
    int handlers = 0;
    bool star = false;
    while (at_keyword("except")) {
      const NodeId handler = make(NodeKind::ExceptHandler, advance());
      if (accept_op("*")) star = true;
      if (!at_op(":")) {
        NodeId type = expression();
        if (at_op(",")) {
          const NodeId tuple = make_from(NodeKind::Tuple, type);
          while (accept_op(",")) add(tuple, expression());
          type = close(tuple);
        }
        add(handler, type);
        if (accept_keyword("as")) expect_identifier();
      }
      expect_op(":");
      add_all(handler, block());
      close_at(handler, node(handler).children.back());
      add(id, handler);
      ++handlers;
    }
    if (accept_keyword("else")) {
      if (handlers == 0) fail(prev(), "invalid syntax");
      expect_op(":");
      node(id).has_else = true;
      add_all(id, block());
    }
    if (accept_keyword("finally")) {
      expect_op(":");
      add_all(id, block());
    } else if (handlers == 0) {
      fail(peek(), "expected 'except' or 'finally' block");
    }
    node(id).count = handlers;
    if (star) node(id).kind = NodeKind::TryStar;
    return close_at(id, node(id).children.back());
  }

  NodeId with_item() {
    const NodeId expr = expression();
    const NodeId item = make_from(NodeKind::WithItem, expr);
    if (accept_keyword("as")) add(item, target());
    return close(item);
  }

  NodeId with_stmt() {
    const Token& first = peek();
    const bool is_async = accept_keyword("async");
    const NodeId id = make(is_async ? NodeKind::AsyncWith : NodeKind::With, first);
    expect_keyword("with");
    std::vector<NodeId> items;
    bool parsed = false;
    if (at_op("(")) {
      // Parenthesized item list; falls back to a parenthesized expression.
      const std::size_t saved = pos_;
      const std::size_t arena_size = arena_.size();
      try {
        advance();
        do {
          if (at_op(")")) break;
          items.push_back(with_item());
        } while (accept_op(","));
        expect_op(")");
        if (!at_op(":")) fail(peek(), "expected ':'");
        parsed = !items.empty();
      } catch (const ParseError&) {
        parsed = false;
      }
      if (!parsed) {
        pos_ = saved;
        arena_.resize(arena_size);
        items.clear();
      }
    }
    if (!parsed) {
      do {
        items.push_back(with_item());
      } while (accept_op(","));
    }
    expect_op(":");
    add_all(id, items);
    add_all(id, block());
    return close_at(id, node(id).children.back());
  }

  // True when the logical line starting at a `match` soft keyword is a
  // match statement: it ends in ':' and the next line opens a `case`.
  bool looks_like_match() const {
    if (at_op("=", 1) || at_op(".", 1) || at_op(",", 1) || at_op(")", 1) ||
        at_op(":", 1) || peek(1).kind == TokenKind::Newline) {
      return false;
    }
    int depth = 0;
    for (std::size_t i = pos_ + 1; i < tokens_.size(); ++i) {
      const Token& t = tokens_[i];
      if (t.kind == TokenKind::End) return false;
      if (t.kind == TokenKind::Op) {
        if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
        if (t.text == ")" || t.text == "]" || t.text == "}") --depth;
      }
      if (t.kind == TokenKind::Newline && depth == 0) {
        const Token& last = tokens_[i - 1];
        return last.kind == TokenKind::Op && last.text == ":" && i + 2 < tokens_.size() &&
               tokens_[i + 1].kind == TokenKind::Indent &&
               tokens_[i + 2].kind == TokenKind::Name && tokens_[i + 2].text == "case";
      }
    }
    return false;
  }

  NodeId match_stmt() {
    const NodeId id = make(NodeKind::Match, advance());
    const NodeId first = star_named_expression();
    if (at_op(",")) {
      const NodeId tuple = make_from(NodeKind::Tuple, first);
      while (accept_op(",")) {
        if (at_op(":")) break;
        add(tuple, star_named_expression());
      }
      add(id, close(tuple));
    } else {
      add(id, first);
    }
    expect_op(":");
    expect_newline();
    if (peek().kind != TokenKind::Indent) fail(peek(), "expected an indented block");
    advance();
    int cases = 0;
    while (at_keyword("case")) {
      add(id, match_case());
      ++cases;
    }
    if (cases == 0) fail(peek(), "expected 'case' block");
    if (peek().kind != TokenKind::Dedent) fail(peek(), "invalid syntax");
    advance();
    node(id).count = cases;
    return close_at(id, node(id).children.back());
  }

  NodeId match_case() {
    const NodeId id = make(NodeKind::MatchCase, advance());
    const NodeId pattern = make(NodeKind::Pattern, peek());
    bool bare = pattern_top();
    close(pattern);
    node(pattern).flag = bare;
    node(id).flag = bare;
    add(id, pattern);
    if (accept_keyword("if")) add(id, named_expression());
    expect_op(":");
    add_all(id, block());
    return close_at(id, node(id).children.back());
  }

  // Patterns are validated but not materialized; the return value tells
  // whether the pattern is a bare capture name or `_` (possibly in
  // parentheses), which is what the complexity rules care about.
  bool pattern_top() {
    bool bare = as_pattern(true);
    if (at_op(",")) {
      bare = false;
      while (accept_op(",")) {
        if (at_op(":") || at_keyword("if")) break;
        as_pattern(true);
      }
    }
    return bare;
  }

  bool as_pattern(bool allow_star) {
    NestingGuard guard(*this);
    bool bare = or_pattern(allow_star);
    if (accept_keyword("as")) {
      expect_identifier();
      bare = false;
    }
    return bare;
  }

  bool or_pattern(bool allow_star) {
    bool bare = closed_pattern(allow_star);
    while (accept_op("|")) {
      closed_pattern(false);
      bare = false;
    }
    return bare;
  }

  void signed_number() {
    accept_op("-");
    if (peek().kind != TokenKind::Number) fail(peek(), "invalid pattern");
    advance();
    if (at_op("+") || at_op("-")) {
      advance();
      if (peek().kind != TokenKind::Number) fail(peek(), "invalid pattern");
      advance();
    }
  }

  bool closed_pattern(bool allow_star) {
    const Token& t = peek();
    if (at_op("*")) {
      if (!allow_star) fail(t, "invalid pattern");
      advance();
      expect_identifier();
      return false;
    }
    if (at_op("(") || at_op("[")) {
      const std::string_view closer = at_op("(") ? ")" : "]";
      const bool paren = at_op("(");
      advance();
      if (accept_op(closer)) return false;
      bool bare = as_pattern(true);
      bool sequence = !paren;
      while (accept_op(",")) {
        sequence = true;
        if (at_op(closer)) break;
        as_pattern(true);
      }
      expect_op(closer);
      return bare && !sequence;
    }
    if (at_op("{")) {
      advance();
      while (!at_op("}")) {
        if (accept_op("**")) {
          expect_identifier();
        } else {
          mapping_key();
          expect_op(":");
          as_pattern(false);
        }
        if (!accept_op(",")) break;
      }
      expect_op("}");
      return false;
    }
    if (t.kind == TokenKind::Number || at_op("-")) {
      signed_number();
      return false;
    }
    if (t.kind == TokenKind::String) {
      while (peek().kind == TokenKind::String) advance();
      return false;
    }
    if (at_keyword("None") || at_keyword("True") || at_keyword("False")) {
      advance();
      return false;
    }
    if (at_identifier()) {
      advance();
      bool dotted = false;
      while (accept_op(".")) {
        expect_identifier();
        dotted = true;
      }
      if (at_op("(")) {
        advance();
        while (!at_op(")")) {
          if (at_identifier() && at_op("=", 1)) {
            advance();
            advance();
          }
          as_pattern(false);
          if (!accept_op(",")) break;
        }
        expect_op(")");
        return false;
      }
      return !dotted;
    }
    fail(t, "invalid pattern");
  }

  void mapping_key() {
    const Token& t = peek();
    if (t.kind == TokenKind::Number || at_op("-")) return signed_number();
    if (t.kind == TokenKind::String) {
      while (peek().kind == TokenKind::String) advance();
      return;
    }
    if (at_keyword("None") || at_keyword("True") || at_keyword("False")) {
      advance();
      return;
    }
    expect_identifier();
    if (!at_op(".")) fail(peek(), "mapping pattern keys may only match literals and attribute lookups");
    while (accept_op(".")) expect_identifier();
  }

  // ---- expressions -------------------------------------------------------

  NodeId star_expressions() {
    const NodeId first = star_expression();
    if (!at_op(",")) return first;
    const NodeId tuple = make_from(NodeKind::Tuple, first);
    while (accept_op(",")) {
      if (!can_start_expression()) break;
      add(tuple, star_expression());
    }
    return close(tuple);
  }

  NodeId star_expression() {
    if (at_op("*")) {
      const NodeId id = make(NodeKind::Starred, advance());
      add(id, bitwise_or());
      return close(id);
    }
    return expression();
  }

  NodeId star_named_expression() {
    if (at_op("*")) {
      const NodeId id = make(NodeKind::Starred, advance());
      add(id, bitwise_or());
      return close(id);
    }
    return named_expression();
  }

  NodeId named_expression() {
    if (at_identifier() && at_op(":=", 1)) {
      const Token& name = advance();
      const NodeId target = make(NodeKind::Name, name);
      node(target).name = std::string(name.text);
      close(target);
      advance();
      const NodeId id = make_from(NodeKind::NamedExpr, target);
      add(id, expression());
      return close(id);
    }
    return expression();
  }

  NodeId expression() {
    NestingGuard guard(*this);
    if (at_keyword("lambda")) return lambda_expr();
    const NodeId body = disjunction();
    if (!at_keyword("if")) return body;
    advance();
    const NodeId id = make_from(NodeKind::IfExp, body);
    add(id, disjunction());
    expect_keyword("else");
    add(id, expression());
    return close(id);
  }

  NodeId lambda_expr() {
    const NodeId id = make(NodeKind::Lambda, advance());
    add_all(id, parameters(":", false));
    expect_op(":");
    add(id, expression());
    return close(id);
  }

  NodeId bool_chain(std::string_view op, NodeId (Parser::*operand)()) {
    const NodeId first = (this->*operand)();
    if (!at_keyword(op)) return first;
    const NodeId id = make_from(NodeKind::BoolOp, first);
    node(id).name = std::string(op);
    while (accept_keyword(op)) add(id, (this->*operand)());
    node(id).count = static_cast<int>(node(id).children.size());
    return close(id);
  }

  NodeId disjunction() { return bool_chain("or", &Parser::conjunction); }
  NodeId conjunction() { return bool_chain("and", &Parser::inversion); }

  NodeId inversion() {
    if (at_keyword("not")) {
      NestingGuard guard(*this);
      const NodeId id = make(NodeKind::UnaryOp, advance());
      node(id).name = "not";
      add(id, inversion());
      return close(id);
    }
    return comparison();
  }

  bool accept_comparison_operator() {
    static constexpr std::array<std::string_view, 6> kOps = {"==", "!=", "<", ">", "<=", ">="};
    for (std::string_view op : kOps) {
      if (accept_op(op)) return true;
    }
    if (accept_keyword("in")) return true;
    if (at_keyword("not") && at_keyword("in", 1)) {
      advance();
      advance();
      return true;
    }
    if (accept_keyword("is")) {
      accept_keyword("not");
      return true;
    }
    return false;
  }

  NodeId comparison() {
    const NodeId first = bitwise_or();
    NodeId id = kNoNode;
    while (accept_comparison_operator()) {
      if (id == kNoNode) id = make_from(NodeKind::Compare, first);
      add(id, bitwise_or());
    }
    return id == kNoNode ? first : close(id);
  }

  template <std::size_t N>
  NodeId binary_chain(const std::array<std::string_view, N>& ops,
                      NodeId (Parser::*operand)()) {
    NodeId left = (this->*operand)();
    while (true) {
      const auto it = std::find_if(ops.begin(), ops.end(),
                                   [&](std::string_view op) { return at_op(op); });
      if (it == ops.end()) return left;
      advance();
      const NodeId id = make_from(NodeKind::BinOp, left);
      node(id).name = std::string(*it);
      add(id, (this->*operand)());
      left = close(id);
    }
  }

  NodeId bitwise_or() {
    static constexpr std::array<std::string_view, 1> kOps = {"|"};
    return binary_chain(kOps, &Parser::bitwise_xor);
  }
  NodeId bitwise_xor() {
    static constexpr std::array<std::string_view, 1> kOps = {"^"};
    return binary_chain(kOps, &Parser::bitwise_and);
  }
  NodeId bitwise_and() {
    static constexpr std::array<std::string_view, 1> kOps = {"&"};
    return binary_chain(kOps, &Parser::shift_expr);
  }
  NodeId shift_expr() {
    static constexpr std::array<std::string_view, 2> kOps = {"<<", ">>"};
    return binary_chain(kOps, &Parser::sum);
  }
  NodeId sum() {
    static constexpr std::array<std::string_view, 2> kOps = {"+", "-"};
    return binary_chain(kOps, &Parser::term);
  }
  NodeId term() {
    static constexpr std::array<std::string_view, 5> kOps = {"*", "/", "//", "%", "@"};
    return binary_chain(kOps, &Parser::factor);
  }

  NodeId factor() {
    if (at_op("+") || at_op("-") || at_op("~")) {
      NestingGuard guard(*this);
      const Token& op = advance();
      const NodeId id = make(NodeKind::UnaryOp, op);
      node(id).name = std::string(op.text);
      add(id, factor());
      return close(id);
    }
    return power();
  }

  NodeId power() {
    NodeId base;
    if (at_keyword("await")) {
      base = make(NodeKind::Await, advance());
      add(base, primary());
      close(base);
    } else {
      base = primary();
    }
    if (!accept_op("**")) return base;
    const NodeId id = make_from(NodeKind::BinOp, base);
    node(id).name = "**";
    add(id, factor());
    return close(id);
  }

  NodeId primary() {
    NodeId value = atom();
    while (true) {
      if (at_op(".")) {
        advance();
        const NodeId id = make_from(NodeKind::Attribute, value);
        node(id).name = std::string(expect_identifier().text);
        value = close(id);
      } else if (at_op("(")) {
        const Token& open = advance();
        const NodeId id = make_from(NodeKind::Call, value);
        add_all(id, call_arguments(open));
        value = close(id);
      } else if (at_op("[")) {
        advance();
        const NodeId id = make_from(NodeKind::Subscript, value);
        add(id, slices());
        expect_op("]");
        value = close(id);
      } else {
        return value;
      }
    }
  }

  // After '('; consumes the closing ')'. `open` is the '(' token, used as
  // the start of a bare generator argument.
  std::vector<NodeId> call_arguments(const Token& open) {
    std::vector<NodeId> args;
    bool seen_genexp = false;
    while (!at_op(")")) {
      if (seen_genexp) fail(peek(), "Generator expression must be parenthesized");
      if (at_op("*")) {
        const NodeId id = make(NodeKind::Starred, advance());
        add(id, expression());
        args.push_back(close(id));
      } else if (at_op("**")) {
        const NodeId id = make(NodeKind::Keyword, advance());
        add(id, expression());
        args.push_back(close(id));
      } else if (at_identifier() && at_op("=", 1)) {
        const Token& name = advance();
        advance();
        const NodeId id = make(NodeKind::Keyword, name);
        node(id).name = std::string(name.text);
        add(id, expression());
        args.push_back(close(id));
      } else {
        const NodeId value = named_expression();
        if (at_comp_for()) {
          if (!args.empty()) fail(peek(), "Generator expression must be parenthesized");
          const NodeId gen = make(NodeKind::GeneratorExp, open);
          add(gen, value);
          comprehension_clauses(gen);
          if (!at_op(")")) fail(peek(), "Generator expression must be parenthesized");
          node(gen).end_line = peek().end_line;
          node(gen).end_col = peek().end_col;
          args.push_back(gen);
          seen_genexp = true;
          continue;
        }
        args.push_back(value);
      }
      if (!accept_op(",")) break;
    }
    expect_op(")");
    return args;
  }

  NodeId slice_item() {
    const Token& first = peek();
    NodeId lower = kNoNode;
    if (!at_op(":")) {
      lower = at_op("*") ? star_expression() : named_expression();
      if (!at_op(":")) return lower;
    }
    const NodeId id = make(NodeKind::Slice, first);
    if (lower != kNoNode) add(id, lower);
    expect_op(":");
    if (!at_op(":") && !at_op("]") && !at_op(",")) add(id, expression());
    if (accept_op(":")) {
      if (!at_op("]") && !at_op(",")) add(id, expression());
    }
    return close(id);
  }

  NodeId slices() {
    const NodeId first = slice_item();
    if (!at_op(",")) return first;
    const NodeId tuple = make_from(NodeKind::Tuple, first);
    while (accept_op(",")) {
      if (at_op("]")) break;
      add(tuple, slice_item());
    }
    return close(tuple);
  }

  void comprehension_clauses(NodeId owner) {
    while (at_comp_for()) {
      const Token& first = peek();
      const NodeId clause = make(NodeKind::Comprehension, first);
      node(clause).flag = accept_keyword("async");
      expect_keyword("for");
      add(clause, target_list());
      expect_keyword("in");
      add(clause, disjunction());
      int filters = 0;
      while (accept_keyword("if")) {
        add(clause, disjunction());
        ++filters;
      }
      node(clause).count = filters;
      add(owner, close(clause));
    }
  }

  // Assignment-style targets (for loops, comprehensions, `as` clauses).
  // Parsed at bitwise-or precedence so `in` is not taken as an operator.
  NodeId target() {
    if (at_op("*")) {
      const NodeId id = make(NodeKind::Starred, advance());
      add(id, bitwise_or());
      return close(id);
    }
    return bitwise_or();
  }

  NodeId target_list() {
    const NodeId first = target();
    if (!at_op(",")) return first;
    const NodeId tuple = make_from(NodeKind::Tuple, first);
    while (accept_op(",")) {
      if (at_keyword("in") || at_op("=") || at_op(":") || at_op(")")) break;
      add(tuple, target());
    }
    return close(tuple);
  }

  NodeId yield_expr() {
    const Token& kw = advance();
    if (accept_keyword("from")) {
      const NodeId id = make(NodeKind::YieldFrom, kw);
      add(id, expression());
      return close(id);
    }
    const NodeId id = make(NodeKind::Yield, kw);
    if (can_start_expression() && !at_keyword("yield")) add(id, star_expressions());
    return close(id);
  }

  NodeId atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Number: {
        const NodeId id = make(NodeKind::Constant, advance());
        return close(id);
      }
      case TokenKind::String:
        return strings();
      case TokenKind::Name: {
        if (t.text == "None" || t.text == "True" || t.text == "False") {
          const NodeId id = make(NodeKind::Constant, advance());
          node(id).name = std::string(t.text);
          return close(id);
        }
        if (is_keyword(t.text)) fail(t, "invalid syntax");
        const NodeId id = make(NodeKind::Name, advance());
        node(id).name = std::string(t.text);
        return close(id);
      }
      case TokenKind::Op:
        if (t.text == "(") return paren_atom();
        if (t.text == "[") return list_atom();
        if (t.text == "{") return brace_atom();
        if (t.text == "...") {
          const NodeId id = make(NodeKind::Constant, advance());
          return close(id);
        }
        break;
      default:
        break;
    }
    fail(t, "invalid syntax");
  }

  NodeId strings() {
    const Token& first = peek();
    bool fstring = false;
    std::vector<const Token*> parts;
    while (peek().kind == TokenKind::String) {
      fstring = fstring || peek().fstring;
      parts.push_back(&advance());
    }
    const NodeId id = make(fstring ? NodeKind::JoinedStr : NodeKind::Constant, first);
    for (const Token* part : parts) {
      for (const detail::FStringField& field : part->fields) {
        Parser sub(text_, detail::tokenize_fragment(text_, field), arena_, nesting_);
        add(id, sub.parse_fstring_field());
      }
    }
    return close(id);
  }

  NodeId paren_atom() {
    const Token& open = advance();
    if (accept_op(")")) {
      const NodeId id = make(NodeKind::Tuple, open);
      return close(id);
    }
    if (at_keyword("yield")) {
      const NodeId y = yield_expr();
      expect_op(")");
      return y;
    }
    const NodeId first = star_named_expression();
    if (at_comp_for()) {
      const NodeId gen = make(NodeKind::GeneratorExp, open);
      add(gen, first);
      comprehension_clauses(gen);
      expect_op(")");
      return close(gen);
    }
    if (at_op(",")) {
      const NodeId tuple = make(NodeKind::Tuple, open);
      add(tuple, first);
      while (accept_op(",")) {
        if (at_op(")")) break;
        add(tuple, star_named_expression());
      }
      expect_op(")");
      return close(tuple);
    }
    expect_op(")");
    return first;
  }

  NodeId list_atom() {
    const Token& open = advance();
    if (accept_op("]")) {
      const NodeId id = make(NodeKind::List, open);
      return close(id);
    }
    const NodeId first = star_named_expression();
    if (at_comp_for()) {
      const NodeId comp = make(NodeKind::ListComp, open);
      add(comp, first);
      comprehension_clauses(comp);
      expect_op("]");
      return close(comp);
    }
    const NodeId list = make(NodeKind::List, open);
    add(list, first);
    while (accept_op(",")) {
      if (at_op("]")) break;
      add(list, star_named_expression());
    }
    expect_op("]");
    return close(list);
  }

  NodeId dict_unpack() {
    const NodeId id = make(NodeKind::DictUnpack, advance());
    add(id, bitwise_or());
    return close(id);
  }

  NodeId brace_atom() {
    const Token& open = advance();
    if (accept_op("}")) {
      const NodeId id = make(NodeKind::Dict, open);
      return close(id);
    }
    if (at_op("**")) {
      const NodeId dict = make(NodeKind::Dict, open);
      add(dict, dict_unpack());
      return finish_dict(dict);
    }
    const NodeId first = star_named_expression();
    if (at_op(":") && node(first).kind != NodeKind::Starred) {
      advance();
      const NodeId value = expression();
      if (at_comp_for()) {
        const NodeId comp = make(NodeKind::DictComp, open);
        add(comp, first);
        add(comp, value);
        comprehension_clauses(comp);
        expect_op("}");
        return close(comp);
      }
      const NodeId dict = make(NodeKind::Dict, open);
      add(dict, first);
      add(dict, value);
      return finish_dict(dict);
    }
    if (at_comp_for()) {
      const NodeId comp = make(NodeKind::SetComp, open);
      add(comp, first);
      comprehension_clauses(comp);
      expect_op("}");
      return close(comp);
    }
    const NodeId set = make(NodeKind::Set, open);
    add(set, first);
    while (accept_op(",")) {
      if (at_op("}")) break;
      add(set, star_named_expression());
    }
    expect_op("}");
    return close(set);
  }

  NodeId finish_dict(NodeId dict) {
    while (accept_op(",")) {
      if (at_op("}")) break;
      if (at_op("**")) {
        add(dict, dict_unpack());
        continue;
      }
      add(dict, expression());
      expect_op(":");
      add(dict, expression());
    }
    expect_op("}");
    return close(dict);
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::vector<Node>& arena_;
  std::size_t pos_ = 0;
  int nesting_;
};

// Copies the nodes reachable from `root` into pre-order, dropping nodes
// abandoned by backtracking and filling in parent links.
std::vector<Node> compact(std::vector<Node>& arena, NodeId root) {
  std::vector<Node> out;
  out.reserve(arena.size());
  struct Frame {
    NodeId old_id;
    NodeId parent;
  };
  std::vector<Frame> stack{{root, kNoNode}};
  while (!stack.empty()) {
    const Frame frame = stack.back();
    stack.pop_back();
    const auto new_id = static_cast<NodeId>(out.size());
    out.push_back(std::move(arena[frame.old_id]));
    Node& n = out.back();
    n.parent = frame.parent;
    if (frame.parent != kNoNode) {
      // Parents record their children's new ids in order of visitation.
      out[frame.parent].children.push_back(new_id);
    }
    const std::vector<NodeId> old_children = std::move(n.children);
    n.children.clear();
    for (auto it = old_children.rbegin(); it != old_children.rend(); ++it) {
      stack.push_back({*it, new_id});
    }
  }
  return out;
}

}  // namespace

SyntaxTree parse_source(std::string_view bytes, std::string path) {
  std::string text = detail::decode_source(bytes);
  const int line_count = detail::count_lines(text);
  std::vector<Node> arena;
  std::vector<detail::Token> tokens = detail::tokenize(text);
  Parser parser(text, std::move(tokens), arena, 0);
  const NodeId root = parser.parse_module(line_count);
  std::vector<Node> nodes = compact(arena, root);
  return SyntaxTree(std::move(nodes), std::move(path), std::move(text), line_count);
}

}  // namespace profrisk
