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

#include "tokenizer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

#include "profrisk/syntax.hpp"

namespace profrisk::detail {

namespace {

constexpr const char* kTabError = "inconsistent use of tabs and spaces in indentation";

// Longest operators first so a greedy scan picks the right one.
constexpr std::array<std::string_view, 47> kOperators = {
    "**=", "//=", ">>=", "<<=", "...", "->", ":=", "**", "//", "<<", ">>",
    "<=",  ">=",  "==",  "!=",  "+=",  "-=", "*=", "/=", "%=", "&=", "|=",
    "^=",  "@=",  "+",   "-",   "*",   "/",  "%",  "@",  "&",  "|",  "^",
    "~",   "<",   ">",   "(",   ")",   "[",  "]",  "{",  "}",  ",",  ":",
    ";",   ".",   "=",
};

bool is_ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c >= 0x80;
}

bool is_ident_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c >= 0x80;
}

bool is_string_prefix(std::string_view word) {
  if (word.size() > 2) return false;
  std::string lower;
  for (char c : word) lower.push_back(static_cast<char>(std::tolower(c)));
  return lower == "r" || lower == "u" || lower == "b" || lower == "br" ||
         lower == "rb" || lower == "f" || lower == "fr" || lower == "rf";
}

class Tokenizer {
 public:
  Tokenizer(std::string_view text, std::size_t begin, std::size_t end,
            int line, std::size_t line_start, bool fragment)
      : text_(text),
        pos_(begin),
        end_(end),
        line_(line),
        line_start_(line_start),
        fragment_(fragment) {}

  std::vector<Token> run() {
    try {
      return scan();
    } catch (const ParseError& e) {
      Token t;
      t.kind = TokenKind::Error;
      t.line = e.line();
      t.message = e.message();
      tokens_.push_back(std::move(t));
      return std::move(tokens_);
    }
  }

 private:
  std::vector<Token> scan() {
    bool at_line_start = !fragment_;
    while (true) {
      if (at_line_start && brackets_.empty()) {
        at_line_start = false;
        if (!handle_indentation()) break;
      }
      skip_blanks();
      if (pos_ >= end_) break;
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < end_ && text_[pos_] != '\n') ++pos_;
        continue;
      }
      if (c == '\\') {
        if (pos_ + 1 < end_ && text_[pos_ + 1] == '\n') {
          ++pos_;
          consume_newline();
          continue;
        }
        fail(line_, "unexpected character after line continuation character");
      }
      if (c == '\n') {
        if (!brackets_.empty() || fragment_) {
          consume_newline();
          continue;
        }
        push(TokenKind::Newline, pos_, pos_ + 1);
        consume_newline();
        at_line_start = true;
        continue;
      }
      const auto uc = static_cast<unsigned char>(c);
      if (is_ident_start(uc)) {
        scan_name();
        continue;
      }
      if (std::isdigit(uc) ||
          (c == '.' && pos_ + 1 < end_ &&
           std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        scan_number();
        continue;
      }
      if (c == '\'' || c == '"') {
        scan_string_token(pos_, false, false);
        continue;
      }
      scan_operator();
    }
    if (!brackets_.empty()) {
      fail(brackets_.back().second,
           "'" + std::string(1, brackets_.back().first) +
               "' was never closed");
    }
    if (!fragment_) {
      if (!tokens_.empty() && tokens_.back().kind != TokenKind::Newline &&
          tokens_.back().kind != TokenKind::Dedent) {
        push(TokenKind::Newline, pos_, pos_);
      }
      while (indents_.size() > 1) {
        indents_.pop_back();
        alt_indents_.pop_back();
        push(TokenKind::Dedent, pos_, pos_);
      }
    }
    push(TokenKind::End, pos_, pos_);
    return std::move(tokens_);
  }

  [[noreturn]] static void fail(int line, std::string message) {
    throw ParseError(line, std::move(message));
  }

  int col_of(std::size_t offset) const {
    return static_cast<int>(offset - line_start_);
  }

  void consume_newline() {
    ++pos_;
    ++line_;
    line_start_ = pos_;
  }

  // Advances one byte inside a literal, keeping line bookkeeping.
  void step() {
    if (text_[pos_] == '\n') {
      consume_newline();
    } else {
      ++pos_;
    }
  }

  Token& push(TokenKind kind, std::size_t begin, std::size_t end) {
    return push(kind, begin, end, line_, col_of(begin));
  }

  Token& push(TokenKind kind, std::size_t begin, std::size_t end,
              int start_line, int start_col) {
    Token token;
    token.kind = kind;
    token.text = text_.substr(begin, end - begin);
    token.line = start_line;
    token.col = start_col;
    token.end_line = line_;
    token.end_col = col_of(end);
    tokens_.push_back(std::move(token));
    return tokens_.back();
  }

  void skip_blanks() {
    while (pos_ < end_ &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\f')) {
      ++pos_;
    }
  }

  // Returns false at end of input.
  bool handle_indentation() {
    while (pos_ < end_) {
      // alt counts a tab as one column; disagreement with column ordering
      // means the indentation depends on tab width.
      int column = 0;
      int alt = 0;
      std::size_t p = pos_;
      for (; p < end_; ++p) {
        const char c = text_[p];
        if (c == ' ') {
          ++column;
          ++alt;
        } else if (c == '\t') {
          column = (column / 8 + 1) * 8;
          ++alt;
        } else if (c == '\f') {
          column = 0;
          alt = 0;
        } else {
          break;
        }
      }
      if (p >= end_) {
        pos_ = p;
        return false;
      }
      if (text_[p] == '#' || text_[p] == '\n') {
        pos_ = p;
        while (pos_ < end_ && text_[pos_] != '\n') ++pos_;
        if (pos_ < end_) consume_newline();
        continue;
      }
      pos_ = p;
      if (column > indents_.back()) {
        if (alt <= alt_indents_.back()) fail(line_, kTabError);
        indents_.push_back(column);
        alt_indents_.push_back(alt);
        push(TokenKind::Indent, line_start_, pos_);
      } else {
        while (column < indents_.back()) {
          indents_.pop_back();
          alt_indents_.pop_back();
          push(TokenKind::Dedent, pos_, pos_);
        }
        if (column != indents_.back()) {
          fail(line_, "unindent does not match any outer indentation level");
        }
        if (alt != alt_indents_.back()) fail(line_, kTabError);
      }
      return true;
    }
    return false;
  }

  void scan_name() {
    const std::size_t begin = pos_;
    while (pos_ < end_ && is_ident_char(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::string_view word = text_.substr(begin, pos_ - begin);
    if (pos_ < end_ && (text_[pos_] == '\'' || text_[pos_] == '"') &&
        is_string_prefix(word)) {
      scan_string_token(begin, word.find_first_of("fF") != std::string_view::npos,
                        word.find_first_of("rR") != std::string_view::npos);
      return;
    }
    push(TokenKind::Name, begin, pos_);
  }

  void scan_digits(bool (*accept)(unsigned char)) {
    while (pos_ < end_ && (accept(static_cast<unsigned char>(text_[pos_])) ||
                           text_[pos_] == '_')) {
      ++pos_;
    }
  }

  void scan_number() {
    const std::size_t begin = pos_;
    auto is_dec = [](unsigned char c) -> bool { return std::isdigit(c) != 0; };
    if (text_[pos_] == '0' && pos_ + 1 < end_ &&
        std::string_view("xXoObB").find(text_[pos_ + 1]) != std::string_view::npos) {
      pos_ += 2;
      const std::size_t digits = pos_;
      scan_digits([](unsigned char c) -> bool { return std::isxdigit(c) != 0; });
      if (pos_ == digits) fail(line_, "invalid number literal");
      push(TokenKind::Number, begin, pos_);
      return;
    }
    scan_digits(is_dec);
    const std::size_t int_end = pos_;
    bool is_float = false;
    if (pos_ < end_ && text_[pos_] == '.') {
      is_float = true;
      ++pos_;
      scan_digits(is_dec);
    }
    if (pos_ < end_ && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < end_ && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < end_ && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        is_float = true;
        pos_ = p;
        scan_digits(is_dec);
      } else {
        fail(line_, "invalid decimal literal");
      }
    }
    if (pos_ < end_ && (text_[pos_] == 'j' || text_[pos_] == 'J')) {
      is_float = true;
      ++pos_;
    }
    const std::string_view int_part = text_.substr(begin, int_end - begin);
    if (!is_float && int_part.size() > 1 && int_part.front() == '0' &&
        int_part.find_first_not_of("0_") != std::string_view::npos) {
      fail(line_, "leading zeros in decimal integer literals are not permitted");
    }
    push(TokenKind::Number, begin, pos_);
  }

  void scan_operator() {
    const std::string_view rest = text_.substr(pos_, end_ - pos_);
    for (std::string_view op : kOperators) {
      if (rest.substr(0, op.size()) != op) continue;
      const char c = op.front();
      if (op.size() == 1 && (c == '(' || c == '[' || c == '{')) {
        brackets_.emplace_back(c, line_);
      } else if (op.size() == 1 && (c == ')' || c == ']' || c == '}')) {
        const char want = c == ')' ? '(' : c == ']' ? '[' : '{';
        if (brackets_.empty()) {
          fail(line_, "unmatched '" + std::string(1, c) + "'");
        }
        if (brackets_.back().first != want) {
          fail(line_, "closing parenthesis '" + std::string(1, c) +
                          "' does not match opening parenthesis '" +
                          std::string(1, brackets_.back().first) + "'");
        }
        brackets_.pop_back();
      }
      const std::size_t begin = pos_;
      pos_ += op.size();
      push(TokenKind::Op, begin, pos_);
      return;
    }
    fail(line_, "invalid character '" + std::string(1, text_[pos_]) + "'");
  }

  // Emits one STRING token starting at `begin` (prefix included); pos_ is
  // at the opening quote.
  void scan_string_token(std::size_t begin, bool fstring, bool raw) {
    const int start_line = line_;
    const int start_col = col_of(begin);
    std::vector<FStringField> fields;
    scan_string_body(fstring, raw, &fields);
    Token& token = push(TokenKind::String, begin, pos_, start_line, start_col);
    token.fstring = fstring;
    token.fields = std::move(fields);
  }

  // pos_ at the opening quote. Consumes through the closing quote.
  void scan_string_body(bool fstring, bool raw, std::vector<FStringField>* fields) {
    const int start_line = line_;
    const char quote = text_[pos_];
    const bool triple = pos_ + 2 < end_ && text_[pos_ + 1] == quote &&
                        text_[pos_ + 2] == quote;
    pos_ += triple ? 3 : 1;
    while (true) {
      if (pos_ >= end_) {
        fail(start_line, triple ? "unterminated triple-quoted string literal"
                                : "unterminated string literal");
      }
      const char c = text_[pos_];
      if (c == '\\') {
        ++pos_;
        if (fstring && !raw && pos_ + 1 < end_ && text_[pos_] == 'N' &&
            text_[pos_ + 1] == '{') {
          // Named unicode escape, not a replacement field.
          while (pos_ < end_ && text_[pos_] != '}' && text_[pos_] != '\n') ++pos_;
          if (pos_ < end_ && text_[pos_] == '}') ++pos_;
          continue;
        }
        if (pos_ < end_ && !(fstring && (text_[pos_] == '{' || text_[pos_] == '}'))) {
          step();
        }
        continue;
      }
      if (c == '\n') {
        if (!triple) fail(start_line, "unterminated string literal");
        consume_newline();
        continue;
      }
      if (c == quote) {
        if (!triple) {
          ++pos_;
          return;
        }
        if (pos_ + 2 < end_ && text_[pos_ + 1] == quote &&
            text_[pos_ + 2] == quote) {
          pos_ += 3;
          return;
        }
        ++pos_;
        continue;
      }
      if (fstring && c == '{') {
        if (pos_ + 1 < end_ && text_[pos_ + 1] == '{') {
          pos_ += 2;
          continue;
        }
        ++pos_;
        scan_field(quote, triple, fields);
        continue;
      }
      if (fstring && c == '}') {
        if (pos_ + 1 < end_ && text_[pos_ + 1] == '}') {
          pos_ += 2;
          continue;
        }
        fail(line_, "f-string: single '}' is not allowed");
      }
      ++pos_;
    }
  }

  // pos_ just past the '{' of a replacement field; consumes its '}'.
  void scan_field(char quote, bool triple, std::vector<FStringField>* fields) {
    FStringField field;
    field.begin = pos_;
    field.line = line_;
    field.col = col_of(pos_);
    bool have_end = false;
    int depth = 0;
    auto mark_end = [&] {
      if (!have_end) {
        field.end = pos_;
        have_end = true;
      }
    };
    while (true) {
      if (pos_ >= end_) fail(field.line, "f-string: expecting '}'");
      const char c = text_[pos_];
      const auto uc = static_cast<unsigned char>(c);
      if (have_end && depth == 0 && c != '}' && c != ':' && c != '!' &&
          c != ' ' && !is_ident_char(uc)) {
        fail(line_, "f-string: expecting '}'");
      }
      if (is_ident_start(uc) && !have_end) {
        const std::size_t word_begin = pos_;
        while (pos_ < end_ && is_ident_char(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
        const std::string_view word = text_.substr(word_begin, pos_ - word_begin);
        if (pos_ < end_ && (text_[pos_] == '\'' || text_[pos_] == '"') &&
            is_string_prefix(word)) {
          scan_string_body(word.find_first_of("fF") != std::string_view::npos,
                           word.find_first_of("rR") != std::string_view::npos, nullptr);
        }
        continue;
      }
      if ((c == '\'' || c == '"') && !have_end) {
        scan_string_body(false, false, nullptr);
        continue;
      }
      if (c == '\n') {
        consume_newline();
        continue;
      }
      if (c == '(' || c == '[' || c == '{') {
        ++depth;
        ++pos_;
        continue;
      }
      if ((c == ')' || c == ']') && depth > 0) {
        --depth;
        ++pos_;
        continue;
      }
      if (c == '}') {
        if (depth > 0) {
          --depth;
          ++pos_;
          continue;
        }
        mark_end();
        ++pos_;
        break;
      }
      if (depth == 0 && c == '!' && pos_ + 1 < end_ && text_[pos_ + 1] != '=') {
        mark_end();
        ++pos_;
        continue;
      }
      if (depth == 0 && c == ':') {
        mark_end();
        ++pos_;
        scan_format_spec(quote, triple, fields);
        continue;
      }
      if (depth == 0 && c == '=' && !have_end) {
        const char before = pos_ > field.begin ? text_[pos_ - 1] : ' ';
        const char after = pos_ + 1 < end_ ? text_[pos_ + 1] : ' ';
        if (std::string_view("=!<>").find(before) == std::string_view::npos &&
            after != '=') {
          mark_end();
          ++pos_;
          continue;
        }
      }
      if (c == '\\' && !have_end) {
        fail(line_, "f-string expression part cannot include a backslash");
      }
      ++pos_;
    }
    const std::string_view expr = text_.substr(field.begin, field.end - field.begin);
    if (expr.find_first_not_of(" \t\n\f") == std::string_view::npos) {
      fail(field.line, "f-string: valid expression required before '}'");
    }
    if (fields != nullptr) fields->push_back(field);
  }

  // pos_ just past ':'; stops at the '}' closing the field.
  void scan_format_spec(char quote, bool triple, std::vector<FStringField>* fields) {
    while (true) {
      if (pos_ >= end_) fail(line_, "f-string: expecting '}'");
      const char c = text_[pos_];
      if (c == '}') return;
      if (c == '{') {
        ++pos_;
        scan_field(quote, triple, fields);
        continue;
      }
      if (c == quote) fail(line_, "f-string: expecting '}'");
      if (c == '\n') {
        if (!triple) fail(line_, "f-string: expecting '}'");
        consume_newline();
        continue;
      }
      if (c == '\\') {
        ++pos_;
        if (pos_ < end_) step();
        continue;
      }
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_;
  std::size_t end_;
  int line_;
  std::size_t line_start_;
  bool fragment_;
  std::vector<int> indents_{0};
  std::vector<int> alt_indents_{0};
  std::vector<std::pair<char, int>> brackets_;
  std::vector<Token> tokens_;
};

void validate_utf8(std::string_view bytes) {
  int line = 1;
  std::size_t i = 0;
  while (i < bytes.size()) {
    const auto c = static_cast<unsigned char>(bytes[i]);
    if (c == '\n') ++line;
    if (c < 0x80) {
      ++i;
      continue;
    }
    int extra = 0;
    std::uint32_t cp = 0;
    if ((c & 0xe0) == 0xc0) {
      extra = 1;
      cp = c & 0x1f;
    } else if ((c & 0xf0) == 0xe0) {
      extra = 2;
      cp = c & 0x0f;
    } else if ((c & 0xf8) == 0xf0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      throw ParseError(line, "invalid UTF-8 start byte");
    }
    if (i + extra >= bytes.size()) {
      throw ParseError(line, "truncated UTF-8 sequence");
    }
    for (int k = 1; k <= extra; ++k) {
      const auto cc = static_cast<unsigned char>(bytes[i + k]);
      if ((cc & 0xc0) != 0x80) throw ParseError(line, "invalid UTF-8 continuation byte");
      cp = (cp << 6) | (cc & 0x3f);
    }
    static constexpr std::uint32_t kMin[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMin[extra] || cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) {
      throw ParseError(line, "invalid UTF-8 sequence");
    }
    i += static_cast<std::size_t>(extra) + 1;
  }
}

}  // namespace

std::string decode_source(std::string_view bytes) {
  if (bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);
  validate_utf8(bytes);
  std::string out;
  out.reserve(bytes.size());
  int line = 1;
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const char c = bytes[i];
    if (c == '\0') throw ParseError(line, "source code cannot contain null bytes");
    if (c == '\r') {
      if (i + 1 < bytes.size() && bytes[i + 1] == '\n') ++i;
      out.push_back('\n');
      ++line;
      continue;
    }
    if (c == '\n') ++line;
    out.push_back(c);
  }
  return out;
}

int count_lines(std::string_view text) {
  const auto newlines = std::count(text.begin(), text.end(), '\n');
  const bool partial = !text.empty() && text.back() != '\n';
  return static_cast<int>(newlines) + (partial ? 1 : 0);
}

std::vector<Token> tokenize(std::string_view text) {
  return Tokenizer(text, 0, text.size(), 1, 0, false).run();
}

std::vector<Token> tokenize_fragment(std::string_view text,
                                     const FStringField& field) {
  const std::size_t line_start = field.begin - static_cast<std::size_t>(field.col);
  return Tokenizer(text, field.begin, field.end, field.line, line_start, true).run();
}

}  // namespace profrisk::detail
