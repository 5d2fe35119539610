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

// Internal: Python tokenizer used by the parser.

#ifndef PROFRISK_SRC_TOKENIZER_HPP_
#define PROFRISK_SRC_TOKENIZER_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace profrisk::detail {

enum class TokenKind : std::uint8_t {
  Name,
  Number,
  String,
  Op,
  Newline,
  Indent,
  Dedent,
  End,
  // Tokenizer failure; raised only once the parser reaches it.
  Error,
};

/// Replacement field of an f-string: the expression text occupies
/// [begin, end) of the decoded source and starts at (line, col).
struct FStringField {
  std::size_t begin = 0;
  std::size_t end = 0;
  int line = 0;
  int col = 0;
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string_view text;
  int line = 0;
  int col = 0;
  int end_line = 0;
  int end_col = 0;
  bool fstring = false;
  std::vector<FStringField> fields;
  std::string message;  // Error only
};

/// Validates UTF-8, strips a BOM, rejects NUL bytes and normalizes CRLF
/// and lone CR to LF. Throws ParseError.
std::string decode_source(std::string_view bytes);

/// Number of physical lines in decoded text.
int count_lines(std::string_view text);

/// Tokenizes a whole file, producing NEWLINE/INDENT/DEDENT tokens. On a
/// lexical error the stream ends with an Error token instead of throwing.
std::vector<Token> tokenize(std::string_view text);

/// Tokenizes an f-string replacement field. Newlines are insignificant and
/// no indentation tokens are produced.
std::vector<Token> tokenize_fragment(std::string_view text,
                                     const FStringField& field);

}  // namespace profrisk::detail

#endif  // PROFRISK_SRC_TOKENIZER_HPP_
