// Copyright 2026 The catsheaf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexer.hpp"

#include <cctype>

namespace catsheaf::dsl {

const char* to_string(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kLBrace: return "'{'";
    case Tok::kRBrace: return "'}'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kColon: return "':'";
    case Tok::kSemi: return "';'";
    case Tok::kComma: return "','";
    case Tok::kArrow: return "'->'";
    case Tok::kFatArrow: return "'=>'";
    case Tok::kGt: return "'>'";
    case Tok::kEq: return "'='";
    case Tok::kDot: return "'.'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

namespace {

bool ident_start(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool ident_char(char c) { return ident_start(c) || c == '.'; }

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::optional<std::vector<Token>> lex(std::string_view text, const std::string& file,
                                      Diagnostic& error) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto push = [&](Tok kind, std::size_t len) {
    Token t{kind, std::string(text.substr(i, len)), {file, line, col, line, col + static_cast<int>(len)}};
    out.push_back(std::move(t));
    advance(len);
  };

  while (i < text.size()) {
    char c = text[i];
    if (c == '\n' || std::isspace(static_cast<unsigned char>(c)) != 0) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < text.size() && text[i + 1] == '/')) {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size()) {
        if (ident_char(text[j])) {
          ++j;
        } else if (text[j] == '-' && j + 1 < text.size() && is_alpha(text[j + 1])) {
          j += 2;
        } else {
          break;
        }
      }
      // A trailing '.' belongs to no identifier.
      while (j > i + 1 && text[j - 1] == '.') --j;
      push(Tok::kIdent, j - i);
      continue;
    }
    auto next = [&](char d) { return i + 1 < text.size() && text[i + 1] == d; };
    switch (c) {
      case '{': push(Tok::kLBrace, 1); continue;
      case '}': push(Tok::kRBrace, 1); continue;
      case '(': push(Tok::kLParen, 1); continue;
      case ')': push(Tok::kRParen, 1); continue;
      case ':': push(Tok::kColon, 1); continue;
      case ';': push(Tok::kSemi, 1); continue;
      case ',': push(Tok::kComma, 1); continue;
      case '.': push(Tok::kDot, 1); continue;
      case '>': push(Tok::kGt, 1); continue;
      case '-':
        if (next('>')) {
          push(Tok::kArrow, 2);
          continue;
        }
        break;
      case '=':
        if (next('>')) {
          push(Tok::kFatArrow, 2);
        } else {
          push(Tok::kEq, 1);
        }
        continue;
      default:
        break;
    }
    error = {"E100", "lexical", std::string("unexpected character '") + c + "'",
             {file, line, col, line, col + 1}};
    return std::nullopt;
  }
  out.push_back({Tok::kEnd, "", {file, line, col, line, col}});
  return out;
}

}  // namespace catsheaf::dsl
