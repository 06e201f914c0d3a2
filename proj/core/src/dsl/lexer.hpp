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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catsheaf/dsl/workspace.hpp"

namespace catsheaf::dsl {

enum class Tok {
  kIdent,
  kLBrace,
  kRBrace,
  kLParen,
  kRParen,
  kColon,
  kSemi,
  kComma,
  kArrow,     // ->
  kFatArrow,  // =>
  kGt,        // >
  kEq,        // =
  kDot,       // . between spaced names
  kEnd,
};

const char* to_string(Tok t);

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  SourceSpan span;
};

/// Identifiers are [A-Za-z0-9_][A-Za-z0-9_.]* with interior '-' allowed
/// before a letter (`enumerate-sieves`). `#` and `//` start line comments.
/// On a bad character, returns nullopt and fills `error`.
std::optional<std::vector<Token>> lex(std::string_view text, const std::string& file,
                                      Diagnostic& error);

}  // namespace catsheaf::dsl
