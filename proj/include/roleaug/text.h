//
// Copyright 2026 The roleaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef ROLEAUG_TEXT_H_
#define ROLEAUG_TEXT_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace roleaug {

enum class TokenKind { kWord, kPunctuation, kNumeric };

std::string_view TokenKindName(TokenKind kind);

struct Token {
  std::string surface;
  std::string normalized;
  TokenKind kind = TokenKind::kWord;
  // Byte offsets [first, second) into the text the token was read from.
  // Tokens synthesized by augmentation carry an empty span.
  std::pair<std::size_t, std::size_t> span{0, 0};

  bool is_word() const { return kind == TokenKind::kWord; }

  friend bool operator==(const Token&, const Token&) = default;
};

// ASCII case folding. Bytes outside ASCII are copied unchanged.
std::string CaseFold(std::string_view text);

// Builds a token of the right kind for a surface that contains no whitespace.
Token MakeToken(std::string surface);

// Whitespace split, then leading and trailing runs of non-alphanumeric
// characters are peeled off as separate punctuation tokens. A chunk made of
// digits (with optional '.' or ',' separators) is numeric. Bytes >= 0x80 count
// as alphanumeric so UTF-8 letters stay inside words.
std::vector<Token> Tokenize(std::string_view text);

// Single spaces between tokens, none before punctuation.
std::string Detokenize(std::span<const Token> tokens);

// Copies the first-letter capitalization of `model` onto `word`.
std::string InheritCapitalization(std::string_view model, std::string word);

}  // namespace roleaug

#endif  // ROLEAUG_TEXT_H_
