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

#include "roleaug/text.h"

#include <algorithm>

namespace roleaug {
namespace {

bool IsSpace(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsAlnum(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z') || c >= 0x80;
}

bool IsDigit(unsigned char c) { return c >= '0' && c <= '9'; }

TokenKind Classify(std::string_view surface) {
  if (std::none_of(surface.begin(), surface.end(),
                   [](unsigned char c) { return IsAlnum(c); })) {
    return TokenKind::kPunctuation;
  }
  bool numeric = std::all_of(surface.begin(), surface.end(), [](unsigned char c) {
    return IsDigit(c) || c == '.' || c == ',';
  });
  return numeric ? TokenKind::kNumeric : TokenKind::kWord;
}

void Emit(std::string_view text, std::size_t begin, std::size_t end,
          std::vector<Token>& out) {
  Token token = MakeToken(std::string(text.substr(begin, end - begin)));
  token.span = {begin, end};
  out.push_back(std::move(token));
}

}  // namespace

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord:
      return "word";
    case TokenKind::kPunctuation:
      return "punctuation";
    case TokenKind::kNumeric:
      return "numeric";
  }
  return "word";
}

std::string CaseFold(std::string_view text) {
  std::string folded(text);
  for (char& c : folded) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return folded;
}

Token MakeToken(std::string surface) {
  Token token;
  token.kind = Classify(surface);
  token.normalized = CaseFold(surface);
  token.surface = std::move(surface);
  return token;
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t size = text.size();
  while (i < size) {
    while (i < size && IsSpace(text[i])) ++i;
    if (i == size) break;
    std::size_t chunk_end = i;
    while (chunk_end < size && !IsSpace(text[chunk_end])) ++chunk_end;

    std::size_t core_begin = i;
    while (core_begin < chunk_end && !IsAlnum(text[core_begin])) ++core_begin;
    if (core_begin == chunk_end) {
      Emit(text, i, chunk_end, tokens);
    } else {
      std::size_t core_end = chunk_end;
      while (!IsAlnum(text[core_end - 1])) --core_end;
      if (core_begin > i) Emit(text, i, core_begin, tokens);
      Emit(text, core_begin, core_end, tokens);
      if (core_end < chunk_end) Emit(text, core_end, chunk_end, tokens);
    }
    i = chunk_end;
  }
  return tokens;
}

std::string Detokenize(std::span<const Token> tokens) {
  std::string text;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0 && tokens[i].kind != TokenKind::kPunctuation) text += ' ';
    text += tokens[i].surface;
  }
  return text;
}

std::string InheritCapitalization(std::string_view model, std::string word) {
  if (!model.empty() && !word.empty() && model[0] >= 'A' && model[0] <= 'Z' &&
      word[0] >= 'a' && word[0] <= 'z') {
    word[0] = static_cast<char>(word[0] - 'a' + 'A');
  }
  return word;
}

}  // namespace roleaug
