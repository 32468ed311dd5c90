//
// Copyright 2026 The Posibot Authors
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

#ifndef POSIBOT_TEXT_CORE_HPP_
#define POSIBOT_TEXT_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace posibot {

enum class TokenKind { kWord, kNumber, kPunctuation };

// Half-open code-point interval into TokenizedText::source.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  std::string surface;
  Span span;
  TokenKind kind = TokenKind::kWord;

  // Words and numbers; everything the augmenters are allowed to touch.
  bool is_word() const { return kind != TokenKind::kPunctuation; }

  friend bool operator==(const Token&, const Token&) = default;
};

// [first, last) token indices of one sentence.
using SentenceBounds = std::pair<std::size_t, std::size_t>;

struct TokenizedText {
  std::string source;
  std::vector<Token> tokens;
  std::vector<SentenceBounds> sentence_bounds;

  std::size_t sentence_count() const { return sentence_bounds.size(); }

  friend bool operator==(const TokenizedText&, const TokenizedText&) = default;
};

// Word tokens are maximal runs of letters, digits, combining marks and
// apostrophes containing at least one letter or digit. Every other
// non-space code point is a one-character punctuation token. Sentences end
// after '.', '!' or '?' when followed by whitespace or end of text.
TokenizedText tokenize(std::string_view text);

// Joins tokens with one space between them, no space before punctuation.
std::string detokenize(const TokenizedText& text);

// Detokenized text of a single sentence.
std::string sentence_text(const TokenizedText& text, std::size_t sentence);

// Rebuilds a well-formed TokenizedText (fresh source and spans) from
// per-sentence token lists. Empty sentences are dropped.
TokenizedText assemble(const std::vector<std::vector<Token>>& sentences);

// Splits a TokenizedText into per-sentence token lists.
std::vector<std::vector<Token>> split_sentences(const TokenizedText& text);

// Lowercased surfaces of the word tokens, in order.
std::vector<std::string> lowercase_words(const TokenizedText& text);

namespace utf8 {

std::vector<char32_t> decode(std::string_view text);
std::string encode(const std::vector<char32_t>& code_points);
void append(std::string& out, char32_t cp);
std::size_t length(std::string_view text);

std::string to_lower(std::string_view text);
bool starts_upper(std::string_view text);
// Uppercases the first code point only.
std::string capitalize_first(std::string_view text);

}  // namespace utf8

// Unicode NFC normalization plus whitespace collapse and trim.
std::string clean_text(std::string_view text);

// Trims ASCII and Unicode whitespace from both ends.
std::string trim(std::string_view text);

}  // namespace posibot

#endif  // POSIBOT_TEXT_CORE_HPP_
