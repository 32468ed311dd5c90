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

#include "posibot/text_core.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <stdexcept>

namespace posibot {
namespace {

bool is_space(char32_t cp) { return u_isUWhiteSpace(static_cast<UChar32>(cp)); }

bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == U'’'; }

bool is_alnum(char32_t cp) { return u_isalnum(static_cast<UChar32>(cp)); }

bool is_digit(char32_t cp) { return u_isdigit(static_cast<UChar32>(cp)); }

bool is_mark(char32_t cp) {
  return (U_GET_GC_MASK(static_cast<UChar32>(cp)) & U_GC_M_MASK) != 0;
}

bool is_word_char(char32_t cp) {
  return is_alnum(cp) || is_mark(cp) || is_apostrophe(cp);
}

bool is_terminator(const Token& token) {
  return token.kind == TokenKind::kPunctuation &&
         (token.surface == "." || token.surface == "!" || token.surface == "?");
}

std::string slice(const std::vector<char32_t>& cps, std::size_t begin,
                  std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) utf8::append(out, cps[i]);
  return out;
}

}  // namespace

namespace utf8 {

std::vector<char32_t> decode(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 cp = 0;
    U8_NEXT(bytes, i, length, cp);
    out.push_back(cp < 0 ? U'�' : static_cast<char32_t>(cp));
  }
  return out;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(const std::vector<char32_t>& code_points) {
  std::string out;
  out.reserve(code_points.size());
  for (char32_t cp : code_points) append(out, cp);
  return out;
}

std::size_t length(std::string_view text) { return decode(text).size(); }

std::string to_lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : decode(text)) {
    append(out, static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp))));
  }
  return out;
}

bool starts_upper(std::string_view text) {
  const auto cps = decode(text);
  return !cps.empty() && u_isupper(static_cast<UChar32>(cps.front()));
}

std::string capitalize_first(std::string_view text) {
  auto cps = decode(text);
  if (!cps.empty()) {
    cps.front() =
        static_cast<char32_t>(u_toupper(static_cast<UChar32>(cps.front())));
  }
  return encode(cps);
}

}  // namespace utf8

TokenizedText tokenize(std::string_view text) {
  TokenizedText out;
  out.source = std::string(text);
  const auto cps = utf8::decode(text);
  const std::size_t n = cps.size();

  std::size_t i = 0;
  while (i < n) {
    if (is_space(cps[i])) {
      ++i;
      continue;
    }
    if (is_word_char(cps[i])) {
      std::size_t j = i;
      bool has_alnum = false;
      bool all_digits = true;
      while (j < n && is_word_char(cps[j])) {
        has_alnum = has_alnum || is_alnum(cps[j]);
        all_digits = all_digits && is_digit(cps[j]);
        ++j;
      }
      if (has_alnum) {
        out.tokens.push_back(
            Token{slice(cps, i, j), Span{i, j},
                  all_digits ? TokenKind::kNumber : TokenKind::kWord});
      } else {
        // Runs of bare apostrophes or marks degrade to punctuation.
        for (std::size_t k = i; k < j; ++k) {
          out.tokens.push_back(Token{slice(cps, k, k + 1), Span{k, k + 1},
                                     TokenKind::kPunctuation});
        }
      }
      i = j;
      continue;
    }
    out.tokens.push_back(
        Token{slice(cps, i, i + 1), Span{i, i + 1}, TokenKind::kPunctuation});
    ++i;
  }

  std::size_t first = 0;
  for (std::size_t t = 0; t < out.tokens.size(); ++t) {
    const Token& token = out.tokens[t];
    if (!is_terminator(token)) continue;
    const std::size_t next = token.span.end;
    if (next == n || is_space(cps[next])) {
      out.sentence_bounds.emplace_back(first, t + 1);
      first = t + 1;
    }
  }
  if (first < out.tokens.size()) {
    out.sentence_bounds.emplace_back(first, out.tokens.size());
  }
  return out;
}

namespace {

std::string join_tokens(const std::vector<Token>& tokens, std::size_t begin,
                        std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin && tokens[i].kind != TokenKind::kPunctuation) out += ' ';
    out += tokens[i].surface;
  }
  return out;
}

}  // namespace

std::string detokenize(const TokenizedText& text) {
  return join_tokens(text.tokens, 0, text.tokens.size());
}

std::string sentence_text(const TokenizedText& text, std::size_t sentence) {
  if (sentence >= text.sentence_bounds.size()) {
    throw std::out_of_range("sentence index out of range");
  }
  const auto [begin, end] = text.sentence_bounds[sentence];
  return join_tokens(text.tokens, begin, end);
}

TokenizedText assemble(const std::vector<std::vector<Token>>& sentences) {
  TokenizedText out;
  std::size_t offset = 0;
  for (const auto& sentence : sentences) {
    if (sentence.empty()) continue;
    const std::size_t first = out.tokens.size();
    for (const Token& token : sentence) {
      if (!out.tokens.empty() && token.kind != TokenKind::kPunctuation) {
        out.source += ' ';
        ++offset;
      }
      const std::size_t len = utf8::length(token.surface);
      out.tokens.push_back(Token{token.surface, Span{offset, offset + len},
                                 token.kind});
      out.source += token.surface;
      offset += len;
    }
    out.sentence_bounds.emplace_back(first, out.tokens.size());
  }
  return out;
}

std::vector<std::vector<Token>> split_sentences(const TokenizedText& text) {
  std::vector<std::vector<Token>> out;
  out.reserve(text.sentence_bounds.size());
  for (const auto& [begin, end] : text.sentence_bounds) {
    out.emplace_back(text.tokens.begin() + static_cast<std::ptrdiff_t>(begin),
                     text.tokens.begin() + static_cast<std::ptrdiff_t>(end));
  }
  return out;
}

std::vector<std::string> lowercase_words(const TokenizedText& text) {
  std::vector<std::string> out;
  for (const Token& token : text.tokens) {
    if (token.is_word()) out.push_back(utf8::to_lower(token.surface));
  }
  return out;
}

std::string trim(std::string_view text) {
  const auto cps = utf8::decode(text);
  std::size_t begin = 0;
  std::size_t end = cps.size();
  while (begin < end && is_space(cps[begin])) ++begin;
  while (end > begin && is_space(cps[end - 1])) --end;
  return slice(cps, begin, end);
}

std::string clean_text(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  std::string normalized;
  if (U_SUCCESS(status)) {
    const auto source = icu::UnicodeString::fromUTF8(
        icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
    const icu::UnicodeString result = nfc->normalize(source, status);
    if (U_SUCCESS(status)) result.toUTF8String(normalized);
  }
  if (U_FAILURE(status)) normalized = std::string(text);

  std::string out;
  bool pending_space = false;
  for (char32_t cp : utf8::decode(normalized)) {
    if (is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    utf8::append(out, cp);
  }
  return out;
}

}  // namespace posibot
