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

#include "posibot/translation.hpp"

#include <algorithm>

#include "httplib.h"
#include "posibot/errors.hpp"
#include "posibot/json_util.hpp"
#include "posibot/text_core.hpp"

namespace posibot {

LanguageTag::LanguageTag(std::string code) : code_(std::move(code)) {
  const bool valid =
      !code_.empty() && std::all_of(code_.begin(), code_.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || c == '-';
      });
  if (!valid) {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid language tag '" + code_ + "'");
  }
}

std::string translate(const Translator& tr, std::string_view text,
                      const LanguageTag& src, const LanguageTag& dst) {
  if (!tr.supports(src, dst)) {
    throw Error(ErrorCode::kUnsupportedPair,
                "unsupported language pair " + src.code() + "->" + dst.code());
  }
  return tr.translate_text(text, src, dst);
}

std::string back_translate(const Translator& tr, std::string_view text,
                           const LanguageTag& src, const LanguageTag& pivot) {
  if (!tr.supports(src, pivot) || !tr.supports(pivot, src)) {
    throw Error(ErrorCode::kUnsupportedPair,
                "back-translation needs both " + src.code() + "<->" +
                    pivot.code());
  }
  const std::string there = tr.translate_text(text, src, pivot);
  return tr.translate_text(there, pivot, src);
}

bool IdentityTranslator::supports(const LanguageTag& src,
                                  const LanguageTag& dst) const {
  if (languages_.empty()) return true;
  return languages_.contains(src) && languages_.contains(dst);
}

std::string IdentityTranslator::translate_text(std::string_view text,
                                               const LanguageTag&,
                                               const LanguageTag&) const {
  return std::string(text);
}

BilingualLexicon BilingualLexicon::from_pairs(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    bool invertible) {
  BilingualLexicon lex;
  lex.invertible = invertible;
  for (const auto& [source, target] : pairs) {
    const std::string s = utf8::to_lower(source);
    const std::string t = utf8::to_lower(target);
    if (s.empty() || t.empty()) {
      throw Error(ErrorCode::kInvalidConfig, "empty bilingual lexicon entry");
    }
    lex.forward.emplace(s, t);
    const auto [it, inserted] = lex.backward.emplace(t, s);
    if (!inserted && it->second != s && invertible) {
      throw Error(ErrorCode::kInvalidConfig,
                  "lexicon marked invertible but '" + s + "' and '" +
                      it->second + "' both map to '" + t + "'");
    }
  }
  return lex;
}

BilingualLexicon BilingualLexicon::from_json(const nlohmann::json& doc) {
  require_known_fields(doc, {"pairs", "invertible"}, "bilingual lexicon");
  std::vector<std::pair<std::string, std::string>> pairs;
  try {
    for (const auto& pair : doc.at("pairs")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw Error(ErrorCode::kInvalidConfig,
                    "bilingual lexicon pairs must be [source, target]");
      }
      pairs.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
    return from_pairs(pairs, doc.value("invertible", false));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string("bilingual lexicon: ") + e.what());
  }
}

BilingualLexicon BilingualLexicon::load(const std::filesystem::path& path) {
  return from_json(read_json_file(path));
}

bool DictionaryTranslator::supports(const LanguageTag& src,
                                    const LanguageTag& dst) const {
  return (src == src_ && dst == dst_) || (src == dst_ && dst == src_);
}

std::string DictionaryTranslator::translate_text(std::string_view text,
                                                 const LanguageTag& src,
                                                 const LanguageTag&) const {
  const auto& table = src == src_ ? lexicon_.forward : lexicon_.backward;
  const TokenizedText tokens = tokenize(text);
  const auto cps = utf8::decode(text);

  // Splice replacements into the source so spacing is preserved verbatim.
  std::string out;
  std::size_t cursor = 0;
  for (const Token& token : tokens.tokens) {
    if (!token.is_word()) continue;
    const auto it = table.find(utf8::to_lower(token.surface));
    if (it == table.end()) continue;
    for (std::size_t i = cursor; i < token.span.start; ++i) {
      utf8::append(out, cps[i]);
    }
    out += utf8::starts_upper(token.surface) ? utf8::capitalize_first(it->second)
                                             : it->second;
    cursor = token.span.end;
  }
  for (std::size_t i = cursor; i < cps.size(); ++i) utf8::append(out, cps[i]);
  return out;
}

RemoteTranslator::RemoteTranslator(
    std::string url, std::chrono::milliseconds timeout,
    std::set<std::pair<LanguageTag, LanguageTag>> capabilities)
    : timeout_(timeout), capabilities_(std::move(capabilities)) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::kInvalidConfig, "remote url needs a scheme: " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  host_ = url.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/" : url.substr(path_start);
}

bool RemoteTranslator::supports(const LanguageTag& src,
                                const LanguageTag& dst) const {
  return capabilities_.empty() || capabilities_.contains({src, dst});
}

std::string RemoteTranslator::translate_text(std::string_view text,
                                             const LanguageTag& src,
                                             const LanguageTag& dst) const {
  httplib::Client client(host_);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout_);
  const auto usecs =
      std::chrono::duration_cast<std::chrono::microseconds>(timeout_ - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());

  const nlohmann::json body = {
      {"text", std::string(text)}, {"src", src.code()}, {"dst", dst.code()}};
  const auto res = client.Post(path_, body.dump(), "application/json");
  if (!res) {
    throw Error(ErrorCode::kBackendUnavailable,
                "translation backend unreachable: " +
                    httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw Error(ErrorCode::kBackendUnavailable,
                "translation backend returned HTTP " +
                    std::to_string(res->status));
  }
  try {
    const auto reply = nlohmann::json::parse(res->body);
    if (!reply.is_object() || !reply.contains("text") ||
        !reply["text"].is_string()) {
      throw Error(ErrorCode::kBackendMalformedResponse,
                  "translation backend reply lacks a string 'text' field");
    }
    return reply["text"].get<std::string>();
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kBackendMalformedResponse,
                std::string("translation backend reply is not JSON: ") +
                    e.what());
  }
}

std::shared_ptr<const Translator> make_translator(
    const nlohmann::json& config, const std::filesystem::path& base_dir) {
  require_known_fields(config,
                       {"kind", "lexicon", "src", "dst", "url", "timeout_ms"},
                       "translator");
  const std::string kind = config.value("kind", "identity");
  if (kind == "identity") return std::make_shared<IdentityTranslator>();
  if (kind == "dictionary") {
    if (!config.contains("lexicon")) {
      throw Error(ErrorCode::kInvalidConfig, "dictionary translator needs 'lexicon'",
                  "lexicon");
    }
    return std::make_shared<DictionaryTranslator>(
        BilingualLexicon::load(
            resolve_path(base_dir, config["lexicon"].get<std::string>())),
        LanguageTag(config.value("src", "en")),
        LanguageTag(config.value("dst", "es")));
  }
  if (kind == "remote") {
    if (!config.contains("url")) {
      throw Error(ErrorCode::kInvalidConfig, "remote translator needs 'url'",
                  "url");
    }
    return std::make_shared<RemoteTranslator>(
        config["url"].get<std::string>(),
        std::chrono::milliseconds(config.value(
            "timeout_ms", RemoteTranslator::kDefaultTimeout.count())));
  }
  throw Error(ErrorCode::kInvalidConfig, "unknown translator kind '" + kind + "'",
              "kind");
}

}  // namespace posibot
