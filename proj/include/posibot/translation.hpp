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

#ifndef POSIBOT_TRANSLATION_HPP_
#define POSIBOT_TRANSLATION_HPP_

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace posibot {

// Lowercase ASCII letters and hyphens, e.g. "en", "pt-br".
class LanguageTag {
 public:
  explicit LanguageTag(std::string code);

  const std::string& code() const { return code_; }

  friend auto operator<=>(const LanguageTag&, const LanguageTag&) = default;

 private:
  std::string code_;
};

class Translator {
 public:
  virtual ~Translator() = default;

  virtual bool supports(const LanguageTag& src, const LanguageTag& dst) const = 0;

  // Called only for supported pairs; must be safe to call concurrently.
  virtual std::string translate_text(std::string_view text,
                                     const LanguageTag& src,
                                     const LanguageTag& dst) const = 0;
};

// Throws UnsupportedPair when the translator does not declare (src, dst).
std::string translate(const Translator& tr, std::string_view text,
                      const LanguageTag& src, const LanguageTag& dst);

// translate(translate(text, src, pivot), pivot, src).
std::string back_translate(const Translator& tr, std::string_view text,
                           const LanguageTag& src, const LanguageTag& pivot);

class IdentityTranslator final : public Translator {
 public:
  // An empty language set accepts every pair.
  explicit IdentityTranslator(std::set<LanguageTag> languages = {})
      : languages_(std::move(languages)) {}

  bool supports(const LanguageTag& src, const LanguageTag& dst) const override;
  std::string translate_text(std::string_view text, const LanguageTag& src,
                             const LanguageTag& dst) const override;

 private:
  std::set<LanguageTag> languages_;
};

struct BilingualLexicon {
  std::map<std::string, std::string> forward;
  std::map<std::string, std::string> backward;
  bool invertible = false;

  // Keys are lowercased. The backward map keeps the first source word for
  // each target word. Throws InvalidConfig when `invertible` is claimed but
  // two source words share a target.
  static BilingualLexicon from_pairs(
      const std::vector<std::pair<std::string, std::string>>& pairs,
      bool invertible);
  static BilingualLexicon from_json(const nlohmann::json& doc);
  static BilingualLexicon load(const std::filesystem::path& path);
};

// Word-by-word substitution without reordering. Unknown words, punctuation
// and whitespace pass through untouched; a leading capital is carried over.
class DictionaryTranslator final : public Translator {
 public:
  DictionaryTranslator(BilingualLexicon lexicon, LanguageTag src,
                       LanguageTag dst)
      : lexicon_(std::move(lexicon)),
        src_(std::move(src)),
        dst_(std::move(dst)) {}

  bool supports(const LanguageTag& src, const LanguageTag& dst) const override;
  std::string translate_text(std::string_view text, const LanguageTag& src,
                             const LanguageTag& dst) const override;

 private:
  BilingualLexicon lexicon_;
  LanguageTag src_;
  LanguageTag dst_;
};

// Client for a model server speaking
//   POST {"text": "...", "src": "en", "dst": "es"} -> {"text": "..."}.
class RemoteTranslator final : public Translator {
 public:
  static constexpr std::chrono::milliseconds kDefaultTimeout{10000};

  // `url` is http://host[:port]/path. An empty pair set accepts every pair.
  explicit RemoteTranslator(
      std::string url,
      std::chrono::milliseconds timeout = kDefaultTimeout,
      std::set<std::pair<LanguageTag, LanguageTag>> capabilities = {});

  bool supports(const LanguageTag& src, const LanguageTag& dst) const override;
  std::string translate_text(std::string_view text, const LanguageTag& src,
                             const LanguageTag& dst) const override;

 private:
  std::string host_;  // scheme://host:port
  std::string path_;
  std::chrono::milliseconds timeout_;
  std::set<std::pair<LanguageTag, LanguageTag>> capabilities_;
};

// {"kind": "identity"}
// {"kind": "dictionary", "lexicon": PATH, "src": "en", "dst": "es"}
// {"kind": "remote", "url": URL, "timeout_ms": N}
// Relative paths resolve against `base_dir`.
std::shared_ptr<const Translator> make_translator(
    const nlohmann::json& config, const std::filesystem::path& base_dir);

}  // namespace posibot

#endif  // POSIBOT_TRANSLATION_HPP_
