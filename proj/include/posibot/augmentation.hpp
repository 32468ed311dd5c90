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

#ifndef POSIBOT_AUGMENTATION_HPP_
#define POSIBOT_AUGMENTATION_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "posibot/rng.hpp"
#include "posibot/text_core.hpp"
#include "posibot/translation.hpp"

namespace posibot {

// Stable order; the index of a technique feeds per-variant seed derivation,
// so never reorder.
enum class Technique {
  kSynonym = 0,
  kInsertion = 1,
  kDropout = 2,
  kShuffle = 3,
  kCharNoise = 4,
  kBackTranslation = 5,
};

inline constexpr std::array<Technique, 6> kAllTechniques = {
    Technique::kSynonym,  Technique::kInsertion, Technique::kDropout,
    Technique::kShuffle,  Technique::kCharNoise, Technique::kBackTranslation,
};

std::string_view technique_name(Technique technique);
std::optional<Technique> parse_technique(std::string_view name);

class SynonymLexicon {
 public:
  SynonymLexicon() = default;

  // Keys are lowercased; empty lists and self-synonyms are rejected.
  explicit SynonymLexicon(std::map<std::string, std::vector<std::string>> entries);

  static SynonymLexicon from_json(const nlohmann::json& doc);
  static SynonymLexicon load(const std::filesystem::path& path);

  // nullptr when the lowercased word has no entry.
  const std::vector<std::string>* find(std::string_view lowercased) const;

  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> entries_;
};

// Lowercase key -> neighboring keys on a QWERTY layout.
class KeyboardLayout {
 public:
  KeyboardLayout() = default;
  explicit KeyboardLayout(std::map<char32_t, std::u32string> neighbors)
      : neighbors_(std::move(neighbors)) {}

  static KeyboardLayout from_json(const nlohmann::json& doc);
  static KeyboardLayout load(const std::filesystem::path& path);
  // Built-in US QWERTY letter adjacency.
  static const KeyboardLayout& qwerty();

  const std::u32string* neighbors(char32_t lowercase) const;

 private:
  std::map<char32_t, std::u32string> neighbors_;
};

struct AugmentationConfig {
  std::size_t variants_per_technique = 1;
  double replacement_rate = 0.2;
  double dropout_rate = 0.1;
  double insertion_rate = 0.1;
  double noise_rate = 0.05;
  std::size_t shuffle_window = 3;
  LanguageTag source_language{"en"};
  LanguageTag pivot_language{"es"};
  std::vector<Technique> enabled_techniques{kAllTechniques.begin(),
                                            kAllTechniques.end()};
  RandomSeed seed{0};

  // Throws Error(kInvalidConfig) naming the offending field.
  void validate() const;
  bool enabled(Technique technique) const;

  // Applies the fields present in `overrides` on top of this config.
  // Unknown fields and out-of-range values throw Error(kInvalidConfig).
  AugmentationConfig with_overrides(const nlohmann::json& overrides) const;
  nlohmann::json to_json() const;
};

struct AugmentedVariant {
  std::string text;
  Technique technique = Technique::kSynonym;
  RandomSeed parent_seed;
  // Set when the variant could not be produced (remote backend failures).
  std::optional<std::string> error;

  bool ok() const { return !error.has_value(); }
};

struct AugmentedSet {
  std::string original;
  std::vector<AugmentedVariant> variants;

  nlohmann::json to_json() const;
};

TokenizedText synonym_replace(const TokenizedText& text,
                              const SynonymLexicon& lexicon, double rate,
                              RandomSeed seed);

// Removes each word token with probability `rate`; if every word would go,
// the first one is kept.
TokenizedText word_dropout(const TokenizedText& text, double rate,
                           RandomSeed seed);

TokenizedText random_insertion(const TokenizedText& text,
                               const SynonymLexicon& lexicon, double rate,
                               RandomSeed seed);

// Fisher-Yates inside consecutive windows of word tokens per sentence;
// punctuation stays in place.
TokenizedText word_shuffle(const TokenizedText& text, std::size_t window,
                           RandomSeed seed);

// One edit (adjacent swap, keyboard-neighbor substitution, deletion) per
// corrupted word of length >= 3.
TokenizedText char_noise(const TokenizedText& text, double rate,
                         RandomSeed seed,
                         const KeyboardLayout& layout = KeyboardLayout::qwerty());

// Inputs the augmenter needs besides the text and config.
struct AugmentationResources {
  const SynonymLexicon* lexicon = nullptr;
  const KeyboardLayout* layout = nullptr;  // defaults to qwerty()
  const Translator* translator = nullptr;  // required for back-translation
};

// Variant v of technique t is seeded with derive_seed(cfg.seed, t, v).
// Back-translation failures are recorded on the variant, not thrown.
AugmentedSet augment(std::string_view text, const AugmentationConfig& cfg,
                     const AugmentationResources& resources);

}  // namespace posibot

#endif  // POSIBOT_AUGMENTATION_HPP_
