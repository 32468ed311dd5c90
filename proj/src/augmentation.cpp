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

#include "posibot/augmentation.hpp"

#include <unicode/uchar.h>

#include <algorithm>
#include <utility>

#include "posibot/errors.hpp"
#include "posibot/json_util.hpp"

namespace posibot {

std::string_view technique_name(Technique technique) {
  switch (technique) {
    case Technique::kSynonym: return "synonym";
    case Technique::kInsertion: return "insertion";
    case Technique::kDropout: return "dropout";
    case Technique::kShuffle: return "shuffle";
    case Technique::kCharNoise: return "char_noise";
    case Technique::kBackTranslation: return "back_translation";
  }
  return "unknown";
}

std::optional<Technique> parse_technique(std::string_view name) {
  for (Technique t : kAllTechniques) {
    if (technique_name(t) == name) return t;
  }
  return std::nullopt;
}

SynonymLexicon::SynonymLexicon(
    std::map<std::string, std::vector<std::string>> entries) {
  for (auto& [word, synonyms] : entries) {
    const std::string key = utf8::to_lower(word);
    if (synonyms.empty()) {
      throw Error(ErrorCode::kInvalidConfig,
                  "synonym list for '" + word + "' is empty");
    }
    for (const auto& synonym : synonyms) {
      if (synonym.empty() || utf8::to_lower(synonym) == key) {
        throw Error(ErrorCode::kInvalidConfig,
                    "synonym list for '" + word + "' contains the key or an empty string");
      }
    }
    entries_.emplace(key, std::move(synonyms));
  }
}

SynonymLexicon SynonymLexicon::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::kInvalidConfig, "synonym lexicon must be a JSON object");
  }
  try {
    return SynonymLexicon(
        doc.get<std::map<std::string, std::vector<std::string>>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string("synonym lexicon: ") + e.what());
  }
}

SynonymLexicon SynonymLexicon::load(const std::filesystem::path& path) {
  return from_json(read_json_file(path));
}

const std::vector<std::string>* SynonymLexicon::find(
    std::string_view lowercased) const {
  const auto it = entries_.find(lowercased);
  return it == entries_.end() ? nullptr : &it->second;
}

KeyboardLayout KeyboardLayout::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::kInvalidConfig, "keyboard layout must be a JSON object");
  }
  std::map<char32_t, std::u32string> neighbors;
  for (const auto& [key, value] : doc.items()) {
    const auto key_cps = utf8::decode(key);
    if (key_cps.size() != 1 || !value.is_string()) {
      throw Error(ErrorCode::kInvalidConfig,
                  "keyboard layout entries must map one character to a string");
    }
    const auto near = utf8::decode(value.get<std::string>());
    neighbors[key_cps.front()] = std::u32string(near.begin(), near.end());
  }
  return KeyboardLayout(std::move(neighbors));
}

KeyboardLayout KeyboardLayout::load(const std::filesystem::path& path) {
  return from_json(read_json_file(path));
}

const KeyboardLayout& KeyboardLayout::qwerty() {
  static const KeyboardLayout layout(std::map<char32_t, std::u32string>{
      {U'q', U"wa"},     {U'w', U"qeas"},   {U'e', U"wrsd"},   {U'r', U"etdf"},
      {U't', U"ryfg"},   {U'y', U"tugh"},   {U'u', U"yihj"},   {U'i', U"uojk"},
      {U'o', U"ipkl"},   {U'p', U"ol"},     {U'a', U"qwsz"},   {U's', U"weadzx"},
      {U'd', U"erfsxc"}, {U'f', U"rtdgcv"}, {U'g', U"tyfhvb"}, {U'h', U"yugjbn"},
      {U'j', U"uihknm"}, {U'k', U"iojlm"},  {U'l', U"opk"},    {U'z', U"asx"},
      {U'x', U"zsdc"},   {U'c', U"xdfv"},   {U'v', U"cfgb"},   {U'b', U"vghn"},
      {U'n', U"bhjm"},   {U'm', U"njk"},
  });
  return layout;
}

const std::u32string* KeyboardLayout::neighbors(char32_t lowercase) const {
  const auto it = neighbors_.find(lowercase);
  return it == neighbors_.end() || it->second.empty() ? nullptr : &it->second;
}

namespace {

void check_rate(double rate, const char* field) {
  if (!(rate >= 0.0 && rate <= 1.0)) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string(field) + " must be within [0, 1]", field);
  }
}

}  // namespace

void AugmentationConfig::validate() const {
  check_rate(replacement_rate, "replacement_rate");
  check_rate(dropout_rate, "dropout_rate");
  check_rate(insertion_rate, "insertion_rate");
  check_rate(noise_rate, "noise_rate");
  if (shuffle_window < 2) {
    throw Error(ErrorCode::kInvalidConfig, "shuffle_window must be >= 2",
                "shuffle_window");
  }
}

bool AugmentationConfig::enabled(Technique technique) const {
  return std::find(enabled_techniques.begin(), enabled_techniques.end(),
                   technique) != enabled_techniques.end();
}

AugmentationConfig AugmentationConfig::with_overrides(
    const nlohmann::json& overrides) const {
  require_known_fields(overrides,
                       {"variants_per_technique", "replacement_rate",
                        "dropout_rate", "insertion_rate", "noise_rate",
                        "shuffle_window", "source_language", "pivot_language",
                        "enabled_techniques", "seed"},
                       "augmentation config");
  AugmentationConfig out = *this;
  const auto number = [&](const char* field, double& target) {
    if (!overrides.contains(field)) return;
    if (!overrides[field].is_number()) {
      throw Error(ErrorCode::kInvalidConfig,
                  std::string(field) + " must be a number", field);
    }
    target = overrides[field].get<double>();
  };
  const auto count = [&](const char* field, auto& target) {
    if (!overrides.contains(field)) return;
    if (!is_non_negative_integer(overrides[field])) {
      throw Error(ErrorCode::kInvalidConfig,
                  std::string(field) + " must be a non-negative integer", field);
    }
    target = overrides[field].get<std::remove_reference_t<decltype(target)>>();
  };
  const auto tag = [&](const char* field, LanguageTag& target) {
    if (!overrides.contains(field)) return;
    try {
      target = LanguageTag(overrides[field].get<std::string>());
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kInvalidConfig, std::string(field) + ": " + e.what(),
                  field);
    }
  };

  count("variants_per_technique", out.variants_per_technique);
  number("replacement_rate", out.replacement_rate);
  number("dropout_rate", out.dropout_rate);
  number("insertion_rate", out.insertion_rate);
  number("noise_rate", out.noise_rate);
  count("shuffle_window", out.shuffle_window);
  count("seed", out.seed.value);
  tag("source_language", out.source_language);
  tag("pivot_language", out.pivot_language);
  if (overrides.contains("enabled_techniques")) {
    const auto& list = overrides["enabled_techniques"];
    if (!list.is_array()) {
      throw Error(ErrorCode::kInvalidConfig,
                  "enabled_techniques must be an array", "enabled_techniques");
    }
    out.enabled_techniques.clear();
    for (const auto& item : list) {
      const auto parsed = item.is_string()
                              ? parse_technique(item.get<std::string>())
                              : std::nullopt;
      if (!parsed) {
        throw Error(ErrorCode::kInvalidConfig,
                    "unknown technique " + item.dump(), "enabled_techniques");
      }
      if (!out.enabled(*parsed)) out.enabled_techniques.push_back(*parsed);
    }
  }
  out.validate();
  return out;
}

nlohmann::json AugmentationConfig::to_json() const {
  nlohmann::json techniques = nlohmann::json::array();
  for (Technique t : enabled_techniques) techniques.push_back(technique_name(t));
  return {
      {"variants_per_technique", variants_per_technique},
      {"replacement_rate", replacement_rate},
      {"dropout_rate", dropout_rate},
      {"insertion_rate", insertion_rate},
      {"noise_rate", noise_rate},
      {"shuffle_window", shuffle_window},
      {"source_language", source_language.code()},
      {"pivot_language", pivot_language.code()},
      {"enabled_techniques", techniques},
      {"seed", seed.value},
  };
}

nlohmann::json AugmentedSet::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& variant : variants) {
    nlohmann::json item = {{"text", variant.text},
                           {"technique", technique_name(variant.technique)},
                           {"seed", variant.parent_seed.value}};
    if (variant.error) item["error"] = *variant.error;
    list.push_back(std::move(item));
  }
  return {{"original", original}, {"variants", std::move(list)}};
}

TokenizedText synonym_replace(const TokenizedText& text,
                              const SynonymLexicon& lexicon, double rate,
                              RandomSeed seed) {
  Rng rng(seed);
  auto sentences = split_sentences(text);
  for (auto& sentence : sentences) {
    for (Token& token : sentence) {
      if (!token.is_word()) continue;
      const auto* synonyms = lexicon.find(utf8::to_lower(token.surface));
      if (synonyms == nullptr || !rng.bernoulli(rate)) continue;
      const std::string& choice = (*synonyms)[rng.below(synonyms->size())];
      token.surface = utf8::starts_upper(token.surface)
                          ? utf8::capitalize_first(choice)
                          : choice;
      token.kind = TokenKind::kWord;
    }
  }
  return assemble(sentences);
}

TokenizedText word_dropout(const TokenizedText& text, double rate,
                           RandomSeed seed) {
  Rng rng(seed);
  std::vector<bool> drop(text.tokens.size(), false);
  std::optional<std::size_t> first_word;
  bool kept_any_word = false;
  for (std::size_t i = 0; i < text.tokens.size(); ++i) {
    if (!text.tokens[i].is_word()) continue;
    if (!first_word) first_word = i;
    drop[i] = rng.bernoulli(rate);
    kept_any_word = kept_any_word || !drop[i];
  }
  if (first_word && !kept_any_word) drop[*first_word] = false;

  std::vector<std::vector<Token>> sentences;
  for (const auto& [begin, end] : text.sentence_bounds) {
    auto& sentence = sentences.emplace_back();
    for (std::size_t i = begin; i < end; ++i) {
      if (!drop[i]) sentence.push_back(text.tokens[i]);
    }
  }
  return assemble(sentences);
}

TokenizedText random_insertion(const TokenizedText& text,
                               const SynonymLexicon& lexicon, double rate,
                               RandomSeed seed) {
  Rng rng(seed);
  std::vector<std::vector<Token>> out;
  for (const auto& sentence : split_sentences(text)) {
    std::size_t word_count = 0;
    for (const Token& token : sentence) word_count += token.is_word() ? 1 : 0;

    // Slot j sits before the j-th word; slot word_count follows the last.
    std::vector<std::vector<std::string>> slots(word_count + 1);
    for (const Token& token : sentence) {
      if (!token.is_word()) continue;
      const auto* synonyms = lexicon.find(utf8::to_lower(token.surface));
      if (synonyms == nullptr || !rng.bernoulli(rate)) continue;
      const std::string& choice = (*synonyms)[rng.below(synonyms->size())];
      slots[rng.below(word_count + 1)].push_back(choice);
    }

    auto& built = out.emplace_back();
    std::size_t ordinal = 0;
    const auto emit_slot = [&](std::size_t slot) {
      for (const auto& word : slots[slot]) {
        built.push_back(Token{word, Span{}, TokenKind::kWord});
      }
    };
    for (const Token& token : sentence) {
      if (token.is_word()) {
        emit_slot(ordinal);
        built.push_back(token);
        if (++ordinal == word_count) emit_slot(word_count);
      } else {
        built.push_back(token);
      }
    }
  }
  return assemble(out);
}

TokenizedText word_shuffle(const TokenizedText& text, std::size_t window,
                           RandomSeed seed) {
  if (window < 2) {
    throw Error(ErrorCode::kInvalidArgument, "shuffle window must be >= 2");
  }
  Rng rng(seed);
  auto sentences = split_sentences(text);
  for (auto& sentence : sentences) {
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      if (sentence[i].is_word()) positions.push_back(i);
    }
    for (std::size_t start = 0; start < positions.size(); start += window) {
      const std::size_t size = std::min(window, positions.size() - start);
      for (std::size_t i = size - 1; i > 0; --i) {
        const std::size_t j = rng.below(i + 1);
        std::swap(sentence[positions[start + i]], sentence[positions[start + j]]);
      }
    }
  }
  return assemble(sentences);
}

namespace {

char32_t match_case(char32_t replacement, char32_t original) {
  if (u_isupper(static_cast<UChar32>(original))) {
    return static_cast<char32_t>(u_toupper(static_cast<UChar32>(replacement)));
  }
  return replacement;
}

std::string corrupt(std::string_view word, Rng& rng,
                    const KeyboardLayout& layout) {
  auto cps = utf8::decode(word);

  std::vector<std::size_t> swappable;
  std::vector<std::size_t> substitutable;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (i + 1 < cps.size() && cps[i] != cps[i + 1]) swappable.push_back(i);
    const auto lower =
        static_cast<char32_t>(u_tolower(static_cast<UChar32>(cps[i])));
    if (layout.neighbors(lower) != nullptr) substitutable.push_back(i);
  }

  enum class Edit { kSwap, kSubstitute, kDelete };
  std::vector<Edit> feasible;
  if (!swappable.empty()) feasible.push_back(Edit::kSwap);
  if (!substitutable.empty()) feasible.push_back(Edit::kSubstitute);
  feasible.push_back(Edit::kDelete);

  switch (feasible[rng.below(feasible.size())]) {
    case Edit::kSwap: {
      const std::size_t i = swappable[rng.below(swappable.size())];
      std::swap(cps[i], cps[i + 1]);
      break;
    }
    case Edit::kSubstitute: {
      const std::size_t i = substitutable[rng.below(substitutable.size())];
      const auto lower =
          static_cast<char32_t>(u_tolower(static_cast<UChar32>(cps[i])));
      const std::u32string& near = *layout.neighbors(lower);
      cps[i] = match_case(near[rng.below(near.size())], cps[i]);
      break;
    }
    case Edit::kDelete:
      cps.erase(cps.begin() + static_cast<std::ptrdiff_t>(rng.below(cps.size())));
      break;
  }
  return utf8::encode(cps);
}

}  // namespace

TokenizedText char_noise(const TokenizedText& text, double rate,
                         RandomSeed seed, const KeyboardLayout& layout) {
  Rng rng(seed);
  auto sentences = split_sentences(text);
  for (auto& sentence : sentences) {
    for (Token& token : sentence) {
      if (!token.is_word() || utf8::length(token.surface) < 3) continue;
      if (!rng.bernoulli(rate)) continue;
      token.surface = corrupt(token.surface, rng, layout);
    }
  }
  return assemble(sentences);
}

AugmentedSet augment(std::string_view text, const AugmentationConfig& cfg,
                     const AugmentationResources& resources) {
  cfg.validate();
  if (cfg.enabled(Technique::kBackTranslation) && resources.translator == nullptr &&
      cfg.variants_per_technique > 0) {
    throw Error(ErrorCode::kInvalidConfig,
                "back_translation enabled without a translator",
                "enabled_techniques");
  }
  static const SynonymLexicon kEmptyLexicon;
  const SynonymLexicon& lexicon =
      resources.lexicon != nullptr ? *resources.lexicon : kEmptyLexicon;
  const KeyboardLayout& layout =
      resources.layout != nullptr ? *resources.layout : KeyboardLayout::qwerty();

  AugmentedSet out;
  out.original = std::string(text);
  if (cfg.variants_per_technique == 0) return out;

  const TokenizedText tokens = tokenize(text);
  for (Technique technique : kAllTechniques) {
    if (!cfg.enabled(technique)) continue;
    const auto technique_index = static_cast<std::uint64_t>(technique);
    for (std::size_t v = 0; v < cfg.variants_per_technique; ++v) {
      AugmentedVariant variant;
      variant.technique = technique;
      variant.parent_seed = derive_seed(cfg.seed, technique_index, v);
      const RandomSeed seed = variant.parent_seed;
      switch (technique) {
        case Technique::kSynonym:
          variant.text = detokenize(
              synonym_replace(tokens, lexicon, cfg.replacement_rate, seed));
          break;
        case Technique::kInsertion:
          variant.text = detokenize(
              random_insertion(tokens, lexicon, cfg.insertion_rate, seed));
          break;
        case Technique::kDropout:
          variant.text = detokenize(word_dropout(tokens, cfg.dropout_rate, seed));
          break;
        case Technique::kShuffle:
          variant.text =
              detokenize(word_shuffle(tokens, cfg.shuffle_window, seed));
          break;
        case Technique::kCharNoise:
          variant.text =
              detokenize(char_noise(tokens, cfg.noise_rate, seed, layout));
          break;
        case Technique::kBackTranslation:
          try {
            variant.text = back_translate(*resources.translator, text,
                                          cfg.source_language,
                                          cfg.pivot_language);
          } catch (const Error& e) {
            variant.error = std::string(error_code_name(e.code())) + ": " + e.what();
          }
          break;
      }
      out.variants.push_back(std::move(variant));
    }
  }
  return out;
}

}  // namespace posibot
