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

#ifndef POSIBOT_PIPELINE_HPP_
#define POSIBOT_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "posibot/augmentation.hpp"
#include "posibot/dialog.hpp"
#include "posibot/sentiment.hpp"
#include "posibot/summarizer.hpp"
#include "posibot/translation.hpp"

namespace posibot {

// Slot names a template may reference.
const std::vector<std::string>& known_slots();

// Keys are "STATE|intent|label" (any part may be "*"), plus the mandatory
// "crisis" and the optional "default".
class TemplateTable {
 public:
  TemplateTable() = default;
  // Throws InvalidConfig when "crisis" is missing or a template references
  // a slot outside known_slots().
  explicit TemplateTable(std::map<std::string, std::string> templates);

  static TemplateTable from_json(const nlohmann::json& doc);
  static TemplateTable load(const std::filesystem::path& path);

  // exact -> STATE|intent|* -> STATE|*|* -> default; MissingTemplate if
  // nothing matches.
  const std::string& resolve(std::string_view key) const;

  const std::string& crisis() const;

 private:
  std::map<std::string, std::string, std::less<>> templates_;
};

// Replaces every {slot}; throws UnfilledSlot for slots without a value.
std::string fill_template(std::string_view tmpl,
                          const std::map<std::string, std::string>& slots);

std::string render(const TemplateTable& table, std::string_view key,
                   const std::map<std::string, std::string>& slots);

struct PipelineConfig {
  AugmentationConfig augmentation;
  LanguageTag source_language{"en"};
  LanguageTag pivot_language{"es"};
  SummaryConfig summary;
  std::filesystem::path model_path;
  std::filesystem::path templates_path;
  std::filesystem::path rules_path;
  std::filesystem::path valence_path;
  std::filesystem::path synonyms_path;
  std::filesystem::path qwerty_path;
  nlohmann::json translator = {{"kind", "identity"}};
  // Round-trip each variant (and the input) through the pivot language.
  bool translate = true;
  // Fail the turn when the translation backend is down instead of degrading.
  bool require_translation = false;
  bool trace = false;
  // Average class probabilities over the input and its round-tripped variants.
  bool ensemble_vote = false;
  // A prediction of this label escalates exactly like a crisis phrase.
  std::string crisis_label = "suicidal";

  // Bundled data files, no model.
  static PipelineConfig defaults();
  // Relative paths resolve against `base_dir`; unknown keys are rejected.
  static PipelineConfig from_json(const nlohmann::json& doc,
                                  const std::filesystem::path& base_dir);
  static PipelineConfig load(const std::filesystem::path& path);
};

struct TranslatedVariant {
  std::size_t variant = 0;  // index into AugmentedSet::variants
  std::string round_trip;
  std::optional<std::string> error;
};

struct PipelineResult {
  std::string input;
  AugmentedSet augmented;
  std::vector<TranslatedVariant> translated;
  std::string classified_text;  // round-tripped input
  SentimentPrediction prediction;
  Summary summary;
  NluResult nlu;
  ResponsePlan plan;
  std::string response;
  bool crisis = false;
  std::optional<nlohmann::json> trace;
};

// Loaded, immutable artifacts; safe to share across threads.
struct PipelineResources {
  std::shared_ptr<const SentimentModel> model;  // may be null
  TemplateTable templates;
  RuleTable rules;
  ValenceLexicon valence;
  SynonymLexicon synonyms;
  KeyboardLayout layout = KeyboardLayout::qwerty();
  std::shared_ptr<const Translator> translator;
};

class Pipeline {
 public:
  Pipeline(PipelineConfig config, PipelineResources resources);

  // Loads every artifact named by `config`. A missing model_path leaves the
  // pipeline without a model (run/classify then throw ModelNotLoaded).
  static Pipeline load(const PipelineConfig& config);

  bool model_loaded() const { return resources_.model != nullptr; }
  const PipelineConfig& config() const { return config_; }
  const PipelineResources& resources() const { return resources_; }

  // One conversational turn. Appends the user and bot turns to the session.
  std::pair<DialogSession, PipelineResult> run(std::string_view text,
                                               DialogSession session,
                                               std::int64_t timestamp_ms = 0) const;

  // Classifier plus subtle-negative indicator on `text` as given.
  SentimentPrediction classify(std::string_view text) const;

  Summary summarize_text(std::string_view text, std::size_t max_sentences) const;

  AugmentedSet augment_text(std::string_view text,
                            const AugmentationConfig& cfg) const;

 private:
  const SentimentModel& model() const;
  std::map<std::string, std::string> slots_for(const PipelineResult& result) const;

  PipelineConfig config_;
  PipelineResources resources_;
};

nlohmann::json result_to_json(const PipelineResult& result,
                              const std::vector<std::string>& labels);

}  // namespace posibot

#endif  // POSIBOT_PIPELINE_HPP_
