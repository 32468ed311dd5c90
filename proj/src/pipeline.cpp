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

#include "posibot/pipeline.hpp"

#include <algorithm>

#include "posibot/errors.hpp"
#include "posibot/json_util.hpp"

namespace posibot {
namespace {

constexpr std::string_view kDefaultRelaxation =
    "slow breathing: in for four counts, hold for four, out for six";
constexpr std::string_view kDefaultExercise =
    "write down one situation that worries you and rate the fear from 0 to 10";
constexpr std::string_view kNoKeywords = "what you shared";

bool is_slot_char(char c) { return (c >= 'a' && c <= 'z') || c == '_'; }

// Calls `on_slot(name)` for every {name} and `on_text(chunk)` for the rest.
template <typename OnText, typename OnSlot>
void scan_template(std::string_view tmpl, OnText on_text, OnSlot on_slot) {
  std::size_t i = 0;
  std::size_t literal = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{') {
      std::size_t j = i + 1;
      while (j < tmpl.size() && is_slot_char(tmpl[j])) ++j;
      if (j > i + 1 && j < tmpl.size() && tmpl[j] == '}') {
        on_text(tmpl.substr(literal, i - literal));
        on_slot(tmpl.substr(i + 1, j - i - 1));
        i = j + 1;
        literal = i;
        continue;
      }
    }
    ++i;
  }
  on_text(tmpl.substr(literal));
}

}  // namespace

const std::vector<std::string>& known_slots() {
  static const std::vector<std::string> slots = {
      "summary_keywords", "top_sentence", "exercise_step", "relaxation",
      "phobia",           "label",        "state",         "intent",
  };
  return slots;
}

TemplateTable::TemplateTable(std::map<std::string, std::string> templates) {
  if (!templates.contains("crisis")) {
    throw Error(ErrorCode::kInvalidConfig, "template table needs a 'crisis' entry",
                "crisis");
  }
  const auto& allowed = known_slots();
  for (const auto& [key, tmpl] : templates) {
    if (tmpl.empty()) {
      throw Error(ErrorCode::kInvalidConfig, "template '" + key + "' is empty", key);
    }
    scan_template(tmpl, [](std::string_view) {}, [&](std::string_view slot) {
      if (std::find(allowed.begin(), allowed.end(), slot) == allowed.end()) {
        throw Error(ErrorCode::kInvalidConfig,
                    "template '" + key + "' references unknown slot {" +
                        std::string(slot) + "}",
                    key);
      }
    });
  }
  templates_.insert(templates.begin(), templates.end());
}

TemplateTable TemplateTable::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::kInvalidConfig, "template file must be a JSON object");
  }
  try {
    return TemplateTable(doc.get<std::map<std::string, std::string>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidConfig, std::string("templates: ") + e.what());
  }
}

TemplateTable TemplateTable::load(const std::filesystem::path& path) {
  return from_json(read_json_file(path));
}

const std::string& TemplateTable::resolve(std::string_view key) const {
  std::vector<std::string> candidates{std::string(key)};
  const auto first = key.find('|');
  const auto second = first == std::string_view::npos ? first : key.find('|', first + 1);
  if (second != std::string_view::npos) {
    candidates.push_back(std::string(key.substr(0, second)) + "|*");
    candidates.push_back(std::string(key.substr(0, first)) + "|*|*");
  }
  candidates.emplace_back("default");
  for (const auto& candidate : candidates) {
    const auto it = templates_.find(candidate);
    if (it != templates_.end()) return it->second;
  }
  throw Error(ErrorCode::kMissingTemplate,
              "no template for '" + std::string(key) + "' and no default");
}

const std::string& TemplateTable::crisis() const {
  const auto it = templates_.find("crisis");
  if (it == templates_.end()) {
    throw Error(ErrorCode::kMissingTemplate, "no crisis template loaded");
  }
  return it->second;
}

std::string fill_template(std::string_view tmpl,
                          const std::map<std::string, std::string>& slots) {
  std::string out;
  scan_template(
      tmpl, [&](std::string_view text) { out += text; },
      [&](std::string_view slot) {
        const auto it = slots.find(std::string(slot));
        if (it == slots.end()) {
          throw Error(ErrorCode::kUnfilledSlot,
                      "no value for slot {" + std::string(slot) + "}",
                      std::string(slot));
        }
        out += it->second;
      });
  return out;
}

std::string render(const TemplateTable& table, std::string_view key,
                   const std::map<std::string, std::string>& slots) {
  if (key == "crisis") return fill_template(table.crisis(), slots);
  return fill_template(table.resolve(key), slots);
}

PipelineConfig PipelineConfig::defaults() {
  const auto data = default_data_dir();
  PipelineConfig cfg;
  cfg.templates_path = data / "templates.json";
  cfg.rules_path = data / "rules.json";
  cfg.valence_path = data / "valence.json";
  cfg.synonyms_path = data / "synonyms.json";
  cfg.qwerty_path = data / "qwerty.json";
  return cfg;
}

PipelineConfig PipelineConfig::from_json(const nlohmann::json& doc,
                                         const std::filesystem::path& base_dir) {
  require_known_fields(
      doc,
      {"augmentation", "source_language", "pivot_language", "summary", "model_path",
       "templates_path", "rules_path", "valence_path", "synonyms_path", "qwerty_path",
       "translator", "translate", "require_translation", "trace", "ensemble_vote",
       "crisis_label"},
      "pipeline config");
  PipelineConfig cfg = defaults();
  try {
    if (doc.contains("augmentation")) {
      cfg.augmentation = cfg.augmentation.with_overrides(doc["augmentation"]);
    }
    if (doc.contains("source_language")) {
      cfg.source_language = LanguageTag(doc["source_language"].get<std::string>());
    }
    if (doc.contains("pivot_language")) {
      cfg.pivot_language = LanguageTag(doc["pivot_language"].get<std::string>());
    }
    if (doc.contains("summary")) {
      const auto& summary = doc["summary"];
      require_known_fields(summary, {"max_sentences", "stopwords_path"}, "summary");
      cfg.summary.max_sentences =
          summary.value("max_sentences", cfg.summary.max_sentences);
      if (summary.contains("stopwords_path")) {
        cfg.summary.stopwords = load_stopwords(
            resolve_path(base_dir, summary["stopwords_path"].get<std::string>()));
      }
    }
    const auto path_field = [&](const char* name, std::filesystem::path& target) {
      if (doc.contains(name)) target = resolve_path(base_dir, doc[name].get<std::string>());
    };
    path_field("model_path", cfg.model_path);
    path_field("templates_path", cfg.templates_path);
    path_field("rules_path", cfg.rules_path);
    path_field("valence_path", cfg.valence_path);
    path_field("synonyms_path", cfg.synonyms_path);
    path_field("qwerty_path", cfg.qwerty_path);
    if (doc.contains("translator")) {
      cfg.translator = doc["translator"];
      // Keep lexicon paths relative to the config file.
      if (cfg.translator.contains("lexicon")) {
        cfg.translator["lexicon"] =
            resolve_path(base_dir, cfg.translator["lexicon"].get<std::string>()).string();
      }
    }
    cfg.translate = doc.value("translate", cfg.translate);
    cfg.require_translation = doc.value("require_translation", cfg.require_translation);
    cfg.trace = doc.value("trace", cfg.trace);
    cfg.ensemble_vote = doc.value("ensemble_vote", cfg.ensemble_vote);
    cfg.crisis_label = doc.value("crisis_label", cfg.crisis_label);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidConfig, std::string("pipeline config: ") + e.what());
  }
  cfg.augmentation.source_language = cfg.source_language;
  cfg.augmentation.pivot_language = cfg.pivot_language;
  return cfg;
}

PipelineConfig PipelineConfig::load(const std::filesystem::path& path) {
  return from_json(read_json_file(path), path.parent_path());
}

Pipeline::Pipeline(PipelineConfig config, PipelineResources resources)
    : config_(std::move(config)), resources_(std::move(resources)) {
  if (!resources_.translator) {
    resources_.translator = std::make_shared<IdentityTranslator>();
  }
}

Pipeline Pipeline::load(const PipelineConfig& config) {
  PipelineResources res;
  if (!config.model_path.empty()) {
    res.model = std::make_shared<const SentimentModel>(
        SentimentModel::load(config.model_path));
  }
  res.templates = TemplateTable::load(config.templates_path);
  res.rules = RuleTable::load(config.rules_path);
  res.valence = ValenceLexicon::load(config.valence_path);
  res.synonyms = SynonymLexicon::load(config.synonyms_path);
  if (!config.qwerty_path.empty()) res.layout = KeyboardLayout::load(config.qwerty_path);
  res.translator = make_translator(config.translator, {});
  return Pipeline(config, std::move(res));
}

const SentimentModel& Pipeline::model() const {
  if (!resources_.model) {
    throw Error(ErrorCode::kModelNotLoaded, "no sentiment model loaded");
  }
  return *resources_.model;
}

SentimentPrediction Pipeline::classify(std::string_view text) const {
  const TokenizedText tokens = tokenize(text);
  SentimentPrediction out = predict(model(), featurize(tokens, model().vocabulary()));
  const NegativeScore negative = subtle_negative_score(tokens, resources_.valence);
  out.negative_intensity = negative.score;
  out.subtle = negative.subtle;
  return out;
}

Summary Pipeline::summarize_text(std::string_view text,
                                 std::size_t max_sentences) const {
  SummaryConfig cfg = config_.summary;
  cfg.max_sentences = max_sentences;
  return summarize(tokenize(text), cfg);
}

AugmentedSet Pipeline::augment_text(std::string_view text,
                                    const AugmentationConfig& cfg) const {
  return augment(text, cfg,
                 AugmentationResources{&resources_.synonyms, &resources_.layout,
                                       resources_.translator.get()});
}

std::map<std::string, std::string> Pipeline::slots_for(
    const PipelineResult& result) const {
  std::map<std::string, std::string> slots = result.plan.slots;
  std::string keywords;
  for (const auto& k : result.summary.keywords) {
    if (!keywords.empty()) keywords += ", ";
    keywords += k.term;
  }
  slots["summary_keywords"] = keywords.empty() ? std::string(kNoKeywords) : keywords;

  const SummarySentence* top = nullptr;
  for (const auto& s : result.summary.sentences) {
    if (top == nullptr || s.score > top->score) top = &s;
  }
  slots["top_sentence"] = top == nullptr ? result.input : top->text;
  slots.try_emplace("exercise_step", kDefaultExercise);
  slots.try_emplace("relaxation", kDefaultRelaxation);
  slots.try_emplace("phobia", "this fear");
  return slots;
}

std::pair<DialogSession, PipelineResult> Pipeline::run(std::string_view text,
                                                       DialogSession session,
                                                       std::int64_t timestamp_ms) const {
  PipelineResult result;
  result.input = trim(text);
  if (result.input.empty()) throw Error(ErrorCode::kEmptyInput, "input text is empty");
  const SentimentModel& clf = model();
  nlohmann::json trace = {{"stages", nlohmann::json::array()},
                          {"failures", nlohmann::json::array()}};
  const auto note = [&](std::string_view stage) { trace["stages"].push_back(stage); };

  // Step 2: augmentation.
  note("augment");
  result.augmented = augment_text(result.input, config_.augmentation);
  for (const auto& variant : result.augmented.variants) {
    if (variant.error) {
      trace["failures"].push_back({{"stage", "augment"},
                                   {"technique", technique_name(variant.technique)},
                                   {"error", *variant.error}});
    }
  }

  // Step 3: round trip through the pivot language.
  const Translator& tr = *resources_.translator;
  const auto round_trip = [&](const std::string& source, nlohmann::json* pivot_out) {
    const std::string there =
        translate(tr, source, config_.source_language, config_.pivot_language);
    if (pivot_out != nullptr) *pivot_out = there;
    return translate(tr, there, config_.pivot_language, config_.source_language);
  };
  result.classified_text = result.input;
  if (config_.translate) {
    note("translate");
    try {
      nlohmann::json pivot;
      result.classified_text = round_trip(result.input, &pivot);
      trace["pivot_text"] = pivot;
    } catch (const Error& e) {
      if (config_.require_translation || !is_backend_error(e.code())) throw;
      trace["failures"].push_back({{"stage", "translate"}, {"error", e.what()}});
    }
    for (std::size_t i = 0; i < result.augmented.variants.size(); ++i) {
      const auto& variant = result.augmented.variants[i];
      if (!variant.ok()) continue;
      TranslatedVariant tv{i, variant.text, std::nullopt};
      // Back-translated variants already went through the pivot.
      if (variant.technique != Technique::kBackTranslation) {
        try {
          tv.round_trip = round_trip(variant.text, nullptr);
        } catch (const Error& e) {
          if (config_.require_translation || !is_backend_error(e.code())) throw;
          tv.error = e.what();
          trace["failures"].push_back({{"stage", "translate"}, {"variant", i},
                                       {"error", e.what()}});
        }
      }
      result.translated.push_back(std::move(tv));
    }
  }

  // Step 4: classify the round-tripped input.
  note("classify");
  result.prediction = predict(clf, featurize(tokenize(result.classified_text),
                                             clf.vocabulary()));
  if (config_.trace || config_.ensemble_vote) {
    nlohmann::json variant_predictions = nlohmann::json::array();
    std::vector<double> mean = result.prediction.probabilities;
    std::size_t voters = 1;
    for (const auto& tv : result.translated) {
      if (tv.error) continue;
      const auto p = predict(clf, featurize(tokenize(tv.round_trip), clf.vocabulary()));
      variant_predictions.push_back({{"variant", tv.variant}, {"label", p.label},
                                     {"probabilities", p.probabilities}});
      for (std::size_t c = 0; c < mean.size(); ++c) mean[c] += p.probabilities[c];
      ++voters;
    }
    trace["variant_predictions"] = variant_predictions;
    if (config_.ensemble_vote) {
      for (double& p : mean) p /= static_cast<double>(voters);
      result.prediction.probabilities = mean;
      result.prediction.label_index = static_cast<std::size_t>(
          std::max_element(mean.begin(), mean.end()) - mean.begin());
      result.prediction.label = clf.labels()[result.prediction.label_index];
    }
  }
  const TokenizedText input_tokens = tokenize(result.input);
  const NegativeScore negative = subtle_negative_score(input_tokens, resources_.valence);
  result.prediction.negative_intensity = negative.score;
  result.prediction.subtle = negative.subtle;

  // Step 5: summarize the input.
  note("summarize");
  result.summary = summarize(input_tokens, config_.summary);
  if (config_.trace) {
    nlohmann::json variant_summaries = nlohmann::json::array();
    for (const auto& tv : result.translated) {
      if (tv.error) continue;
      const TokenizedText vt = tokenize(tv.round_trip);
      if (vt.sentence_bounds.empty()) continue;
      variant_summaries.push_back(
          {{"variant", tv.variant}, {"summary", summarize(vt, config_.summary).to_json()}});
    }
    trace["variant_summaries"] = variant_summaries;
  }

  // NLU + dialog manager.
  note("dialog");
  result.nlu = analyze(result.input, resources_.rules, &resources_.valence);
  const bool model_crisis =
      !config_.crisis_label.empty() && result.prediction.label == config_.crisis_label;
  NluResult dialog_nlu = result.nlu;
  if (model_crisis) dialog_nlu.intent = IntentKind::kCrisis;
  auto [next, plan] = step(std::move(session), result.input, dialog_nlu,
                           result.prediction, resources_.rules, timestamp_ms);
  result.plan = std::move(plan);
  result.crisis = model_crisis || result.nlu.intent == IntentKind::kCrisis;

  // Step 6: response.
  note("respond");
  const auto slots = slots_for(result);
  result.response = result.plan.crisis ? fill_template(resources_.templates.crisis(), slots)
                                       : render(resources_.templates,
                                                result.plan.template_key, slots);
  next.history.push_back(Turn{Speaker::kBot, result.response, timestamp_ms});
  if (config_.trace) result.trace = std::move(trace);
  return {std::move(next), std::move(result)};
}

nlohmann::json result_to_json(const PipelineResult& result,
                              const std::vector<std::string>& labels) {
  nlohmann::json translated = nlohmann::json::array();
  for (const auto& tv : result.translated) {
    nlohmann::json item = {{"variant", tv.variant}, {"round_trip", tv.round_trip}};
    if (tv.error) item["error"] = *tv.error;
    translated.push_back(item);
  }
  nlohmann::json out = {
      {"input", result.input},
      {"augmented", result.augmented.to_json()},
      {"translated", translated},
      {"prediction", prediction_to_json(result.prediction, labels)},
      {"summary", result.summary.to_json()},
      {"intent", intent_name(result.nlu.intent)},
      {"state", state_name(result.plan.state)},
      {"response", result.response},
      {"crisis", result.crisis},
  };
  if (result.trace) out["trace"] = *result.trace;
  return out;
}

}  // namespace posibot
