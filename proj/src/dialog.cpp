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

#include "posibot/dialog.hpp"

#include <algorithm>

#include "posibot/errors.hpp"
#include "posibot/json_util.hpp"
#include "posibot/text_core.hpp"

namespace posibot {

std::string_view intent_name(IntentKind kind) {
  switch (kind) {
    case IntentKind::kCrisis: return "crisis";
    case IntentKind::kPhobiaReport: return "phobia_report";
    case IntentKind::kMoodReport: return "mood_report";
    case IntentKind::kGreeting: return "greeting";
    case IntentKind::kFarewell: return "farewell";
    case IntentKind::kHelpRequest: return "help_request";
    case IntentKind::kOther: return "other";
  }
  return "other";
}

std::optional<IntentKind> parse_intent(std::string_view name) {
  for (IntentKind kind : kIntentPriority) {
    if (intent_name(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view state_name(DialogState state) {
  switch (state) {
    case DialogState::kGreeting: return "GREETING";
    case DialogState::kAssessment: return "ASSESSMENT";
    case DialogState::kIntervention: return "INTERVENTION";
    case DialogState::kCrisis: return "CRISIS";
    case DialogState::kClosing: return "CLOSING";
  }
  return "GREETING";
}

std::optional<DialogState> parse_state(std::string_view name) {
  for (DialogState state : kAllStates) {
    if (state_name(state) == name) return state;
  }
  return std::nullopt;
}

namespace {

struct Word {
  std::string norm;
  Span span;
};

std::string normalize_word(std::string_view surface) {
  std::string lower = utf8::to_lower(surface);
  // Curly apostrophes match straight ones.
  std::string out;
  for (char32_t cp : utf8::decode(lower)) utf8::append(out, cp == U'’' ? U'\'' : cp);
  return out;
}

std::vector<Word> words_of(const TokenizedText& text) {
  std::vector<Word> out;
  for (const Token& token : text.tokens) {
    if (token.is_word()) out.push_back(Word{normalize_word(token.surface), token.span});
  }
  return out;
}

std::vector<std::string> phrase_words(std::string_view phrase) {
  std::vector<std::string> out;
  for (const Word& w : words_of(tokenize(phrase))) out.push_back(w.norm);
  return out;
}

// Index of the first word where `phrase` starts, if any.
std::optional<std::size_t> find_phrase(const std::vector<Word>& words,
                                       const std::vector<std::string>& phrase) {
  if (phrase.empty() || phrase.size() > words.size()) return std::nullopt;
  for (std::size_t i = 0; i + phrase.size() <= words.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < phrase.size() && match; ++j) {
      match = words[i + j].norm == phrase[j];
    }
    if (match) return i;
  }
  return std::nullopt;
}

bool any_phrase(const std::vector<Word>& words,
                const std::vector<std::string>& phrases) {
  return std::any_of(phrases.begin(), phrases.end(), [&](const std::string& p) {
    return find_phrase(words, phrase_words(p)).has_value();
  });
}

std::vector<std::string> string_list(const nlohmann::json& value,
                                     const std::string& context) {
  if (!value.is_array()) {
    throw Error(ErrorCode::kInvalidConfig, context + " must be an array of strings");
  }
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string() || item.get<std::string>().empty()) {
      throw Error(ErrorCode::kInvalidConfig, context + " must hold non-empty strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

bool contains_phrase(std::string_view text, std::string_view phrase) {
  return find_phrase(words_of(tokenize(text)), phrase_words(phrase)).has_value();
}

RuleTable RuleTable::from_json(const nlohmann::json& doc) {
  require_known_fields(doc, {"intents", "phobias", "safety_phrases"}, "rule table");
  RuleTable table;
  if (!doc.contains("intents") || !doc["intents"].is_object()) {
    throw Error(ErrorCode::kInvalidConfig, "rule table needs an 'intents' object");
  }
  for (const auto& [name, phrases] : doc["intents"].items()) {
    const auto kind = parse_intent(name);
    if (!kind || *kind == IntentKind::kOther) {
      throw Error(ErrorCode::kInvalidConfig, "unknown intent '" + name + "'", "intents");
    }
    table.intents_[*kind] = string_list(phrases, "intents." + name);
  }
  if (table.phrases(IntentKind::kCrisis).empty()) {
    throw Error(ErrorCode::kInvalidConfig, "rule table needs crisis phrases", "intents");
  }
  if (doc.contains("phobias")) {
    for (const auto& [key, spec] : doc["phobias"].items()) {
      require_known_fields(spec, {"normalized", "aliases", "steps", "relaxation"},
                           "phobias." + key);
      PhobiaLadder ladder;
      ladder.name = spec.value("normalized", key);
      ladder.triggers.push_back(key);
      if (spec.contains("aliases")) {
        for (auto& alias : string_list(spec["aliases"], "phobias." + key + ".aliases")) {
          ladder.triggers.push_back(std::move(alias));
        }
      }
      ladder.steps = string_list(spec.value("steps", nlohmann::json::array()),
                                 "phobias." + key + ".steps");
      ladder.relaxation = string_list(spec.value("relaxation", nlohmann::json::array()),
                                      "phobias." + key + ".relaxation");
      if (ladder.steps.size() < 3 || ladder.steps.size() > 5) {
        throw Error(ErrorCode::kInvalidConfig,
                    "ladder '" + key + "' needs 3 to 5 steps", "phobias");
      }
      table.phobias_.push_back(std::move(ladder));
    }
  }
  if (doc.contains("safety_phrases")) {
    table.safety_phrases_ = string_list(doc["safety_phrases"], "safety_phrases");
  }
  return table;
}

RuleTable RuleTable::load(const std::filesystem::path& path) {
  return from_json(read_json_file(path));
}

const std::vector<std::string>& RuleTable::phrases(IntentKind kind) const {
  static const std::vector<std::string> kNone;
  const auto it = intents_.find(kind);
  return it == intents_.end() ? kNone : it->second;
}

const PhobiaLadder* RuleTable::ladder(std::string_view normalized) const {
  for (const auto& ladder : phobias_) {
    if (ladder.name == normalized) return &ladder;
  }
  return nullptr;
}

const Entity* NluResult::first_phobia() const {
  for (const auto& entity : entities) {
    if (entity.type == EntityType::kPhobia) return &entity;
  }
  return nullptr;
}

NluResult analyze(std::string_view text, const RuleTable& rules,
                  const ValenceLexicon* valence) {
  const TokenizedText tokens = tokenize(text);
  const auto words = words_of(tokens);
  const auto cps = utf8::decode(text);
  const auto surface = [&](std::size_t first, std::size_t count) {
    std::vector<char32_t> slice(
        cps.begin() + static_cast<std::ptrdiff_t>(words[first].span.start),
        cps.begin() + static_cast<std::ptrdiff_t>(words[first + count - 1].span.end));
    return utf8::encode(slice);
  };

  NluResult out;
  for (const auto& ladder : rules.phobias()) {
    for (const auto& trigger : ladder.triggers) {
      const auto phrase = phrase_words(trigger);
      if (const auto at = find_phrase(words, phrase)) {
        out.entities.push_back(
            Entity{EntityType::kPhobia, surface(*at, phrase.size()), ladder.name});
        break;
      }
    }
  }
  if (valence != nullptr) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (valence->valence(words[i].norm) == nullptr) continue;
      out.emotion_words.push_back(words[i].norm);
      out.entities.push_back(Entity{EntityType::kEmotionWord, surface(i, 1), words[i].norm});
    }
  }

  out.intent = IntentKind::kOther;
  for (IntentKind kind : kIntentPriority) {
    if (kind == IntentKind::kOther) break;
    const bool matched = any_phrase(words, rules.phrases(kind)) ||
                         (kind == IntentKind::kPhobiaReport && out.first_phobia() != nullptr);
    if (matched) {
      out.intent = kind;
      break;
    }
  }
  out.safety_confirmed = any_phrase(words, rules.safety_phrases());
  return out;
}

std::string template_key(DialogState state, IntentKind intent,
                         std::string_view label) {
  return std::string(state_name(state)) + "|" + std::string(intent_name(intent)) +
         "|" + std::string(label);
}

namespace {

DialogState transition(DialogState from, const NluResult& nlu) {
  const IntentKind intent = nlu.intent;
  if (intent == IntentKind::kCrisis) return DialogState::kCrisis;
  const bool report =
      intent == IntentKind::kMoodReport || intent == IntentKind::kPhobiaReport;
  switch (from) {
    case DialogState::kCrisis:
      return nlu.safety_confirmed ? DialogState::kAssessment : DialogState::kCrisis;
    case DialogState::kGreeting:
      return DialogState::kAssessment;
    case DialogState::kAssessment:
      if (report) return DialogState::kIntervention;
      if (intent == IntentKind::kFarewell) return DialogState::kClosing;
      return DialogState::kAssessment;
    case DialogState::kIntervention:
      return intent == IntentKind::kFarewell ? DialogState::kClosing
                                             : DialogState::kIntervention;
    case DialogState::kClosing:
      if (report) return DialogState::kIntervention;
      if (intent == IntentKind::kGreeting) return DialogState::kAssessment;
      return DialogState::kClosing;
  }
  return from;
}

}  // namespace

std::pair<DialogSession, ResponsePlan> step(DialogSession session,
                                            std::string_view user_text,
                                            const NluResult& nlu,
                                            const SentimentPrediction& prediction,
                                            const RuleTable& rules,
                                            std::int64_t timestamp_ms) {
  const DialogState from = session.state;
  const DialogState to = transition(from, nlu);

  if (to != DialogState::kCrisis && from != DialogState::kCrisis) {
    const Entity* phobia = nlu.first_phobia();
    if (nlu.intent == IntentKind::kPhobiaReport && phobia != nullptr &&
        session.active_phobia != phobia->normalized) {
      session.active_phobia = phobia->normalized;
      session.exercise_step = 0;
    } else if (from == DialogState::kIntervention && to == DialogState::kIntervention &&
               session.active_phobia) {
      const PhobiaLadder* ladder = rules.ladder(*session.active_phobia);
      const std::size_t length = ladder == nullptr ? 0 : ladder->steps.size();
      session.exercise_step = std::min(session.exercise_step + 1, length);
    }
  }

  session.state = to;
  session.last_prediction = prediction;
  session.history.push_back(Turn{Speaker::kUser, std::string(user_text), timestamp_ms});

  ResponsePlan plan;
  plan.state = to;
  plan.intent = nlu.intent;
  plan.sentiment_label = prediction.label;
  plan.crisis = to == DialogState::kCrisis;
  plan.template_key = plan.crisis ? "crisis" : template_key(to, nlu.intent, prediction.label);
  plan.slots["state"] = std::string(state_name(to));
  plan.slots["intent"] = std::string(intent_name(nlu.intent));
  plan.slots["label"] = prediction.label;
  if (session.active_phobia) {
    plan.slots["phobia"] = *session.active_phobia;
    if (const PhobiaLadder* ladder = rules.ladder(*session.active_phobia)) {
      const std::size_t i = std::min(session.exercise_step, ladder->steps.size() - 1);
      plan.slots["exercise_step"] = ladder->steps[i];
      if (!ladder->relaxation.empty()) {
        plan.slots["relaxation"] =
            ladder->relaxation[session.exercise_step % ladder->relaxation.size()];
      }
    }
  }
  return {std::move(session), std::move(plan)};
}

namespace {

nlohmann::json prediction_json(const SentimentPrediction& p) {
  return {{"label", p.label},
          {"label_index", p.label_index},
          {"probabilities", p.probabilities},
          {"negative_intensity", p.negative_intensity},
          {"subtle", p.subtle}};
}

SentimentPrediction prediction_from_json(const nlohmann::json& j) {
  SentimentPrediction p;
  p.label = j.at("label").get<std::string>();
  p.label_index = j.at("label_index").get<std::size_t>();
  p.probabilities = j.at("probabilities").get<std::vector<double>>();
  p.negative_intensity = j.at("negative_intensity").get<double>();
  p.subtle = j.at("subtle").get<bool>();
  return p;
}

}  // namespace

nlohmann::json DialogSession::to_json() const {
  nlohmann::json turns = nlohmann::json::array();
  for (const auto& turn : history) {
    turns.push_back({{"speaker", turn.speaker == Speaker::kUser ? "user" : "bot"},
                     {"text", turn.text},
                     {"timestamp", turn.timestamp_ms}});
  }
  nlohmann::json out = {{"session_id", id},
                        {"state", state_name(state)},
                        {"history", turns},
                        {"exercise_step", exercise_step},
                        {"active_phobia", nullptr},
                        {"last_prediction", nullptr}};
  if (active_phobia) out["active_phobia"] = *active_phobia;
  if (last_prediction) out["last_prediction"] = prediction_json(*last_prediction);
  return out;
}

DialogSession DialogSession::from_json(const nlohmann::json& doc) {
  try {
    DialogSession s;
    s.id = doc.at("session_id").get<std::string>();
    const auto state = parse_state(doc.at("state").get<std::string>());
    if (!state) throw Error(ErrorCode::kParse, "unknown dialog state");
    s.state = *state;
    for (const auto& turn : doc.at("history")) {
      const std::string speaker = turn.at("speaker").get<std::string>();
      s.history.push_back(Turn{speaker == "bot" ? Speaker::kBot : Speaker::kUser,
                               turn.at("text").get<std::string>(),
                               turn.at("timestamp").get<std::int64_t>()});
    }
    s.exercise_step = doc.value("exercise_step", std::size_t{0});
    if (doc.contains("active_phobia") && doc["active_phobia"].is_string()) {
      s.active_phobia = doc["active_phobia"].get<std::string>();
    }
    if (doc.contains("last_prediction") && doc["last_prediction"].is_object()) {
      s.last_prediction = prediction_from_json(doc["last_prediction"]);
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("session: ") + e.what());
  }
}

}  // namespace posibot
