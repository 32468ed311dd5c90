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

#ifndef POSIBOT_DIALOG_HPP_
#define POSIBOT_DIALOG_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "posibot/sentiment.hpp"

namespace posibot {

// Declaration order is matching priority: the first kind whose phrases
// match wins.
enum class IntentKind {
  kCrisis,
  kPhobiaReport,
  kMoodReport,
  kGreeting,
  kFarewell,
  kHelpRequest,
  kOther,
};

inline constexpr std::array<IntentKind, 7> kIntentPriority = {
    IntentKind::kCrisis,   IntentKind::kPhobiaReport, IntentKind::kMoodReport,
    IntentKind::kGreeting, IntentKind::kFarewell,     IntentKind::kHelpRequest,
    IntentKind::kOther,
};

std::string_view intent_name(IntentKind kind);
std::optional<IntentKind> parse_intent(std::string_view name);

enum class DialogState { kGreeting, kAssessment, kIntervention, kCrisis, kClosing };

inline constexpr std::array<DialogState, 5> kAllStates = {
    DialogState::kGreeting, DialogState::kAssessment, DialogState::kIntervention,
    DialogState::kCrisis, DialogState::kClosing,
};

std::string_view state_name(DialogState state);
std::optional<DialogState> parse_state(std::string_view name);

struct PhobiaLadder {
  std::string name;  // normalized, e.g. "arachnophobia"
  std::vector<std::string> triggers;
  std::vector<std::string> steps;  // 3..5 graded exercises
  std::vector<std::string> relaxation;
};

// Phrases are matched case-insensitively on whole word tokens; punctuation
// inside the text is ignored, so "self-harm" matches "self harm".
class RuleTable {
 public:
  static RuleTable from_json(const nlohmann::json& doc);
  static RuleTable load(const std::filesystem::path& path);

  const std::vector<std::string>& phrases(IntentKind kind) const;
  const std::vector<PhobiaLadder>& phobias() const { return phobias_; }
  const std::vector<std::string>& safety_phrases() const { return safety_phrases_; }
  const PhobiaLadder* ladder(std::string_view normalized) const;

 private:
  std::map<IntentKind, std::vector<std::string>> intents_;
  std::vector<PhobiaLadder> phobias_;
  std::vector<std::string> safety_phrases_;
};

enum class EntityType { kPhobia, kEmotionWord };

struct Entity {
  EntityType type = EntityType::kPhobia;
  std::string surface;     // exact slice of the input text
  std::string normalized;  // ladder name or lowercased emotion word
};

struct NluResult {
  IntentKind intent = IntentKind::kOther;
  std::vector<Entity> entities;
  std::vector<std::string> emotion_words;
  bool safety_confirmed = false;

  const Entity* first_phobia() const;
};

// Intent by priority order; a phobia entity alone also counts as a phobia
// report. Emotion words come from `valence` when given.
NluResult analyze(std::string_view text, const RuleTable& rules,
                  const ValenceLexicon* valence = nullptr);

// True if `phrase` occurs in `text` as a contiguous run of words.
bool contains_phrase(std::string_view text, std::string_view phrase);

enum class Speaker { kUser, kBot };

struct Turn {
  Speaker speaker = Speaker::kUser;
  std::string text;
  std::int64_t timestamp_ms = 0;
};

struct DialogSession {
  std::string id;
  DialogState state = DialogState::kGreeting;
  std::vector<Turn> history;
  std::optional<SentimentPrediction> last_prediction;
  std::optional<std::string> active_phobia;
  std::size_t exercise_step = 0;

  nlohmann::json to_json() const;
  static DialogSession from_json(const nlohmann::json& doc);
};

struct ResponsePlan {
  DialogState state = DialogState::kGreeting;  // state after the turn
  IntentKind intent = IntentKind::kOther;
  std::string sentiment_label;
  bool crisis = false;
  // "crisis" or "STATE|intent|label".
  std::string template_key;
  std::map<std::string, std::string> slots;
};

std::string template_key(DialogState state, IntentKind intent,
                         std::string_view label);

// Applies one user turn: transitions the state machine, updates the phobia
// episode, appends the user turn to history and names the template to use.
std::pair<DialogSession, ResponsePlan> step(DialogSession session,
                                            std::string_view user_text,
                                            const NluResult& nlu,
                                            const SentimentPrediction& prediction,
                                            const RuleTable& rules,
                                            std::int64_t timestamp_ms = 0);

}  // namespace posibot

#endif  // POSIBOT_DIALOG_HPP_
