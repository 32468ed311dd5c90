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

#include <gtest/gtest.h>

#include "posibot/errors.hpp"
#include "posibot/pipeline.hpp"
#include "test_support.hpp"

namespace posibot {
namespace {

using Templates = std::map<std::string, std::string>;

class DownTranslator final : public Translator {
 public:
  bool supports(const LanguageTag&, const LanguageTag&) const override { return true; }
  std::string translate_text(std::string_view, const LanguageTag&,
                             const LanguageTag&) const override {
    throw Error(ErrorCode::kBackendUnavailable, "backend down");
  }
};

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(Templates, FallbackChain) {
  const TemplateTable table(Templates{{"crisis", "C"},
                             {"default", "D"},
                             {"ASSESSMENT|*|*", "A"},
                             {"INTERVENTION|mood_report|*", "IM"},
                             {"INTERVENTION|mood_report|negative", "IMN"}});
  EXPECT_EQ(table.resolve("INTERVENTION|mood_report|negative"), "IMN");
  EXPECT_EQ(table.resolve("INTERVENTION|mood_report|positive"), "IM");
  EXPECT_EQ(table.resolve("ASSESSMENT|greeting|positive"), "A");
  EXPECT_EQ(table.resolve("CLOSING|farewell|positive"), "D");
  EXPECT_EQ(table.crisis(), "C");
}

TEST(Templates, DefaultOnlyTable) {
  const TemplateTable table(Templates{{"crisis", "C"}, {"default", "Hello {label}"}});
  EXPECT_EQ(render(table, "GREETING|other|neutral", {{"label", "neutral"}}), "Hello neutral");
}

TEST(Templates, MissingDefaultAndCrisis) {
  const TemplateTable table(Templates{{"crisis", "C"}});
  EXPECT_EQ(code_of([&] { table.resolve("X|y|z"); }), ErrorCode::kMissingTemplate);
  EXPECT_THROW(TemplateTable(Templates{{"default", "D"}}), Error);
  EXPECT_THROW(TemplateTable(Templates{{"crisis", "C"}, {"default", "{not_a_slot}"}}), Error);
}

TEST(Templates, FillSlots) {
  EXPECT_EQ(fill_template("Try: {exercise_step}", {{"exercise_step", "name 3 spiders from photos"}}),
            "Try: name 3 spiders from photos");
  EXPECT_EQ(code_of([] { fill_template("Hi {unknown}", {{"label", "x"}}); }),
            ErrorCode::kUnfilledSlot);
}

TEST(Templates, BundledTableLoads) {
  const TemplateTable table = TemplateTable::load(testing::data_path("templates.json"));
  EXPECT_NE(table.crisis().find("Resources:"), std::string::npos);
}

TEST(PipelineConfig, StrictJson) {
  const auto base = std::filesystem::path(POSIBOT_DATA_DIR);
  const auto cfg = PipelineConfig::from_json(
      {{"templates_path", "templates.json"}, {"augmentation", {{"variants_per_technique", 2}}}},
      base);
  EXPECT_EQ(cfg.templates_path, base / "templates.json");
  EXPECT_EQ(cfg.augmentation.variants_per_technique, 2u);
  EXPECT_THROW(PipelineConfig::from_json({{"tempaltes_path", "x"}}, base), Error);
  EXPECT_THROW(PipelineConfig::from_json({{"augmentation", {{"dropout_rate", 2}}}}, base), Error);
}

TEST(Pipeline, InputAndModelPreconditions) {
  const Pipeline no_model = Pipeline::load(testing::demo_config());
  EXPECT_FALSE(no_model.model_loaded());
  EXPECT_EQ(code_of([&] { no_model.run("hello", DialogSession{}); }),
            ErrorCode::kModelNotLoaded);
  const Pipeline p = testing::demo_pipeline();
  EXPECT_EQ(code_of([&] { p.run("   \n", DialogSession{}); }), ErrorCode::kEmptyInput);
}

TEST(Pipeline, CrisisInputGivesCrisisTemplate) {
  const Pipeline p = testing::demo_pipeline();
  const auto [session, result] = p.run("I want to end my life", DialogSession{});
  EXPECT_TRUE(result.crisis);
  EXPECT_EQ(session.state, DialogState::kCrisis);
  EXPECT_EQ(result.response, p.resources().templates.crisis());
  EXPECT_NE(result.response.find("Resources:\n- Call or text 988"), std::string::npos);
}

TEST(Pipeline, CrisisPersistsUntilSafetyPhrase) {
  const Pipeline p = testing::demo_pipeline();
  DialogSession session = p.run("thinking about suicide", DialogSession{}).first;
  auto [next, result] = p.run("I had a calm walk", session);
  EXPECT_EQ(next.state, DialogState::kCrisis);
  EXPECT_FALSE(result.crisis);
  EXPECT_EQ(result.response, p.resources().templates.crisis());
  auto [after, released] = p.run("I am safe now", next);
  EXPECT_EQ(after.state, DialogState::kAssessment);
  EXPECT_NE(released.response, p.resources().templates.crisis());
}

TEST(Pipeline, ModelCrisisLabelEscalates) {
  PipelineConfig cfg = testing::demo_config();
  Pipeline base = Pipeline::load(cfg);
  PipelineResources res = base.resources();
  res.model = std::make_shared<const SentimentModel>(
      std::vector<std::string>{"non-suicidal", "suicidal"}, Vocabulary({"x"}),
      std::vector<double>{0.0, 0.0}, std::vector<double>{0.0, 5.0});
  const Pipeline p(cfg, res);
  const auto [session, result] = p.run("nice weather today", DialogSession{});
  EXPECT_EQ(result.prediction.label, "suicidal");
  EXPECT_TRUE(result.crisis);
  EXPECT_EQ(session.state, DialogState::kCrisis);
  EXPECT_EQ(result.response, p.resources().templates.crisis());
}

TEST(Pipeline, PassThroughCompositionMatchesDirectPrediction) {
  PipelineConfig cfg = testing::demo_config();
  cfg.augmentation.enabled_techniques.clear();
  const Pipeline p = testing::demo_pipeline(cfg);
  const std::string text = "I feel hopeless and exhausted after work again";
  const auto result = p.run(text, DialogSession{}).second;
  const auto direct = predict(*testing::demo_model(),
                              featurize(tokenize(text), testing::demo_model()->vocabulary()));
  EXPECT_EQ(result.prediction.probabilities, direct.probabilities);
  EXPECT_EQ(result.prediction.label, direct.label);
  EXPECT_TRUE(result.augmented.variants.empty());
}

TEST(Pipeline, DeterministicForFixedSeeds) {
  PipelineConfig cfg = testing::demo_config();
  cfg.trace = true;
  const Pipeline p = testing::demo_pipeline(cfg);
  const auto a = p.run("I feel sad. My friend is worried about me.", DialogSession{}, 5).second;
  const auto b = p.run("I feel sad. My friend is worried about me.", DialogSession{}, 5).second;
  const auto& labels = testing::demo_model()->labels();
  EXPECT_EQ(result_to_json(a, labels), result_to_json(b, labels));
  ASSERT_TRUE(a.trace.has_value());
  EXPECT_EQ((*a.trace)["stages"].size(), 6u);
}

TEST(Pipeline, BackendOutageDegradesUnlessRequired) {
  PipelineConfig cfg = testing::demo_config();
  cfg.trace = true;
  Pipeline base = Pipeline::load(cfg);
  PipelineResources res = base.resources();
  res.model = testing::demo_model();
  res.translator = std::make_shared<DownTranslator>();

  const Pipeline degraded(cfg, res);
  const auto result = degraded.run("I feel sad today", DialogSession{}).second;
  EXPECT_FALSE(result.response.empty());
  EXPECT_EQ(result.classified_text, "I feel sad today");
  bool back_translation_failed = false;
  for (const auto& v : result.augmented.variants) {
    if (v.technique == Technique::kBackTranslation) back_translation_failed = !v.ok();
  }
  EXPECT_TRUE(back_translation_failed);
  EXPECT_FALSE((*result.trace)["failures"].empty());

  cfg.require_translation = true;
  const Pipeline strict(cfg, res);
  EXPECT_EQ(code_of([&] { strict.run("I feel sad today", DialogSession{}); }),
            ErrorCode::kBackendUnavailable);
}

TEST(Pipeline, ScriptedConversationAndHistory) {
  const Pipeline p = testing::demo_pipeline();
  const std::vector<std::string> script = {
      "Hello there",
      "I feel sad and tired lately",
      "I'm scared of spiders",
      "Spiders still make me nervous",
      "I looked at spiders in photos today",
      "Goodbye",
  };
  const std::vector<std::string> states = {"ASSESSMENT",   "INTERVENTION", "INTERVENTION",
                                           "INTERVENTION", "INTERVENTION", "CLOSING"};
  DialogSession session;
  session.id = "scripted";
  std::vector<std::size_t> steps;
  for (std::size_t i = 0; i < script.size(); ++i) {
    auto [next, result] = p.run(script[i], session, static_cast<std::int64_t>(i));
    session = std::move(next);
    EXPECT_EQ(state_name(session.state), states[i]) << script[i];
    EXPECT_FALSE(result.crisis);
    EXPECT_EQ(session.history.size(), 2 * (i + 1));
    if (i >= 2 && i <= 4) steps.push_back(session.exercise_step);
  }
  EXPECT_EQ(steps, (std::vector<std::size_t>{0, 1, 2}));
  for (std::size_t i = 0; i < session.history.size(); ++i) {
    EXPECT_EQ(session.history[i].speaker, i % 2 == 0 ? Speaker::kUser : Speaker::kBot);
  }
}

TEST(Pipeline, EnsembleVoteAveragesProbabilities) {
  PipelineConfig cfg = testing::demo_config();
  cfg.ensemble_vote = true;
  cfg.augmentation.variants_per_technique = 2;
  const Pipeline p = testing::demo_pipeline(cfg);
  const auto result = p.run("I feel hopeless and lonely", DialogSession{}).second;
  double total = 0.0;
  for (double v : result.prediction.probabilities) total += v;
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_EQ(result.prediction.label, "negative");
}

}  // namespace
}  // namespace posibot
