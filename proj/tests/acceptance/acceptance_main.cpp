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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any
// failure. Tolerances are fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "httplib.h"
#include "posibot/augmentation.hpp"
#include "posibot/corpus.hpp"
#include "posibot/dialog.hpp"
#include "posibot/pipeline.hpp"
#include "posibot/sentiment.hpp"
#include "posibot/service.hpp"
#include "posibot/translation.hpp"
#include "test_support.hpp"

namespace posibot {
namespace {

using Clock = std::chrono::steady_clock;

constexpr double kDeterminismBudgetSeconds = 5.0;
constexpr std::size_t kPropertyCases = 1000;
constexpr int kCalibrationTrials = 10000;
constexpr double kCalibrationTolerance = 0.02;
constexpr double kSoftmaxTolerance = 1e-9;
constexpr int kSoftmaxModels = 1000;
constexpr double kGradientTolerance = 1e-4;
constexpr int kGradientPoints = 20;
constexpr double kClassifierFloor = 0.95;
constexpr double kTrainingBudgetSeconds = 10.0;
constexpr double kEmotionTolerance = 1e-9;
constexpr double kChatBudgetMs = 200.0;
constexpr int kInterleavedTurns = 20;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  return nlohmann::json::parse(in);
}

const SynonymLexicon& bundled_synonyms() {
  static const SynonymLexicon lex = SynonymLexicon::load(testing::data_path("synonyms.json"));
  return lex;
}

const DictionaryTranslator& bundled_dictionary() {
  static const DictionaryTranslator tr(
      BilingualLexicon::load(testing::data_path("lexicon_en_es.json")), LanguageTag("en"),
      LanguageTag("es"));
  return tr;
}

Outcome augmentation_determinism() {
  Outcome out;
  const auto sentences = testing::read_lines(testing::data_path("sentences_1000.txt"));
  if (sentences.size() != 1000) out.fail("expected 1000 sentences, found " +
                                         std::to_string(sentences.size()));
  AugmentationConfig cfg;
  cfg.variants_per_technique = 3;
  cfg.seed = RandomSeed{20240601};
  const AugmentationResources res{&bundled_synonyms(), nullptr, &bundled_dictionary()};
  const auto run = [&] {
    std::string dump;
    for (const auto& s : sentences) dump += augment(s, cfg, res).to_json().dump() + "\n";
    return dump;
  };
  const auto start = Clock::now();
  const std::string first = run();
  const double elapsed = seconds_since(start);
  const std::string second = run();
  if (first != second) out.fail("runs differ");
  const std::size_t lines = static_cast<std::size_t>(std::count(first.begin(), first.end(), '\n'));
  if (lines != sentences.size()) out.fail("line count mismatch");
  if (elapsed >= kDeterminismBudgetSeconds) out.fail("run took " + std::to_string(elapsed) + " s");
  if (out.pass) {
    out.detail = std::to_string(sentences.size()) + " sentences x 18 variants, identical, " +
                 std::to_string(elapsed) + " s";
  }
  return out;
}

Outcome transform_invariants() {
  Outcome out;
  std::size_t cases = 0;
  for (std::uint64_t seed = 0; seed < kPropertyCases; ++seed) {
    const TokenizedText t = tokenize(testing::random_text(seed + 5000, 40));
    const auto in = testing::surfaces(t);
    const RandomSeed s{seed * 7919 + 3};
    if (testing::multiset(testing::surfaces(word_shuffle(t, 2 + seed % 4, s))) !=
        testing::multiset(in)) {
      out.fail("shuffle multiset, seed " + std::to_string(seed));
    }
    if (!testing::is_subsequence(testing::surfaces(word_dropout(t, 0.4, s)), in)) {
      out.fail("dropout subsequence, seed " + std::to_string(seed));
    }
    if (synonym_replace(t, bundled_synonyms(), 0.6, s).tokens.size() != in.size()) {
      out.fail("synonym token count, seed " + std::to_string(seed));
    }
    if (char_noise(t, 0.6, s).tokens.size() != in.size()) {
      out.fail("char_noise token count, seed " + std::to_string(seed));
    }
    if (!testing::is_subsequence(in,
                                 testing::surfaces(random_insertion(t, bundled_synonyms(), 0.6, s)))) {
      out.fail("insertion superset, seed " + std::to_string(seed));
    }
    ++cases;
  }
  if (out.pass) out.detail = std::to_string(cases) + " cases per transform, 0 violations";
  return out;
}

Outcome rate_calibration() {
  Outcome out;
  const std::vector<std::string> words = {"alpha", "bravo",  "charlie", "delta", "echo",
                                          "foxtrot", "golf", "hotel",   "india", "juliet"};
  std::map<std::string, std::vector<std::string>> entries;
  for (const auto& w : words) entries[w] = {w + "x"};
  const SynonymLexicon lex(entries);
  std::string joined;
  for (const auto& w : words) joined += (joined.empty() ? "" : " ") + w;
  const TokenizedText t = tokenize(joined);
  const double n = static_cast<double>(words.size());

  const auto changed = [](const TokenizedText& a, const TokenizedText& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.tokens.size(); ++i) c += a.tokens[i].surface != b.tokens[i].surface;
    return static_cast<double>(c);
  };

  std::ostringstream detail;
  detail.precision(4);
  for (double rate : {0.1, 0.3, 0.5}) {
    double dropped = 0;
    double replaced = 0;
    double inserted = 0;
    double noised = 0;
    for (int i = 0; i < kCalibrationTrials; ++i) {
      const RandomSeed s = derive_seed(RandomSeed{static_cast<std::uint64_t>(rate * 1000)}, i);
      dropped += n - static_cast<double>(word_dropout(t, rate, s).tokens.size());
      replaced += changed(t, synonym_replace(t, lex, rate, s));
      inserted += static_cast<double>(random_insertion(t, lex, rate, s).tokens.size()) - n;
      noised += changed(t, char_noise(t, rate, s));
    }
    const double denom = n * kCalibrationTrials;
    const std::vector<std::pair<std::string, double>> observed = {
        {"dropout", dropped / denom},
        {"synonym", replaced / denom},
        {"insertion", inserted / denom},
        {"char_noise", noised / denom}};
    for (const auto& [name, freq] : observed) {
      if (std::abs(freq - rate) > kCalibrationTolerance) {
        out.fail(name + " at " + std::to_string(rate) + " observed " + std::to_string(freq));
      }
      detail << name << "@" << rate << "=" << freq << " ";
    }
  }
  if (out.pass) out.detail = detail.str();
  return out;
}

Outcome back_translation_identity() {
  Outcome out;
  const auto lexicon = BilingualLexicon::load(testing::data_path("lexicon_en_es.json"));
  if (lexicon.forward.size() != 50 || !lexicon.invertible) {
    out.fail("lexicon must hold 50 invertible pairs");
  }
  const auto sentences = testing::read_lines(testing::data_path("lexicon_sentences.txt"));
  if (sentences.size() != 100) out.fail("expected 100 sentences");
  std::size_t exact = 0;
  for (const auto& s : sentences) {
    if (back_translate(bundled_dictionary(), s, LanguageTag("en"), LanguageTag("es")) == s) {
      ++exact;
    } else {
      out.fail("round trip changed: " + s);
    }
  }
  if (out.pass) out.detail = std::to_string(exact) + "/100 exact round trips";
  return out;
}

SentimentModel random_model(std::mt19937_64& rng, std::size_t labels, std::size_t features) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < labels; ++k) names.push_back("c" + std::to_string(k));
  std::vector<std::string> terms;
  for (std::size_t j = 0; j < features; ++j) terms.push_back("t" + std::to_string(1000 + j));
  std::normal_distribution<double> dist(0.0, 2.0);
  std::vector<double> w(labels * features);
  std::vector<double> b(labels);
  for (auto& x : w) x = dist(rng);
  for (auto& x : b) x = dist(rng);
  return SentimentModel(names, Vocabulary(terms), w, b);
}

FeatureVector random_features(std::mt19937_64& rng, std::size_t dim) {
  FeatureVector f;
  f.dimension = dim;
  for (std::uint32_t j = 0; j < dim; ++j) {
    if (rng() % 2 == 0) {
      f.index.push_back(j);
      f.count.push_back(static_cast<double>(1 + rng() % 4));
    }
  }
  return f;
}

Outcome softmax_and_gradient() {
  Outcome out;
  std::mt19937_64 rng(4242);
  double worst_sum = 0.0;
  for (int rep = 0; rep < kSoftmaxModels; ++rep) {
    const std::size_t k = 2 + rng() % 6;
    const std::size_t d = 1 + rng() % 40;
    const SentimentModel model = random_model(rng, k, d);
    const SentimentPrediction p = predict(model, random_features(rng, d));
    const double sum = std::accumulate(p.probabilities.begin(), p.probabilities.end(), 0.0);
    worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
  }
  if (worst_sum > kSoftmaxTolerance) out.fail("probability sum off by " + std::to_string(worst_sum));

  double worst_rel = 0.0;
  std::size_t checked = 0;
  const double l2 = 1e-2;
  const double h = 1e-5;
  for (int point = 0; point < kGradientPoints; ++point) {
    const std::size_t k = 2 + rng() % 3;
    const std::size_t d = 3 + rng() % 6;
    SentimentModel model = random_model(rng, k, d);
    std::vector<Example> batch;
    for (int i = 0; i < 5; ++i) batch.push_back({random_features(rng, d), rng() % k});
    const LossGradient g = loss_and_gradient(model, batch, l2);
    const auto check = [&](std::vector<double>& params, const std::vector<double>& grad) {
      for (std::size_t i = 0; i < params.size(); ++i) {
        const double saved = params[i];
        params[i] = saved + h;
        const double up = testing::oracle_loss(model.weights(), model.bias(), k, d, batch, l2);
        params[i] = saved - h;
        const double down = testing::oracle_loss(model.weights(), model.bias(), k, d, batch, l2);
        params[i] = saved;
        const double numeric = (up - down) / (2 * h);
        worst_rel = std::max(worst_rel, std::abs(numeric - grad[i]) /
                                            std::max({1e-6, std::abs(numeric), std::abs(grad[i])}));
        ++checked;
      }
    };
    check(model.mutable_weights(), g.weights);
    check(model.mutable_bias(), g.bias);
  }
  if (worst_rel > kGradientTolerance) {
    out.fail("gradient relative error " + std::to_string(worst_rel));
  }
  if (out.pass) {
    std::ostringstream s;
    s << kSoftmaxModels << " models, max |sum-1|=" << worst_sum << "; " << kGradientPoints
      << " points (" << checked << " partials), max rel err=" << worst_rel;
    out.detail = s.str();
  }
  return out;
}

Outcome classifier_experiment() {
  Outcome out;
  const LoadResult loaded =
      load_csv(testing::data_path("synthetic_corpus.csv"),
               SchemaMapping::load(testing::data_path("schemas/synthetic.json")));
  if (loaded.records.size() != 200) out.fail("expected 200 documents");
  std::map<std::string, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < loaded.records.size(); ++i) {
    by_label[loaded.records[i].label].push_back(i);
  }
  std::vector<std::string> labels;
  std::vector<LabeledText> train_set;
  std::vector<LabeledText> test_set;
  std::mt19937_64 rng(99);
  for (auto& [label, indices] : by_label) {
    labels.push_back(label);
    std::shuffle(indices.begin(), indices.end(), rng);
    const std::size_t held_out = indices.size() / 5;
    for (std::size_t k = 0; k < indices.size(); ++k) {
      const auto& rec = loaded.records[indices[k]];
      (k < held_out ? test_set : train_set).push_back({tokenize(rec.text), rec.label});
    }
  }
  TrainingOptions options;
  options.seed = RandomSeed{13};
  const auto start = Clock::now();
  const SentimentModel model = train(train_set, labels, options);
  const double elapsed = seconds_since(start);
  const EvaluationReport report = evaluate(model, test_set);
  if (report.accuracy < kClassifierFloor) out.fail("accuracy " + std::to_string(report.accuracy));
  if (report.macro_f1 < kClassifierFloor) out.fail("macro_f1 " + std::to_string(report.macro_f1));
  if (elapsed >= kTrainingBudgetSeconds) out.fail("training took " + std::to_string(elapsed) + " s");
  if (out.pass) {
    out.detail = "train=" + std::to_string(train_set.size()) + " test=" +
                 std::to_string(test_set.size()) + " accuracy=" + std::to_string(report.accuracy) +
                 " macro_f1=" + std::to_string(report.macro_f1) + " train_s=" +
                 std::to_string(elapsed);
  }
  return out;
}

// Exact rational arithmetic; the final conversion is one correctly rounded
// division.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

Fraction reduce(Fraction f) {
  const std::uint64_t g = std::gcd(f.num, f.den);
  return g == 0 ? f : Fraction{f.num / g, f.den / g};
}

double oracle_f1(std::uint64_t tp, std::uint64_t fp, std::uint64_t fn) {
  const Fraction p = tp + fp == 0 ? Fraction{0, 1} : reduce({tp, tp + fp});
  const Fraction r = tp + fn == 0 ? Fraction{0, 1} : reduce({tp, tp + fn});
  // 2PR / (P + R) with P = a/b, R = c/d: (2ac / bd) / ((ad + cb) / bd) = 2ac / (ad + cb).
  const std::uint64_t top = 2 * p.num * r.num;
  const std::uint64_t bottom = p.num * r.den + r.num * p.den;
  if (bottom == 0) return 0.0;
  const Fraction f = reduce({top, bottom});
  return static_cast<double>(f.num) / static_cast<double>(f.den);
}

Outcome f1_oracle() {
  Outcome out;
  std::size_t cases = 0;
  for (std::uint64_t a = 0; a <= 5; ++a) {
    for (std::uint64_t b = 0; b <= 5; ++b) {
      for (std::uint64_t c = 0; c <= 5; ++c) {
        for (std::uint64_t d = 0; d <= 5; ++d) {
          std::vector<std::size_t> truth;
          std::vector<std::size_t> predicted;
          const auto add = [&](std::uint64_t count, std::size_t t, std::size_t p) {
            for (std::uint64_t i = 0; i < count; ++i) {
              truth.push_back(t);
              predicted.push_back(p);
            }
          };
          add(a, 0, 0);
          add(b, 0, 1);
          add(c, 1, 0);
          add(d, 1, 1);
          const EvaluationReport r = evaluate_predictions({"neg", "pos"}, truth, predicted);
          const double f0 = oracle_f1(a, c, b);
          const double f1 = oracle_f1(d, b, c);
          const double macro = (f0 + f1) / 2.0;
          if (r.per_class[0].f1 != f0 || r.per_class[1].f1 != f1 || r.macro_f1 != macro) {
            out.fail("mismatch at [[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
                     std::to_string(c) + "," + std::to_string(d) + "]]");
          }
          ++cases;
        }
      }
    }
  }
  if (cases != 1296) out.fail("enumerated " + std::to_string(cases) + " matrices");
  if (out.pass) out.detail = std::to_string(cases) + " matrices, exact equality";
  return out;
}

Outcome length_histogram_oracle() {
  Outcome out;
  const auto oracle = read_json(testing::fixture_path("lengths_oracle.json"));
  const auto report = histogram_report(length_histograms(
      {{"original", testing::read_lines(testing::data_path("toy_original.txt"))},
       {"augmented", testing::read_lines(testing::data_path("toy_augmented.txt"))}}));
  for (const char* corpus : {"original", "augmented"}) {
    const auto& got = report["histograms"][corpus];
    for (const char* key : {"edges", "labels", "counts", "mean_length", "total_sentences"}) {
      if (got[key] != oracle[corpus][key]) out.fail(std::string(corpus) + "." + key + " differs");
    }
    if (got["labels"][0] != "0–36" || got["labels"][1] != "36–73") {
      out.fail("default bin labels are not 0–36 and 36–73");
    }
  }
  if (out.pass) out.detail = "original and augmented histograms equal the oracle";
  return out;
}

Outcome emotion_matrix_oracle() {
  Outcome out;
  const auto oracle = read_json(testing::fixture_path("emotion_oracle.json"));
  const auto schema = SchemaMapping::from_json(
      {{"columns",
        {{"id", "id"}, {"text", "text"}, {"label", "label"}, {"age", "age"}, {"gender", "gender"}}}});
  const LoadResult loaded = load_csv(testing::data_path("demographics.csv"), schema);
  if (loaded.data_rows != 40) out.fail("expected 40 records");
  const nlohmann::json rows = {"18–25", "26–35", "36–45", "46–55", "56+"};
  const nlohmann::json cols = {"Mood", "Behavior", "Phobias", "Anxiety", "Stress"};
  double worst = 0.0;
  for (const auto& [name, gender] :
       {std::pair{"male", Gender::kMale}, std::pair{"female", Gender::kFemale}}) {
    const auto doc = emotion_matrix(loaded.records, gender).to_json();
    if (doc["rows"] != rows) out.fail(std::string(name) + " rows differ");
    if (doc["cols"] != cols) out.fail(std::string(name) + " cols differ");
    if (doc["used_records"] != oracle[name]["used_records"]) {
      out.fail(std::string(name) + " used_records differ");
    }
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t c = 0; c < 5; ++c) {
        const auto& want = oracle[name]["cells"][r][c];
        const auto& got = doc["cells"][r][c];
        if (want.is_null() != got.is_null()) {
          out.fail(std::string(name) + " empty-cell mismatch");
        } else if (!want.is_null()) {
          worst = std::max(worst, std::abs(want.get<double>() - got.get<double>()));
        }
      }
    }
  }
  if (worst > kEmotionTolerance) out.fail("max cell error " + std::to_string(worst));
  if (out.pass) {
    std::ostringstream s;
    s << "male and female matrices, max cell error " << worst;
    out.detail = s.str();
  }
  return out;
}

Outcome dialog_safety() {
  Outcome out;
  const Pipeline pipeline = testing::demo_pipeline();
  const std::string& crisis = pipeline.resources().templates.crisis();
  std::size_t cases = 0;
  for (DialogState state : kAllStates) {
    for (const auto& phrase : pipeline.resources().rules.phrases(IntentKind::kCrisis)) {
      DialogSession session;
      session.id = "acceptance";
      session.state = state;
      const auto [next, result] = pipeline.run("lately I think about " + phrase, session);
      if (next.state != DialogState::kCrisis || result.response != crisis || !result.crisis) {
        out.fail(std::string(state_name(state)) + " x '" + phrase + "'");
      }
      ++cases;
    }
  }

  const std::vector<std::string> script = {"Hello there",
                                           "I feel sad and tired lately",
                                           "I'm scared of spiders",
                                           "Spiders still make me nervous",
                                           "I looked at spiders in photos today",
                                           "Goodbye"};
  const std::vector<DialogState> expected = {
      DialogState::kAssessment,   DialogState::kIntervention, DialogState::kIntervention,
      DialogState::kIntervention, DialogState::kIntervention, DialogState::kClosing};
  DialogSession session;
  session.id = "scripted";
  std::string trajectory;
  for (std::size_t i = 0; i < script.size(); ++i) {
    session = pipeline.run(script[i], session).first;
    trajectory += std::string(i ? "," : "") + std::string(state_name(session.state));
    if (session.state != expected[i]) out.fail("scripted turn " + std::to_string(i + 1));
  }
  if (out.pass) {
    out.detail = std::to_string(cases) + " state x phrase cases in CRISIS; script " + trajectory;
  }
  return out;
}

Outcome service_contract() {
  Outcome out;
  Service service(std::make_shared<const Pipeline>(testing::demo_pipeline()));
  httplib::Server server;
  service.mount(server);
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  // Warm the connection path once so the measurement covers one chat turn.
  client.Get("/healthz");
  const auto start = Clock::now();
  const auto res = client.Post("/v1/chat", R"({"text":"Hello there"})", "application/json");
  const double ms = seconds_since(start) * 1000.0;
  if (!res || res->status != 200) {
    out.fail("fresh-session chat failed");
  } else if (ms >= kChatBudgetMs) {
    out.fail("fresh-session chat took " + std::to_string(ms) + " ms");
  }

  std::vector<std::string> ids(2);
  for (std::size_t s = 0; s < 2; ++s) {
    const auto r = client.Post("/v1/chat", R"({"text":"hello"})", "application/json");
    if (r && r->status == 200) ids[s] = nlohmann::json::parse(r->body)["session_id"];
  }
  const std::vector<std::string> tags = {"alpha", "bravo"};
  std::vector<std::thread> workers;
  std::atomic<int> failures{0};
  for (std::size_t s = 0; s < 2; ++s) {
    workers.emplace_back([&, s] {
      httplib::Client c("127.0.0.1", port);
      for (int i = 0; i < kInterleavedTurns; ++i) {
        const nlohmann::json body = {{"session_id", ids[s]},
                                     {"text", tags[s] + " turn " + std::to_string(i)}};
        const auto r = c.Post("/v1/chat", body.dump(), "application/json");
        if (!r || r->status != 200) ++failures;
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failures > 0) out.fail(std::to_string(failures.load()) + " interleaved turns failed");

  for (std::size_t s = 0; s < 2; ++s) {
    const auto r = client.Get("/v1/sessions/" + ids[s]);
    if (!r || r->status != 200) {
      out.fail("session fetch failed");
      continue;
    }
    const auto history = nlohmann::json::parse(r->body)["history"];
    if (history.size() != 2 + 2 * kInterleavedTurns) out.fail("history length");
    int turn = 0;
    for (std::size_t i = 2; i < history.size(); i += 2) {
      const std::string text = history[i]["text"];
      if (text != tags[s] + " turn " + std::to_string(turn++)) {
        out.fail("transcript " + tags[s] + " contains '" + text + "'");
      }
    }
  }
  server.stop();
  thread.join();
  if (out.pass) {
    std::ostringstream s;
    s.precision(3);
    s << "fresh chat " << ms << " ms; 2 sessions x " << kInterleavedTurns
      << " interleaved turns, transcripts isolated";
    out.detail = s.str();
  }
  return out;
}

}  // namespace
}  // namespace posibot

int main() {
  using posibot::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"augmentation_determinism", posibot::augmentation_determinism},
      {"transform_invariants", posibot::transform_invariants},
      {"rate_calibration", posibot::rate_calibration},
      {"back_translation_identity", posibot::back_translation_identity},
      {"softmax_gradient", posibot::softmax_and_gradient},
      {"classifier_experiment", posibot::classifier_experiment},
      {"f1_oracle", posibot::f1_oracle},
      {"length_histograms", posibot::length_histogram_oracle},
      {"emotion_matrices", posibot::emotion_matrix_oracle},
      {"dialog_safety", posibot::dialog_safety},
      {"service_contract", posibot::service_contract},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << name << ": " << outcome.detail << "\n";
    failed += outcome.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
