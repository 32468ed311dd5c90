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

#ifndef POSIBOT_SENTIMENT_HPP_
#define POSIBOT_SENTIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "posibot/rng.hpp"
#include "posibot/text_core.hpp"

namespace posibot {

class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> terms);

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<std::string>& terms() const { return terms_; }

  // -1 when the term is out of vocabulary.
  std::int64_t index_of(const std::string& term) const;

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

// Sparse bag-of-words counts, indices strictly increasing. The bias feature
// is implicit.
struct FeatureVector {
  std::vector<std::uint32_t> index;
  std::vector<double> count;
  std::size_t dimension = 0;

  double at(std::uint32_t i) const;
};

FeatureVector featurize(const TokenizedText& text, const Vocabulary& vocab);

struct SentimentPrediction {
  std::vector<double> probabilities;
  std::string label;
  std::size_t label_index = 0;
  // Filled from the valence lexicon by callers that have one.
  double negative_intensity = 0.0;
  bool subtle = false;
};

// Multinomial logistic regression: p = softmax(W f + b).
class SentimentModel {
 public:
  SentimentModel() = default;
  // weights is row-major |labels| x |vocabulary|.
  SentimentModel(std::vector<std::string> labels, Vocabulary vocabulary,
                 std::vector<double> weights, std::vector<double> bias);

  const std::vector<std::string>& labels() const { return labels_; }
  const Vocabulary& vocabulary() const { return vocabulary_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& bias() const { return bias_; }
  std::vector<double>& mutable_weights() { return weights_; }
  std::vector<double>& mutable_bias() { return bias_; }

  std::size_t label_count() const { return labels_.size(); }
  std::size_t feature_count() const { return vocabulary_.size(); }

  std::vector<double> logits(const FeatureVector& features) const;

  nlohmann::json to_json() const;
  static SentimentModel from_json(const nlohmann::json& doc);
  static SentimentModel load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> labels_;
  Vocabulary vocabulary_;
  std::vector<double> weights_;
  std::vector<double> bias_;
};

// Throws DimensionMismatch when the feature dimension differs from the
// model vocabulary. Ties in argmax go to the lowest label index.
SentimentPrediction predict(const SentimentModel& model,
                            const FeatureVector& features);

struct LabeledText {
  TokenizedText text;
  std::string label;
};

struct TrainingOptions {
  std::size_t epochs = 20;
  double learning_rate = 0.5;
  double l2 = 1e-4;
  std::size_t min_term_freq = 1;
  std::size_t batch_size = 8;
  RandomSeed seed{0};
};

// Vocabulary of terms with corpus frequency >= min_term_freq, sorted.
Vocabulary build_vocabulary(const std::vector<LabeledText>& corpus,
                            std::size_t min_term_freq);

struct Example {
  FeatureVector features;
  std::size_t label = 0;
};

struct LossGradient {
  double loss = 0.0;
  std::vector<double> weights;  // same layout as the model
  std::vector<double> bias;
};

// Mean cross-entropy over `batch` plus l2 * ||W||^2 / 2, and its gradient.
LossGradient loss_and_gradient(const SentimentModel& model,
                               const std::vector<Example>& batch, double l2);

// Mini-batch SGD from zero weights, shuffling each epoch. Deterministic for a
// fixed seed. Throws EmptyCorpus / UnknownLabel / InvalidArgument.
SentimentModel train(const std::vector<LabeledText>& corpus,
                     const std::vector<std::string>& labels,
                     const TrainingOptions& options);

class ValenceLexicon {
 public:
  ValenceLexicon() = default;
  ValenceLexicon(std::map<std::string, double> valences,
                 std::set<std::string> negators, double threshold);

  static ValenceLexicon from_json(const nlohmann::json& doc);
  static ValenceLexicon load(const std::filesystem::path& path);

  // nullptr for words without a valence; lookup is on lowercased words.
  const double* valence(const std::string& lowercased) const;
  bool is_negator(const std::string& lowercased) const;
  double threshold() const { return threshold_; }

 private:
  std::map<std::string, double> valences_;
  std::set<std::string> negators_;
  double threshold_ = 0.3;
};

struct NegativeScore {
  double score = 0.0;  // in [0, 1]
  bool subtle = false;  // 0 < score < threshold
};

inline constexpr std::size_t kNegationWindow = 2;

// Mean |valence| over words whose (negation-adjusted) valence is negative.
// A word within kNegationWindow words after a negator has its sign flipped.
NegativeScore subtle_negative_score(const TokenizedText& text,
                                    const ValenceLexicon& lexicon);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::uint64_t support = 0;
};

struct EvaluationReport {
  std::vector<std::string> labels;
  // confusion[truth][predicted]
  std::vector<std::vector<std::uint64_t>> confusion;
  std::vector<ClassMetrics> per_class;
  double macro_f1 = 0.0;
  double accuracy = 0.0;

  nlohmann::json to_json() const;
};

EvaluationReport report_from_confusion(
    std::vector<std::string> labels,
    std::vector<std::vector<std::uint64_t>> confusion);

EvaluationReport evaluate_predictions(const std::vector<std::string>& labels,
                                      const std::vector<std::size_t>& truth,
                                      const std::vector<std::size_t>& predicted);

EvaluationReport evaluate(const SentimentModel& model,
                          const std::vector<LabeledText>& test);

nlohmann::json prediction_to_json(const SentimentPrediction& prediction,
                                  const std::vector<std::string>& labels);

}  // namespace posibot

#endif  // POSIBOT_SENTIMENT_HPP_
