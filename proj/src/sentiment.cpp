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

#include "posibot/sentiment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "posibot/errors.hpp"
#include "posibot/json_util.hpp"
#include "posibot/kernels.hpp"

namespace posibot {

Vocabulary::Vocabulary(std::vector<std::string> terms) : terms_(std::move(terms)) {
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!index_.emplace(terms_[i], static_cast<std::uint32_t>(i)).second) {
      throw Error(ErrorCode::kInvalidConfig,
                  "duplicate vocabulary term '" + terms_[i] + "'");
    }
  }
}

std::int64_t Vocabulary::index_of(const std::string& term) const {
  const auto it = index_.find(term);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

double FeatureVector::at(std::uint32_t i) const {
  const auto it = std::lower_bound(index.begin(), index.end(), i);
  if (it == index.end() || *it != i) return 0.0;
  return count[static_cast<std::size_t>(it - index.begin())];
}

FeatureVector featurize(const TokenizedText& text, const Vocabulary& vocab) {
  std::map<std::uint32_t, double> counts;
  for (const std::string& word : lowercase_words(text)) {
    const std::int64_t i = vocab.index_of(word);
    if (i >= 0) counts[static_cast<std::uint32_t>(i)] += 1.0;
  }
  FeatureVector out;
  out.dimension = vocab.size();
  out.index.reserve(counts.size());
  out.count.reserve(counts.size());
  for (const auto& [i, c] : counts) {
    out.index.push_back(i);
    out.count.push_back(c);
  }
  return out;
}

SentimentModel::SentimentModel(std::vector<std::string> labels,
                               Vocabulary vocabulary,
                               std::vector<double> weights,
                               std::vector<double> bias)
    : labels_(std::move(labels)),
      vocabulary_(std::move(vocabulary)),
      weights_(std::move(weights)),
      bias_(std::move(bias)) {
  if (labels_.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "model needs at least one label");
  }
  if (weights_.size() != labels_.size() * vocabulary_.size() ||
      bias_.size() != labels_.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "weights must be |labels| x |vocabulary| and bias |labels|");
  }
  const auto finite = [](double x) { return std::isfinite(x); };
  if (!std::all_of(weights_.begin(), weights_.end(), finite) ||
      !std::all_of(bias_.begin(), bias_.end(), finite)) {
    throw Error(ErrorCode::kInvalidConfig, "model parameters must be finite");
  }
}

std::vector<double> SentimentModel::logits(const FeatureVector& features) const {
  if (features.dimension != feature_count()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "feature dimension " + std::to_string(features.dimension) +
                    " != vocabulary size " + std::to_string(feature_count()));
  }
  const std::size_t width = feature_count();
  std::vector<double> z(bias_);
  for (std::size_t r = 0; r < labels_.size(); ++r) {
    z[r] += kernels::sparse_dot(
        std::span<const double>(weights_.data() + r * width, width),
        features.index, features.count);
  }
  return z;
}

nlohmann::json SentimentModel::to_json() const {
  return {{"version", 1},          {"labels", labels_},
          {"vocabulary", vocabulary_.terms()},
          {"weights", weights_},   {"bias", bias_}};
}

SentimentModel SentimentModel::from_json(const nlohmann::json& doc) {
  require_known_fields(doc, {"version", "labels", "vocabulary", "weights", "bias"},
                       "model");
  try {
    if (doc.at("version").get<int>() != 1) {
      throw Error(ErrorCode::kInvalidConfig, "unsupported model version");
    }
    return SentimentModel(doc.at("labels").get<std::vector<std::string>>(),
                          Vocabulary(doc.at("vocabulary").get<std::vector<std::string>>()),
                          doc.at("weights").get<std::vector<double>>(),
                          doc.at("bias").get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidConfig, std::string("model: ") + e.what());
  }
}

SentimentModel SentimentModel::load(const std::filesystem::path& path) {
  return from_json(read_json_file(path));
}

void SentimentModel::save(const std::filesystem::path& path) const {
  write_file_atomic(path, to_json().dump() + "\n");
}

SentimentPrediction predict(const SentimentModel& model,
                            const FeatureVector& features) {
  SentimentPrediction out;
  out.probabilities = model.logits(features);
  kernels::softmax(out.probabilities);
  out.label_index = static_cast<std::size_t>(
      std::max_element(out.probabilities.begin(), out.probabilities.end()) -
      out.probabilities.begin());
  out.label = model.labels()[out.label_index];
  return out;
}

Vocabulary build_vocabulary(const std::vector<LabeledText>& corpus,
                            std::size_t min_term_freq) {
  std::map<std::string, std::size_t> freq;
  for (const auto& doc : corpus) {
    for (const std::string& word : lowercase_words(doc.text)) ++freq[word];
  }
  std::vector<std::string> terms;
  for (const auto& [term, count] : freq) {
    if (count >= min_term_freq) terms.push_back(term);
  }
  return Vocabulary(std::move(terms));
}

namespace {

// Returns -log softmax(z)[label] and overwrites z with softmax(z).
double cross_entropy(std::vector<double>& z, std::size_t label) {
  const double shift = *std::max_element(z.begin(), z.end());
  double total = 0.0;
  for (double v : z) total += std::exp(v - shift);
  const double loss = shift + std::log(total) - z[label];
  kernels::softmax(z);
  return loss;
}

}  // namespace

LossGradient loss_and_gradient(const SentimentModel& model,
                               const std::vector<Example>& batch, double l2) {
  const std::size_t width = model.feature_count();
  const std::size_t k = model.label_count();
  LossGradient out;
  out.weights.assign(model.weights().size(), 0.0);
  out.bias.assign(k, 0.0);
  if (batch.empty()) return out;

  const double inv = 1.0 / static_cast<double>(batch.size());
  for (const Example& ex : batch) {
    std::vector<double> z = model.logits(ex.features);
    out.loss += cross_entropy(z, ex.label);
    for (std::size_t r = 0; r < k; ++r) {
      const double coef = (z[r] - (r == ex.label ? 1.0 : 0.0)) * inv;
      out.bias[r] += coef;
      double* row = out.weights.data() + r * width;
      for (std::size_t n = 0; n < ex.features.index.size(); ++n) {
        row[ex.features.index[n]] += coef * ex.features.count[n];
      }
    }
  }
  out.loss *= inv;
  out.loss += 0.5 * l2 * kernels::dot(model.weights(), model.weights());
  kernels::axpy(l2, model.weights(), out.weights);
  return out;
}

SentimentModel train(const std::vector<LabeledText>& corpus,
                     const std::vector<std::string>& labels,
                     const TrainingOptions& options) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "training corpus is empty");
  if (labels.empty()) throw Error(ErrorCode::kInvalidArgument, "label set is empty");
  if (!(options.learning_rate > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "learning_rate must be > 0");
  }
  if (options.batch_size == 0) {
    throw Error(ErrorCode::kInvalidArgument, "batch_size must be >= 1");
  }

  std::map<std::string, std::size_t> label_index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!label_index.emplace(labels[i], i).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate label '" + labels[i] + "'");
    }
  }

  Vocabulary vocab = build_vocabulary(corpus, options.min_term_freq);
  std::vector<Example> examples;
  examples.reserve(corpus.size());
  for (const auto& doc : corpus) {
    const auto it = label_index.find(doc.label);
    if (it == label_index.end()) {
      throw Error(ErrorCode::kUnknownLabel, "label '" + doc.label + "' not in label set");
    }
    examples.push_back(Example{featurize(doc.text, vocab), it->second});
  }

  const std::size_t width = vocab.size();
  const std::size_t k = labels.size();
  SentimentModel model(labels, std::move(vocab), std::vector<double>(k * width, 0.0),
                       std::vector<double>(k, 0.0));
  auto& weights = model.mutable_weights();
  auto& bias = model.mutable_bias();
  const double lr = options.learning_rate;

  std::vector<std::size_t> order(examples.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<double>> residuals;

  for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
    Rng rng(derive_seed(options.seed, epoch));
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.below(i)]);
    }
    for (std::size_t start = 0; start < order.size(); start += options.batch_size) {
      const std::size_t end = std::min(order.size(), start + options.batch_size);
      const double inv = 1.0 / static_cast<double>(end - start);

      // Residuals p - y are computed against the pre-step parameters.
      residuals.clear();
      for (std::size_t b = start; b < end; ++b) {
        const Example& ex = examples[order[b]];
        std::vector<double> p = model.logits(ex.features);
        kernels::softmax(p);
        p[ex.label] -= 1.0;
        residuals.push_back(std::move(p));
      }

      if (options.l2 > 0.0) kernels::scale(1.0 - lr * options.l2, weights);
      for (std::size_t b = start; b < end; ++b) {
        const Example& ex = examples[order[b]];
        const auto& residual = residuals[b - start];
        for (std::size_t r = 0; r < k; ++r) {
          const double step = lr * residual[r] * inv;
          bias[r] -= step;
          double* row = weights.data() + r * width;
          for (std::size_t n = 0; n < ex.features.index.size(); ++n) {
            row[ex.features.index[n]] -= step * ex.features.count[n];
          }
        }
      }
    }
  }
  return model;
}

ValenceLexicon::ValenceLexicon(std::map<std::string, double> valences,
                               std::set<std::string> negators, double threshold)
    : threshold_(threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "valence threshold must be in (0, 1)",
                "threshold");
  }
  for (const auto& [word, v] : valences) {
    if (!(v >= -1.0 && v <= 1.0)) {
      throw Error(ErrorCode::kInvalidConfig,
                  "valence of '" + word + "' outside [-1, 1]", "valences");
    }
    valences_.emplace(utf8::to_lower(word), v);
  }
  for (const auto& word : negators) negators_.insert(utf8::to_lower(word));
}

ValenceLexicon ValenceLexicon::from_json(const nlohmann::json& doc) {
  require_known_fields(doc, {"valences", "negators", "threshold"}, "valence lexicon");
  try {
    return ValenceLexicon(
        doc.at("valences").get<std::map<std::string, double>>(),
        doc.value("negators", std::set<std::string>{}),
        doc.value("threshold", 0.3));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidConfig, std::string("valence lexicon: ") + e.what());
  }
}

ValenceLexicon ValenceLexicon::load(const std::filesystem::path& path) {
  return from_json(read_json_file(path));
}

const double* ValenceLexicon::valence(const std::string& lowercased) const {
  const auto it = valences_.find(lowercased);
  return it == valences_.end() ? nullptr : &it->second;
}

bool ValenceLexicon::is_negator(const std::string& lowercased) const {
  return negators_.contains(lowercased);
}

NegativeScore subtle_negative_score(const TokenizedText& text,
                                    const ValenceLexicon& lexicon) {
  const auto words = lowercase_words(text);
  double total = 0.0;
  std::size_t hits = 0;
  std::optional<std::size_t> last_negator;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (lexicon.is_negator(words[i])) {
      last_negator = i;
      continue;
    }
    const double* v = lexicon.valence(words[i]);
    if (v == nullptr) continue;
    double effective = *v;
    if (last_negator && i - *last_negator <= kNegationWindow) effective = -effective;
    if (effective < 0.0) {
      total += -effective;
      ++hits;
    }
  }
  NegativeScore out;
  out.score = hits == 0 ? 0.0 : total / static_cast<double>(hits);
  out.subtle = out.score > 0.0 && out.score < lexicon.threshold();
  return out;
}

EvaluationReport report_from_confusion(
    std::vector<std::string> labels,
    std::vector<std::vector<std::uint64_t>> confusion) {
  const std::size_t k = labels.size();
  if (confusion.size() != k) {
    throw Error(ErrorCode::kDimensionMismatch, "confusion matrix must be |labels| square");
  }
  for (const auto& row : confusion) {
    if (row.size() != k) {
      throw Error(ErrorCode::kDimensionMismatch, "confusion matrix must be |labels| square");
    }
  }
  EvaluationReport out;
  out.labels = std::move(labels);
  out.confusion = std::move(confusion);
  out.per_class.resize(k);

  std::uint64_t total = 0;
  std::uint64_t correct = 0;
  for (std::size_t c = 0; c < k; ++c) {
    const std::uint64_t tp = out.confusion[c][c];
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    for (std::size_t o = 0; o < k; ++o) {
      total += out.confusion[c][o];
      if (o == c) continue;
      fp += out.confusion[o][c];
      fn += out.confusion[c][o];
    }
    correct += tp;
    ClassMetrics& m = out.per_class[c];
    m.support = tp + fn;
    m.precision = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
    m.recall = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
    // 2PR/(P+R) reduces to 2tp/(2tp+fp+fn); one rounding instead of four.
    m.f1 = tp == 0 ? 0.0
                   : static_cast<double>(2 * tp) / static_cast<double>(2 * tp + fp + fn);
    out.macro_f1 += m.f1;
  }
  out.macro_f1 = k == 0 ? 0.0 : out.macro_f1 / static_cast<double>(k);
  out.accuracy = total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
  return out;
}

EvaluationReport evaluate_predictions(const std::vector<std::string>& labels,
                                      const std::vector<std::size_t>& truth,
                                      const std::vector<std::size_t>& predicted) {
  if (truth.size() != predicted.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "truth and prediction lengths differ");
  }
  std::vector<std::vector<std::uint64_t>> confusion(
      labels.size(), std::vector<std::uint64_t>(labels.size(), 0));
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] >= labels.size() || predicted[i] >= labels.size()) {
      throw Error(ErrorCode::kUnknownLabel, "label index out of range");
    }
    ++confusion[truth[i]][predicted[i]];
  }
  return report_from_confusion(labels, std::move(confusion));
}

EvaluationReport evaluate(const SentimentModel& model,
                          const std::vector<LabeledText>& test) {
  if (test.empty()) throw Error(ErrorCode::kEmptyCorpus, "evaluation set is empty");
  std::vector<std::size_t> truth;
  std::vector<std::size_t> predicted;
  const auto& labels = model.labels();
  for (const auto& doc : test) {
    const auto it = std::find(labels.begin(), labels.end(), doc.label);
    if (it == labels.end()) {
      throw Error(ErrorCode::kUnknownLabel, "label '" + doc.label + "' not in model");
    }
    truth.push_back(static_cast<std::size_t>(it - labels.begin()));
    predicted.push_back(predict(model, featurize(doc.text, model.vocabulary())).label_index);
  }
  return evaluate_predictions(labels, truth, predicted);
}

nlohmann::json EvaluationReport::to_json() const {
  nlohmann::json classes = nlohmann::json::object();
  for (std::size_t c = 0; c < labels.size(); ++c) {
    classes[labels[c]] = {{"precision", per_class[c].precision},
                          {"recall", per_class[c].recall},
                          {"f1", per_class[c].f1},
                          {"support", per_class[c].support}};
  }
  return {{"labels", labels},
          {"confusion", confusion},
          {"per_class", classes},
          {"macro_f1", macro_f1},
          {"accuracy", accuracy}};
}

nlohmann::json prediction_to_json(const SentimentPrediction& prediction,
                                  const std::vector<std::string>& labels) {
  nlohmann::json probabilities = nlohmann::json::object();
  for (std::size_t i = 0; i < labels.size() && i < prediction.probabilities.size(); ++i) {
    probabilities[labels[i]] = prediction.probabilities[i];
  }
  return {{"label", prediction.label},
          {"probabilities", probabilities},
          {"negative_intensity", prediction.negative_intensity},
          {"subtle", prediction.subtle}};
}

}  // namespace posibot
