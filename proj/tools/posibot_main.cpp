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

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "posibot/augmentation.hpp"
#include "posibot/corpus.hpp"
#include "posibot/errors.hpp"
#include "posibot/json_util.hpp"
#include "posibot/pipeline.hpp"
#include "posibot/rng.hpp"
#include "posibot/sentiment.hpp"
#include "posibot/service.hpp"
#include "posibot/summarizer.hpp"
#include "posibot/text_core.hpp"

namespace {

using posibot::Error;
using posibot::ErrorCode;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitBackend = 3;

int exit_code_for(ErrorCode code) {
  if (posibot::is_backend_error(code)) return kExitBackend;
  if (code == ErrorCode::kInvalidArgument) return kExitUsage;
  return kExitData;
}

void emit(const std::optional<fs::path>& out, const std::string& content) {
  if (out) {
    posibot::write_file_atomic(*out, content);
  } else {
    std::cout << content << std::flush;
  }
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::vector<std::string> lines;
  std::istringstream in(posibot::read_text_file(path));
  for (std::string line; std::getline(in, line);) {
    line = posibot::trim(line);
    if (!line.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

struct Common {
  std::optional<fs::path> config;
  std::optional<fs::path> model;
  std::optional<fs::path> templates;

  posibot::PipelineConfig pipeline_config() const {
    posibot::PipelineConfig cfg =
        config ? posibot::PipelineConfig::load(*config) : posibot::PipelineConfig::defaults();
    if (model) cfg.model_path = *model;
    if (templates) cfg.templates_path = *templates;
    return cfg;
  }
};

struct AugmentArgs {
  fs::path in;
  std::optional<fs::path> out;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> variants;
};

int run_augment(const Common& common, const AugmentArgs& args) {
  const posibot::Pipeline pipeline = posibot::Pipeline::load(common.pipeline_config());
  posibot::AugmentationConfig cfg = pipeline.config().augmentation;
  if (args.seed) cfg.seed = posibot::RandomSeed{*args.seed};
  if (args.variants) cfg.variants_per_technique = *args.variants;
  cfg.validate();

  std::string out;
  for (const auto& line : read_lines(args.in)) {
    out += pipeline.augment_text(line, cfg).to_json().dump() + "\n";
  }
  emit(args.out, out);
  return kExitOk;
}

struct TrainArgs {
  fs::path corpus;
  fs::path schema;
  fs::path out;
  std::optional<fs::path> report;
  std::size_t epochs = 20;
  double lr = 0.5;
  double l2 = 1e-4;
  std::size_t batch_size = 8;
  std::size_t min_term_freq = 1;
  std::uint64_t seed = 0;
};

int run_train(const TrainArgs& args) {
  const posibot::SchemaMapping mapping = posibot::SchemaMapping::load(args.schema);
  const posibot::LoadResult loaded = posibot::load_csv(args.corpus, mapping);
  if (loaded.records.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "corpus has no usable records");
  }

  // Stratified 80/20 split, deterministic in the seed.
  std::map<std::string, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < loaded.records.size(); ++i) {
    by_label[loaded.records[i].label].push_back(i);
  }
  std::vector<std::string> labels;
  std::vector<posibot::LabeledText> train_set;
  std::vector<posibot::LabeledText> test_set;
  posibot::Rng rng(posibot::derive_seed(posibot::RandomSeed{args.seed}, 0xC0FFEE));
  for (auto& [label, indices] : by_label) {
    labels.push_back(label);
    for (std::size_t i = indices.size(); i > 1; --i) {
      std::swap(indices[i - 1], indices[rng.below(i)]);
    }
    const std::size_t held_out = (indices.size() + 2) / 5;
    for (std::size_t k = 0; k < indices.size(); ++k) {
      const auto& rec = loaded.records[indices[k]];
      posibot::LabeledText item{posibot::tokenize(rec.text), rec.label};
      (k < held_out ? test_set : train_set).push_back(std::move(item));
    }
  }

  posibot::TrainingOptions options;
  options.epochs = args.epochs;
  options.learning_rate = args.lr;
  options.l2 = args.l2;
  options.batch_size = args.batch_size;
  options.min_term_freq = args.min_term_freq;
  options.seed = posibot::RandomSeed{args.seed};
  const posibot::SentimentModel model = posibot::train(train_set, labels, options);
  model.save(args.out);

  nlohmann::json report = {
      {"train_size", train_set.size()},
      {"test_size", test_set.size()},
      {"skipped_rows", loaded.skipped()},
      {"evaluation", test_set.empty() ? nlohmann::json(nullptr)
                                      : posibot::evaluate(model, test_set).to_json()}};
  const fs::path report_path =
      args.report ? *args.report : fs::path(args.out.string() + ".report.json");
  posibot::write_file_atomic(report_path, report.dump(2) + "\n");
  std::cout << report.dump() << "\n";
  return kExitOk;
}

struct ClassifyArgs {
  std::optional<std::string> text;
  std::optional<fs::path> in;
  std::optional<fs::path> out;
};

int run_classify(const Common& common, const ClassifyArgs& args) {
  const posibot::Pipeline pipeline = posibot::Pipeline::load(common.pipeline_config());
  if (!pipeline.model_loaded()) {
    throw Error(ErrorCode::kModelNotLoaded, "no model given (use --model)");
  }
  const std::vector<std::string> inputs =
      args.text ? std::vector<std::string>{*args.text} : read_lines(*args.in);
  const auto& labels = pipeline.resources().model->labels();
  std::string out;
  for (const auto& text : inputs) {
    out += posibot::prediction_to_json(pipeline.classify(text), labels).dump() + "\n";
  }
  emit(args.out, out);
  return kExitOk;
}

struct SummarizeArgs {
  fs::path in;
  std::size_t sentences = 2;
  std::optional<fs::path> out;
};

int run_summarize(const Common& common, const SummarizeArgs& args) {
  posibot::SummaryConfig cfg = common.pipeline_config().summary;
  cfg.max_sentences = args.sentences;
  const posibot::Summary summary =
      posibot::summarize(posibot::tokenize(posibot::read_text_file(args.in)), cfg);
  emit(args.out, summary.to_json().dump() + "\n");
  return kExitOk;
}

struct ChatArgs {
  std::optional<fs::path> log;
};

int run_chat(const Common& common, const ChatArgs& args) {
  const posibot::Pipeline pipeline = posibot::Pipeline::load(common.pipeline_config());
  if (!pipeline.model_loaded()) {
    throw Error(ErrorCode::kModelNotLoaded, "no model given (use --model)");
  }
  posibot::DialogSession session;
  session.id = posibot::make_uuid();
  std::cerr << "posibot chat, session " << session.id << ". Type /quit to leave.\n";
  for (std::string line; std::cout << "> " << std::flush, std::getline(std::cin, line);) {
    line = posibot::trim(line);
    if (line == "/quit") break;
    if (line.empty()) continue;
    try {
      auto [next, result] = pipeline.run(line, session);
      session = std::move(next);
      if (result.crisis) std::cout << "[CRISIS] ";
      std::cout << result.response << "\n";
    } catch (const Error& e) {
      if (posibot::is_backend_error(e.code())) throw;
      std::cerr << "error: " << e.what() << "\n";
    }
  }
  if (args.log) posibot::write_file_atomic(*args.log, session.to_json().dump(2) + "\n");
  return kExitOk;
}

struct LengthArgs {
  fs::path original;
  fs::path augmented;
  std::size_t bins = posibot::kDefaultLengthBins;
  std::size_t max_len = posibot::kDefaultMaxLength;
  std::optional<fs::path> out;
};

int run_lengths(const LengthArgs& args) {
  const auto histograms = posibot::length_histograms(
      {{"original", read_lines(args.original)}, {"augmented", read_lines(args.augmented)}},
      args.bins, args.max_len);
  emit(args.out, posibot::histogram_report(histograms).dump(2) + "\n");
  return kExitOk;
}

struct EmotionArgs {
  fs::path in;
  std::optional<fs::path> schema;
  std::string gender;
  std::optional<fs::path> out;
  std::optional<fs::path> csv;
};

int run_emotions(const EmotionArgs& args) {
  posibot::SchemaMapping mapping;
  if (args.schema) {
    mapping = posibot::SchemaMapping::load(*args.schema);
  } else {
    mapping.column_for = {{"id", "id"}, {"text", "text"}, {"label", "label"},
                          {"age", "age"}, {"gender", "gender"}};
  }
  const auto gender = posibot::parse_gender(args.gender);
  const posibot::LoadResult loaded = posibot::load_csv(args.in, mapping);
  const posibot::EmotionMatrix matrix = posibot::emotion_matrix(loaded.records, *gender);
  emit(args.out, matrix.to_json().dump(2) + "\n");

  std::optional<fs::path> csv = args.csv;
  if (!csv && args.out) csv = fs::path(*args.out).replace_extension(".csv");
  if (csv) posibot::write_file_atomic(*csv, matrix.to_csv());
  return kExitOk;
}

struct ServeArgs {
  posibot::ServerOptions options;
  std::optional<fs::path> snapshot;
  std::optional<fs::path> static_dir;
};

int run_serve(const Common& common, ServeArgs args) {
  auto pipeline =
      std::make_shared<const posibot::Pipeline>(posibot::Pipeline::load(common.pipeline_config()));
  args.options.snapshot = args.snapshot;
  args.options.static_dir = args.static_dir;
  std::cerr << "listening on " << args.options.bind << ":" << args.options.port << "\n";
  if (!posibot::run_server(pipeline, args.options)) {
    std::cerr << "error: cannot listen on " << args.options.bind << ":" << args.options.port
              << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

void add_config_option(CLI::App* cmd, Common& common) {
  cmd->add_option("--config", common.config,
                  "Pipeline config JSON (defaults to $POSIBOT_CONFIG, else bundled data)")
      ->envname("POSIBOT_CONFIG")
      ->check(CLI::ExistingFile);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"posibot: CBT support chatbot toolkit"};
  app.require_subcommand(1);

  Common common;

  AugmentArgs augment_args;
  auto* augment = app.add_subcommand("augment", "Augment one text per line into JSON lines");
  augment->add_option("--in", augment_args.in, "Input file, one text per line")
      ->required()
      ->check(CLI::ExistingFile);
  augment->add_option("--out", augment_args.out, "Output JSON-lines file (stdout if omitted)");
  augment->add_option("--seed", augment_args.seed, "Base random seed");
  augment->add_option("--variants", augment_args.variants, "Variants per technique");
  add_config_option(augment, common);

  TrainArgs train_args;
  auto* train = app.add_subcommand("train", "Train the sentiment model on a CSV corpus");
  train->add_option("--corpus", train_args.corpus, "CSV corpus")
      ->required()
      ->check(CLI::ExistingFile);
  train->add_option("--schema", train_args.schema, "Schema mapping JSON")
      ->required()
      ->check(CLI::ExistingFile);
  train->add_option("--out", train_args.out, "Model JSON to write")->required();
  train->add_option("--report", train_args.report,
                    "Evaluation report path (default: <out>.report.json)");
  train->add_option("--epochs", train_args.epochs, "Training epochs")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  train->add_option("--lr", train_args.lr, "Learning rate")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  train->add_option("--l2", train_args.l2, "L2 penalty")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  train->add_option("--batch-size", train_args.batch_size, "Mini-batch size")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  train->add_option("--min-term-freq", train_args.min_term_freq,
                    "Drop terms rarer than this")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  train->add_option("--seed", train_args.seed, "Seed for split and shuffling")
      ->capture_default_str();

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "Sentiment JSON for each input");
  classify->add_option("--model", common.model, "Model JSON")->check(CLI::ExistingFile);
  auto* text_opt = classify->add_option("--text", classify_args.text, "Text to classify");
  auto* in_opt = classify->add_option("--in", classify_args.in, "File, one text per line")
                     ->check(CLI::ExistingFile);
  text_opt->excludes(in_opt);
  classify->add_option("--out", classify_args.out, "Output file (stdout if omitted)");
  add_config_option(classify, common);
  classify->callback([&] {
    if (!classify_args.text && !classify_args.in) {
      throw CLI::ValidationError("classify", "one of --text or --in is required");
    }
  });

  SummarizeArgs summarize_args;
  auto* summarize = app.add_subcommand("summarize", "Extractive summary of a document");
  summarize->add_option("--in", summarize_args.in, "Document file")
      ->required()
      ->check(CLI::ExistingFile);
  summarize->add_option("--sentences", summarize_args.sentences, "Sentences to keep")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  summarize->add_option("--out", summarize_args.out, "Output file (stdout if omitted)");
  add_config_option(summarize, common);

  ChatArgs chat_args;
  auto* chat = app.add_subcommand("chat", "Interactive terminal chat; /quit exits");
  chat->add_option("--model", common.model, "Model JSON")->check(CLI::ExistingFile);
  chat->add_option("--templates", common.templates, "Response templates JSON")
      ->check(CLI::ExistingFile);
  chat->add_option("--log", chat_args.log, "Write the session transcript here on exit");
  add_config_option(chat, common);

  auto* stats = app.add_subcommand("stats", "Corpus analytics");
  stats->require_subcommand(1);

  LengthArgs length_args;
  auto* lengths = stats->add_subcommand("lengths", "Sentence-length histograms");
  lengths->add_option("--original", length_args.original, "Original corpus, one doc per line")
      ->required()
      ->check(CLI::ExistingFile);
  lengths->add_option("--augmented", length_args.augmented,
                      "Augmented corpus, one doc per line")
      ->required()
      ->check(CLI::ExistingFile);
  lengths->add_option("--bins", length_args.bins, "Number of bins")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  lengths->add_option("--max-len", length_args.max_len, "Upper edge in characters")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  lengths->add_option("--out", length_args.out, "Report JSON (stdout if omitted)");

  EmotionArgs emotion_args;
  auto* emotions = stats->add_subcommand("emotions", "Emotion level matrix by age group");
  emotions->add_option("--in", emotion_args.in, "Demographics CSV")
      ->required()
      ->check(CLI::ExistingFile);
  emotions->add_option("--schema", emotion_args.schema,
                       "Schema mapping JSON (default: columns named id,text,label,age,gender)")
      ->check(CLI::ExistingFile);
  emotions->add_option("--gender", emotion_args.gender, "male or female")
      ->required()
      ->check(CLI::IsMember({"male", "female"}));
  emotions->add_option("--out", emotion_args.out, "Matrix JSON (stdout if omitted)");
  emotions->add_option("--csv", emotion_args.csv,
                       "Matrix CSV (default: --out with a .csv extension)");

  ServeArgs serve_args;
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--bind", serve_args.options.bind, "Bind address")->capture_default_str();
  serve->add_option("--port", serve_args.options.port, "Port")
      ->capture_default_str()
      ->check(CLI::Range(0, 65535));
  serve->add_option("--model", common.model, "Model JSON")->check(CLI::ExistingFile);
  serve->add_option("--templates", common.templates, "Response templates JSON")
      ->check(CLI::ExistingFile);
  serve->add_option("--snapshot", serve_args.snapshot,
                    "Session snapshot: loaded on start, saved on shutdown");
  serve->add_option("--static", serve_args.static_dir, "Directory served at /")
      ->check(CLI::ExistingDirectory);
  add_config_option(serve, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*augment) return run_augment(common, augment_args);
    if (*train) return run_train(train_args);
    if (*classify) return run_classify(common, classify_args);
    if (*summarize) return run_summarize(common, summarize_args);
    if (*chat) return run_chat(common, chat_args);
    if (*lengths) return run_lengths(length_args);
    if (*emotions) return run_emotions(emotion_args);
    if (*serve) return run_serve(common, serve_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what();
    if (!e.field().empty()) std::cerr << " (field " << e.field() << ")";
    std::cerr << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
