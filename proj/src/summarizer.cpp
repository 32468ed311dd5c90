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

#include "posibot/summarizer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "posibot/errors.hpp"
#include "posibot/json_util.hpp"

namespace posibot {

const StopwordSet& default_stopwords() {
  static const StopwordSet words = {
      "a",       "about",   "above",  "after",  "again",  "against", "all",
      "am",      "an",      "and",    "any",    "are",    "as",      "at",
      "be",      "because", "been",   "before", "being",  "below",   "between",
      "both",    "but",     "by",     "can",    "could",  "did",     "do",
      "does",    "doing",   "down",   "during", "each",   "few",     "for",
      "from",    "further", "had",    "has",    "have",   "having",  "he",
      "her",     "here",    "hers",   "herself", "him",   "himself", "his",
      "how",     "i",       "i'm",    "if",     "in",     "into",    "is",
      "it",      "it's",    "its",    "itself", "just",   "me",      "more",
      "most",    "my",      "myself", "no",     "nor",    "not",     "now",
      "of",      "off",     "on",     "once",   "only",   "or",      "other",
      "our",     "ours",    "ourselves", "out", "over",   "own",     "same",
      "she",     "should",  "so",     "some",   "such",   "than",    "that",
      "the",     "their",   "theirs", "them",   "themselves", "then", "there",
      "these",   "they",    "this",   "those",  "through", "to",     "too",
      "under",   "until",   "up",     "very",   "was",    "we",      "were",
      "what",    "when",    "where",  "which",  "while",  "who",     "whom",
      "why",     "will",    "with",   "would",  "you",    "your",    "yours",
      "yourself", "yourselves",
  };
  return words;
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  StopwordSet out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string word = utf8::to_lower(trim(line));
    if (word.empty() || word.front() == '#') continue;
    out.insert(word);
  }
  return out;
}

namespace {

std::map<std::string, std::size_t> term_counts(const TokenizedText& text,
                                               const StopwordSet& stopwords) {
  std::map<std::string, std::size_t> counts;
  for (const std::string& word : lowercase_words(text)) {
    if (!stopwords.contains(word)) ++counts[word];
  }
  return counts;
}

}  // namespace

std::vector<double> sentence_scores(const TokenizedText& text,
                                    const StopwordSet& stopwords) {
  const auto counts = term_counts(text, stopwords);
  std::size_t max_count = 0;
  for (const auto& [term, count] : counts) max_count = std::max(max_count, count);

  std::vector<double> scores;
  scores.reserve(text.sentence_bounds.size());
  for (const auto& [begin, end] : text.sentence_bounds) {
    double weight_sum = 0.0;
    std::size_t words = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const Token& token = text.tokens[i];
      if (!token.is_word()) continue;
      ++words;
      const auto it = counts.find(utf8::to_lower(token.surface));
      if (it != counts.end()) {
        weight_sum += static_cast<double>(it->second) / static_cast<double>(max_count);
      }
    }
    scores.push_back(words == 0 ? 0.0 : weight_sum / static_cast<double>(words));
  }
  return scores;
}

Summary summarize(const TokenizedText& text, const SummaryConfig& config) {
  if (text.sentence_bounds.empty()) {
    throw Error(ErrorCode::kEmptyDocument, "cannot summarize an empty document");
  }
  if (config.max_sentences == 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_sentences must be >= 1",
                "max_sentences");
  }
  const auto scores = sentence_scores(text, config.stopwords);

  std::vector<std::size_t> ranked(scores.size());
  std::iota(ranked.begin(), ranked.end(), 0);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  ranked.resize(std::min(config.max_sentences, ranked.size()));
  std::sort(ranked.begin(), ranked.end());

  Summary out;
  for (std::size_t i : ranked) {
    out.sentences.push_back(SummarySentence{i, sentence_text(text, i), scores[i]});
  }
  out.keywords = keywords(text, config.stopwords, kSummaryKeywords);
  return out;
}

std::vector<Keyword> keywords(const TokenizedText& text,
                              const StopwordSet& stopwords, std::size_t m) {
  std::vector<Keyword> out;
  for (const auto& [term, count] : term_counts(text, stopwords)) {
    out.push_back(Keyword{term, count});
  }
  // Map iteration is already term-ascending, so a stable sort on count
  // leaves ties in lexicographic order.
  std::stable_sort(out.begin(), out.end(), [](const Keyword& a, const Keyword& b) {
    return a.frequency > b.frequency;
  });
  if (out.size() > m) out.resize(m);
  return out;
}

nlohmann::json Summary::to_json() const {
  nlohmann::json sentence_list = nlohmann::json::array();
  for (const auto& s : sentences) {
    sentence_list.push_back({{"index", s.index}, {"text", s.text}, {"score", s.score}});
  }
  nlohmann::json keyword_list = nlohmann::json::array();
  for (const auto& k : keywords) {
    keyword_list.push_back({{"term", k.term}, {"frequency", k.frequency}});
  }
  return {{"sentences", sentence_list}, {"keywords", keyword_list}};
}

}  // namespace posibot
