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

#ifndef POSIBOT_SUMMARIZER_HPP_
#define POSIBOT_SUMMARIZER_HPP_

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "posibot/text_core.hpp"

namespace posibot {

using StopwordSet = std::set<std::string, std::less<>>;

// Pinned English stopword list.
const StopwordSet& default_stopwords();

// One word per line; blank lines and lines starting with '#' are skipped.
StopwordSet load_stopwords(const std::filesystem::path& path);

struct SummaryConfig {
  std::size_t max_sentences = 2;
  StopwordSet stopwords = default_stopwords();
};

struct SummarySentence {
  std::size_t index = 0;
  std::string text;
  double score = 0.0;
};

struct Keyword {
  std::string term;
  std::size_t frequency = 0;

  friend bool operator==(const Keyword&, const Keyword&) = default;
};

struct Summary {
  std::vector<SummarySentence> sentences;  // original order
  std::vector<Keyword> keywords;

  nlohmann::json to_json() const;
};

// Number of summary keywords reported alongside the sentences.
inline constexpr std::size_t kSummaryKeywords = 5;

// Scores every sentence; exposed for callers that need the full ranking.
// score = sum of member term weights / word count, weight = count / max count.
std::vector<double> sentence_scores(const TokenizedText& text,
                                    const StopwordSet& stopwords);

// Top max_sentences by score (ties to the earlier sentence), emitted in
// original order. Throws EmptyDocument for zero sentences.
Summary summarize(const TokenizedText& text, const SummaryConfig& config);

// Top-m non-stopword terms by count, ties broken lexicographically.
std::vector<Keyword> keywords(const TokenizedText& text,
                              const StopwordSet& stopwords, std::size_t m);

}  // namespace posibot

#endif  // POSIBOT_SUMMARIZER_HPP_
