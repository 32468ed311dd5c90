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

#ifndef POSIBOT_CORPUS_HPP_
#define POSIBOT_CORPUS_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace posibot {

enum class Gender { kMale, kFemale, kOther };

std::string_view gender_name(Gender gender);
// Accepts m/male/man, f/female/woman (any case); other non-empty values map
// to kOther, empty to nullopt.
std::optional<Gender> parse_gender(std::string_view raw);

struct CorpusRecord {
  std::string id;
  std::string text;
  std::string label;
  std::optional<int> age;  // within [10, 120] when present
  std::optional<Gender> gender;
  std::map<std::string, std::string> extras;
};

struct SchemaMapping {
  // Canonical field ("id", "text", "label", "age", "gender") -> CSV column.
  std::map<std::string, std::string> column_for;
  // Raw label -> canonical label. Empty means labels pass through.
  std::map<std::string, std::string> label_map;

  static SchemaMapping from_json(const nlohmann::json& doc);
  static SchemaMapping load(const std::filesystem::path& path);
};

struct LoadResult {
  std::vector<CorpusRecord> records;
  std::size_t data_rows = 0;
  std::size_t skipped_empty_text = 0;
  std::size_t skipped_unmapped_label = 0;
  // Ages outside [10, 120] or unparsable; the record is kept without an age.
  std::size_t dropped_ages = 0;

  std::size_t skipped() const { return skipped_empty_text + skipped_unmapped_label; }
};

// RFC 4180 parsing: quoted fields, doubled quotes, embedded newlines, CRLF.
// Throws MalformedCsv on unbalanced quotes or ragged rows.
std::vector<std::vector<std::string>> parse_csv(std::string_view content);

// Throws MissingColumn when a mapped column is absent from the header.
LoadResult load_csv(const std::filesystem::path& path, const SchemaMapping& mapping);
LoadResult load_csv_text(std::string_view content, const SchemaMapping& mapping);

struct LengthHistogram {
  std::vector<double> bin_edges;
  std::vector<std::string> labels;  // "0–36", "36–73", ...
  std::vector<std::size_t> counts;
  std::vector<std::optional<double>> mean_length;  // nullopt for empty bins
  std::size_t total_sentences = 0;

  nlohmann::json to_json() const;
};

inline constexpr std::size_t kDefaultLengthBins = 10;
inline constexpr std::size_t kDefaultMaxLength = 365;

// Sentence lengths in code points over equal-width bins on [0, max_len];
// longer sentences land in the last bin.
LengthHistogram length_histogram(const std::vector<std::string>& documents,
                                 std::size_t bins = kDefaultLengthBins,
                                 std::size_t max_len = kDefaultMaxLength);

std::map<std::string, LengthHistogram> length_histograms(
    const std::map<std::string, std::vector<std::string>>& corpora,
    std::size_t bins = kDefaultLengthBins, std::size_t max_len = kDefaultMaxLength);

nlohmann::json histogram_report(const std::map<std::string, LengthHistogram>& histograms);

inline const std::array<std::string, 5> kAgeGroups = {"18–25", "26–35", "36–45",
                                                      "46–55", "56+"};
inline const std::array<std::string, 5> kEmotionCategories = {
    "Mood", "Behavior", "Phobias", "Anxiety", "Stress"};

// Row index for an age, nullopt below 18.
std::optional<std::size_t> age_group(int age);

struct EmotionMatrix {
  Gender gender = Gender::kMale;
  std::array<std::array<std::optional<double>, 5>, 5> cells{};
  std::array<std::array<std::size_t, 5>, 5> counts{};
  std::size_t used_records = 0;
  std::size_t excluded_records = 0;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

// Records carry extras "emotion_category" (one of kEmotionCategories) and
// "level" (0..100). Throws NoUsableRecords when nothing of `gender` remains.
EmotionMatrix emotion_matrix(const std::vector<CorpusRecord>& records, Gender gender);

}  // namespace posibot

#endif  // POSIBOT_CORPUS_HPP_
