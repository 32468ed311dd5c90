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

#include <algorithm>
#include <fstream>
#include <random>

#include "posibot/corpus.hpp"
#include "posibot/errors.hpp"
#include "test_support.hpp"

namespace posibot {
namespace {

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  return nlohmann::json::parse(in);
}

std::map<std::string, std::size_t> label_counts(const LoadResult& r) {
  std::map<std::string, std::size_t> out;
  for (const auto& rec : r.records) ++out[rec.label];
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

const SchemaMapping& demographics_schema() {
  static const SchemaMapping mapping = SchemaMapping::from_json(
      {{"columns",
        {{"id", "id"}, {"text", "text"}, {"label", "label"}, {"age", "age"}, {"gender", "gender"}}}});
  return mapping;
}

TEST(ParseCsv, QuotesNewlinesAndCrlf) {
  const auto rows = parse_csv("a,b\r\n\"x, y\",\"say \"\"hi\"\"\"\r\n\"two\nlines\",\r\n");
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1][0], "x, y");
  EXPECT_EQ(rows[1][1], "say \"hi\"");
  EXPECT_EQ(rows[2][0], "two\nlines");
  EXPECT_EQ(rows[2][1], "");
}

TEST(ParseCsv, MalformedInput) {
  EXPECT_EQ(code_of([] { parse_csv("a,b\n\"open,1\n"); }), ErrorCode::kMalformedCsv);
  EXPECT_EQ(code_of([] { parse_csv("a,b\n1,2,3\n"); }), ErrorCode::kMalformedCsv);
}

TEST(LoadCsv, SuicideWatchSchema) {
  const LoadResult r =
      load_csv(testing::data_path("samples/suicide_watch_sample.csv"),
               SchemaMapping::load(testing::data_path("schemas/suicide_watch.json")));
  EXPECT_EQ(r.data_rows, 8u);
  EXPECT_EQ(r.skipped_empty_text, 1u);
  EXPECT_EQ(r.records.size() + r.skipped(), r.data_rows);
  EXPECT_EQ(label_counts(r),
            (std::map<std::string, std::size_t>{{"non-suicidal", 4}, {"suicidal", 3}}));
  EXPECT_EQ(r.records[0].id, "0");
  EXPECT_EQ(r.records[2].text, "Nobody would notice if I was gone. I've written letters.");
  EXPECT_EQ(r.records[4].text, "My teacher said \"good job\" today");
}

TEST(LoadCsv, MentalHealthSchema) {
  const LoadResult r =
      load_csv(testing::data_path("samples/mental_health_sentiment_sample.csv"),
               SchemaMapping::load(testing::data_path("schemas/mental_health_sentiment.json")));
  EXPECT_EQ(r.data_rows, 9u);
  EXPECT_EQ(r.skipped_empty_text, 1u);
  EXPECT_EQ(r.skipped_unmapped_label, 1u);
  EXPECT_EQ(r.records.size() + r.skipped(), r.data_rows);
  EXPECT_EQ(label_counts(r), (std::map<std::string, std::size_t>{
                                 {"Depression", 2}, {"Normal", 2}, {"Other", 3}}));
}

TEST(LoadCsv, HeaderOnlyAndMissingColumn) {
  const auto mapping = SchemaMapping::from_json({{"columns", {{"text", "t"}, {"label", "l"}}}});
  const LoadResult r = load_csv_text("t,l\n", mapping);
  EXPECT_TRUE(r.records.empty());
  EXPECT_EQ(r.data_rows, 0u);
  EXPECT_EQ(code_of([&] { load_csv_text("x,l\nhi,a\n", mapping); }), ErrorCode::kMissingColumn);
}

TEST(LoadCsv, AgesOutsideRangeAreDropped) {
  const LoadResult r = load_csv_text(
      "id,text,label,age,gender\n1,a,x,9,m\n2,b,x,121,f\n3,c,x,abc,\n4,d,x,45,Woman\n5,e,x,,\n",
      demographics_schema());
  ASSERT_EQ(r.records.size(), 5u);
  EXPECT_EQ(r.dropped_ages, 3u);
  EXPECT_FALSE(r.records[0].age.has_value());
  EXPECT_EQ(r.records[3].age, 45);
  EXPECT_EQ(r.records[3].gender, Gender::kFemale);
  EXPECT_EQ(r.records[0].gender, Gender::kMale);
  EXPECT_FALSE(r.records[2].gender.has_value());
}

TEST(LoadCsv, SkipCountsPartitionRandomRows) {
  const auto mapping =
      SchemaMapping::from_json({{"columns", {{"text", "text"}, {"label", "label"}}},
                                {"label_map", {{"a", "A"}, {"b", "B"}}}});
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 200; ++rep) {
    std::string csv = "text,label\n";
    const std::size_t n = rng() % 30;
    std::size_t expect_records = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool has_text = rng() % 4 != 0;
      const char* label = std::array<const char*, 4>{"a", "b", "c", ""}[rng() % 4];
      csv += std::string(has_text ? "\"some, text\"" : "  ") + "," + label + "\n";
      if (has_text && (label[0] == 'a' || label[0] == 'b')) ++expect_records;
    }
    const LoadResult r = load_csv_text(csv, mapping);
    ASSERT_EQ(r.data_rows, n);
    ASSERT_EQ(r.records.size(), expect_records);
    ASSERT_EQ(r.records.size() + r.skipped(), r.data_rows);
  }
}

void expect_matches_oracle(const LengthHistogram& h, const nlohmann::json& oracle) {
  EXPECT_EQ(h.bin_edges, oracle["edges"].get<std::vector<double>>());
  EXPECT_EQ(h.labels, oracle["labels"].get<std::vector<std::string>>());
  EXPECT_EQ(h.counts, oracle["counts"].get<std::vector<std::size_t>>());
  EXPECT_EQ(h.total_sentences, oracle["total_sentences"].get<std::size_t>());
  for (std::size_t i = 0; i < h.mean_length.size(); ++i) {
    if (oracle["mean_length"][i].is_null()) {
      EXPECT_FALSE(h.mean_length[i].has_value()) << i;
    } else {
      ASSERT_TRUE(h.mean_length[i].has_value()) << i;
      EXPECT_NEAR(*h.mean_length[i], oracle["mean_length"][i].get<double>(), 1e-9) << i;
    }
  }
}

TEST(LengthHistogram, MatchesHandBinnedOracle) {
  const auto oracle = read_json(testing::fixture_path("lengths_oracle.json"));
  const auto original = length_histogram(testing::read_lines(testing::data_path("toy_original.txt")));
  const auto augmented =
      length_histogram(testing::read_lines(testing::data_path("toy_augmented.txt")));
  expect_matches_oracle(original, oracle["original"]);
  expect_matches_oracle(augmented, oracle["augmented"]);
  EXPECT_EQ(original.labels[0], "0–36");
  EXPECT_EQ(original.labels[1], "36–73");
}

TEST(LengthHistogram, CountsPartitionSentences) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    std::vector<std::string> docs;
    std::size_t sentences = 0;
    for (int d = 0; d < 3; ++d) {
      docs.push_back(testing::random_text(seed * 3 + d, 80));
      sentences += tokenize(docs.back()).sentence_count();
    }
    const std::size_t bins = 1 + seed % 12;
    const auto h = length_histogram(docs, bins, 50 + seed);
    std::size_t total = 0;
    for (auto c : h.counts) total += c;
    ASSERT_EQ(total, sentences);
    ASSERT_EQ(h.total_sentences, sentences);
    ASSERT_EQ(h.counts.size(), bins);
  }
  EXPECT_THROW(length_histogram({"x"}, 0, 10), Error);
}

TEST(LengthHistogram, ReportKeysByCorpus) {
  const auto report = histogram_report(length_histograms({{"original", {"Hi there."}}}));
  EXPECT_EQ(report["histograms"]["original"]["counts"][0], 1);
}

TEST(AgeGroup, Boundaries) {
  EXPECT_FALSE(age_group(17).has_value());
  EXPECT_EQ(age_group(18), 0u);
  EXPECT_EQ(age_group(25), 0u);
  EXPECT_EQ(age_group(26), 1u);
  EXPECT_EQ(age_group(45), 2u);
  EXPECT_EQ(age_group(55), 3u);
  EXPECT_EQ(age_group(56), 4u);
}

CorpusRecord survey(int age, Gender g, std::string category, std::string level) {
  CorpusRecord r;
  r.text = "x";
  r.label = "survey";
  r.age = age;
  r.gender = g;
  r.extras = {{"emotion_category", std::move(category)}, {"level", std::move(level)}};
  return r;
}

TEST(EmotionMatrix, SingleRecordAndMean) {
  const auto one = emotion_matrix({survey(30, Gender::kMale, "Stress", "40")}, Gender::kMale);
  EXPECT_EQ(one.cells[1][4], 40.0);
  EXPECT_EQ(one.used_records, 1u);
  const auto two = emotion_matrix({survey(30, Gender::kFemale, "Mood", "40"),
                                   survey(35, Gender::kFemale, "Mood", "60"),
                                   survey(30, Gender::kMale, "Mood", "99")},
                                  Gender::kFemale);
  EXPECT_EQ(two.cells[1][0], 50.0);
  EXPECT_FALSE(two.cells[0][0].has_value());
  EXPECT_EQ(code_of([] {
              emotion_matrix({survey(16, Gender::kMale, "Mood", "1")}, Gender::kMale);
            }),
            ErrorCode::kNoUsableRecords);
}

TEST(EmotionMatrix, DemographicsMatchesGroupByOracle) {
  const auto oracle = read_json(testing::fixture_path("emotion_oracle.json"));
  const LoadResult loaded = load_csv(testing::data_path("demographics.csv"), demographics_schema());
  for (const auto& [name, gender] :
       {std::pair{"male", Gender::kMale}, std::pair{"female", Gender::kFemale}}) {
    const EmotionMatrix m = emotion_matrix(loaded.records, gender);
    EXPECT_EQ(m.used_records, oracle[name]["used_records"].get<std::size_t>());
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t c = 0; c < 5; ++c) {
        const auto& want = oracle[name]["cells"][r][c];
        if (want.is_null()) {
          EXPECT_FALSE(m.cells[r][c].has_value()) << name << " " << r << "," << c;
        } else {
          ASSERT_TRUE(m.cells[r][c].has_value()) << name << " " << r << "," << c;
          EXPECT_NEAR(*m.cells[r][c], want.get<double>(), 1e-9);
        }
      }
    }
    const auto doc = m.to_json();
    EXPECT_EQ(doc["rows"].size(), 5u);
    EXPECT_EQ(doc["cols"].size(), 5u);
  }
}

TEST(EmotionMatrix, PermutationInvariant) {
  LoadResult loaded = load_csv(testing::data_path("demographics.csv"), demographics_schema());
  const EmotionMatrix base = emotion_matrix(loaded.records, Gender::kFemale);
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 50; ++rep) {
    std::shuffle(loaded.records.begin(), loaded.records.end(), rng);
    const EmotionMatrix m = emotion_matrix(loaded.records, Gender::kFemale);
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t c = 0; c < 5; ++c) {
        ASSERT_EQ(m.cells[r][c].has_value(), base.cells[r][c].has_value());
        if (m.cells[r][c]) {
          ASSERT_NEAR(*m.cells[r][c], *base.cells[r][c], 1e-9);
        }
      }
    }
  }
}

}  // namespace
}  // namespace posibot
