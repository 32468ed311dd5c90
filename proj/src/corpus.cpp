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

#include "posibot/corpus.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "posibot/errors.hpp"
#include "posibot/json_util.hpp"
#include "posibot/text_core.hpp"

namespace posibot {

std::string_view gender_name(Gender gender) {
  switch (gender) {
    case Gender::kMale: return "male";
    case Gender::kFemale: return "female";
    case Gender::kOther: return "other";
  }
  return "other";
}

std::optional<Gender> parse_gender(std::string_view raw) {
  const std::string g = utf8::to_lower(trim(raw));
  if (g.empty()) return std::nullopt;
  if (g == "m" || g == "male" || g == "man") return Gender::kMale;
  if (g == "f" || g == "female" || g == "woman") return Gender::kFemale;
  return Gender::kOther;
}

SchemaMapping SchemaMapping::from_json(const nlohmann::json& doc) {
  require_known_fields(doc, {"columns", "label_map"}, "schema");
  SchemaMapping m;
  try {
    m.column_for = doc.at("columns").get<std::map<std::string, std::string>>();
    m.label_map = doc.value("label_map", std::map<std::string, std::string>{});
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidConfig, std::string("schema: ") + e.what());
  }
  for (const auto& [field, column] : m.column_for) {
    if (field != "id" && field != "text" && field != "label" && field != "age" &&
        field != "gender") {
      throw Error(ErrorCode::kInvalidConfig, "schema maps unknown field '" + field + "'",
                  field);
    }
  }
  if (!m.column_for.contains("text") || !m.column_for.contains("label")) {
    throw Error(ErrorCode::kInvalidConfig, "schema must map 'text' and 'label'");
  }
  return m;
}

SchemaMapping SchemaMapping::load(const std::filesystem::path& path) {
  return from_json(read_json_file(path));
}

std::vector<std::vector<std::string>> parse_csv(std::string_view content) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t line = 1;

  const auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  const auto end_row = [&] {
    end_field();
    // A lone empty field is a blank line.
    if (!(row.size() == 1 && row[0].empty())) rows.push_back(std::move(row));
    row.clear();
  };

  for (std::size_t i = 0; i < content.size(); ++i) {
    const char c = content[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started) {
          throw Error(ErrorCode::kMalformedCsv,
                      "stray quote inside unquoted field on line " + std::to_string(line));
        }
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        ++line;
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (in_quotes) {
    throw Error(ErrorCode::kMalformedCsv, "unterminated quoted field at end of input");
  }
  if (field_started || !row.empty()) end_row();

  if (!rows.empty()) {
    const std::size_t width = rows.front().size();
    for (std::size_t r = 1; r < rows.size(); ++r) {
      if (rows[r].size() != width) {
        throw Error(ErrorCode::kMalformedCsv,
                    "row " + std::to_string(r + 1) + " has " +
                        std::to_string(rows[r].size()) + " fields, header has " +
                        std::to_string(width));
      }
    }
  }
  return rows;
}

LoadResult load_csv_text(std::string_view content, const SchemaMapping& mapping) {
  const auto rows = parse_csv(content);
  LoadResult out;
  if (rows.empty()) {
    throw Error(ErrorCode::kMalformedCsv, "CSV has no header row");
  }
  const auto& header = rows.front();
  std::map<std::string, std::size_t> column_index;
  for (std::size_t i = 0; i < header.size(); ++i) column_index[trim(header[i])] = i;

  std::map<std::string, std::size_t> field_index;
  for (const auto& [field, column] : mapping.column_for) {
    const auto it = column_index.find(column);
    if (it == column_index.end()) {
      throw Error(ErrorCode::kMissingColumn, "CSV lacks column '" + column + "'", field);
    }
    field_index[field] = it->second;
  }

  out.data_rows = rows.size() - 1;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const auto get = [&](const char* field) -> std::string {
      const auto it = field_index.find(field);
      return it == field_index.end() ? std::string() : row[it->second];
    };

    CorpusRecord rec;
    rec.text = clean_text(get("text"));
    if (rec.text.empty()) {
      ++out.skipped_empty_text;
      continue;
    }
    const std::string raw_label = trim(get("label"));
    if (mapping.label_map.empty()) {
      rec.label = raw_label;
    } else {
      const auto it = mapping.label_map.find(raw_label);
      if (it == mapping.label_map.end()) {
        ++out.skipped_unmapped_label;
        continue;
      }
      rec.label = it->second;
    }
    if (rec.label.empty()) {
      ++out.skipped_unmapped_label;
      continue;
    }

    rec.id = field_index.contains("id") ? trim(get("id")) : std::to_string(r);
    const std::string age = trim(get("age"));
    if (!age.empty()) {
      int value = 0;
      const auto [ptr, ec] = std::from_chars(age.data(), age.data() + age.size(), value);
      if (ec == std::errc() && ptr == age.data() + age.size() && value >= 10 &&
          value <= 120) {
        rec.age = value;
      } else {
        ++out.dropped_ages;
      }
    }
    rec.gender = parse_gender(get("gender"));

    for (const auto& [column, index] : column_index) {
      bool mapped = false;
      for (const auto& [field, fi] : field_index) mapped = mapped || fi == index;
      if (!mapped) rec.extras[column] = row[index];
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

LoadResult load_csv(const std::filesystem::path& path, const SchemaMapping& mapping) {
  return load_csv_text(read_text_file(path), mapping);
}

LengthHistogram length_histogram(const std::vector<std::string>& documents,
                                 std::size_t bins, std::size_t max_len) {
  if (bins == 0 || max_len == 0) {
    throw Error(ErrorCode::kInvalidArgument, "bins and max_len must be >= 1");
  }
  LengthHistogram h;
  for (std::size_t i = 0; i <= bins; ++i) {
    h.bin_edges.push_back(static_cast<double>(i) * static_cast<double>(max_len) /
                          static_cast<double>(bins));
  }
  for (std::size_t i = 0; i < bins; ++i) {
    h.labels.push_back(std::to_string(static_cast<long long>(std::floor(h.bin_edges[i]))) +
                       "–" +
                       std::to_string(static_cast<long long>(std::floor(h.bin_edges[i + 1]))));
  }
  h.counts.assign(bins, 0);
  std::vector<double> totals(bins, 0.0);

  for (const auto& doc : documents) {
    const TokenizedText t = tokenize(doc);
    for (const auto& [first, last] : t.sentence_bounds) {
      const std::size_t length = t.tokens[last - 1].span.end - t.tokens[first].span.start;
      const std::size_t bin = std::min(bins - 1, length * bins / max_len);
      ++h.counts[bin];
      totals[bin] += static_cast<double>(length);
      ++h.total_sentences;
    }
  }
  h.mean_length.resize(bins);
  for (std::size_t i = 0; i < bins; ++i) {
    if (h.counts[i] > 0) h.mean_length[i] = totals[i] / static_cast<double>(h.counts[i]);
  }
  return h;
}

std::map<std::string, LengthHistogram> length_histograms(
    const std::map<std::string, std::vector<std::string>>& corpora, std::size_t bins,
    std::size_t max_len) {
  std::map<std::string, LengthHistogram> out;
  for (const auto& [name, documents] : corpora) {
    out.emplace(name, length_histogram(documents, bins, max_len));
  }
  return out;
}

nlohmann::json LengthHistogram::to_json() const {
  nlohmann::json means = nlohmann::json::array();
  for (const auto& m : mean_length) {
    means.push_back(m ? nlohmann::json(*m) : nlohmann::json(nullptr));
  }
  return {{"edges", bin_edges},
          {"labels", labels},
          {"counts", counts},
          {"mean_length", means},
          {"total_sentences", total_sentences}};
}

nlohmann::json histogram_report(const std::map<std::string, LengthHistogram>& histograms) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [name, h] : histograms) out[name] = h.to_json();
  return {{"histograms", out}};
}

std::optional<std::size_t> age_group(int age) {
  if (age < 18) return std::nullopt;
  if (age <= 25) return 0;
  if (age <= 35) return 1;
  if (age <= 45) return 2;
  if (age <= 55) return 3;
  return 4;
}

EmotionMatrix emotion_matrix(const std::vector<CorpusRecord>& records, Gender gender) {
  EmotionMatrix m;
  m.gender = gender;
  std::array<std::array<double, 5>, 5> sums{};
  for (const auto& rec : records) {
    if (rec.gender != gender) continue;
    const auto category_it = rec.extras.find("emotion_category");
    const auto level_it = rec.extras.find("level");
    std::optional<std::size_t> row;
    if (rec.age) row = age_group(*rec.age);
    std::optional<std::size_t> col;
    if (category_it != rec.extras.end()) {
      const std::string category = trim(category_it->second);
      for (std::size_t c = 0; c < kEmotionCategories.size(); ++c) {
        if (kEmotionCategories[c] == category) col = c;
      }
    }
    std::optional<double> level;
    if (level_it != rec.extras.end()) {
      const std::string raw = trim(level_it->second);
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
      if (ec == std::errc() && ptr == raw.data() + raw.size() && value >= 0.0 &&
          value <= 100.0) {
        level = value;
      }
    }
    if (!row || !col || !level) {
      ++m.excluded_records;
      continue;
    }
    sums[*row][*col] += *level;
    ++m.counts[*row][*col];
    ++m.used_records;
  }
  if (m.used_records == 0) {
    throw Error(ErrorCode::kNoUsableRecords,
                "no usable records for gender " + std::string(gender_name(gender)));
  }
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 5; ++c) {
      if (m.counts[r][c] > 0) m.cells[r][c] = sums[r][c] / static_cast<double>(m.counts[r][c]);
    }
  }
  return m;
}

nlohmann::json EmotionMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : cells) {
    nlohmann::json line = nlohmann::json::array();
    for (const auto& cell : row) {
      line.push_back(cell ? nlohmann::json(*cell) : nlohmann::json(nullptr));
    }
    rows.push_back(line);
  }
  return {{"gender", gender_name(gender)},
          {"rows", kAgeGroups},
          {"cols", kEmotionCategories},
          {"cells", rows},
          {"used_records", used_records},
          {"excluded_records", excluded_records}};
}

std::string EmotionMatrix::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "age_group";
  for (const auto& c : kEmotionCategories) out << ',' << c;
  out << '\n';
  for (std::size_t r = 0; r < 5; ++r) {
    out << kAgeGroups[r];
    for (const auto& cell : cells[r]) {
      out << ',';
      if (cell) out << *cell;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace posibot
