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

#include "posibot/json_util.hpp"

#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include "posibot/errors.hpp"

namespace posibot {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kUnsupportedPair: return "UnsupportedPair";
    case ErrorCode::kBackendUnavailable: return "BackendUnavailable";
    case ErrorCode::kBackendMalformedResponse: return "BackendMalformedResponse";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kEmptyDocument: return "EmptyDocument";
    case ErrorCode::kMissingTemplate: return "MissingTemplate";
    case ErrorCode::kUnfilledSlot: return "UnfilledSlot";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kModelNotLoaded: return "ModelNotLoaded";
    case ErrorCode::kMissingColumn: return "MissingColumn";
    case ErrorCode::kMalformedCsv: return "MalformedCsv";
    case ErrorCode::kNoUsableRecords: return "NoUsableRecords";
    case ErrorCode::kUnknownSession: return "UnknownSession";
  }
  return "Unknown";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error(ErrorCode::kIo, "short write to " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot rename onto " + path.string());
  }
}

void require_known_fields(const nlohmann::json& object,
                          std::initializer_list<std::string_view> allowed,
                          std::string_view context) {
  if (!object.is_object()) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string(context) + ": expected a JSON object");
  }
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (std::string_view name : allowed) known = known || key == name;
    if (!known) {
      throw Error(ErrorCode::kInvalidConfig,
                  std::string(context) + ": unknown field '" + key + "'", key);
    }
  }
}

bool is_non_negative_integer(const nlohmann::json& value) {
  return value.is_number_unsigned() ||
         (value.is_number_integer() && value.get<std::int64_t>() >= 0);
}

std::filesystem::path resolve_path(const std::filesystem::path& base_dir,
                                   const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute() || base_dir.empty()) return p;
  return base_dir / p;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("POSIBOT_DATA")) return env;
  return POSIBOT_DATA_DIR;
}

}  // namespace posibot
