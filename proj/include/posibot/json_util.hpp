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

#ifndef POSIBOT_JSON_UTIL_HPP_
#define POSIBOT_JSON_UTIL_HPP_

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>

#include "json.hpp"

namespace posibot {

// Reads and parses a UTF-8 JSON file; throws Error(kIo / kParse).
nlohmann::json read_json_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

// Writes to a sibling temp file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

// Throws Error(kInvalidConfig, field) if `object` has a key outside `allowed`.
void require_known_fields(const nlohmann::json& object,
                          std::initializer_list<std::string_view> allowed,
                          std::string_view context);

// True for integers >= 0, whether stored signed or unsigned.
bool is_non_negative_integer(const nlohmann::json& value);

std::filesystem::path resolve_path(const std::filesystem::path& base_dir,
                                   const std::string& path);

// Directory holding the bundled data files (POSIBOT_DATA env overrides).
std::filesystem::path default_data_dir();

}  // namespace posibot

#endif  // POSIBOT_JSON_UTIL_HPP_
