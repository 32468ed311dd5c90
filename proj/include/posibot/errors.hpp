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

#ifndef POSIBOT_ERRORS_HPP_
#define POSIBOT_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace posibot {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidConfig,
  kIo,
  kParse,
  kUnsupportedPair,
  kBackendUnavailable,
  kBackendMalformedResponse,
  kDimensionMismatch,
  kEmptyCorpus,
  kUnknownLabel,
  kEmptyDocument,
  kMissingTemplate,
  kUnfilledSlot,
  kEmptyInput,
  kModelNotLoaded,
  kMissingColumn,
  kMalformedCsv,
  kNoUsableRecords,
  kUnknownSession,
};

std::string_view error_code_name(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Error(ErrorCode code, const std::string& message, std::string field)
      : std::runtime_error(message), code_(code), field_(std::move(field)) {}

  ErrorCode code() const noexcept { return code_; }

  // Name of the offending config/request field, if any.
  const std::string& field() const noexcept { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

// True for failures caused by a remote model backend.
inline bool is_backend_error(ErrorCode code) {
  return code == ErrorCode::kBackendUnavailable ||
         code == ErrorCode::kBackendMalformedResponse;
}

}  // namespace posibot

#endif  // POSIBOT_ERRORS_HPP_
