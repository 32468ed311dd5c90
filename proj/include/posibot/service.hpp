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

#ifndef POSIBOT_SERVICE_HPP_
#define POSIBOT_SERVICE_HPP_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "posibot/dialog.hpp"
#include "posibot/pipeline.hpp"

namespace httplib {
class Server;
}

namespace posibot {

// Random RFC 4122 version-4 identifier, lowercase hex.
std::string make_uuid();

// In-memory sessions. Each session carries its own turn mutex so at most one
// turn runs per session while different sessions proceed in parallel.
class SessionStore {
 public:
  struct Slot {
    std::mutex turn;
    DialogSession session;
  };

  std::shared_ptr<Slot> create();
  std::shared_ptr<Slot> find(const std::string& id) const;
  std::size_t size() const;

  nlohmann::json snapshot() const;
  void restore(const nlohmann::json& doc);
  void save(const std::filesystem::path& path) const;
  void load(const std::filesystem::path& path);

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
};

struct HttpReply {
  int status = 200;
  nlohmann::json body;
};

// Transport-independent request handling; mount() wires it into httplib.
class Service {
 public:
  explicit Service(std::shared_ptr<const Pipeline> pipeline);

  HttpReply handle(std::string_view method, std::string_view path,
                   std::string_view body);

  void mount(httplib::Server& server);

  SessionStore& sessions() { return sessions_; }
  const SessionStore& sessions() const { return sessions_; }

 private:
  HttpReply chat(const nlohmann::json& request);
  HttpReply augment(const nlohmann::json& request) const;
  HttpReply classify(const nlohmann::json& request) const;
  HttpReply summarize(const nlohmann::json& request) const;
  HttpReply session(const std::string& id) const;

  std::shared_ptr<const Pipeline> pipeline_;
  SessionStore sessions_;
};

struct ServerOptions {
  std::string bind = "127.0.0.1";
  int port = 8080;
  std::optional<std::filesystem::path> snapshot;
  std::optional<std::filesystem::path> static_dir;
};

// Blocks until SIGINT or SIGTERM, then saves the snapshot if one is configured.
// Returns false when the address cannot be bound.
bool run_server(std::shared_ptr<const Pipeline> pipeline, const ServerOptions& options);

}  // namespace posibot

#endif  // POSIBOT_SERVICE_HPP_
