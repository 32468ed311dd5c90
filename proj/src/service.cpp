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

#include "posibot/service.hpp"

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <random>

#include "httplib.h"
#include "posibot/errors.hpp"
#include "posibot/json_util.hpp"
#include "posibot/text_core.hpp"

namespace posibot {
namespace {

std::int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

HttpReply error_reply(int status, std::string_view message,
                      std::string_view code, std::string_view field = {}) {
  nlohmann::json body = {{"error", message}, {"code", code}};
  if (!field.empty()) body["field"] = field;
  return HttpReply{status, std::move(body)};
}

HttpReply reply_for(const Error& e) {
  int status = 500;
  switch (e.code()) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kInvalidConfig:
    case ErrorCode::kEmptyInput:
    case ErrorCode::kEmptyDocument:
    case ErrorCode::kParse:
      status = 400;
      break;
    case ErrorCode::kUnknownSession:
      status = 404;
      break;
    case ErrorCode::kModelNotLoaded:
      status = 503;
      break;
    case ErrorCode::kBackendUnavailable:
    case ErrorCode::kBackendMalformedResponse:
      status = 502;
      break;
    default:
      break;
  }
  return error_reply(status, e.what(), error_code_name(e.code()), e.field());
}

// Returns the trimmed "text" field or throws Error(kEmptyInput).
std::string required_text(const nlohmann::json& request) {
  if (!request.contains("text") || !request["text"].is_string()) {
    throw Error(ErrorCode::kInvalidArgument, "'text' must be a string", "text");
  }
  std::string text = trim(request["text"].get<std::string>());
  if (text.empty()) throw Error(ErrorCode::kEmptyInput, "'text' is empty", "text");
  return text;
}

nlohmann::json sentiment_json(const SentimentPrediction& p,
                              const std::vector<std::string>& labels) {
  return prediction_to_json(p, labels);
}

}  // namespace

std::string make_uuid() {
  thread_local std::mt19937_64 engine{std::random_device{}() ^
                                      static_cast<std::uint64_t>(now_ms())};
  std::uint64_t hi = engine();
  std::uint64_t lo = engine();
  hi = (hi & 0xFFFFFFFFFFFF0FFFULL) | 0x0000000000004000ULL;
  lo = (lo & 0x3FFFFFFFFFFFFFFFULL) | 0x8000000000000000ULL;
  char buffer[37];
  std::snprintf(buffer, sizeof(buffer), "%08x-%04x-%04x-%04x-%012llx",
                static_cast<unsigned>(hi >> 32), static_cast<unsigned>((hi >> 16) & 0xFFFF),
                static_cast<unsigned>(hi & 0xFFFF), static_cast<unsigned>(lo >> 48),
                static_cast<unsigned long long>(lo & 0xFFFFFFFFFFFFULL));
  return buffer;
}

std::shared_ptr<SessionStore::Slot> SessionStore::create() {
  auto slot = std::make_shared<Slot>();
  std::unique_lock lock(mutex_);
  std::string id = make_uuid();
  while (sessions_.contains(id)) id = make_uuid();
  slot->session.id = id;
  sessions_.emplace(id, slot);
  return slot;
}

std::shared_ptr<SessionStore::Slot> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(mutex_);
  const auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(mutex_);
  return sessions_.size();
}

nlohmann::json SessionStore::snapshot() const {
  std::vector<std::shared_ptr<Slot>> slots;
  {
    std::shared_lock lock(mutex_);
    for (const auto& [id, slot] : sessions_) slots.push_back(slot);
  }
  nlohmann::json list = nlohmann::json::array();
  for (const auto& slot : slots) {
    std::lock_guard turn(slot->turn);
    list.push_back(slot->session.to_json());
  }
  return {{"sessions", list}};
}

void SessionStore::restore(const nlohmann::json& doc) {
  if (!doc.contains("sessions") || !doc["sessions"].is_array()) {
    throw Error(ErrorCode::kParse, "session snapshot needs a 'sessions' array");
  }
  std::unique_lock lock(mutex_);
  for (const auto& item : doc["sessions"]) {
    auto slot = std::make_shared<Slot>();
    slot->session = DialogSession::from_json(item);
    sessions_[slot->session.id] = slot;
  }
}

void SessionStore::save(const std::filesystem::path& path) const {
  write_file_atomic(path, snapshot().dump() + "\n");
}

void SessionStore::load(const std::filesystem::path& path) {
  restore(read_json_file(path));
}

Service::Service(std::shared_ptr<const Pipeline> pipeline)
    : pipeline_(std::move(pipeline)) {}

HttpReply Service::handle(std::string_view method, std::string_view path,
                          std::string_view body) {
  try {
    if (method == "GET") {
      if (path == "/healthz") return HttpReply{200, {{"status", "ok"}}};
      constexpr std::string_view kSessions = "/v1/sessions/";
      if (path.starts_with(kSessions) && path.size() > kSessions.size()) {
        return session(std::string(path.substr(kSessions.size())));
      }
      return error_reply(404, "no such endpoint", "NotFound");
    }
    if (method != "POST") return error_reply(405, "method not allowed", "MethodNotAllowed");

    nlohmann::json request;
    try {
      request = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      return error_reply(400, std::string("invalid JSON: ") + e.what(), "Parse");
    }
    if (!request.is_object()) return error_reply(400, "body must be a JSON object", "Parse");

    if (path == "/v1/chat") return chat(request);
    if (path == "/v1/augment") return augment(request);
    if (path == "/v1/classify") return classify(request);
    if (path == "/v1/summarize") return summarize(request);
    return error_reply(404, "no such endpoint", "NotFound");
  } catch (const Error& e) {
    return reply_for(e);
  } catch (const nlohmann::json::exception& e) {
    return error_reply(400, e.what(), "Parse");
  } catch (const std::exception& e) {
    return error_reply(500, e.what(), "Internal");
  }
}

HttpReply Service::chat(const nlohmann::json& request) {
  require_known_fields(request, {"session_id", "text"}, "chat request");
  const std::string text = required_text(request);
  if (!pipeline_->model_loaded()) {
    throw Error(ErrorCode::kModelNotLoaded, "no sentiment model loaded");
  }

  std::shared_ptr<SessionStore::Slot> slot;
  if (request.contains("session_id") && !request["session_id"].is_null()) {
    if (!request["session_id"].is_string()) {
      throw Error(ErrorCode::kInvalidArgument, "'session_id' must be a string",
                  "session_id");
    }
    slot = sessions_.find(request["session_id"].get<std::string>());
    if (!slot) throw Error(ErrorCode::kUnknownSession, "unknown session_id", "session_id");
  } else {
    slot = sessions_.create();
  }

  std::lock_guard turn(slot->turn);
  auto [next, result] = pipeline_->run(text, slot->session, now_ms());
  slot->session = std::move(next);

  const auto& labels = pipeline_->resources().model->labels();
  return HttpReply{200,
                   {{"session_id", slot->session.id},
                    {"response", result.response},
                    {"sentiment", sentiment_json(result.prediction, labels)},
                    {"crisis", result.crisis},
                    {"state", state_name(slot->session.state)}}};
}

HttpReply Service::augment(const nlohmann::json& request) const {
  require_known_fields(request, {"text", "config"}, "augment request");
  const std::string text = required_text(request);
  AugmentationConfig cfg = pipeline_->config().augmentation;
  if (request.contains("config")) cfg = cfg.with_overrides(request["config"]);
  const AugmentedSet set = pipeline_->augment_text(text, cfg);

  nlohmann::json variants = nlohmann::json::array();
  for (const auto& v : set.variants) {
    nlohmann::json item = {{"text", v.text}, {"technique", technique_name(v.technique)}};
    if (v.error) item["error"] = *v.error;
    variants.push_back(std::move(item));
  }
  return HttpReply{200, {{"original", set.original}, {"variants", variants}}};
}

HttpReply Service::classify(const nlohmann::json& request) const {
  require_known_fields(request, {"text"}, "classify request");
  const std::string text = required_text(request);
  const SentimentPrediction p = pipeline_->classify(text);
  return HttpReply{200, sentiment_json(p, pipeline_->resources().model->labels())};
}

HttpReply Service::summarize(const nlohmann::json& request) const {
  require_known_fields(request, {"text", "max_sentences"}, "summarize request");
  const std::string text = required_text(request);
  std::size_t max_sentences = pipeline_->config().summary.max_sentences;
  if (request.contains("max_sentences")) {
    const auto& value = request["max_sentences"];
    if (!is_non_negative_integer(value) || value.get<std::size_t>() == 0) {
      throw Error(ErrorCode::kInvalidArgument, "'max_sentences' must be an integer >= 1",
                  "max_sentences");
    }
    max_sentences = value.get<std::size_t>();
  }
  return HttpReply{200, pipeline_->summarize_text(text, max_sentences).to_json()};
}

HttpReply Service::session(const std::string& id) const {
  const auto slot = sessions_.find(id);
  if (!slot) throw Error(ErrorCode::kUnknownSession, "unknown session_id", "session_id");
  std::lock_guard turn(slot->turn);
  return HttpReply{200, slot->session.to_json()};
}

void Service::mount(httplib::Server& server) {
  const auto respond = [this](const httplib::Request& req, httplib::Response& res) {
    const HttpReply reply = handle(req.method, req.path, req.body);
    res.status = reply.status;
    res.set_content(reply.body.dump(), "application/json");
  };
  server.Get("/healthz", respond);
  server.Get(R"(/v1/sessions/[^/]+)", respond);
  server.Post("/v1/chat", respond);
  server.Post("/v1/augment", respond);
  server.Post("/v1/classify", respond);
  server.Post("/v1/summarize", respond);
}

namespace {

std::atomic<httplib::Server*> g_server{nullptr};

extern "C" void stop_on_signal(int) {
  if (httplib::Server* server = g_server.load()) server->stop();
}

}  // namespace

bool run_server(std::shared_ptr<const Pipeline> pipeline, const ServerOptions& options) {
  Service service(std::move(pipeline));
  if (options.snapshot && std::filesystem::exists(*options.snapshot)) {
    service.sessions().load(*options.snapshot);
  }
  httplib::Server server;
  service.mount(server);
  if (options.static_dir) server.set_mount_point("/", options.static_dir->string());

  g_server.store(&server);
  std::signal(SIGINT, stop_on_signal);
  std::signal(SIGTERM, stop_on_signal);
  const bool ok = server.listen(options.bind, options.port);
  g_server.store(nullptr);
  if (options.snapshot) service.sessions().save(*options.snapshot);
  return ok;
}

}  // namespace posibot
