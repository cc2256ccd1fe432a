// Copyright 2026 The lsk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lsk/queryservice/server.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iterator>

#include <httplib.h>
#include <json.hpp>

#include "lsk/common/error.hpp"

namespace lsk::queryservice {

using nlohmann::json;

namespace {

json token_json(const CorpusToken& t) {
  return {{"word", t.word}, {"lemma", t.lemma}, {"pos", t.pos}};
}

json tokens_json(const std::vector<CorpusToken>& ts) {
  json a = json::array();
  for (const auto& t : ts) a.push_back(token_json(t));
  return a;
}

void send_error(httplib::Response& res, int status, std::string_view id, std::string_view detail) {
  res.status = status;
  res.set_content(error_json(id, detail), "application/json");
}

std::size_t parse_count(const httplib::Request& req, const char* name, std::size_t fallback) {
  if (!req.has_param(name)) return fallback;
  const auto v = req.get_param_value(name);
  std::size_t n = 0;
  const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
  if (v.empty() || ec != std::errc() || end != v.data() + v.size()) {
    throw Error(Errc::kInvalidArgument, std::string(name) + " must be a non-negative integer");
  }
  return n;
}

// Plain file names only: no directories, no leading dot.
bool safe_name(const std::string& f) {
  if (f.empty() || f.front() == '.') return false;
  for (unsigned char c : f) {
    if (!(std::isalnum(c) || c == '.' || c == '_' || c == '-')) return false;
  }
  return true;
}

}  // namespace

std::string error_json(std::string_view id, std::string_view detail) {
  return json{{"error", id}, {"detail", detail}}.dump();
}

std::string search_json(const SearchResult& result) {
  json hits = json::array();
  for (const auto& h : result.hits) {
    json audio = nullptr;
    if (!h.audio_file.empty()) {
      audio = {{"file", h.audio_file}, {"start_ms", nullptr}, {"end_ms", nullptr}};
      if (h.start_ms) audio["start_ms"] = *h.start_ms;
      if (h.end_ms) audio["end_ms"] = *h.end_ms;
    }
    hits.push_back({{"utterance", h.utterance},
                    {"span", {h.start, h.end}},
                    {"tokens", tokens_json(h.tokens)},
                    {"left", tokens_json(h.left)},
                    {"right", tokens_json(h.right)},
                    {"audio", audio}});
  }
  return json{{"total", result.total}, {"hits", hits}}.dump();
}

QueryServer::QueryServer(std::shared_ptr<const IndexedCorpus> index, ServerOptions options)
    : http_(std::make_unique<httplib::Server>()),
      options_(std::move(options)),
      index_(std::move(index)) {
  install_routes();
}

QueryServer::~QueryServer() { stop(); }

void QueryServer::swap_index(std::shared_ptr<const IndexedCorpus> index) {
  std::lock_guard lock(mutex_);
  index_ = std::move(index);
}

std::shared_ptr<const IndexedCorpus> QueryServer::index() const {
  std::lock_guard lock(mutex_);
  return index_;
}

void QueryServer::install_routes() {
  auto& s = *http_;
  const auto origin = options_.cors_origin;
  s.set_post_routing_handler([origin](const httplib::Request&, httplib::Response& res) {
    if (!origin.empty()) res.set_header("Access-Control-Allow-Origin", origin);
  });
  s.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Range");
    res.status = 204;
  });
  s.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr) {
    send_error(res, 500, "E_INTERNAL", "internal error");
  });

  s.Get("/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"status":"ok"})", "application/json");
  });

  s.Get("/search", [this](const httplib::Request& req, httplib::Response& res) {
    const auto idx = index();
    try {
      auto q = parse_query(req.get_param_value("q"));
      q.limit = parse_count(req, "limit", kDefaultLimit);
      q.offset = parse_count(req, "offset", 0);
      res.set_content(search_json(search(*idx, q)), "application/json");
    } catch (const Error& e) {
      send_error(res, 400, e.id(), e.detail());
    }
  });

  s.Get(R"(/utterance/(.+))", [this](const httplib::Request& req, httplib::Response& res) {
    const auto idx = index();
    const auto id = req.matches[1].str();
    const auto* u = idx->find(id);
    if (!u) return send_error(res, 404, "E_NOT_FOUND", "no utterance '" + id + "'");
    res.set_content(utterance_json(*u), "application/json");
  });

  s.Get(R"(/audio/(.+))", [this](const httplib::Request& req, httplib::Response& res) {
    const auto file = req.matches[1].str();
    const auto dir = options_.audio_dir.empty() ? index()->audio_base() : options_.audio_dir;
    const auto path = std::filesystem::path(dir.empty() ? "." : dir) / file;
    std::error_code ec;
    if (!safe_name(file) || !std::filesystem::is_regular_file(path, ec)) {
      return send_error(res, 404, "E_NOT_FOUND", "no audio file '" + file + "'");
    }
    std::ifstream in(path, std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    res.set_header("Accept-Ranges", "bytes");
    res.set_content(std::move(bytes), file.ends_with(".wav") ? "audio/wav" : "application/octet-stream");
  });
}

int QueryServer::bind(const std::string& host, int port) {
  const int bound = port == 0 ? http_->bind_to_any_port(host) : (http_->bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw Error(Errc::kIo, "cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void QueryServer::listen() { http_->listen_after_bind(); }

void QueryServer::stop() {
  if (http_) http_->stop();
}

void QueryServer::wait_until_ready() const { http_->wait_until_ready(); }

}  // namespace lsk::queryservice
