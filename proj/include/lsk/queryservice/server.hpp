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

#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>

#include "lsk/queryservice/index.hpp"
#include "lsk/queryservice/search.hpp"

namespace httplib {
class Server;
}

namespace lsk::queryservice {

struct ServerOptions {
  std::string audio_dir;         // overrides the index's audio base when set
  std::string cors_origin = "*";
};

std::string search_json(const SearchResult& result);
std::string error_json(std::string_view id, std::string_view detail);

// HTTP front of the search engine:
//   GET /search?q=&limit=&offset=   GET /utterance/<id>
//   GET /audio/<file> (Range aware)  GET /health
class QueryServer {
 public:
  QueryServer(std::shared_ptr<const IndexedCorpus> index, ServerOptions options = {});
  ~QueryServer();
  QueryServer(const QueryServer&) = delete;
  QueryServer& operator=(const QueryServer&) = delete;

  // Returns the bound port; port 0 picks a free one. E_IO on failure.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  void listen();
  void stop();
  void wait_until_ready() const;

  // Atomically replaces the served index; in-flight requests keep theirs.
  void swap_index(std::shared_ptr<const IndexedCorpus> index);
  std::shared_ptr<const IndexedCorpus> index() const;

 private:
  void install_routes();

  std::unique_ptr<httplib::Server> http_;
  ServerOptions options_;
  mutable std::mutex mutex_;
  std::shared_ptr<const IndexedCorpus> index_;
};

}  // namespace lsk::queryservice
