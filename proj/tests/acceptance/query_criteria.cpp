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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <thread>
#include <unistd.h>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "harness.hpp"
#include "lsk/common/rng.hpp"
#include "lsk/common/utf8.hpp"
#include "lsk/queryservice/corpus.hpp"
#include "lsk/queryservice/index.hpp"
#include "lsk/queryservice/query.hpp"
#include "lsk/queryservice/search.hpp"
#include "lsk/queryservice/server.hpp"

namespace lsk::acceptance {

using namespace lsk::queryservice;
using nlohmann::json;

namespace {

CorpusToken tok(std::string w, std::string l, std::string p) { return {std::move(w), std::move(l), std::move(p), std::nullopt}; }

bool glob(const std::u32string& p, std::size_t i, const std::u32string& t, std::size_t j) {
  if (i == p.size()) return j == t.size();
  if (p[i] == U'*') return glob(p, i + 1, t, j) || (j < t.size() && glob(p, i, t, j + 1));
  return j < t.size() && (p[i] == U'.' || p[i] == t[j]) && glob(p, i + 1, t, j + 1);
}

bool token_matches(const TokenPattern& p, const CorpusToken& t) {
  if (p.word && utf8::casefold(t.word) != *p.word) return false;
  if (p.lemma && utf8::casefold(t.lemma) != *p.lemma) return false;
  return !p.pos || glob(utf8::decode(*p.pos), 0, utf8::decode(t.pos), 0);
}

// Every start position of every utterance, utterances ordered by the number
// in their "u<N>" id.
std::vector<std::pair<std::string, std::size_t>> linear_scan(std::vector<CorpusUtterance> utts, const Query& q) {
  std::sort(utts.begin(), utts.end(),
            [](const auto& a, const auto& b) { return std::stoul(a.id.substr(1)) < std::stoul(b.id.substr(1)); });
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const auto& u : utts) {
    for (std::size_t s = 0; s + q.patterns.size() <= u.tokens.size(); ++s) {
      bool ok = true;
      for (std::size_t k = 0; ok && k < q.patterns.size(); ++k) ok = token_matches(q.patterns[k], u.tokens[s + k]);
      if (ok) out.emplace_back(u.id, s);
    }
  }
  return out;
}

const char* kWords[] = {"Ana", "ana", "are", "mere", "Mere", "pere", "măr", "MĂR", "și", ".", "ține", "Știe"};
const char* kLemmas[] = {"ana", "avea", "măr", "pară", "și", ".", "ține", "ști", ""};
const char* kTags[] = {"Np", "Ncfp-n", "Ncms-n", "Vaip3s", "Vmip3s", "Crssp", "PERIOD", "", "Afp"};
const char* kPos[] = {"N*", "V.ip3s", "Nc*", "*", ".c*", "*-n", "Np", "X*", "", "*s*", "V*3s"};

std::vector<CorpusUtterance> random_corpus(Rng& rng) {
  std::vector<CorpusUtterance> out;
  std::size_t budget = rng.below(501);
  std::vector<int> ids(300);
  for (int i = 0; i < 300; ++i) ids[i] = i;
  rng.shuffle(std::span<int>(ids));
  for (std::size_t next = 0; budget > 0 && next < ids.size(); ++next) {
    CorpusUtterance u;
    u.id = "u" + std::to_string(ids[next]);
    u.audio_file = u.id + ".wav";
    const auto n = std::min<std::size_t>(budget, 1 + rng.below(20));
    budget -= n;
    std::int64_t t = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto token = tok(kWords[rng.below(std::size(kWords))], kLemmas[rng.below(std::size(kLemmas))],
                       kTags[rng.below(std::size(kTags))]);
      if (rng.below(5)) {
        const auto d = static_cast<std::int64_t>(1 + rng.below(300));
        token.span = aligner::TimeSpan{t, t + d};
        t += d;
      }
      u.tokens.push_back(std::move(token));
    }
    out.push_back(std::move(u));
  }
  return out;
}

Query random_query(Rng& rng) {
  Query q;
  for (auto n = 1 + rng.below(3); n > 0; --n) {
    TokenPattern p;
    while (!p.word && !p.lemma && !p.pos) {
      if (rng.below(3) == 0) p.word = utf8::casefold(kWords[rng.below(std::size(kWords))]);
      if (rng.below(3) == 0) p.lemma = utf8::casefold(kLemmas[rng.below(std::size(kLemmas))]);
      if (rng.below(2) == 0) p.pos = kPos[rng.below(std::size(kPos))];
    }
    q.patterns.push_back(p);
  }
  q.limit = kMaxLimit;
  return q;
}

void http_contract(Outcome& o) {
  const auto dir = std::filesystem::temp_directory_path() / ("lsk_accept_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::string audio(1000, '\0');
  for (std::size_t i = 0; i < audio.size(); ++i) audio[i] = static_cast<char>(i % 253);
  std::ofstream(dir / "u1.wav", std::ios::binary) << audio;

  CorpusUtterance u;
  u.id = "u1";
  u.audio_file = "u1.wav";
  u.tokens = {tok("Ana", "Ana", "Np"), tok("are", "avea", "Vaip3s"), tok("mere", "măr", "Ncfp-n")};
  u.tokens[2].span = aligner::TimeSpan{520, 900};
  QueryServer server(std::make_shared<const IndexedCorpus>(IndexedCorpus::build({u})), ServerOptions{dir.string()});
  const int port = server.bind("127.0.0.1", 0);
  std::thread thread([&] { server.listen(); });
  server.wait_until_ready();
  httplib::Client cli("127.0.0.1", port);

  auto r = cli.Get("/search", {{"q", R"([lemma="măr"])"}}, httplib::Headers{});
  if (o.expect(r && r->status == 200, "search answers 200")) {
    const auto j = json::parse(r->body);
    o.expect(j["total"] == 1 && j["hits"][0]["utterance"] == "u1" && j["hits"][0]["span"] == json::array({2, 3}),
             "search body lists the hit");
  }
  for (const auto& [params, id] : std::vector<std::pair<httplib::Params, std::string>>{
           {{{"q", "[word="}}, "E_QUERY_SYNTAX"},
           {{{"q", "[]"}}, "E_QUERY_EMPTY"},
           {{{"q", R"([pos="N*"])"}, {"limit", "1001"}}, "E_QUERY_LIMIT"}}) {
    r = cli.Get("/search", params, httplib::Headers{});
    o.expect(r && r->status == 400 && json::parse(r->body)["error"] == id, "400 with " + id);
  }
  r = cli.Get("/utterance/u1");
  o.expect(r && r->status == 200 && parse_utterance_json(r->body) == u, "utterance answers 200");
  r = cli.Get("/utterance/nope");
  o.expect(r && r->status == 404, "unknown utterance answers 404");
  r = cli.Get("/audio/missing.wav");
  o.expect(r && r->status == 404, "unknown audio answers 404");
  r = cli.Get("/audio/u1.wav", {{"Range", "bytes=200-299"}});
  o.expect(r && r->status == 206 && r->body == audio.substr(200, 100) &&
               r->get_header_value("Content-Range") == "bytes 200-299/1000",
           "ranged audio answers 206 with the slice");
  r = cli.Get("/audio/u1.wav");
  o.expect(r && r->status == 200 && r->body == audio, "full audio answers 200");

  server.stop();
  thread.join();
  std::filesystem::remove_all(dir);
}

}  // namespace

void query(Outcome& o) {
  Rng rng(729);
  std::size_t queries = 0, hits = 0, nonempty = 0;
  for (int c = 0; c < 100; ++c) {
    const auto utts = random_corpus(rng);
    const auto index = IndexedCorpus::build(utts);
    const auto fingerprint = index.fingerprint();
    for (int k = 0; k < 20; ++k) {
      auto q = random_query(rng);
      const auto full = search(index, q);
      const auto want = linear_scan(utts, q);
      std::vector<std::pair<std::string, std::size_t>> got;
      for (const auto& h : full.hits) got.emplace_back(h.utterance, h.start);
      o.expect(full.total == want.size() && got == want,
               "corpus " + std::to_string(c) + " query " + std::to_string(k) + " differs from the scan");
      ++queries;
      hits += want.size();
      nonempty += want.empty() ? 0 : 1;

      if (k < 3) {
        const std::size_t page = 1 + rng.below(7);
        std::vector<Hit> joined;
        q.limit = page;
        for (q.offset = 0; q.offset < full.total + page; q.offset += page) {
          const auto part = search(index, q);
          o.expect(part.total == full.total && part.hits.size() <= page, "page size and total");
          joined.insert(joined.end(), part.hits.begin(), part.hits.end());
        }
        o.expect(joined == full.hits, "pages of " + std::to_string(page) + " concatenate to the full result");
      }
    }
    o.expect(index.fingerprint() == fingerprint, "search leaves the index unchanged");
  }
  o.expect(nonempty * 4 > queries, "a quarter of the queries have matches");
  http_contract(o);
  o.summarize(queries, " queries on 100 corpora (", nonempty, " with matches, ", hits,
              " hits) equal the scan; pagination; HTTP 200/206/400/404");
}

}  // namespace lsk::acceptance
