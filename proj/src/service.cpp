#include "morphy/service.hpp"

#include <filesystem>
#include <random>
#include <regex>
#include <sstream>

#include "httplib.h"
#include "json.hpp"
#include "morphy/corpus.hpp"
#include "morphy/eval.hpp"
#include "morphy/io.hpp"
#include "morphy/ops.hpp"
#include "morphy/tagger.hpp"
#include "morphy/utf8.hpp"

namespace morphy {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// SessionStore

SessionStore::SessionStore(std::chrono::seconds idle_timeout, Clock clock)
    : timeout_(idle_timeout), clock_(std::move(clock)), salt_(std::random_device{}()) {
  salt_ = (salt_ << 32) ^ std::random_device{}();
}

void SessionStore::purge_locked() {
  const auto now = clock_();
  for (auto it = sessions_.begin(); it != sessions_.end();)
    it = now - it->second.touched > timeout_ ? sessions_.erase(it) : std::next(it);
}

std::string SessionStore::create(DialogueState state) {
  std::lock_guard lock(mutex_);
  purge_locked();
  // Counter keeps ids unique; the mixed salt keeps them unguessable enough
  // for a local tool.
  std::mt19937_64 mix(salt_ ^ ++counter_);
  std::ostringstream id;
  id << std::hex << mix() << '-' << counter_;
  sessions_[id.str()] = {std::move(state), clock_()};
  return id.str();
}

std::optional<DialogueState> SessionStore::get(const std::string& id) {
  std::lock_guard lock(mutex_);
  purge_locked();
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return std::nullopt;
  it->second.touched = clock_();
  return it->second.state;
}

std::optional<DialogueState> SessionStore::update(const std::string& id,
                                                  const std::function<DialogueState(const DialogueState&)>& step) {
  std::lock_guard lock(mutex_);
  purge_locked();
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return std::nullopt;
  auto next = step(it->second.state);
  it->second = {next, clock_()};
  return next;
}

bool SessionStore::erase(const std::string& id) {
  std::lock_guard lock(mutex_);
  return sessions_.erase(id) > 0;
}

std::size_t SessionStore::size() {
  std::lock_guard lock(mutex_);
  purge_locked();
  return sessions_.size();
}

// ---------------------------------------------------------------------------
// Service

namespace {

struct ApiError {
  int status;
  std::string message;
};

[[noreturn]] void fail(int status, std::string message) { throw ApiError{status, std::move(message)}; }

HttpReply reply_json(int status, const json& j) { return {status, j.dump(), "application/json"}; }

json parse_body(std::string_view body) {
  auto j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) fail(400, "request body must be a JSON object");
  return j;
}

std::string string_field(const json& j, const char* key, std::optional<std::string> fallback = std::nullopt) {
  auto it = j.find(key);
  if (it == j.end()) {
    if (fallback) return *fallback;
    fail(400, std::string("missing field '") + key + "'");
  }
  if (!it->is_string()) fail(400, std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> out;
  for (auto& part : utf8::split(path, '/'))
    if (!part.empty()) out.push_back(part);
  return out;
}

bool valid_corpus_id(const std::string& id) {
  static const std::regex re("[A-Za-z0-9_-]+");
  return std::regex_match(id, re);
}

json analysis_json(const Analysis& a) {
  return {{"lemma", a.lemma}, {"tag", format_tag(a.tag)}, {"segments", a.segments}};
}

// Everything derived from the lexicon, rebuilt as a whole when it changes.
struct Engine {
  std::shared_ptr<const Morphology> morph;
  std::shared_ptr<const Models> small, large;
  std::unique_ptr<Tagger> small_tagger, large_tagger;
  std::uint64_t generation = 0;

  const Tagger& tagger(TagSetKind k) const { return k == TagSetKind::small ? *small_tagger : *large_tagger; }
};

struct TokenView {
  std::vector<std::string> candidates;
  std::string predicted;
};

struct Draft {
  std::mutex mutex;
  std::string path;
  AnnotatedCorpus corpus;
  std::vector<std::uint64_t> revisions;
  // Candidate and predicted tags per token, valid for one engine generation.
  std::uint64_t cache_generation = 0;
  std::vector<std::vector<TokenView>> cache;
};

}  // namespace

struct Service::Impl {
  ServiceConfig config;
  SessionStore sessions;

  std::mutex engine_mutex;  // guards the pointer only
  std::shared_ptr<const Engine> engine;
  std::mutex lexicon_mutex;  // lexicon writes are exclusive

  std::mutex drafts_mutex;
  std::map<std::string, std::shared_ptr<Draft>> drafts;

  explicit Impl(ServiceConfig c) : config(std::move(c)), sessions(config.session_timeout) {
    if (config.corpora_dir.empty()) config.corpora_dir = config.paths.data_dir + "/corpora";
    if (config.training_corpus.empty()) config.training_corpus = config.paths.corpus;
    auto morph = load_morphology(config.paths.paradigms, config.paths.lexicon);
    std::shared_ptr<const Models> given;
    if (!config.paths.models.empty()) given = std::make_shared<const Models>(load_models_file(config.paths.models));
    std::optional<AnnotatedCorpus> training;
    auto models_for = [&](TagSetKind k) -> std::shared_ptr<const Models> {
      if (given && given->kind() == k) return given;
      if (!training) training = read_corpus_file(config.training_corpus);
      return std::make_shared<const Models>(train_models(*training, k));
    };
    auto small = models_for(TagSetKind::small);
    auto large = models_for(TagSetKind::large);
    engine = build(std::move(morph), std::move(small), std::move(large), 1);
  }

  static std::shared_ptr<const Engine> build(std::shared_ptr<const Morphology> morph,
                                             std::shared_ptr<const Models> small, std::shared_ptr<const Models> large,
                                             std::uint64_t generation) {
    auto e = std::make_shared<Engine>();
    e->morph = std::move(morph);
    e->small = std::move(small);
    e->large = std::move(large);
    e->small_tagger = std::make_unique<Tagger>(e->morph->analyzer, *e->small);
    e->large_tagger = std::make_unique<Tagger>(e->morph->analyzer, *e->large);
    e->generation = generation;
    return e;
  }

  std::shared_ptr<const Engine> current() {
    std::lock_guard lock(engine_mutex);
    return engine;
  }

  // --- routes --------------------------------------------------------------

  HttpReply analyze(std::string_view body) {
    auto j = parse_body(body);
    auto text = string_field(j, "text");
    auto e = current();
    json tokens = json::array();
    for (const auto& t : analyze_text(e->morph->analyzer, text)) {
      json readings = json::array();
      for (const auto& r : t.readings) readings.push_back(analysis_json(r));
      tokens.push_back({{"surface", t.surface}, {"analyses", readings}});
    }
    return reply_json(200, {{"tokens", tokens}});
  }

  HttpReply tag(std::string_view body) {
    auto j = parse_body(body);
    auto text = string_field(j, "text");
    TagSetKind kind;
    Algorithm algo;
    try {
      kind = parse_tagset_kind(string_field(j, "tagset", "small"));
      algo = parse_algorithm(string_field(j, "algo", "church"));
    } catch (const std::exception& ex) {
      fail(400, ex.what());
    }
    bool boundaries = true;
    if (auto it = j.find("assume_boundaries"); it != j.end()) {
      if (!it->is_boolean()) fail(400, "field 'assume_boundaries' must be a boolean");
      boundaries = it->get<bool>();
    }
    auto e = current();
    const auto& tagger = e->tagger(kind);
    json sentences = json::array();
    for (const auto& s : tag_text(tagger, algo, text, boundaries)) {
      json tokens = json::array();
      for (std::size_t i = 0; i < s.tokens.size(); ++i) {
        json cands = json::array();
        for (const auto& c : tagger.candidates(s.tokens[i].first, i == 0))
          cands.push_back({{"tag", tagger.models().name(c.id)}, {"lexical", c.lexical}});
        tokens.push_back({{"surface", s.tokens[i].first}, {"tag", format_tag(s.tokens[i].second)}, {"candidates", cands}});
      }
      sentences.push_back({{"tokens", tokens}});
    }
    return reply_json(200, {{"tagset", to_string(kind)}, {"algo", to_string(algo)}, {"sentences", sentences}});
  }

  json session_view(const std::string& id, const DialogueState& s, const Engine& e) {
    json transcript = json::array();
    for (const auto& a : s.answered)
      transcript.push_back({{"question_id", a.question_id}, {"choice", a.choice}, {"surface", a.surface}});
    json out{{"session_id", id}, {"pos", s.pos_track}, {"root", s.root}, {"complete", s.complete()},
             {"transcript", transcript}};
    if (s.pending) {
      json alts = json::array();
      for (std::size_t i = 0; i < s.pending->alternatives.size(); ++i)
        alts.push_back({{"number", i + 1}, {"label", s.pending->alternatives[i].label}});
      out["question"] = {{"id", s.pending->id},
                         {"number", s.answered.size() + 1},
                         {"text", s.pending->text},
                         {"alternatives", alts}};
    } else {
      out["entry"] = format_entry(s.draft);
      json forms = json::array();
      for (const auto& r : generate_forms(s.draft, *e.morph->classes).rows)
        forms.push_back({{"surface", r.surface}, {"tag", format_tag(r.tag)}, {"slot", r.slot_id}});
      out["forms"] = forms;
    }
    return out;
  }

  HttpReply start_session(std::string_view body) {
    auto j = parse_body(body);
    auto pos = string_field(j, "pos");
    auto root = string_field(j, "root");
    auto e = current();
    DialogueState state;
    try {
      state = start_classification(pos, root, *e->morph->classes);
    } catch (const DialogueError& ex) {
      fail(400, ex.what());
    }
    auto id = sessions.create(state);
    return reply_json(201, session_view(id, state, *e));
  }

  HttpReply answer_session(const std::string& id, std::string_view body) {
    auto j = parse_body(body);
    auto it = j.find("choice");
    if (it == j.end() || !it->is_number_integer()) fail(400, "field 'choice' must be an integer");
    const int choice = it->get<int>();
    auto e = current();
    std::optional<DialogueState> next;
    try {
      next = sessions.update(id, [&](const DialogueState& s) { return answer(s, choice, *e->morph->classes); });
    } catch (const DialogueError& ex) {
      fail(400, ex.what());
    }
    if (!next) fail(404, "unknown or expired session '" + id + "'");
    return reply_json(200, session_view(id, *next, *e));
  }

  HttpReply add_entry(std::string_view body) {
    auto j = parse_body(body);
    auto e = current();
    LexiconEntry entry;
    if (j.contains("session_id")) {
      auto id = string_field(j, "session_id");
      auto s = sessions.get(id);
      if (!s) fail(404, "unknown or expired session '" + id + "'");
      if (!s->complete()) fail(409, "session '" + id + "' is not complete");
      entry = s->draft;
    } else {
      try {
        entry = parse_entry(string_field(j, "entry"), e->morph->classes.get());
      } catch (const LexiconError& ex) {
        fail(400, ex.what());
      }
    }

    std::lock_guard write(lexicon_mutex);
    e = current();
    Lexicon lex = e->morph->lexicon;
    bool added = false;
    try {
      added = add_entry_to_file(config.paths.lexicon, entry, *e->morph->classes);
    } catch (const LexiconError& ex) {
      fail(400, ex.what());
    }
    if (added) {
      lex.add(entry);
      auto morph = std::make_shared<const Morphology>(e->morph->classes, std::move(lex));
      auto next = build(std::move(morph), e->small, e->large, e->generation + 1);
      std::lock_guard lock(engine_mutex);
      engine = std::move(next);
    }
    return reply_json(added ? 201 : 200, {{"added", added}, {"entry", format_entry(entry)}});
  }

  std::shared_ptr<Draft> draft(const std::string& id) {
    if (!valid_corpus_id(id)) fail(404, "unknown corpus '" + id + "'");
    std::lock_guard lock(drafts_mutex);
    if (auto it = drafts.find(id); it != drafts.end()) return it->second;
    const auto path = config.corpora_dir + "/" + id + ".tsv";
    if (!std::filesystem::exists(path)) fail(404, "unknown corpus '" + id + "'");
    auto d = std::make_shared<Draft>();
    d->path = path;
    try {
      d->corpus = read_corpus_file(path);
    } catch (const CorpusError& ex) {
      fail(500, "corpus '" + id + "' is unreadable: " + ex.what());
    }
    d->revisions.assign(d->corpus.sentences.size(), 0);
    drafts[id] = d;
    return d;
  }

  // Caller holds d.mutex.
  void refresh_cache(Draft& d, const Engine& e) {
    if (d.cache_generation == e.generation && d.cache.size() == d.corpus.sentences.size()) return;
    const auto& tagger = e.tagger(TagSetKind::large);
    d.cache.assign(d.corpus.sentences.size(), {});
    for (std::size_t i = 0; i < d.corpus.sentences.size(); ++i) d.cache[i] = sentence_view(d.corpus.sentences[i], tagger);
    d.cache_generation = e.generation;
  }

  static std::vector<TokenView> sentence_view(const CorpusSentence& s, const Tagger& tagger) {
    std::vector<std::string> words;
    for (const auto& t : s) words.push_back(t.surface);
    auto predicted = tagger.church(words);
    std::vector<TokenView> out(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
      for (const auto& c : tagger.candidates(words[j], j == 0)) out[j].candidates.push_back(tagger.models().name(c.id));
      out[j].predicted = format_tag(predicted.tokens[j].second);
    }
    return out;
  }

  HttpReply get_corpus(const std::string& id) {
    auto d = draft(id);
    auto e = current();
    std::lock_guard lock(d->mutex);
    refresh_cache(*d, *e);
    json sentences = json::array();
    for (std::size_t i = 0; i < d->corpus.sentences.size(); ++i) {
      json tokens = json::array();
      const auto& s = d->corpus.sentences[i];
      for (std::size_t j = 0; j < s.size(); ++j)
        tokens.push_back({{"surface", s[j].surface},
                          {"tag", format_tag(s[j].tag)},
                          {"candidates", d->cache[i][j].candidates},
                          {"predicted", d->cache[i][j].predicted}});
      sentences.push_back({{"index", i}, {"revision", d->revisions[i]}, {"tokens", tokens}});
    }
    return reply_json(200, {{"id", id}, {"tagset", "large"}, {"sentences", sentences}});
  }

  HttpReply put_sentence(const std::string& id, const std::string& index, std::string_view body) {
    auto d = draft(id);
    auto j = parse_body(body);
    auto tags_it = j.find("tags");
    if (tags_it == j.end() || !tags_it->is_array()) fail(400, "field 'tags' must be an array of strings");
    bool override_check = false;
    if (auto it = j.find("override"); it != j.end()) {
      if (!it->is_boolean()) fail(400, "field 'override' must be a boolean");
      override_check = it->get<bool>();
    }
    std::optional<std::uint64_t> revision;
    if (auto it = j.find("revision"); it != j.end()) {
      if (!it->is_number_unsigned()) fail(400, "field 'revision' must be a non-negative integer");
      revision = it->get<std::uint64_t>();
    }

    std::size_t n = 0;
    if (index.empty() || index.size() > 9 || index.find_first_not_of("0123456789") != std::string::npos)
      fail(404, "unknown sentence '" + index + "'");
    n = std::stoul(index);

    auto e = current();
    std::lock_guard lock(d->mutex);
    if (n >= d->corpus.sentences.size()) fail(404, "unknown sentence " + index);
    auto& sentence = d->corpus.sentences[n];
    if (tags_it->size() != sentence.size())
      fail(400, "expected " + std::to_string(sentence.size()) + " tags, got " + std::to_string(tags_it->size()));
    if (revision && *revision != d->revisions[n])
      fail(409, "revision " + std::to_string(*revision) + " is stale; current is " + std::to_string(d->revisions[n]));

    refresh_cache(*d, *e);
    std::vector<Tag> tags;
    for (std::size_t k = 0; k < sentence.size(); ++k) {
      const auto& v = (*tags_it)[k];
      if (!v.is_string()) fail(400, "tags must be strings");
      Tag t;
      try {
        t = parse_tag(v.get<std::string>(), TagSetKind::large);
      } catch (const std::exception& ex) {
        fail(400, "token " + std::to_string(k) + ": " + ex.what());
      }
      const auto& cands = d->cache[n][k].candidates;
      if (!override_check && std::find(cands.begin(), cands.end(), format_tag(t)) == cands.end())
        fail(409, "token " + std::to_string(k) + " ('" + sentence[k].surface + "'): " + format_tag(t) +
                      " is not a candidate; send override=true to force it");
      tags.push_back(t);
    }

    auto updated = d->corpus;
    for (std::size_t k = 0; k < sentence.size(); ++k) updated.sentences[n][k].tag = tags[k];
    io::write_file_atomic(d->path, write_corpus(updated));
    d->corpus = std::move(updated);
    ++d->revisions[n];
    return reply_json(200, {{"index", n}, {"revision", d->revisions[n]}});
  }

  HttpReply export_corpus(const std::string& id) {
    auto d = draft(id);
    std::lock_guard lock(d->mutex);
    return {200, write_corpus(d->corpus), "text/plain; charset=utf-8"};
  }

  HttpReply route(std::string_view method, std::string_view path, std::string_view body) {
    const auto p = split_path(path);
    const bool get = method == "GET", post = method == "POST", put = method == "PUT";
    auto only = [&](bool ok) {
      if (!ok) fail(405, "method not allowed");
    };
    if (p.size() == 1 && p[0] == "analyze") return only(post), analyze(body);
    if (p.size() == 1 && p[0] == "tag") return only(post), tag(body);
    if (p.size() >= 2 && p[0] == "lexicon") {
      if (p.size() == 2 && p[1] == "sessions") return only(post), start_session(body);
      if (p.size() == 4 && p[1] == "sessions" && p[3] == "answers") return only(post), answer_session(p[2], body);
      if (p.size() == 2 && p[1] == "entries") return only(post), add_entry(body);
    }
    if (p.size() >= 2 && p[0] == "corpora") {
      if (p.size() == 2) return only(get), get_corpus(p[1]);
      if (p.size() == 3 && p[2] == "export") return only(get), export_corpus(p[1]);
      if (p.size() == 4 && p[2] == "sentences") return only(put), put_sentence(p[1], p[3], body);
    }
    fail(404, "no such endpoint");
  }
};

Service::Service(ServiceConfig config) : impl_(std::make_unique<Impl>(std::move(config))) {}
Service::~Service() = default;

SessionStore& Service::sessions() { return impl_->sessions; }

HttpReply Service::handle(std::string_view method, std::string_view path, std::string_view body) {
  try {
    return impl_->route(method, path, body);
  } catch (const ApiError& e) {
    return reply_json(e.status, {{"error", e.message}});
  } catch (const std::exception& e) {
    return reply_json(500, {{"error", e.what()}});
  }
}

// ---------------------------------------------------------------------------
// HttpServer

struct HttpServer::Impl {
  Service& service;
  httplib::Server server;

  explicit Impl(Service& s) : service(s) {
    auto forward = [this](const httplib::Request& req, httplib::Response& res) {
      auto r = service.handle(req.method, req.path, req.body);
      res.status = r.status;
      res.set_content(r.body, r.content_type);
    };
    server.Get(".*", forward);
    server.Post(".*", forward);
    server.Put(".*", forward);
    server.Delete(".*", forward);
  }
};

HttpServer::HttpServer(Service& service) : impl_(std::make_unique<Impl>(service)) {}
HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace morphy
