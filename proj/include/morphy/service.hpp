#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "morphy/dialogue.hpp"
#include "morphy/resources.hpp"

namespace morphy {

/// Lexicon dialogue sessions keyed by an opaque id. Sessions idle for longer
/// than the timeout disappear; every call purges expired ones first.
class SessionStore {
 public:
  using Clock = std::function<std::chrono::steady_clock::time_point()>;

  explicit SessionStore(std::chrono::seconds idle_timeout, Clock clock = std::chrono::steady_clock::now);

  std::string create(DialogueState state);
  std::optional<DialogueState> get(const std::string& id);

  /// Replaces the state with `step(state)` while holding the store lock, so
  /// concurrent answers to one session apply one after the other. Returns
  /// nullopt for an unknown or expired id; exceptions from `step` propagate
  /// and leave the session unchanged.
  std::optional<DialogueState> update(const std::string& id,
                                      const std::function<DialogueState(const DialogueState&)>& step);

  bool erase(const std::string& id);
  std::size_t size();

 private:
  struct Slot {
    DialogueState state;
    std::chrono::steady_clock::time_point touched;
  };
  void purge_locked();

  std::chrono::seconds timeout_;
  Clock clock_;
  std::mutex mutex_;
  std::map<std::string, Slot> sessions_;
  std::uint64_t counter_ = 0;
  std::uint64_t salt_;
};

struct ServiceConfig {
  ResourcePaths paths;
  std::string corpora_dir;       // default: <data_dir>/corpora
  std::string training_corpus;   // models for tag sets not given by paths.models; default: paths.corpus
  std::chrono::seconds session_timeout{30 * 60};
};

struct HttpReply {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// The HTTP/JSON API, independent of any transport. Thread-safe.
class Service {
 public:
  explicit Service(ServiceConfig config);
  ~Service();

  HttpReply handle(std::string_view method, std::string_view path, std::string_view body);

  SessionStore& sessions();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Serves a Service over HTTP.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();

  /// Binds to `port` (0 picks a free one) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace morphy
