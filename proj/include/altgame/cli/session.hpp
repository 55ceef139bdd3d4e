#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>

#include "altgame/game.hpp"
#include "altgame/solver.hpp"
#include "json.hpp"

namespace httplib {
class Server;
}

namespace altgame::cli {

/// Play sessions of one game against the engine's classified strategies.
/// Each session is updated under its own lock; the service is safe to call
/// from concurrent request handlers.
class SessionService {
 public:
  struct Response {
    int status = 200;
    nlohmann::json body;
  };

  SessionService(GameDef game, const SolveResult& classification);

  /// GET /api/game
  Response game_info() const;
  /// POST /api/new {"engine_side": "P1"|"P2"}
  Response new_session(const std::string& body);
  /// POST /api/move {"session", "action", optional "ply"}
  Response move(const std::string& body);
  /// GET /api/state?session=...
  Response state(const std::string& session_id) const;

 private:
  struct Session {
    std::mutex mutex;
    std::string id;
    Player engine_side = Player::P2;
    HistoryPrefix prefix;
  };

  std::shared_ptr<Session> find(const std::string& id) const;
  std::vector<std::string> advance(Session& s) const;
  nlohmann::json snapshot(const Session& s) const;
  std::vector<std::string> legal_labels(const HistoryPrefix& h) const;
  bool finished(const Session& s) const { return s.prefix.plies() == game_.total_plies(); }

  GameDef game_;
  Case game_case_;
  Rational value_;
  BasicStrategy1 strategy_p1_;
  BasicStrategy2 strategy_p2_;
  Claim claim_p1_;
  Claim claim_p2_;

  mutable std::mutex sessions_mutex_;
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
  std::atomic<std::uint64_t> counter_{0};
};

/// HTTP binding of SessionService plus static assets at "/".
class HttpServer {
 public:
  HttpServer(SessionService& service, std::optional<std::string> assets_dir = std::nullopt);
  ~HttpServer();

  /// Binds (port 0 picks a free port) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Blocks serving requests until stop().
  void listen();
  /// Serves on a background thread.
  void start();
  void stop();

 private:
  SessionService& service_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

}  // namespace altgame::cli
