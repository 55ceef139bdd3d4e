#include "altgame/cli/session.hpp"

#include "httplib.h"

namespace altgame::cli {

namespace {

constexpr const char* kIndexPage = R"(<!doctype html>
<html><head><meta charset="utf-8"><title>altgame</title></head>
<body>
<p>No web client is bundled with this server. Start it with <code>--assets DIR</code>
to serve one, or talk to the JSON API directly:</p>
<ul>
<li>GET /api/game</li>
<li>POST /api/new {"engine_side": "P2"}</li>
<li>POST /api/move {"session": "...", "action": "..."}</li>
<li>GET /api/state?session=...</li>
</ul>
</body></html>
)";

void reply(httplib::Response& res, const SessionService::Response& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

}  // namespace

HttpServer::HttpServer(SessionService& service, std::optional<std::string> assets_dir)
    : service_(service), server_(std::make_unique<httplib::Server>()) {
  auto& s = *server_;
  s.Get("/api/game", [this](const httplib::Request&, httplib::Response& res) {
    reply(res, service_.game_info());
  });
  s.Post("/api/new", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, service_.new_session(req.body));
  });
  s.Post("/api/move", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, service_.move(req.body));
  });
  s.Get("/api/state", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, service_.state(req.get_param_value("session")));
  });
  if (!assets_dir || !s.set_mount_point("/", *assets_dir)) {
    s.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(kIndexPage, "text/html");
    });
  }
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

void HttpServer::listen() { server_->listen_after_bind(); }

void HttpServer::start() {
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
}

void HttpServer::stop() {
  server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace altgame::cli
