#include <random>
#include <thread>

#include "altgame/cli/game_source.hpp"
#include "altgame/cli/session.hpp"
#include "altgame/engine.hpp"
#include "altgame/games.hpp"
#include "doctest.h"
#include "httplib.h"
#include "json.hpp"

using namespace altgame;
using cli::SessionService;
using nlohmann::json;

namespace {

SessionService service_for(const std::string& builtin) {
  cli::LoadOptions o;
  o.builtin = builtin;
  const auto src = cli::load_game(o);
  return SessionService(src.game, cli::cached_classify(src));
}

json move_body(const std::string& session, const std::string& action) {
  return json{{"session", session}, {"action", action}};
}

// Plays random legal human moves until the session finishes; returns the
// final snapshot.
json random_playthrough(SessionService& svc, const std::string& engine_side, std::mt19937& rng) {
  auto r = svc.new_session(json{{"engine_side", engine_side}}.dump());
  REQUIRE(r.status == 200);
  json state = r.body;
  const std::string id = state["session"];
  while (state["status"] == "awaiting-human") {
    const auto legal = state["legal_actions"];
    REQUIRE(!legal.empty());
    const std::string pick = legal[rng() % legal.size()];
    auto m = svc.move(move_body(id, pick).dump());
    REQUIRE(m.status == 200);
    state = m.body;
  }
  return state;
}

}  // namespace

TEST_CASE("game info") {
  auto svc = service_for("hexapawn");
  auto r = svc.game_info();
  CHECK(r.status == 200);
  CHECK(r.body["name"] == "hexapawn");
  CHECK(r.body["case"] == "II");
  CHECK(r.body["value"] == "-1/1");
  CHECK(r.body["horizon"] == 3);
  CHECK(r.body["alphabets"]["P1"].size() == 15);
}

TEST_CASE("new session with the engine as P2 waits for the human") {
  auto svc = service_for("hexapawn");
  auto r = svc.new_session(R"({"engine_side":"P2"})");
  REQUIRE(r.status == 200);
  CHECK(r.body["status"] == "awaiting-human");
  CHECK(r.body["to_move"] == "P1");
  CHECK(r.body["ply"] == 0);
  CHECK_FALSE(r.body.contains("engine_move"));
  CHECK(r.body["legal_actions"].size() == 3);
}

TEST_CASE("engine as P1 moves first") {
  auto svc = service_for("sub10");
  auto r = svc.new_session(R"({"engine_side":"P1"})");
  REQUIRE(r.status == 200);
  CHECK(r.body["engine_move"] == "1");
  CHECK(r.body["ply"] == 1);
}

TEST_CASE("request errors") {
  auto svc = service_for("hexapawn");
  CHECK(svc.new_session("not json").status == 400);
  CHECK(svc.new_session(R"({"engine_side":"P3"})").status == 400);
  CHECK(svc.move(R"({"session":"nope","action":"a1-a2"})").status == 404);
  CHECK(svc.move(R"({"action":"a1-a2"})").status == 400);
  CHECK(svc.state("nope").status == 404);
  CHECK(svc.state("").status == 400);

  const std::string id = svc.new_session(R"({"engine_side":"P2"})").body["session"];
  auto bad = svc.move(move_body(id, "a1xb2").dump());
  CHECK(bad.status == 409);
  CHECK(bad.body["legal_actions"] == json{"a1-a2", "b1-b2", "c1-c2"});
  CHECK(svc.move(move_body(id, "nonsense").dump()).status == 409);
  CHECK(svc.state(id).body["ply"] == 0);
}

TEST_CASE("move submission is idempotent per ply") {
  auto svc = service_for("hexapawn");
  const std::string id = svc.new_session(R"({"engine_side":"P2"})").body["session"];
  json body = move_body(id, "b1-b2");
  body["ply"] = 0;
  auto first = svc.move(body.dump());
  REQUIRE(first.status == 200);
  auto again = svc.move(body.dump());
  CHECK(again.status == 200);
  CHECK(again.body["history"] == first.body["history"]);
  CHECK(again.body["replayed"] == true);

  body["action"] = "a1-a2";
  CHECK(svc.move(body.dump()).status == 409);  // ply 0 was played differently
  body["ply"] = 7;
  CHECK(svc.move(body.dump()).status == 409);  // ahead of the game
}

TEST_CASE("hexapawn sessions always end in an engine win") {
  auto svc = service_for("hexapawn");
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto end = random_playthrough(svc, "P2", rng);
    CHECK(end["status"] == "finished");
    CHECK(end["tag"] == "P2_WIN");
    CHECK(end["f"] == "-1/1");
  }
}

TEST_CASE("session replay reproduces the payoffs") {
  auto svc = service_for("tictactoe");
  const auto game = games::make_tictactoe();
  const auto strategy = classify(game).strategy_p1;
  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) {
    auto end = random_playthrough(svc, "P1", rng);
    // Scripted opponent: replays the human moves from the record.
    std::vector<ActionId> b;
    for (const auto& ply : end["history"])
      if (ply["player"] == "P2") b.push_back(*game.actions_p2().find(ply["action"].get<std::string>()));
    const auto h = respond_p1(game, strategy.as_strategy(), b);
    const auto p = game.payoff(h);
    CHECK(end["payoffs"]["u"] == p.u.str());
    CHECK(end["payoffs"]["v"] == p.v.str());
    CHECK(Rational::parse(end["f"].get<std::string>()).sign() >= 0);
  }
}

TEST_CASE("concurrent sessions stay isolated") {
  auto svc = service_for("tictactoe");
  std::vector<std::thread> workers;
  std::vector<int> finished(4, 0);
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&, t] {
      std::mt19937 rng(100 + t);
      for (int i = 0; i < 10; ++i) {
        auto r = svc.new_session(R"({"engine_side":"P2"})");
        json state = r.body;
        const std::string id = state["session"];
        while (state["status"] == "awaiting-human") {
          const auto legal = state["legal_actions"];
          state = svc.move(move_body(id, legal[rng() % legal.size()]).dump()).body;
        }
        if (state["tag"] != "P1_WIN") ++finished[t];
      }
    });
  for (auto& w : workers) w.join();
  for (int f : finished) CHECK(f == 10);
}

TEST_CASE("HTTP binding") {
  auto svc = service_for("hexapawn");
  cli::HttpServer server(svc);
  const int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  server.start();

  httplib::Client client("127.0.0.1", port);
  auto game = client.Get("/api/game");
  REQUIRE(game);
  CHECK(game->status == 200);
  CHECK(json::parse(game->body)["case"] == "II");

  auto created = client.Post("/api/new", R"({"engine_side":"P2"})", "application/json");
  REQUIRE(created);
  CHECK(created->status == 200);
  const std::string id = json::parse(created->body)["session"];

  auto illegal = client.Post("/api/move", move_body(id, "c1xb2").dump(), "application/json");
  REQUIRE(illegal);
  CHECK(illegal->status == 409);
  CHECK(json::parse(illegal->body)["legal_actions"].size() == 3);

  auto moved = client.Post("/api/move", move_body(id, "a1-a2").dump(), "application/json");
  REQUIRE(moved);
  CHECK(moved->status == 200);
  CHECK(json::parse(moved->body).contains("engine_move"));

  auto state = client.Get(("/api/state?session=" + id).c_str());
  REQUIRE(state);
  CHECK(json::parse(state->body)["ply"] == 2);
  CHECK(client.Get("/api/state?session=missing")->status == 404);
  CHECK(client.Post("/api/new", "{", "application/json")->status == 400);

  auto index = client.Get("/");
  REQUIRE(index);
  CHECK(index->status == 200);
  CHECK(index->body.find("/api/game") != std::string::npos);
  server.stop();
}
