#include "altgame/cli/session.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "altgame/engine.hpp"
#include "altgame/games.hpp"

namespace altgame::cli {

namespace {

using json = nlohmann::json;

SessionService::Response error(int status, const std::string& message) {
  return {status, json{{"error", message}}};
}

std::optional<json> parse_body(const std::string& body) {
  json j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  return j;
}

std::string random_token() {
  static std::mutex mutex;
  static std::mt19937_64 rng{std::random_device{}()};
  std::lock_guard lock(mutex);
  std::ostringstream out;
  out << std::hex << rng() << rng();
  return out.str();
}

}  // namespace

SessionService::SessionService(GameDef game, const SolveResult& classification)
    : game_(std::move(game)),
      game_case_(classification.game_case),
      value_(classification.value),
      strategy_p1_(classification.strategy_p1),
      strategy_p2_(classification.strategy_p2),
      claim_p1_(classification.claim_p1),
      claim_p2_(classification.claim_p2) {}

SessionService::Response SessionService::game_info() const {
  json j;
  j["name"] = game_.name();
  j["case"] = to_string(game_case_);
  j["value"] = value_.str();
  j["horizon"] = game_.horizon();
  j["alphabets"] = {{"P1", game_.actions_p1().labels()}, {"P2", game_.actions_p2().labels()}};
  j["claims"] = {{"P1", to_string(claim_p1_)}, {"P2", to_string(claim_p2_)}};
  return {200, j};
}

std::shared_ptr<SessionService::Session> SessionService::find(const std::string& id) const {
  std::lock_guard lock(sessions_mutex_);
  const auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::vector<std::string> SessionService::legal_labels(const HistoryPrefix& h) const {
  std::vector<std::string> out;
  if (h.plies() == game_.total_plies()) return out;
  const auto& alpha = game_.alphabet(h.to_move());
  for (const auto a : game_.legal_actions(h)) out.push_back(alpha.label(a));
  return out;
}

// Plays engine moves, and human moves that have no alternative, until the
// human has a real choice or the game is over. Returns the engine's labels.
std::vector<std::string> SessionService::advance(Session& s) const {
  std::vector<std::string> engine_moves;
  auto& h = s.prefix;
  while (!finished(s)) {
    const Player mover = h.to_move();
    if (mover == s.engine_side) {
      const auto& seen = h.moves_of(opponent(mover));
      const ActionId a = mover == Player::P1 ? strategy_p1_(seen) : strategy_p2_(seen);
      push_checked(game_, h, a);
      engine_moves.push_back(game_.alphabet(mover).label(a));
      continue;
    }
    const auto legal = game_.legal_actions(h);
    if (legal.size() != 1) break;
    push_checked(game_, h, legal[0]);
  }
  return engine_moves;
}

json SessionService::snapshot(const Session& s) const {
  const auto& h = s.prefix;
  json j;
  j["session"] = s.id;
  j["engine_side"] = to_string(s.engine_side);
  j["human_side"] = to_string(opponent(s.engine_side));
  j["ply"] = h.plies();
  json history = json::array();
  for (std::size_t i = 0; i < h.plies(); ++i) {
    const Player p = i % 2 == 0 ? Player::P1 : Player::P2;
    history.push_back({{"player", to_string(p)}, {"action", game_.alphabet(p).label(h.ply(i))}});
  }
  j["history"] = std::move(history);
  j["legal_actions"] = legal_labels(h);
  if (!finished(s)) {
    j["status"] = "awaiting-human";
    j["to_move"] = to_string(h.to_move());
    return j;
  }
  const Payoff p = game_.payoff(h);
  j["status"] = "finished";
  j["payoffs"] = {{"u", p.u.str()}, {"v", p.v.str()}};
  j["f"] = (p.u - p.v).str();
  j["tag"] = games::to_string(games::tag_of(p));
  j["note"] = game_.note(h);
  return j;
}

SessionService::Response SessionService::new_session(const std::string& body) {
  const auto j = parse_body(body);
  if (!j || !j->contains("engine_side") || !(*j)["engine_side"].is_string())
    return error(400, "expected {\"engine_side\": \"P1\" | \"P2\"}");
  const auto side = (*j)["engine_side"].get<std::string>();
  if (side != "P1" && side != "P2") return error(400, "engine_side must be P1 or P2");

  auto s = std::make_shared<Session>();
  s->id = random_token() + "-" + std::to_string(counter_++);
  s->engine_side = side == "P1" ? Player::P1 : Player::P2;
  std::lock_guard session_lock(s->mutex);
  const auto engine_moves = advance(*s);
  {
    std::lock_guard lock(sessions_mutex_);
    sessions_.emplace(s->id, s);
  }
  json out = snapshot(*s);
  if (!engine_moves.empty()) out["engine_move"] = engine_moves.front();
  out["engine_moves"] = engine_moves;
  return {200, out};
}

SessionService::Response SessionService::move(const std::string& body) {
  const auto j = parse_body(body);
  if (!j || !j->contains("session") || !(*j)["session"].is_string() || !j->contains("action") ||
      !(*j)["action"].is_string())
    return error(400, "expected {\"session\": id, \"action\": label}");
  std::optional<std::size_t> ply;
  if (j->contains("ply")) {
    if (!(*j)["ply"].is_number_unsigned()) return error(400, "ply must be a non-negative integer");
    ply = (*j)["ply"].get<std::size_t>();
  }
  const auto s = find((*j)["session"].get<std::string>());
  if (!s) return error(404, "unknown session");
  const auto action = (*j)["action"].get<std::string>();

  std::lock_guard lock(s->mutex);
  auto& h = s->prefix;
  const Player human = opponent(s->engine_side);
  auto conflict = [&](const std::string& message) {
    Response r = error(409, message);
    r.body["legal_actions"] = legal_labels(h);
    return r;
  };

  if (ply && *ply < h.plies()) {
    // Resubmission of an earlier move: same move gives the same state back.
    const Player p = *ply % 2 == 0 ? Player::P1 : Player::P2;
    if (p == human && game_.alphabet(p).label(h.ply(*ply)) == action) {
      json out = snapshot(*s);
      out["replayed"] = true;
      return {200, out};
    }
    return conflict("ply " + std::to_string(*ply) + " was already played differently");
  }
  if (ply && *ply > h.plies()) return conflict("ply " + std::to_string(*ply) + " is ahead of the game");
  if (finished(*s)) return conflict("the game is over");
  if (h.to_move() != human) return conflict("not your turn");

  const auto a = game_.alphabet(human).find(action);
  if (!a || !game_.is_legal(h, *a)) return conflict("'" + action + "' is not legal here");
  push_checked(game_, h, *a);
  const auto engine_moves = advance(*s);
  json out = snapshot(*s);
  if (!engine_moves.empty()) out["engine_move"] = engine_moves.front();
  out["engine_moves"] = engine_moves;
  return {200, out};
}

SessionService::Response SessionService::state(const std::string& session_id) const {
  if (session_id.empty()) return error(400, "missing session parameter");
  const auto s = find(session_id);
  if (!s) return error(404, "unknown session");
  std::lock_guard lock(s->mutex);
  return {200, snapshot(*s)};
}

}  // namespace altgame::cli
