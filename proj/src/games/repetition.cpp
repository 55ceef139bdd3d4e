#include <map>

#include "altgame/games.hpp"
#include "rule_game.hpp"

namespace altgame::games {

namespace {

class ShuttleRules {
 public:
  struct State {
    int p1 = 0;
    int p2 = 2;
  };

  State initial() const { return {}; }
  const std::vector<std::string>& labels(Player) const { return labels_; }

  std::vector<std::uint32_t> moves(const State& s, Player p) const {
    const int own = p == Player::P1 ? s.p1 : s.p2;
    const int other = p == Player::P1 ? s.p2 : s.p1;
    std::vector<std::uint32_t> out;
    if (own - 1 >= 0 && own - 1 != other) out.push_back(0);
    if (own + 1 <= 2 && own + 1 != other) out.push_back(1);
    out.push_back(2);
    return out;
  }

  State apply(const State& s, Player p, std::uint32_t x) const {
    State next = s;
    int& own = p == Player::P1 ? next.p1 : next.p2;
    if (x == 0) --own;
    if (x == 1) ++own;
    return next;
  }

  std::optional<GameResultTag> outcome(const State&) const { return std::nullopt; }
  GameResultTag horizon_outcome(const State&) const { return GameResultTag::Draw; }
  std::string key(const State& s) const { return std::to_string(s.p1) + std::to_string(s.p2); }

 private:
  std::vector<std::string> labels_{"L", "R", "stay"};
};

struct Tracking {
  std::map<std::string, int> counts;
  std::optional<std::size_t> absorbed_at;  // ply index of the move that triggered the draw
};

ActionId pass_of(const Alphabet& alphabet) { return *alphabet.find(kPassLabel); }

Alphabet ensure_pass(const Alphabet& alphabet) {
  if (alphabet.find(kPassLabel)) return alphabet;
  auto labels = alphabet.labels();
  labels.emplace_back(kPassLabel);
  return Alphabet(std::move(labels));
}

}  // namespace

GameDef make_shuttle(int horizon) {
  return detail::make_rule_game(std::make_shared<const ShuttleRules>(), "shuttle", horizon);
}

GameDef repetition_wrap(const GameDef& game, int limit, bool count_initial) {
  if (!game.has_state_key())
    throw GameError(ErrorCode::MissingStateKey, "repetition needs a position key; " + game.name() + " has none");
  if (limit < 1) throw std::invalid_argument("repetition limit must be positive");

  const Alphabet p1 = ensure_pass(game.actions_p1());
  const Alphabet p2 = ensure_pass(game.actions_p2());
  const ActionId pass1 = pass_of(p1), pass2 = pass_of(p2);

  // Pass padding after the wrapped game has ended repeats its final
  // position; that is not a repetition.
  auto inner_over = [game](const HistoryPrefix& cur) {
    const auto legal = game.legal_actions(cur);
    const auto pass = game.alphabet(cur.to_move()).find(kPassLabel);
    return pass && legal.size() == 1 && legal[0] == *pass;
  };
  auto track = [game, limit, count_initial, pass1, pass2, inner_over](const HistoryPrefix& h) {
    Tracking t;
    HistoryPrefix cur;
    auto position = [&] { return game.state_key(cur) + (cur.plies() % 2 == 0 ? "|1" : "|2"); };
    if (count_initial) ++t.counts[position()];
    for (std::size_t i = 0; i < h.plies(); ++i) {
      const ActionId x = h.ply(i);
      if (t.absorbed_at) {
        const ActionId pass = i % 2 == 0 ? pass1 : pass2;
        if (x != pass)
          throw IllegalMove(ErrorCode::IllegalAction, i % 2 == 0 ? Player::P1 : Player::P2, i,
                            "drawn by repetition; only pass is legal");
        continue;
      }
      const bool padding = inner_over(cur);
      cur.push(x);
      const int c = ++t.counts[position()];
      if (c >= 2 && c >= limit && !padding) t.absorbed_at = i;
    }
    return t;
  };

  GameDef::Parts parts;
  parts.name = game.name();
  parts.horizon = game.horizon();
  parts.p1 = p1;
  parts.p2 = p2;
  parts.payoff = [game, track](const FullHistory& h) {
    if (track(h).absorbed_at) return outcome_to_payoffs(GameResultTag::Draw);
    return game.payoff(h);
  };
  parts.legal = [game, track, pass1, pass2](const HistoryPrefix& h) {
    if (track(h).absorbed_at) return std::vector<ActionId>{h.to_move() == Player::P1 ? pass1 : pass2};
    return game.legal_actions(h);
  };
  parts.key = [game, track](const HistoryPrefix& h) {
    Tracking t = track(h);
    if (t.absorbed_at) return std::string("repetition-draw");
    std::string key = game.state_key(h) + "#";
    for (const auto& [pos, count] : t.counts) key += pos + "=" + std::to_string(count) + ";";
    return key;
  };
  parts.note = [game, track](const FullHistory& h) {
    Tracking t = track(h);
    if (t.absorbed_at) return "DRAW by repetition at ply " + std::to_string(*t.absorbed_at);
    return game.note(h);
  };
  return GameDef(std::move(parts));
}

GameDef make_repdemo(int limit, bool count_initial) {
  GameDef wrapped = repetition_wrap(make_shuttle(5), limit, count_initial);
  GameDef::Parts parts = wrapped.parts();
  parts.name = "repdemo";
  return GameDef(std::move(parts));
}

}  // namespace altgame::games
