#pragma once

// Adapter from a position-based rule set to the history-based GameDef.
// Histories are replayed from the initial position; once the rules report
// an outcome the game is absorbed and only "pass" (appended to both
// alphabets) is legal until the horizon.
//
// Rules must provide:
//   using State;
//   State initial() const;
//   const std::vector<std::string>& labels(Player) const;
//   std::vector<std::uint32_t> moves(const State&, Player) const;   // ascending
//   State apply(const State&, Player, std::uint32_t) const;
//   std::optional<GameResultTag> outcome(const State&) const;
//   GameResultTag horizon_outcome(const State&) const;
//   std::string key(const State&) const;

#include <algorithm>
#include <memory>
#include <string>

#include "altgame/games.hpp"

namespace altgame::games::detail {

template <class Rules>
typename Rules::State replay(const Rules& rules, const HistoryPrefix& h) {
  auto state = rules.initial();
  for (std::size_t i = 0; i < h.plies(); ++i) {
    const Player mover = i % 2 == 0 ? Player::P1 : Player::P2;
    const std::uint32_t x = h.ply(i).index;
    const auto pass = static_cast<std::uint32_t>(rules.labels(mover).size());
    if (rules.outcome(state)) {
      if (x != pass) throw IllegalMove(ErrorCode::IllegalAction, mover, i, "game over; only pass is legal");
      continue;
    }
    auto legal = rules.moves(state, mover);
    if (!std::binary_search(legal.begin(), legal.end(), x))
      throw IllegalMove(ErrorCode::IllegalAction, mover, i, "illegal move at ply " + std::to_string(i));
    state = rules.apply(state, mover, x);
  }
  return state;
}

template <class Rules>
GameDef make_rule_game(std::shared_ptr<const Rules> rules, std::string name, int horizon) {
  auto with_pass = [](std::vector<std::string> labels) {
    labels.emplace_back(kPassLabel);
    return labels;
  };
  GameDef::Parts parts;
  parts.name = std::move(name);
  parts.horizon = horizon;
  parts.p1 = Alphabet(with_pass(rules->labels(Player::P1)));
  parts.p2 = Alphabet(with_pass(rules->labels(Player::P2)));
  parts.payoff = [rules](const FullHistory& h) {
    auto state = replay(*rules, h);
    auto o = rules->outcome(state);
    return outcome_to_payoffs(o ? *o : rules->horizon_outcome(state));
  };
  parts.legal = [rules](const HistoryPrefix& h) {
    auto state = replay(*rules, h);
    const Player mover = h.to_move();
    std::vector<ActionId> out;
    if (rules->outcome(state)) {
      out.push_back(ActionId{static_cast<std::uint32_t>(rules->labels(mover).size())});
      return out;
    }
    for (auto x : rules->moves(state, mover)) out.push_back(ActionId{x});
    return out;
  };
  parts.key = [rules](const HistoryPrefix& h) {
    auto state = replay(*rules, h);
    std::string key = rules->key(state);
    if (auto o = rules->outcome(state)) key += std::string("#") + to_string(*o);
    return key;
  };
  parts.note = [rules](const FullHistory& h) {
    auto state = replay(*rules, h);
    if (auto o = rules->outcome(state)) return std::string(to_string(*o));
    return std::string(to_string(rules->horizon_outcome(state))) + " at the horizon";
  };
  return GameDef(std::move(parts));
}

}  // namespace altgame::games::detail
