#pragma once

#include <functional>
#include <span>
#include <utility>

#include "altgame/game.hpp"

namespace altgame {

/// Full-memory pure strategy for player P: a deterministic rule over the
/// history prefix at which P is to move.
template <Player P>
class Strategy {
 public:
  using Rule = std::function<ActionId(const HistoryPrefix&)>;

  Strategy() = default;
  explicit Strategy(Rule rule) : rule_(std::move(rule)) {}

  ActionId operator()(const HistoryPrefix& prefix) const { return rule_(prefix); }
  explicit operator bool() const { return static_cast<bool>(rule_); }

 private:
  Rule rule_;
};

/// Basic strategy for player P: the decision depends only on the rival's
/// moves. For player 1 the argument is b^{t-1} (length t at stage t); for
/// player 2 it is a^t, which includes the current stage's a_t.
template <Player P>
class BasicStrategy {
 public:
  using Rule = std::function<ActionId(std::span<const ActionId>)>;

  BasicStrategy() = default;
  explicit BasicStrategy(Rule rule) : rule_(std::move(rule)) {}

  ActionId operator()(std::span<const ActionId> opponent_moves) const {
    return rule_(opponent_moves);
  }
  explicit operator bool() const { return static_cast<bool>(rule_); }

  Strategy<P> as_strategy() const {
    return Strategy<P>([rule = rule_](const HistoryPrefix& h) {
      return rule(h.moves_of(opponent(P)));
    });
  }

 private:
  Rule rule_;
};

using Strategy1 = Strategy<Player::P1>;
using Strategy2 = Strategy<Player::P2>;
using BasicStrategy1 = BasicStrategy<Player::P1>;
using BasicStrategy2 = BasicStrategy<Player::P2>;

template <Player P>
BasicStrategy<P> constant_strategy(ActionId action) {
  return BasicStrategy<P>([action](std::span<const ActionId>) { return action; });
}

}  // namespace altgame
