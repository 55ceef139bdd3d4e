#include "altgame/engine.hpp"

#include <string>

namespace altgame {

void push_checked(const GameDef& game, HistoryPrefix& h, ActionId action) {
  const Player mover = h.to_move();
  const std::size_t ply = h.plies();
  if (!game.alphabet(mover).contains(action))
    throw IllegalMove(ErrorCode::ActionOutOfRange, mover, ply,
                      std::string(to_string(mover)) + " action index " +
                          std::to_string(action.index) + " out of range at ply " +
                          std::to_string(ply));
  if (game.restricts_legality() && !game.is_legal(h, action))
    throw IllegalMove(ErrorCode::IllegalAction, mover, ply,
                      std::string(to_string(mover)) + " action '" +
                          game.alphabet(mover).label(action) + "' is illegal at ply " +
                          std::to_string(ply));
  h.push(action);
}

Rational diff(const GameDef& game, const FullHistory& h) {
  Payoff p = game.payoff(h);
  return p.u - p.v;
}

FullHistory playout(const GameDef& game, const Strategy1& xi, const Strategy2& eta) {
  FullHistory h;
  for (std::size_t t = 0; t < game.stages(); ++t) {
    push_checked(game, h, xi(h));
    push_checked(game, h, eta(h));
  }
  return h;
}

Payoff payoffs(const GameDef& game, const Strategy1& xi, const Strategy2& eta) {
  return game.payoff(playout(game, xi, eta));
}

FullHistory respond_p1(const GameDef& game, const Strategy1& xi, std::span<const ActionId> bseq) {
  if (bseq.size() != game.stages())
    throw GameError(ErrorCode::LengthMismatch, "player 2 sequence has length " +
                                                   std::to_string(bseq.size()) + ", expected " +
                                                   std::to_string(game.stages()));
  FullHistory h;
  for (std::size_t t = 0; t < game.stages(); ++t) {
    push_checked(game, h, xi(h));
    push_checked(game, h, bseq[t]);
  }
  return h;
}

FullHistory respond_p2(const GameDef& game, std::span<const ActionId> aseq, const Strategy2& eta) {
  if (aseq.size() != game.stages())
    throw GameError(ErrorCode::LengthMismatch, "player 1 sequence has length " +
                                                   std::to_string(aseq.size()) + ", expected " +
                                                   std::to_string(game.stages()));
  FullHistory h;
  for (std::size_t t = 0; t < game.stages(); ++t) {
    push_checked(game, h, aseq[t]);
    push_checked(game, h, eta(h));
  }
  return h;
}

BasicStrategy1 basicize_p1(const GameDef& game, const Strategy1& xi) {
  const std::size_t stages = game.stages();
  return BasicStrategy1([xi, stages](std::span<const ActionId> bseq) {
    if (bseq.size() >= stages)
      throw GameError(ErrorCode::LengthMismatch, "opponent prefix longer than the horizon");
    HistoryPrefix h;
    for (std::size_t s = 0; s < bseq.size(); ++s) {
      h.push(xi(h));
      h.push(bseq[s]);
    }
    return xi(h);
  });
}

BasicStrategy2 basicize_p2(const GameDef& game, const Strategy2& eta) {
  const std::size_t stages = game.stages();
  return BasicStrategy2([eta, stages](std::span<const ActionId> aseq) {
    if (aseq.empty() || aseq.size() > stages)
      throw GameError(ErrorCode::LengthMismatch, "player 1 prefix length out of range");
    HistoryPrefix h;
    for (std::size_t s = 0; s + 1 < aseq.size(); ++s) {
      h.push(aseq[s]);
      h.push(eta(h));
    }
    h.push(aseq.back());
    return eta(h);
  });
}

}  // namespace altgame
