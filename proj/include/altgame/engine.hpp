#pragma once

#include <span>

#include "altgame/game.hpp"
#include "altgame/strategy.hpp"

namespace altgame {

/// f(h) = u(h) - v(h), exact.
Rational diff(const GameDef& game, const FullHistory& h);

/// h(xi, eta): alternates a_t = xi(...), b_t = eta(...) for N+1 stages.
/// Throws IllegalMove (ActionOutOfRange / IllegalAction) naming the
/// offending player.
FullHistory playout(const GameDef& game, const Strategy1& xi, const Strategy2& eta);

/// (U, V) = (u(h), v(h)) for h = playout(game, xi, eta).
Payoff payoffs(const GameDef& game, const Strategy1& xi, const Strategy2& eta);

/// h(xi, b^N): player 2's moves are read verbatim from `bseq`.
FullHistory respond_p1(const GameDef& game, const Strategy1& xi, std::span<const ActionId> bseq);

/// h(a^N, eta): player 1's moves are read verbatim from `aseq`.
FullHistory respond_p2(const GameDef& game, std::span<const ActionId> aseq, const Strategy2& eta);

/// Basic form of xi: own moves are reconstructed by replaying xi against
/// the rival's sequence. Plays identically to xi against every opponent.
BasicStrategy1 basicize_p1(const GameDef& game, const Strategy1& xi);
BasicStrategy2 basicize_p2(const GameDef& game, const Strategy2& eta);

/// Appends `action` for the player to move after checking alphabet range
/// and legality.
void push_checked(const GameDef& game, HistoryPrefix& h, ActionId action);

}  // namespace altgame
