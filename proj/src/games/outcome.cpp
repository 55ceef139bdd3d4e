#include "altgame/games.hpp"

namespace altgame::games {

const char* to_string(GameResultTag tag) {
  switch (tag) {
    case GameResultTag::P1Win: return "P1_WIN";
    case GameResultTag::P2Win: return "P2_WIN";
    case GameResultTag::Draw: return "DRAW";
    case GameResultTag::P1Illegal: return "P1_ILLEGAL";
    case GameResultTag::P2Illegal: return "P2_ILLEGAL";
  }
  return "?";
}

Payoff outcome_to_payoffs(GameResultTag tag) {
  switch (tag) {
    case GameResultTag::P1Win: return {Rational(1), Rational(0)};
    case GameResultTag::P2Win: return {Rational(0), Rational(1)};
    case GameResultTag::Draw: return {Rational(1, 2), Rational(1, 2)};
    case GameResultTag::P1Illegal: return {Rational(0), Rational(1)};
    case GameResultTag::P2Illegal: return {Rational(1), Rational(0)};
  }
  return {};
}

GameResultTag tag_of(const Payoff& p) {
  if (p.u > p.v) return GameResultTag::P1Win;
  if (p.u < p.v) return GameResultTag::P2Win;
  return GameResultTag::Draw;
}

}  // namespace altgame::games
