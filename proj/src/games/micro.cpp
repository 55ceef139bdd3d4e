#include <map>

#include "altgame/games.hpp"

namespace altgame::games {

namespace {

// N = 0 game given by its leaf table, indexed [a_0][b_0].
GameDef leaf_table(std::string name, std::vector<std::string> a, std::vector<std::string> b,
                   std::vector<std::vector<GameResultTag>> leaves) {
  GameDef::Parts parts;
  parts.name = std::move(name);
  parts.horizon = 0;
  parts.p1 = Alphabet(std::move(a));
  parts.p2 = Alphabet(std::move(b));
  parts.payoff = [leaves = std::move(leaves)](const FullHistory& h) {
    return outcome_to_payoffs(leaves.at(h.a[0].index).at(h.b[0].index));
  };
  parts.note = [](const FullHistory&) { return std::string(); };
  return GameDef(std::move(parts));
}

constexpr auto kWin1 = GameResultTag::P1Win;
constexpr auto kWin2 = GameResultTag::P2Win;
constexpr auto kDraw = GameResultTag::Draw;

}  // namespace

GameDef make_t0() { return leaf_table("t0", {"a"}, {"b"}, {{kDraw}}); }

GameDef make_w1() { return leaf_table("w1", {"L", "R"}, {"x", "y"}, {{kWin2, kDraw}, {kWin1, kWin1}}); }

GameDef make_w2() { return leaf_table("w2", {"L", "R"}, {"x", "y"}, {{kWin2, kWin2}, {kWin2, kWin2}}); }

GameDef make_d1() { return leaf_table("d1", {"L", "R"}, {"x", "y"}, {{kDraw, kWin2}, {kWin1, kDraw}}); }

}  // namespace altgame::games
