#include <array>

#include "altgame/games.hpp"
#include "rule_game.hpp"

namespace altgame::games {

namespace {

// Cells are indexed row-major from a1; labels name column then row.
class TicTacToeRules {
 public:
  struct State {
    std::array<char, 9> cells{'.', '.', '.', '.', '.', '.', '.', '.', '.'};
    std::optional<GameResultTag> result;
  };

  State initial() const { return {}; }
  const std::vector<std::string>& labels(Player) const { return labels_; }

  std::vector<std::uint32_t> moves(const State& s, Player) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < 9; ++i)
      if (s.cells[i] == '.') out.push_back(i);
    return out;
  }

  State apply(const State& s, Player mover, std::uint32_t x) const {
    State next = s;
    const char mark = mover == Player::P1 ? 'x' : 'o';
    next.cells[x] = mark;
    static constexpr int kLines[8][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6},
                                         {1, 4, 7}, {2, 5, 8}, {0, 4, 8}, {2, 4, 6}};
    for (const auto& line : kLines)
      if (next.cells[line[0]] == mark && next.cells[line[1]] == mark && next.cells[line[2]] == mark)
        next.result = mover == Player::P1 ? GameResultTag::P1Win : GameResultTag::P2Win;
    if (!next.result && moves(next, mover).empty()) next.result = GameResultTag::Draw;
    return next;
  }

  std::optional<GameResultTag> outcome(const State& s) const { return s.result; }
  GameResultTag horizon_outcome(const State&) const {
    throw GameError(ErrorCode::InvalidState, "tictactoe reached the horizon unfinished");
  }
  std::string key(const State& s) const { return std::string(s.cells.begin(), s.cells.end()); }

 private:
  std::vector<std::string> labels_{"a1", "b1", "c1", "a2", "b2", "c2", "a3", "b3", "c3"};
};

}  // namespace

GameDef make_tictactoe() {
  // X moves at stages 0..4, O at 0..3 and then passes.
  return detail::make_rule_game(std::make_shared<const TicTacToeRules>(), "tictactoe", 4);
}

}  // namespace altgame::games
