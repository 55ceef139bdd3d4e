#include <array>

#include "altgame/games.hpp"
#include "rule_game.hpp"

namespace altgame::games {

namespace {

// Squares are indexed row * 3 + col; row 0 is rank 1 (white's home rank).
// White (player 1) advances towards rank 3, black towards rank 1.
class HexapawnRules {
 public:
  struct Move {
    int from;
    int to;
    bool capture;
  };

  struct State {
    std::array<char, 9> board{'W', 'W', 'W', '.', '.', '.', 'B', 'B', 'B'};
    std::optional<GameResultTag> result;
  };

  HexapawnRules() {
    build(Player::P1);
    build(Player::P2);
  }

  State initial() const { return {}; }
  const std::vector<std::string>& labels(Player p) const { return labels_[side(p)]; }

  std::vector<std::uint32_t> moves(const State& s, Player p) const {
    std::vector<std::uint32_t> out;
    const char own = p == Player::P1 ? 'W' : 'B';
    const char enemy = p == Player::P1 ? 'B' : 'W';
    const auto& table = moves_[side(p)];
    for (std::uint32_t i = 0; i < table.size(); ++i) {
      const Move& m = table[i];
      if (s.board[m.from] != own) continue;
      if (m.capture ? s.board[m.to] == enemy : s.board[m.to] == '.') out.push_back(i);
    }
    return out;
  }

  State apply(const State& s, Player p, std::uint32_t x) const {
    const Move& m = moves_[side(p)][x];
    State next = s;
    next.board[m.to] = next.board[m.from];
    next.board[m.from] = '.';
    const auto win = p == Player::P1 ? GameResultTag::P1Win : GameResultTag::P2Win;
    const int last_rank = p == Player::P1 ? 2 : 0;
    const char enemy = p == Player::P1 ? 'B' : 'W';
    bool enemy_left = false;
    for (char c : next.board) enemy_left |= c == enemy;
    // Promotion, capture-all, and stalemating the opponent all win.
    if (m.to / 3 == last_rank || !enemy_left || moves(next, opponent(p)).empty()) next.result = win;
    return next;
  }

  std::optional<GameResultTag> outcome(const State& s) const { return s.result; }
  GameResultTag horizon_outcome(const State&) const {
    throw GameError(ErrorCode::InvalidState, "hexapawn reached the horizon unfinished");
  }
  std::string key(const State& s) const { return std::string(s.board.begin(), s.board.end()); }

 private:
  static int side(Player p) { return p == Player::P1 ? 0 : 1; }

  static std::string square(int sq) {
    return std::string(1, static_cast<char>('a' + sq % 3)) + std::string(1, static_cast<char>('1' + sq / 3));
  }

  void build(Player p) {
    const int dir = p == Player::P1 ? 1 : -1;
    const int ranks[2] = {p == Player::P1 ? 0 : 2, 1};
    for (int rank : ranks) {
      for (int col = 0; col < 3; ++col) {
        const int from = rank * 3 + col;
        const int to_rank = rank + dir;
        moves_[side(p)].push_back({from, to_rank * 3 + col, false});
        labels_[side(p)].push_back(square(from) + "-" + square(to_rank * 3 + col));
        for (int dc : {-1, 1}) {
          if (col + dc < 0 || col + dc > 2) continue;
          const int to = to_rank * 3 + col + dc;
          moves_[side(p)].push_back({from, to, true});
          labels_[side(p)].push_back(square(from) + "x" + square(to));
        }
      }
    }
  }

  std::vector<Move> moves_[2];
  std::vector<std::string> labels_[2];
};

}  // namespace

GameDef make_hexapawn() {
  return detail::make_rule_game(std::make_shared<const HexapawnRules>(), "hexapawn", 3);
}

}  // namespace altgame::games
