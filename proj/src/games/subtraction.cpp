#include "altgame/games.hpp"
#include "rule_game.hpp"

namespace altgame::games {

namespace {

class SubtractionRules {
 public:
  struct State {
    int pile = 0;
    std::optional<GameResultTag> result;
  };

  explicit SubtractionRules(int pile) : pile_(pile) {}

  State initial() const { return {pile_, std::nullopt}; }
  const std::vector<std::string>& labels(Player) const { return labels_; }

  std::vector<std::uint32_t> moves(const State& s, Player) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t k = 0; k < 2; ++k)
      if (s.pile >= static_cast<int>(k) + 1) out.push_back(k);
    return out;
  }

  State apply(const State& s, Player mover, std::uint32_t x) const {
    State next{s.pile - static_cast<int>(x) - 1, std::nullopt};
    if (next.pile == 0) next.result = mover == Player::P1 ? GameResultTag::P1Win : GameResultTag::P2Win;
    return next;
  }

  std::optional<GameResultTag> outcome(const State& s) const { return s.result; }
  GameResultTag horizon_outcome(const State&) const {
    throw GameError(ErrorCode::InvalidState, "subtraction game reached the horizon unfinished");
  }
  std::string key(const State& s) const { return std::to_string(s.pile); }

 private:
  int pile_;
  std::vector<std::string> labels_{"1", "2"};
};

}  // namespace

GameDef make_subtraction(int pile, int horizon) {
  return detail::make_rule_game(std::make_shared<const SubtractionRules>(pile),
                                "sub" + std::to_string(pile), horizon);
}

}  // namespace altgame::games
