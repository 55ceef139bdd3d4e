#include <unordered_map>

#include "altgame/gdf.hpp"
#include "altgame/kernels.hpp"

namespace altgame::gdf {

namespace {

std::vector<std::string> declared(const Alphabet& alphabet) {
  std::vector<std::string> out;
  for (const auto& l : alphabet.labels())
    if (l != kPassLabel) out.push_back(l);
  return out;
}

}  // namespace

Document export_game(const GameDef& game, IllegalPolicy policy) {
  Document doc;
  doc.name = game.name();
  doc.horizon = game.horizon();
  doc.p1_actions = declared(game.actions_p1());
  doc.p2_actions = declared(game.actions_p2());
  doc.illegal_policy = policy;

  std::unordered_map<std::string, std::string> ids;  // node key -> state id
  auto state_id = [&](const HistoryPrefix& h) {
    if (game.has_state_key()) return kernels::node_key(game, h);
    std::string id = "h:";
    for (std::size_t i = 0; i < h.plies(); ++i) {
      if (i) id += ',';
      id += game.alphabet(i % 2 == 0 ? Player::P1 : Player::P2).label(h.ply(i));
    }
    return id;
  };

  HistoryPrefix h;
  auto visit = [&](auto&& self) -> std::string {
    std::string id = state_id(h);
    if (ids.contains(id)) return id;
    ids.emplace(id, id);
    StateNode node;
    node.id = id;
    node.turn = h.to_move();
    const Alphabet& alphabet = game.alphabet(node.turn);
    const auto pass = alphabet.find(kPassLabel);

    if (h.plies() == game.total_plies()) {
      node.terminal = game.payoff(h);
    } else {
      auto legal = game.legal_actions(h);
      if (pass && legal.size() == 1 && legal.front() == *pass) {
        HistoryPrefix full = h;
        while (full.plies() < game.total_plies()) {
          auto p = game.alphabet(full.to_move()).find(kPassLabel);
          if (!p) throw GameError(ErrorCode::InvalidState, "absorbed position without a pass action");
          full.push(*p);
        }
        node.terminal = game.payoff(full);
      } else {
        for (ActionId x : legal) {
          if (pass && x == *pass)
            throw GameError(ErrorCode::InvalidState, "pass is legal alongside other moves at '" + id + "'");
          h.push(x);
          std::string target = self(self);
          h.pop();
          node.moves.emplace(alphabet.label(x), std::move(target));
        }
      }
    }
    doc.states.push_back(std::move(node));
    return id;
  };
  doc.initial = visit(visit);
  return doc;
}

}  // namespace altgame::gdf
