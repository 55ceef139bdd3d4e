#include <exception>
#include <limits>
#include <mutex>

#include "altgame/engine.hpp"
#include "altgame/kernels.hpp"
#include "altgame/verifier.hpp"

namespace altgame {

namespace {

void over_budget(const EnumerationBudget& budget, Player p) {
  throw BudgetExceeded(std::string(to_string(p)) + " strategy space exceeds " +
                       std::to_string(budget.max_strategies) + " strategies");
}

// Strategies decide per history, never per merged state.
std::string exact_key(const HistoryPrefix& h) { return kernels::history_key(h); }

}  // namespace

template <Player P>
Strategy<P> StrategySpace<P>::at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("strategy index out of range");
  auto layout = points_;
  return Strategy<P>([layout, index](const HistoryPrefix& h) {
    auto it = layout->index.find(exact_key(h));
    if (it == layout->index.end())
      throw GameError(ErrorCode::InvalidState, "history outside the enumerated strategy space");
    const auto& point = layout->points[it->second];
    return point.options[(index / point.stride) % point.options.size()];
  });
}

template <Player P>
StrategySpace<P> enumerate_strategies(const GameDef& game, const EnumerationBudget& budget) {
  auto layout = std::make_shared<typename StrategySpace<P>::Layout>();
  std::uint64_t size = 1;

  HistoryPrefix h;
  auto visit = [&](auto&& self) -> void {
    if (h.plies() == game.total_plies()) return;
    auto legal = game.legal_actions(h);
    if (h.to_move() == P) {
      if (legal.empty()) throw GameError(ErrorCode::InvalidState, "no legal action");
      if (size > budget.max_strategies / legal.size()) over_budget(budget, P);
      size *= legal.size();
      layout->index.emplace(exact_key(h), layout->points.size());
      layout->points.push_back({legal, 1});
    }
    for (ActionId x : legal) {
      h.push(x);
      self(self);
      h.pop();
    }
  };
  visit(visit);

  // Last decision point varies fastest.
  std::uint64_t stride = 1;
  for (auto it = layout->points.rbegin(); it != layout->points.rend(); ++it) {
    it->stride = stride;
    stride *= it->options.size();
  }

  StrategySpace<P> space;
  space.points_ = std::move(layout);
  space.size_ = size;
  return space;
}

template class StrategySpace<Player::P1>;
template class StrategySpace<Player::P2>;
template StrategySpace<Player::P1> enumerate_strategies<Player::P1>(const GameDef&, const EnumerationBudget&);
template StrategySpace<Player::P2> enumerate_strategies<Player::P2>(const GameDef&, const EnumerationBudget&);

namespace {

// Explicit game tree for profile evaluation: interior nodes record the
// mover's decision-point number and the children in option order; leaves
// record the comparison of U against V.
struct Tree {
  struct Node {
    Player mover = Player::P1;
    std::uint32_t point = 0;
    std::vector<std::uint32_t> children;
    int cmp = 0;  // leaves: -1 (U < V), 0, +1 (U > V)
  };
  std::vector<Node> nodes;
  std::vector<std::uint64_t> radix[2];
  std::vector<std::uint64_t> stride[2];
};

Tree compile_tree(const GameDef& game) {
  Tree tree;
  HistoryPrefix h;
  auto build = [&](auto&& self) -> std::uint32_t {
    const auto id = static_cast<std::uint32_t>(tree.nodes.size());
    tree.nodes.emplace_back();
    if (h.plies() == game.total_plies()) {
      Payoff p = game.payoff(h);
      tree.nodes[id].cmp = p.u > p.v ? 1 : (p.u < p.v ? -1 : 0);
      return id;
    }
    const Player mover = h.to_move();
    const int side = mover == Player::P1 ? 0 : 1;
    auto legal = game.legal_actions(h);
    tree.nodes[id].mover = mover;
    tree.nodes[id].point = static_cast<std::uint32_t>(tree.radix[side].size());
    tree.radix[side].push_back(legal.size());
    std::vector<std::uint32_t> children;
    for (ActionId x : legal) {
      h.push(x);
      children.push_back(self(self));
      h.pop();
    }
    tree.nodes[id].children = std::move(children);
    return id;
  };
  build(build);
  for (int side = 0; side < 2; ++side) {
    tree.stride[side].assign(tree.radix[side].size(), 1);
    std::uint64_t s = 1;
    for (std::size_t k = tree.radix[side].size(); k-- > 0;) {
      tree.stride[side][k] = s;
      s *= tree.radix[side][k];
    }
  }
  return tree;
}

int profile_cmp(const Tree& tree, std::uint64_t xi, std::uint64_t eta) {
  std::uint32_t node = 0;
  while (!tree.nodes[node].children.empty()) {
    const auto& n = tree.nodes[node];
    const int side = n.mover == Player::P1 ? 0 : 1;
    const std::uint64_t index = side == 0 ? xi : eta;
    const std::uint64_t digit = (index / tree.stride[side][n.point]) % tree.radix[side][n.point];
    node = n.children[digit];
  }
  return tree.nodes[node].cmp;
}

struct Verdict {
  bool p1_wins = false;
  bool p2_wins = false;
  bool p1_unbeatable = false;
  bool p2_unbeatable = false;
};

Case decide(const Verdict& v) {
  if (v.p1_wins && v.p2_wins)
    throw GameError(ErrorCode::InvalidState, "oracle found winning strategies for both players");
  if (v.p1_wins) return Case::I;
  if (v.p2_wins) return Case::II;
  if (!v.p1_unbeatable || !v.p2_unbeatable)
    throw GameError(ErrorCode::InvalidState, "neither player wins yet an unbeatable strategy is missing");
  return Case::III;
}

std::uint64_t space_size(const std::vector<std::uint64_t>& radix, const EnumerationBudget& budget, Player p) {
  std::uint64_t size = 1;
  for (auto r : radix) {
    if (size > budget.max_strategies / r) over_budget(budget, p);
    size *= r;
  }
  return size;
}

}  // namespace

Case oracle_classify(const GameDef& game, const EnumerationBudget& budget) {
  // Size checks first so oversized games are refused without compiling the tree.
  enumerate_strategies<Player::P1>(game, budget);
  enumerate_strategies<Player::P2>(game, budget);

  const Tree tree = compile_tree(game);
  const std::uint64_t n1 = space_size(tree.radix[0], budget, Player::P1);
  const std::uint64_t n2 = space_size(tree.radix[1], budget, Player::P2);

  // col_all_neg[j]: eta_j beats every xi so far; col_all_nonpos[j]: eta_j
  // is unbeaten so far.
  std::vector<char> col_all_neg(n2, 1), col_all_nonpos(n2, 1);
  Verdict verdict;
  std::mutex merge;

#pragma omp parallel
  {
    std::vector<char> neg(n2, 1), nonpos(n2, 1);
    bool p1_wins = false, p1_unbeatable = false;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n1); ++i) {
      bool row_pos = true, row_nonneg = true;
      for (std::uint64_t j = 0; j < n2; ++j) {
        const int c = profile_cmp(tree, static_cast<std::uint64_t>(i), j);
        row_pos &= c > 0;
        row_nonneg &= c >= 0;
        neg[j] &= c < 0;
        nonpos[j] &= c <= 0;
      }
      p1_wins |= row_pos;
      p1_unbeatable |= row_nonneg;
    }
    std::lock_guard lock(merge);
    verdict.p1_wins |= p1_wins;
    verdict.p1_unbeatable |= p1_unbeatable;
    for (std::uint64_t j = 0; j < n2; ++j) {
      col_all_neg[j] &= neg[j];
      col_all_nonpos[j] &= nonpos[j];
    }
  }
  for (std::uint64_t j = 0; j < n2; ++j) {
    verdict.p2_wins |= col_all_neg[j] != 0;
    verdict.p2_unbeatable |= col_all_nonpos[j] != 0;
  }
  return decide(verdict);
}

namespace reference {

Case oracle_classify_serial(const GameDef& game, const EnumerationBudget& budget) {
  auto s1 = enumerate_strategies<Player::P1>(game, budget);
  auto s2 = enumerate_strategies<Player::P2>(game, budget);
  std::vector<Strategy2> etas;
  s2.for_each([&](Strategy2 eta) { etas.push_back(std::move(eta)); });

  std::vector<char> col_all_neg(etas.size(), 1), col_all_nonpos(etas.size(), 1);
  Verdict verdict;
  s1.for_each([&](const Strategy1& xi) {
    bool row_pos = true, row_nonneg = true;
    for (std::size_t j = 0; j < etas.size(); ++j) {
      Payoff p = payoffs(game, xi, etas[j]);
      row_pos &= p.u > p.v;
      row_nonneg &= p.u >= p.v;
      col_all_neg[j] &= p.u < p.v;
      col_all_nonpos[j] &= p.u <= p.v;
    }
    verdict.p1_wins |= row_pos;
    verdict.p1_unbeatable |= row_nonneg;
  });
  for (std::size_t j = 0; j < etas.size(); ++j) {
    verdict.p2_wins |= col_all_neg[j] != 0;
    verdict.p2_unbeatable |= col_all_nonpos[j] != 0;
  }
  return decide(verdict);
}

}  // namespace reference

}  // namespace altgame
