#include "oracles.hpp"

#include <map>
#include <stdexcept>

namespace oracle {

using altgame::Case;
using altgame::HistoryPrefix;

Rational leaf_f(const GameDef& game, const History& h) {
  const auto p = game.payoff(h);
  return p.u - p.v;
}

namespace {

void collect_leaves(const GameDef& game, History& h, std::vector<History>& out) {
  if (h.plies() == game.total_plies()) {
    out.push_back(h);
    return;
  }
  for (ActionId a : game.legal_actions(h)) {
    h.push(a);
    collect_leaves(game, h, out);
    h.pop();
  }
}

Rational value_at(const GameDef& game, History& h) {
  if (h.plies() == game.total_plies()) return leaf_f(game, h);
  std::optional<Rational> best;
  const bool max = h.to_move() == Player::P1;
  for (ActionId a : game.legal_actions(h)) {
    h.push(a);
    Rational v = value_at(game, h);
    h.pop();
    if (!best || (max ? v > *best : v < *best)) best = v;
  }
  return *best;
}

bool force_at(const GameDef& game, History& h, Player owner,
              const std::function<bool(const Rational&)>& keep) {
  if (h.plies() == game.total_plies()) return keep(leaf_f(game, h));
  const bool mine = h.to_move() == owner;
  for (ActionId a : game.legal_actions(h)) {
    h.push(a);
    bool child = force_at(game, h, owner, keep);
    h.pop();
    if (mine && child) return true;
    if (!mine && !child) return false;
  }
  return !mine;
}

void collect_nodes(const GameDef& game, History& h, NormalForm& nf) {
  if (h.plies() == game.total_plies()) return;
  auto legal = game.legal_actions(h);
  if (h.to_move() == Player::P1) {
    nf.p1_nodes.push_back(h);
    nf.p1_options.push_back(legal);
    nf.p1_count *= legal.size();
  } else {
    nf.p2_nodes.push_back(h);
    nf.p2_options.push_back(legal);
    nf.p2_count *= legal.size();
  }
  for (ActionId a : legal) {
    h.push(a);
    collect_nodes(game, h, nf);
    h.pop();
  }
}

ActionId table_choice(const std::vector<History>& nodes, const std::vector<std::vector<ActionId>>& opts,
                      std::uint64_t index, const History& at) {
  // Mixed radix, first node most significant.
  std::uint64_t suffix = 1;
  for (std::size_t k = nodes.size(); k-- > 0;) {
    if (nodes[k] == at) return opts[k][(index / suffix) % opts[k].size()];
    suffix *= opts[k].size();
  }
  throw std::logic_error("position missing from the normal form");
}

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdull;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ull;
  return x ^ (x >> 33);
}

std::uint64_t hash_prefix(const History& h, std::uint64_t seed) {
  std::uint64_t x = mix(seed + 0x1234);
  for (std::size_t i = 0; i < h.plies(); ++i) x = mix(x ^ (h.ply(i).index + 1 + (i << 8)));
  return x;
}

template <Player P, class Strategy>
std::optional<std::vector<ActionId>> brute_counterexample(const GameDef& game, const Strategy& s,
                                                          bool strict) {
  // Walk every rival line in lexicographic order, letting s answer.
  std::optional<std::vector<ActionId>> found;
  std::function<void(History&)> walk = [&](History& h) {
    if (found) return;
    if (h.plies() == game.total_plies()) {
      const int sign = leaf_f(game, h).sign();
      const bool ok = P == Player::P1 ? (strict ? sign > 0 : sign >= 0)
                                      : (strict ? sign < 0 : sign <= 0);
      if (!ok) found = h.moves_of(altgame::opponent(P));
      return;
    }
    if (h.to_move() == P) {
      h.push(s(h));
      walk(h);
      h.pop();
      return;
    }
    for (ActionId a : game.legal_actions(h)) {
      h.push(a);
      walk(h);
      h.pop();
      if (found) return;
    }
  };
  History root;
  walk(root);
  return found;
}

}  // namespace

std::vector<History> legal_leaves(const GameDef& game) {
  std::vector<History> out;
  History h;
  collect_leaves(game, h, out);
  return out;
}

Rational brute_value(const GameDef& game) {
  History h;
  return value_at(game, h);
}

bool brute_force(const GameDef& game, Player owner, const std::function<bool(const Rational&)>& keep) {
  History h;
  return force_at(game, h, owner, keep);
}

NormalForm normal_form(const GameDef& game) {
  NormalForm nf;
  History h;
  collect_nodes(game, h, nf);
  return nf;
}

Rational profile_f(const GameDef& game, const NormalForm& nf, std::uint64_t i, std::uint64_t j) {
  History h;
  while (h.plies() < game.total_plies()) {
    if (h.to_move() == Player::P1)
      h.push(table_choice(nf.p1_nodes, nf.p1_options, i, h));
    else
      h.push(table_choice(nf.p2_nodes, nf.p2_options, j, h));
  }
  return leaf_f(game, h);
}

Case naive_case(const GameDef& game) {
  const auto nf = normal_form(game);
  std::vector<std::vector<int>> sign(nf.p1_count, std::vector<int>(nf.p2_count));
  for (std::uint64_t i = 0; i < nf.p1_count; ++i)
    for (std::uint64_t j = 0; j < nf.p2_count; ++j) sign[i][j] = profile_f(game, nf, i, j).sign();
  for (std::uint64_t i = 0; i < nf.p1_count; ++i) {
    bool all = true;
    for (std::uint64_t j = 0; j < nf.p2_count && all; ++j) all = sign[i][j] > 0;
    if (all) return Case::I;
  }
  for (std::uint64_t j = 0; j < nf.p2_count; ++j) {
    bool all = true;
    for (std::uint64_t i = 0; i < nf.p1_count && all; ++i) all = sign[i][j] < 0;
    if (all) return Case::II;
  }
  return Case::III;
}

altgame::Strategy1 hashed_strategy_p1(const GameDef& game, std::uint64_t seed) {
  return altgame::Strategy1([game, seed](const HistoryPrefix& h) {
    auto legal = game.legal_actions(h);
    return legal[hash_prefix(h, seed) % legal.size()];
  });
}

altgame::Strategy2 hashed_strategy_p2(const GameDef& game, std::uint64_t seed) {
  return altgame::Strategy2([game, seed](const HistoryPrefix& h) {
    auto legal = game.legal_actions(h);
    return legal[hash_prefix(h, seed) % legal.size()];
  });
}

std::optional<std::vector<ActionId>> brute_counterexample_p1(const GameDef& game,
                                                             const altgame::Strategy1& xi, bool strict) {
  return brute_counterexample<Player::P1>(game, xi, strict);
}

std::optional<std::vector<ActionId>> brute_counterexample_p2(const GameDef& game,
                                                             const altgame::Strategy2& eta, bool strict) {
  return brute_counterexample<Player::P2>(game, eta, strict);
}

GameDef table_game(const std::string& name, const std::vector<Rational>& f16) {
  if (f16.size() != 16) throw std::invalid_argument("table_game needs 16 leaf values");
  GameDef::Parts parts;
  parts.name = name;
  parts.horizon = 1;
  parts.p1 = altgame::Alphabet({"L", "R"});
  parts.p2 = altgame::Alphabet({"x", "y"});
  parts.payoff = [f16](const History& h) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < 4; ++i) idx = idx * 2 + h.ply(i).index;
    return altgame::Payoff{f16[idx], Rational(0)};
  };
  return GameDef(std::move(parts));
}

}  // namespace oracle
