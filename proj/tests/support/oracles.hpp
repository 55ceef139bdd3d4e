#pragma once
// Brute-force reference computations used as test oracles. Nothing here
// calls the solver or verifier; everything walks the raw game tree.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "altgame/game.hpp"
#include "altgame/solver.hpp"
#include "altgame/strategy.hpp"

namespace oracle {

using altgame::ActionId;
using altgame::GameDef;
using altgame::History;
using altgame::Player;
using altgame::Rational;

/// u - v read straight off the payoff function.
Rational leaf_f(const GameDef& game, const History& h);

/// Every complete history reachable through legal moves, in lexicographic
/// ply order.
std::vector<History> legal_leaves(const GameDef& game);

/// Plain max/min recursion without memoization.
Rational brute_value(const GameDef& game);

/// Does `owner` have a strategy keeping `keep(f)` true at every leaf?
/// Plain exists/forall recursion.
bool brute_force(const GameDef& game, Player owner, const std::function<bool(const Rational&)>& keep);

/// Normal form by explicit enumeration of decision tables. Each strategy
/// is a table over every legal position of its owner.
struct NormalForm {
  std::vector<History> p1_nodes;
  std::vector<History> p2_nodes;
  /// Option lists per node.
  std::vector<std::vector<ActionId>> p1_options;
  std::vector<std::vector<ActionId>> p2_options;
  std::uint64_t p1_count = 1;
  std::uint64_t p2_count = 1;
};
NormalForm normal_form(const GameDef& game);
/// f of the play induced by the i-th P1 table and the j-th P2 table.
Rational profile_f(const GameDef& game, const NormalForm& nf, std::uint64_t i, std::uint64_t j);
/// CASE_I iff some P1 table beats all P2 tables, and so on.
altgame::Case naive_case(const GameDef& game);

/// Deterministic pseudo-random full-memory strategy. The choice hashes the
/// whole prefix (own moves included) with `seed` and picks a legal action.
altgame::Strategy1 hashed_strategy_p1(const GameDef& game, std::uint64_t seed);
altgame::Strategy2 hashed_strategy_p2(const GameDef& game, std::uint64_t seed);

/// First rival sequence (lexicographic, legal plays only) on which the
/// strategy fails the claim, by straight replay of every rival line.
std::optional<std::vector<ActionId>> brute_counterexample_p1(const GameDef& game,
                                                             const altgame::Strategy1& xi,
                                                             bool strict);
std::optional<std::vector<ActionId>> brute_counterexample_p2(const GameDef& game,
                                                             const altgame::Strategy2& eta,
                                                             bool strict);

/// Hand-built N=1 game over A=[L,R], B=[x,y] with the given leaf f values
/// in (a0,b0,a1,b1) lexicographic order; u = f, v = 0.
GameDef table_game(const std::string& name, const std::vector<Rational>& f16);

}  // namespace oracle
