#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "altgame/game.hpp"
#include "altgame/strategy.hpp"

namespace altgame {

enum class SignValue { Neg = -1, Zero = 0, Pos = 1 };

SignValue sign_of(const Rational& r);
const char* to_string(SignValue s);

/// Trichotomy: player 1 winning, player 2 winning, or both unbeatable.
enum class Case { I, II, III };

const char* to_string(Case c);

enum class Claim { Winning, Unbeatable, BestEffort };

const char* to_string(Claim c);

/// Leaf predicate that the forcing player tries to guarantee.
enum class Goal {
  Positive,     ///< f > 0
  NonNegative,  ///< f >= 0
  Negative,     ///< f < 0
  NonPositive,  ///< f <= 0
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  double elapsed_ms = 0.0;

  SolveStats& operator+=(const SolveStats& o) {
    nodes += o.nodes;
    memo_hits += o.memo_hits;
    elapsed_ms += o.elapsed_ms;
    return *this;
  }
};

struct SolverOptions {
  std::uint64_t node_budget = 50'000'000;
  /// Use the OpenMP root fan-out kernel for the value search.
  bool parallel = false;
};

template <Player P>
struct ForcingResult {
  bool holds = false;
  std::optional<BasicStrategy<P>> witness;
  SolveStats stats;
};

struct DualResult {
  bool q_holds = false;
  std::optional<BasicStrategy2> win_p2;
  std::optional<BasicStrategy1> unbeat_p1;
  SolveStats stats;
};

struct SolveResult {
  Rational value;
  SignValue sign = SignValue::Zero;
  Case game_case = Case::III;
  BasicStrategy1 strategy_p1;
  Claim claim_p1 = Claim::Unbeatable;
  BasicStrategy2 strategy_p2;
  Claim claim_p2 = Claim::Unbeatable;
  SolveStats stats;
};

/// Backward induction: max over a_0, min over b_0, ..., of f at the leaves.
/// Memoized on the game's state key plus ply parity when one is supplied.
Rational minimax_value(const GameDef& game, const SolverOptions& options = {});

/// Decides whether `owner` can force `goal`; on success the witness is a
/// basic strategy. For goals in the owner's own direction (f > 0 or f >= 0
/// for player 1, f < 0 or f <= 0 for player 2) it plays the owner's
/// value-optimal action, lowest index among equal values; otherwise the
/// lowest-index action that keeps the goal.
template <Player P>
ForcingResult<P> solve_forcing(const GameDef& game, Goal goal, const SolverOptions& options = {});

/// (P): player 1 can force f > 0.
ForcingResult<Player::P1> solve_P(const GameDef& game, const SolverOptions& options = {});

/// (P-bar): player 2 can force f <= 0. Decided by its own search, so the
/// negation relation with solve_P is checkable rather than assumed.
ForcingResult<Player::P2> solve_Pbar(const GameDef& game, const SolverOptions& options = {});

/// The same pair of questions with f negated and roles exchanged: either
/// player 2 forces f < 0 (q_holds, winning witness) or player 1 forces
/// f >= 0 (unbeatable witness).
DualResult solve_dual(const GameDef& game, const SolverOptions& options = {});

/// Throws InvalidState on (true, true).
Case combine(bool p, bool q);

SolveResult classify(const GameDef& game, const SolverOptions& options = {});

/// Minimax over {NEG, ZERO, POS} with short-circuiting at POS (max nodes)
/// and NEG (min nodes).
SignValue sign_minimax(const GameDef& game, const SolverOptions& options = {});

/// Minimax-optimal basic strategies, ties to the lowest index.
BasicStrategy1 minimax_strategy_p1(const GameDef& game, const SolverOptions& options = {});
BasicStrategy2 minimax_strategy_p2(const GameDef& game, const SolverOptions& options = {});

/// Opponent-prefix key (labels joined by ';', "" for the empty prefix)
/// mapped to the action label, in lexicographic prefix order.
using StrategyTable = std::vector<std::pair<std::string, std::string>>;

StrategyTable materialize_basic(const GameDef& game, const BasicStrategy1& s,
                                std::size_t max_entries);
StrategyTable materialize_basic(const GameDef& game, const BasicStrategy2& s,
                                std::size_t max_entries);

}  // namespace altgame
