#include "altgame/solver.hpp"

#include <chrono>
#include <memory>
#include <unordered_map>

#include "altgame/engine.hpp"
#include "altgame/kernels.hpp"

namespace altgame {

using kernels::node_key;
using kernels::NodeBudget;

SignValue sign_of(const Rational& r) { return static_cast<SignValue>(r.sign()); }

const char* to_string(SignValue s) {
  switch (s) {
    case SignValue::Neg: return "NEG";
    case SignValue::Zero: return "ZERO";
    case SignValue::Pos: return "POS";
  }
  return "?";
}

const char* to_string(Case c) {
  switch (c) {
    case Case::I: return "I";
    case Case::II: return "II";
    case Case::III: return "III";
  }
  return "?";
}

const char* to_string(Claim c) {
  switch (c) {
    case Claim::Winning: return "winning";
    case Claim::Unbeatable: return "unbeatable";
    case Claim::BestEffort: return "best-effort";
  }
  return "?";
}

namespace {

bool goal_met(Goal goal, const Rational& f) {
  switch (goal) {
    case Goal::Positive: return f.sign() > 0;
    case Goal::NonNegative: return f.sign() >= 0;
    case Goal::Negative: return f.sign() < 0;
    case Goal::NonPositive: return f.sign() <= 0;
  }
  return false;
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

struct ForceEntry {
  bool holds;
  ActionId choice;  // meaningful at owner nodes where holds
};

using ForceMemo = std::unordered_map<std::string, ForceEntry>;

// Alternating exists/forall search: the owner needs one action keeping the
// goal, every opponent action must keep it.
class ForcingSearch {
 public:
  ForcingSearch(const GameDef& game, Player owner, Goal goal, NodeBudget& budget)
      : game_(game), owner_(owner), goal_(goal), budget_(budget) {}

  ForceEntry eval(HistoryPrefix& h) {
    budget_.charge();
    if (h.plies() == game_.total_plies()) return {goal_met(goal_, diff(game_, h)), ActionId{}};
    std::string key = node_key(game_, h);
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++hits_;
      return it->second;
    }
    ForceEntry result{h.to_move() != owner_, ActionId{}};
    for (ActionId a : game_.legal_actions(h)) {
      h.push(a);
      bool child = eval(h).holds;
      h.pop();
      if (h.to_move() == owner_ && child) {
        result = {true, a};
        break;
      }
      if (h.to_move() != owner_ && !child) {
        result = {false, ActionId{}};
        break;
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  ForceMemo& memo() { return memo_; }
  std::uint64_t hits() const { return hits_; }

 private:
  const GameDef& game_;
  Player owner_;
  Goal goal_;
  NodeBudget& budget_;
  ForceMemo memo_;
  std::uint64_t hits_ = 0;
};

// Replays `owner`'s choices against the rival's sequence, asking `choose`
// for the owner's action at each of its nodes.
template <Player P, class Choose>
ActionId replay_basic(const GameDef& game, std::span<const ActionId> rival, Choose&& choose) {
  HistoryPrefix h;
  if constexpr (P == Player::P1) {
    if (rival.size() >= game.stages())
      throw GameError(ErrorCode::LengthMismatch, "opponent prefix longer than the horizon");
    for (ActionId b : rival) {
      push_checked(game, h, choose(h));
      push_checked(game, h, b);
    }
    return choose(h);
  } else {
    if (rival.empty() || rival.size() > game.stages())
      throw GameError(ErrorCode::LengthMismatch, "player 1 prefix length out of range");
    for (std::size_t s = 0; s + 1 < rival.size(); ++s) {
      push_checked(game, h, rival[s]);
      push_checked(game, h, choose(h));
    }
    push_checked(game, h, rival.back());
    return choose(h);
  }
}

template <Player P>
BasicStrategy<P> forcing_witness(const GameDef& game, Goal goal, std::shared_ptr<const ForceMemo> memo,
                                 std::uint64_t node_budget) {
  return BasicStrategy<P>([game, goal, memo, node_budget](std::span<const ActionId> rival) {
    return replay_basic<P>(game, rival, [&](HistoryPrefix& h) {
      if (auto it = memo->find(node_key(game, h)); it != memo->end() && it->second.holds)
        return it->second.choice;
      // Not on the explored winning region; search it privately.
      NodeBudget budget(node_budget);
      ForcingSearch local(game, P, goal, budget);
      ForceEntry e = local.eval(h);
      if (!e.holds)
        throw GameError(ErrorCode::InvalidState, "witness queried at a position where " +
                                                     std::string(to_string(P)) + " cannot force its goal");
      return e.choice;
    });
  });
}

template <Player P>
BasicStrategy<P> value_strategy(const GameDef& game, std::shared_ptr<const kernels::ValueMemo> memo,
                                std::uint64_t node_budget) {
  return BasicStrategy<P>([game, memo, node_budget](std::span<const ActionId> rival) {
    return replay_basic<P>(game, rival, [&](HistoryPrefix& h) {
      if (auto it = memo->find(node_key(game, h)); it != memo->end()) return it->second.best;
      NodeBudget budget(node_budget);
      kernels::ValueSearch local(game, budget);
      return local.eval(h).best;
    });
  });
}

kernels::ValueTable solve_values(const GameDef& game, const SolverOptions& options) {
  return options.parallel ? kernels::solve_values_parallel(game, options.node_budget)
                          : kernels::solve_values_serial(game, options.node_budget);
}

class SignSearch {
 public:
  SignSearch(const GameDef& game, NodeBudget& budget) : game_(game), budget_(budget) {}

  SignValue eval(HistoryPrefix& h) {
    budget_.charge();
    if (h.plies() == game_.total_plies()) return sign_of(diff(game_, h));
    std::string key = node_key(game_, h);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool maximize = h.to_move() == Player::P1;
    const SignValue cutoff = maximize ? SignValue::Pos : SignValue::Neg;
    std::optional<SignValue> best;
    for (ActionId a : game_.legal_actions(h)) {
      h.push(a);
      SignValue v = eval(h);
      h.pop();
      if (!best || (maximize ? v > *best : v < *best)) best = v;
      if (*best == cutoff) break;
    }
    if (!best) throw GameError(ErrorCode::InvalidState, "no legal action");
    memo_.emplace(std::move(key), *best);
    return *best;
  }

 private:
  const GameDef& game_;
  NodeBudget& budget_;
  std::unordered_map<std::string, SignValue> memo_;
};

}  // namespace

Rational minimax_value(const GameDef& game, const SolverOptions& options) {
  return solve_values(game, options).root;
}

namespace {

// Goals a player forces by optimizing f in its own direction.
bool aligned(Player owner, Goal goal) {
  if (owner == Player::P1) return goal == Goal::Positive || goal == Goal::NonNegative;
  return goal == Goal::Negative || goal == Goal::NonPositive;
}

// When the goal is a threshold in the owner's direction, the owner's
// value-optimal action keeps it wherever it can be kept, so the witness is
// the minimax strategy (ties to the lowest index). Other goals fall back
// to the first goal-keeping action.
template <Player P>
ForcingResult<P> forcing_with_values(const GameDef& game, Goal goal, const SolverOptions& options,
                                     std::shared_ptr<const kernels::ValueMemo> values) {
  auto start = std::chrono::steady_clock::now();
  NodeBudget budget(options.node_budget);
  ForcingSearch search(game, P, goal, budget);
  HistoryPrefix root;
  ForcingResult<P> result;
  result.holds = search.eval(root).holds;
  result.stats.nodes = budget.used();
  result.stats.memo_hits = search.hits();
  if (result.holds) {
    if (aligned(P, goal)) {
      if (!values) {
        auto table = solve_values(game, options);
        result.stats.nodes += table.stats.nodes;
        result.stats.memo_hits += table.stats.memo_hits;
        values = table.memo;
      }
      result.witness = value_strategy<P>(game, std::move(values), options.node_budget);
    } else {
      auto memo = std::make_shared<const ForceMemo>(std::move(search.memo()));
      result.witness = forcing_witness<P>(game, goal, std::move(memo), options.node_budget);
    }
  }
  result.stats.elapsed_ms = ms_since(start);
  return result;
}

DualResult dual_with_values(const GameDef& game, const SolverOptions& options,
                            std::shared_ptr<const kernels::ValueMemo> values) {
  DualResult result;
  auto q = forcing_with_values<Player::P2>(game, Goal::Negative, options, values);
  result.stats += q.stats;
  result.q_holds = q.holds;
  if (q.holds) {
    result.win_p2 = std::move(q.witness);
    return result;
  }
  auto unbeat = forcing_with_values<Player::P1>(game, Goal::NonNegative, options, values);
  result.stats += unbeat.stats;
  if (!unbeat.holds)
    throw GameError(ErrorCode::InvalidState,
                    "neither f < 0 nor f >= 0 can be forced; negation duality violated");
  result.unbeat_p1 = std::move(unbeat.witness);
  return result;
}

}  // namespace

template <Player P>
ForcingResult<P> solve_forcing(const GameDef& game, Goal goal, const SolverOptions& options) {
  return forcing_with_values<P>(game, goal, options, nullptr);
}

template ForcingResult<Player::P1> solve_forcing<Player::P1>(const GameDef&, Goal, const SolverOptions&);
template ForcingResult<Player::P2> solve_forcing<Player::P2>(const GameDef&, Goal, const SolverOptions&);

ForcingResult<Player::P1> solve_P(const GameDef& game, const SolverOptions& options) {
  return solve_forcing<Player::P1>(game, Goal::Positive, options);
}

ForcingResult<Player::P2> solve_Pbar(const GameDef& game, const SolverOptions& options) {
  return solve_forcing<Player::P2>(game, Goal::NonPositive, options);
}

DualResult solve_dual(const GameDef& game, const SolverOptions& options) {
  return dual_with_values(game, options, nullptr);
}

Case combine(bool p, bool q) {
  if (p && q) throw GameError(ErrorCode::InvalidState, "both players reported winning");
  if (p) return Case::I;
  if (q) return Case::II;
  return Case::III;
}

SignValue sign_minimax(const GameDef& game, const SolverOptions& options) {
  NodeBudget budget(options.node_budget);
  SignSearch search(game, budget);
  HistoryPrefix root;
  return search.eval(root);
}

BasicStrategy1 minimax_strategy_p1(const GameDef& game, const SolverOptions& options) {
  return value_strategy<Player::P1>(game, solve_values(game, options).memo, options.node_budget);
}

BasicStrategy2 minimax_strategy_p2(const GameDef& game, const SolverOptions& options) {
  return value_strategy<Player::P2>(game, solve_values(game, options).memo, options.node_budget);
}

SolveResult classify(const GameDef& game, const SolverOptions& options) {
  auto start = std::chrono::steady_clock::now();
  SolveResult result;

  kernels::ValueTable values = solve_values(game, options);
  result.stats += values.stats;
  result.value = values.root;
  result.sign = sign_of(values.root);

  auto p = forcing_with_values<Player::P1>(game, Goal::Positive, options, values.memo);
  auto pbar = forcing_with_values<Player::P2>(game, Goal::NonPositive, options, values.memo);
  auto dual = dual_with_values(game, options, values.memo);
  result.stats += p.stats;
  result.stats += pbar.stats;
  result.stats += dual.stats;

  if (pbar.holds == p.holds)
    throw GameError(ErrorCode::InvalidState, "(P) and its negation evaluated to the same truth value");
  result.game_case = combine(p.holds, dual.q_holds);

  const SignValue expected = result.game_case == Case::I    ? SignValue::Pos
                             : result.game_case == Case::II ? SignValue::Neg
                                                            : SignValue::Zero;
  if (expected != result.sign)
    throw GameError(ErrorCode::InvalidState, "minimax sign disagrees with the quantifier solver");

  switch (result.game_case) {
    case Case::I:
      result.strategy_p1 = *p.witness;
      result.claim_p1 = Claim::Winning;
      result.strategy_p2 = value_strategy<Player::P2>(game, values.memo, options.node_budget);
      result.claim_p2 = Claim::BestEffort;
      break;
    case Case::II:
      result.strategy_p1 = value_strategy<Player::P1>(game, values.memo, options.node_budget);
      result.claim_p1 = Claim::BestEffort;
      result.strategy_p2 = *dual.win_p2;
      result.claim_p2 = Claim::Winning;
      break;
    case Case::III:
      result.strategy_p1 = *dual.unbeat_p1;
      result.claim_p1 = Claim::Unbeatable;
      result.strategy_p2 = *pbar.witness;
      result.claim_p2 = Claim::Unbeatable;
      break;
  }
  result.stats.elapsed_ms = ms_since(start);
  return result;
}

namespace {

void check_entries(const StrategyTable& table, std::size_t max_entries) {
  if (table.size() > max_entries)
    throw BudgetExceeded("strategy table exceeds " + std::to_string(max_entries) + " entries");
}

void materialize_p1(const GameDef& game, const BasicStrategy1& s, HistoryPrefix& h,
                    std::vector<ActionId>& rival, StrategyTable& out, std::size_t max_entries) {
  if (h.a.size() == game.stages()) return;
  ActionId a = s(rival);
  out.emplace_back(join_labels(game.actions_p2(), rival), game.actions_p1().label(a));
  check_entries(out, max_entries);
  push_checked(game, h, a);
  for (ActionId b : game.legal_actions(h)) {
    h.push(b);
    rival.push_back(b);
    materialize_p1(game, s, h, rival, out, max_entries);
    rival.pop_back();
    h.pop();
  }
  h.pop();
}

void materialize_p2(const GameDef& game, const BasicStrategy2& s, HistoryPrefix& h,
                    std::vector<ActionId>& rival, StrategyTable& out, std::size_t max_entries) {
  if (h.a.size() == game.stages()) return;
  for (ActionId a : game.legal_actions(h)) {
    h.push(a);
    rival.push_back(a);
    ActionId b = s(rival);
    out.emplace_back(join_labels(game.actions_p1(), rival), game.actions_p2().label(b));
    check_entries(out, max_entries);
    push_checked(game, h, b);
    materialize_p2(game, s, h, rival, out, max_entries);
    h.pop();
    rival.pop_back();
    h.pop();
  }
}

}  // namespace

StrategyTable materialize_basic(const GameDef& game, const BasicStrategy1& s, std::size_t max_entries) {
  StrategyTable out;
  HistoryPrefix h;
  std::vector<ActionId> rival;
  materialize_p1(game, s, h, rival, out, max_entries);
  return out;
}

StrategyTable materialize_basic(const GameDef& game, const BasicStrategy2& s, std::size_t max_entries) {
  StrategyTable out;
  HistoryPrefix h;
  std::vector<ActionId> rival;
  materialize_p2(game, s, h, rival, out, max_entries);
  return out;
}

}  // namespace altgame
