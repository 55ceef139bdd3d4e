#pragma once

// Search kernels behind the solver. Each has a serial reference and an
// OpenMP variant; both produce identical tables.

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>

#include "altgame/game.hpp"
#include "altgame/solver.hpp"

namespace altgame::kernels {

struct ValueEntry {
  Rational value;
  ActionId best;
};

using ValueMemo = std::unordered_map<std::string, ValueEntry>;

struct ValueTable {
  std::shared_ptr<const ValueMemo> memo;
  Rational root;
  SolveStats stats;
};

/// Exact encoding of the move sequence.
std::string history_key(const HistoryPrefix& h);

/// Memo key for the node at `h`: the game's state key and ply parity when
/// the game supplies a key, otherwise the exact move sequence.
std::string node_key(const GameDef& game, const HistoryPrefix& h);

/// Shared expansion counter; throws BudgetExceeded past the limit.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}
  void charge() {
    if (used_.fetch_add(1, std::memory_order_relaxed) + 1 > limit_)
      throw BudgetExceeded("node budget of " + std::to_string(limit_) + " expansions exhausted");
  }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

/// Recursive backward induction over a private memo.
class ValueSearch {
 public:
  ValueSearch(const GameDef& game, NodeBudget& budget, ValueMemo memo = {})
      : game_(game), budget_(budget), memo_(std::move(memo)) {}

  ValueEntry eval(HistoryPrefix& h);

  ValueMemo& memo() { return memo_; }
  std::uint64_t memo_hits() const { return hits_; }

 private:
  const GameDef& game_;
  NodeBudget& budget_;
  ValueMemo memo_;
  std::uint64_t hits_ = 0;
};

ValueTable solve_values_serial(const GameDef& game, std::uint64_t node_budget);

/// Root fan-out: the (a_0, b_0) frontier is split across OpenMP threads,
/// each with a private memo; memos are merged (identical values on equal
/// keys) and the top two plies are resolved against the merged table.
ValueTable solve_values_parallel(const GameDef& game, std::uint64_t node_budget);

}  // namespace altgame::kernels
