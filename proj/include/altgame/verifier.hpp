#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "altgame/game.hpp"
#include "altgame/solver.hpp"
#include "altgame/strategy.hpp"

namespace altgame {

enum class ClaimKind { Winning, Unbeatable };

const char* to_string(ClaimKind c);

struct VerifyReport {
  Player player = Player::P1;
  ClaimKind claim = ClaimKind::Winning;
  bool holds = false;
  /// First failing rival sequence in lexicographic order (length N+1).
  std::optional<std::vector<ActionId>> counterexample;
  std::uint64_t sequences_checked = 0;
};

struct EnumerationBudget {
  std::uint64_t max_strategies = 1u << 16;
  std::uint64_t max_sequences = 1'000'000;
};

/// Checks f(h(xi, b^N)) > 0 (winning) or >= 0 (unbeatable) for every rival
/// sequence b^N. Sequences that are illegal for the rival are not plays of
/// the game and are skipped. Throws BudgetExceeded up front when
/// |B|^{N+1} exceeds budget.max_sequences.
VerifyReport verify_p1(const GameDef& game, const Strategy1& xi, ClaimKind claim,
                       const EnumerationBudget& budget = {});

/// Symmetric: f(h(a^N, eta)) < 0 (winning) or <= 0 (unbeatable).
VerifyReport verify_p2(const GameDef& game, const Strategy2& eta, ClaimKind claim,
                       const EnumerationBudget& budget = {});

/// All pure full-memory strategies of player P in a deterministic order.
/// A strategy fixes one legal action at every position where P moves,
/// including positions its own earlier choices avoid.
template <Player P>
class StrategySpace {
 public:
  std::uint64_t size() const { return size_; }
  Strategy<P> at(std::uint64_t index) const;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t i = 0; i < size_; ++i) f(at(i));
  }

  /// Number of positions at which the strategy must decide.
  std::size_t decision_points() const { return points_ ? points_->size() : 0; }

 private:
  template <Player Q>
  friend StrategySpace<Q> enumerate_strategies(const GameDef&, const EnumerationBudget&);

  struct Point {
    std::vector<ActionId> options;
    std::uint64_t stride = 1;
  };
  struct Layout {
    std::unordered_map<std::string, std::size_t> index;
    std::vector<Point> points;
    std::size_t size() const { return points.size(); }
  };

  std::shared_ptr<const Layout> points_;
  std::uint64_t size_ = 1;
};

template <Player P>
StrategySpace<P> enumerate_strategies(const GameDef& game, const EnumerationBudget& budget = {});

/// Normal-form decision by strategy enumeration: CASE_I iff some xi beats
/// every eta (U > V), CASE_II iff some eta beats every xi, else CASE_III,
/// which is confirmed by exhibiting unbeatable strategies on both sides.
Case oracle_classify(const GameDef& game, const EnumerationBudget& budget = {});

namespace reference {

/// Literal enumeration of every b^N in lexicographic order through
/// respond_p1; the serial baseline for the DFS kernels.
VerifyReport verify_p1_serial(const GameDef& game, const Strategy1& xi, ClaimKind claim,
                              const EnumerationBudget& budget = {});
VerifyReport verify_p2_serial(const GameDef& game, const Strategy2& eta, ClaimKind claim,
                              const EnumerationBudget& budget = {});

/// Every profile evaluated through payoffs() on enumerated strategies.
Case oracle_classify_serial(const GameDef& game, const EnumerationBudget& budget = {});

}  // namespace reference

}  // namespace altgame
