#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "altgame/error.hpp"
#include "altgame/rational.hpp"

namespace altgame {

enum class Player { P1, P2 };

inline Player opponent(Player p) { return p == Player::P1 ? Player::P2 : Player::P1; }
inline const char* to_string(Player p) { return p == Player::P1 ? "P1" : "P2"; }

/// Index into an ordered action alphabet.
struct ActionId {
  std::uint32_t index = 0;
  friend auto operator<=>(const ActionId&, const ActionId&) = default;
};

/// Reserved label used to pad early-terminating games to the full horizon.
inline constexpr std::string_view kPassLabel = "pass";

class Alphabet {
 public:
  Alphabet() = default;
  /// Labels must be non-empty and unique; throws std::invalid_argument otherwise.
  explicit Alphabet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(ActionId a) const { return labels_.at(a.index); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<ActionId> find(std::string_view label) const;
  bool contains(ActionId a) const { return a.index < labels_.size(); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Play record (a^t, b^s). Player 1 moves first within every stage, so
/// |b| is |a| or |a| - 1. Complete histories have |a| = |b| = N + 1.
struct History {
  std::vector<ActionId> a;
  std::vector<ActionId> b;

  std::size_t plies() const { return a.size() + b.size(); }
  Player to_move() const { return a.size() == b.size() ? Player::P1 : Player::P2; }
  ActionId ply(std::size_t i) const { return i % 2 == 0 ? a[i / 2] : b[i / 2]; }
  void push(ActionId x) { (to_move() == Player::P1 ? a : b).push_back(x); }
  void pop() {
    if (a.size() > b.size())
      a.pop_back();
    else
      b.pop_back();
  }
  const std::vector<ActionId>& moves_of(Player p) const { return p == Player::P1 ? a : b; }

  friend bool operator==(const History&, const History&) = default;
};

using HistoryPrefix = History;
using FullHistory = History;

struct Payoff {
  Rational u;
  Rational v;
  friend bool operator==(const Payoff&, const Payoff&) = default;
};

/// Raised when a history or strategy uses an action that is outside the
/// alphabet or not legal at its position.
class IllegalMove : public GameError {
 public:
  IllegalMove(ErrorCode code, Player offender, std::size_t ply, const std::string& what)
      : GameError(code, what), offender_(offender), ply_(ply) {}
  Player offender() const { return offender_; }
  std::size_t ply() const { return ply_; }

 private:
  Player offender_;
  std::size_t ply_;
};

/// A finite alternating-move game: horizon N, alphabets A and B, payoff pair
/// over complete histories. Optional hooks restrict legality per position,
/// supply a transposition key, or annotate finished histories.
///
/// Instances are immutable and all hooks must be pure, so a GameDef can be
/// shared freely across threads.
class GameDef {
 public:
  using PayoffFn = std::function<Payoff(const FullHistory&)>;
  using LegalFn = std::function<std::vector<ActionId>(const HistoryPrefix&)>;
  using KeyFn = std::function<std::string(const HistoryPrefix&)>;
  using NoteFn = std::function<std::string(const FullHistory&)>;

  struct Parts {
    std::string name;
    int horizon = 0;
    Alphabet p1;
    Alphabet p2;
    PayoffFn payoff;
    LegalFn legal;  ///< empty: every alphabet action is legal everywhere
    KeyFn key;      ///< empty: no transposition merging
    NoteFn note;
  };

  explicit GameDef(Parts parts);

  const std::string& name() const { return parts_.name; }
  int horizon() const { return parts_.horizon; }
  std::size_t stages() const { return static_cast<std::size_t>(parts_.horizon) + 1; }
  std::size_t total_plies() const { return 2 * stages(); }
  const Alphabet& alphabet(Player p) const { return p == Player::P1 ? parts_.p1 : parts_.p2; }
  const Alphabet& actions_p1() const { return parts_.p1; }
  const Alphabet& actions_p2() const { return parts_.p2; }

  bool restricts_legality() const { return static_cast<bool>(parts_.legal); }
  bool has_state_key() const { return static_cast<bool>(parts_.key); }

  /// Legal actions for the player to move at `prefix`, ascending by index.
  std::vector<ActionId> legal_actions(const HistoryPrefix& prefix) const;
  bool is_legal(const HistoryPrefix& prefix, ActionId action) const;

  /// Throws IncompleteHistory unless both move sequences have length N+1.
  Payoff payoff(const FullHistory& h) const;

  /// Throws MissingStateKey when the game has no key hook.
  std::string state_key(const HistoryPrefix& prefix) const;

  std::string note(const FullHistory& h) const;

  /// Same game with every payoff passed through `map`.
  GameDef with_payoffs(std::function<Payoff(const Payoff&)> map, std::string name = {}) const;

  const Parts& parts() const { return parts_; }

 private:
  Parts parts_;
};

std::string join_labels(const Alphabet& alphabet, const std::vector<ActionId>& moves,
                        char sep = ';');

}  // namespace altgame
