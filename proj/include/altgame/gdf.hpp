#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "altgame/game.hpp"

namespace altgame::gdf {

enum class IllegalPolicy { Strict, Masked };

const char* to_string(IllegalPolicy p);
std::optional<IllegalPolicy> parse_policy(std::string_view text);

struct StateNode {
  std::string id;
  Player turn = Player::P1;
  std::map<std::string, std::string> moves;  ///< action label -> target state id
  std::optional<Payoff> terminal;

  friend bool operator==(const StateNode&, const StateNode&) = default;
};

/// Game Description Format: an explicit state machine of an alternating
/// game with terminal payoffs. JSON on disk.
struct Document {
  std::string name;
  int horizon = 0;
  std::vector<std::string> p1_actions;
  std::vector<std::string> p2_actions;
  std::string initial;
  IllegalPolicy illegal_policy = IllegalPolicy::Masked;
  std::optional<Payoff> illegal_payoff_p1;  ///< payoff pair when player 1 deviates
  std::optional<Payoff> illegal_payoff_p2;
  std::vector<StateNode> states;

  /// Structural equality: state order is irrelevant.
  friend bool operator==(const Document& x, const Document& y);
};

/// Parse failure with a JSON-pointer location and a stable code.
class ParseError : public GameError {
 public:
  ParseError(std::string code, std::string location, const std::string& reason)
      : GameError(ErrorCode::ParseError, code + " at '" + location + "': " + reason),
        code_(std::move(code)),
        location_(std::move(location)) {}
  const std::string& code() const { return code_; }
  const std::string& location() const { return location_; }

 private:
  std::string code_;
  std::string location_;
};

/// Codes: P_SYNTAX, P_TYPE, P_MISSING_FIELD, P_UNKNOWN_FIELD, P_RATIONAL,
/// P_RANGE, P_RESERVED_LABEL.
Document parse(std::string_view text);

struct Violation {
  std::string code;
  std::string location;
  std::string message;
};

/// Codes: E_EMPTY_ALPHABET, E_DUPLICATE_ACTION, E_DUPLICATE_ID,
/// E_INITIAL_MISSING, E_INITIAL_TURN, E_DANGLING_TARGET, E_UNKNOWN_ACTION,
/// E_TERMINAL_SHAPE, E_TURN_ALTERNATION, E_UNREACHABLE, E_HORIZON.
std::vector<Violation> validate(const Document& doc);

/// Alphabets are the declared actions plus "pass" as the last index. The
/// state key is (state id, ply parity); a forfeited game keys on the
/// offender instead.
///
/// masked: only declared moves are legal, and pass after a terminal.
/// strict: every action is available everywhere; the first action that is
///   not a declared move ends the game with the offender at 0 and the
///   opponent at 1 (or the document's override). Actions after the game has
///   ended are inert.
GameDef to_game(const Document& doc, IllegalPolicy mode);

/// Canonical text: fixed field order, states sorted by id, one state per
/// line, reduced rationals.
std::string serialize(const Document& doc);

/// Unrolls a game into a document by exploring it from the root. States
/// are merged by the game's state key (or kept apart per history when it
/// has none); a position where only "pass" is legal, or the horizon, is a
/// terminal. A "pass" label in the game's alphabets is dropped from the
/// declared actions.
Document export_game(const GameDef& game, IllegalPolicy policy = IllegalPolicy::Masked);

}  // namespace altgame::gdf
