#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "altgame/gdf.hpp"
#include "altgame/game.hpp"
#include "altgame/solver.hpp"
#include "altgame/strategy.hpp"
#include "json.hpp"

namespace altgame::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kBadInput = 2,
  kBudget = 3,
  kRefuted = 4,
  kDisagreement = 5,
  kCaseI = 10,
  kCaseII = 20,
  kCaseIII = 30,
};

struct LoadOptions {
  std::optional<std::string> builtin;
  std::optional<std::string> path;
  std::optional<gdf::IllegalPolicy> mode;
  bool rep_count_initial = true;
};

struct GameSource {
  GameDef game;
  std::optional<gdf::Document> document;
  /// Identifies the source for the classification cache (file content
  /// hash, or builtin name plus options).
  std::string cache_key;
};

/// Throws gdf::ParseError / GameError(InvalidDocument, UnknownBuiltin) or
/// std::runtime_error when the file cannot be read.
GameSource load_game(const LoadOptions& options);

/// classify() memoized per source for the life of the process.
const SolveResult& cached_classify(const GameSource& source, const SolverOptions& options = {});

/// On-disk basic strategy: {"game", "player", "kind": "basic", "claim",
/// "tie_break": "lowest-index", "moves": {opponent prefix: action}}.
struct StrategyFile {
  std::string game;
  Player player = Player::P1;
  std::string claim;
  StrategyTable moves;
};

nlohmann::ordered_json to_json(const StrategyFile& file);
/// Throws std::invalid_argument on malformed content.
StrategyFile parse_strategy_file(const std::string& text);

/// Table lookup by opponent-prefix key; a missing entry throws
/// std::invalid_argument.
BasicStrategy1 strategy_p1_from_table(const GameDef& game, const StrategyTable& table);
BasicStrategy2 strategy_p2_from_table(const GameDef& game, const StrategyTable& table);

}  // namespace altgame::cli
