#include "altgame/cli/game_source.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "altgame/games.hpp"

namespace altgame::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string mode_tag(const std::optional<gdf::IllegalPolicy>& mode) {
  return mode ? gdf::to_string(*mode) : "native";
}

}  // namespace

GameSource load_game(const LoadOptions& options) {
  if (options.builtin && options.path)
    throw std::invalid_argument("give either a game file or --builtin, not both");
  if (options.builtin) {
    const auto id = games::parse_builtin(*options.builtin);
    if (!id) throw GameError(ErrorCode::UnknownBuiltin, "no builtin game '" + *options.builtin + "'");
    games::BuiltinOptions bo;
    bo.rep_count_initial = options.rep_count_initial;
    std::string key = "builtin:" + *options.builtin + ":" + mode_tag(options.mode) +
                      (options.rep_count_initial ? ":ci" : ":nci");
    if (!options.mode) return GameSource{games::get_builtin(*id, bo), std::nullopt, key};
    auto doc = games::builtin_document(*id, bo);
    auto game = gdf::to_game(doc, *options.mode);
    return GameSource{std::move(game), std::move(doc), key};
  }
  if (!options.path) throw std::invalid_argument("no game given (path or --builtin)");

  const std::string text = read_file(*options.path);
  auto doc = gdf::parse(text);
  const auto mode = options.mode.value_or(doc.illegal_policy);
  auto game = gdf::to_game(doc, mode);
  std::string key = "file:" + std::to_string(std::hash<std::string>{}(text)) + ":" +
                    gdf::to_string(mode);
  return GameSource{std::move(game), std::move(doc), key};
}

const SolveResult& cached_classify(const GameSource& source, const SolverOptions& options) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<SolveResult>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[source.cache_key];
  if (!slot) slot = std::make_unique<SolveResult>(classify(source.game, options));
  return *slot;
}

nlohmann::ordered_json to_json(const StrategyFile& file) {
  nlohmann::ordered_json j;
  j["game"] = file.game;
  j["player"] = to_string(file.player);
  j["kind"] = "basic";
  j["claim"] = file.claim;
  j["tie_break"] = "lowest-index";
  auto& moves = j["moves"] = nlohmann::ordered_json::object();
  for (const auto& [prefix, action] : file.moves) moves[prefix] = action;
  return j;
}

StrategyFile parse_strategy_file(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("strategy file is not JSON: ") + e.what());
  }
  auto need_string = [&](const char* field) -> std::string {
    if (!j.is_object() || !j.contains(field) || !j[field].is_string())
      throw std::invalid_argument(std::string("strategy file needs a string field '") + field + "'");
    return j[field].get<std::string>();
  };
  StrategyFile file;
  file.game = need_string("game");
  const auto player = need_string("player");
  if (player == "P1")
    file.player = Player::P1;
  else if (player == "P2")
    file.player = Player::P2;
  else
    throw std::invalid_argument("strategy file player must be P1 or P2, got '" + player + "'");
  if (need_string("kind") != "basic")
    throw std::invalid_argument("only basic strategies are supported");
  file.claim = j.contains("claim") && j["claim"].is_string() ? j["claim"].get<std::string>() : "";
  if (!j.contains("moves") || !j["moves"].is_object())
    throw std::invalid_argument("strategy file needs an object field 'moves'");
  for (const auto& [prefix, action] : j["moves"].items()) {
    if (!action.is_string())
      throw std::invalid_argument("move for prefix '" + prefix + "' is not a string");
    file.moves.emplace_back(prefix, action.get<std::string>());
  }
  return file;
}

namespace {

template <Player P>
BasicStrategy<P> from_table(const GameDef& game, const StrategyTable& table) {
  const auto& own = game.alphabet(P);
  const auto& rival = game.alphabet(opponent(P));
  auto lookup = std::make_shared<std::unordered_map<std::string, ActionId>>();
  for (const auto& [prefix, label] : table) {
    const auto a = own.find(label);
    if (!a)
      throw std::invalid_argument("strategy move '" + label + "' is not an action of " +
                                  to_string(P));
    (*lookup)[prefix] = *a;
  }
  return BasicStrategy<P>([lookup, rival](std::span<const ActionId> seen) {
    std::string key;
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (i) key += ';';
      key += rival.label(seen[i]);
    }
    const auto it = lookup->find(key);
    if (it == lookup->end())
      throw std::invalid_argument("strategy has no move after '" + key + "'");
    return it->second;
  });
}

}  // namespace

BasicStrategy1 strategy_p1_from_table(const GameDef& game, const StrategyTable& table) {
  return from_table<Player::P1>(game, table);
}

BasicStrategy2 strategy_p2_from_table(const GameDef& game, const StrategyTable& table) {
  return from_table<Player::P2>(game, table);
}

}  // namespace altgame::cli
