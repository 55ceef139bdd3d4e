#include <array>

#include "altgame/games.hpp"

namespace altgame::games {

namespace {

constexpr std::array<std::pair<BuiltinId, const char*>, 8> kNames{{
    {BuiltinId::T0, "t0"},
    {BuiltinId::W1, "w1"},
    {BuiltinId::W2, "w2"},
    {BuiltinId::D1, "d1"},
    {BuiltinId::Sub10, "sub10"},
    {BuiltinId::TicTacToe, "tictactoe"},
    {BuiltinId::Hexapawn, "hexapawn"},
    {BuiltinId::RepDemo, "repdemo"},
}};

}  // namespace

const char* to_string(BuiltinId id) {
  for (const auto& [k, name] : kNames)
    if (k == id) return name;
  return "?";
}

std::optional<BuiltinId> parse_builtin(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (name == n) return k;
  return std::nullopt;
}

std::vector<BuiltinId> all_builtins() {
  std::vector<BuiltinId> out;
  for (const auto& [k, name] : kNames) out.push_back(k);
  return out;
}

GameDef get_builtin(BuiltinId id, const BuiltinOptions& options) {
  switch (id) {
    case BuiltinId::T0: return make_t0();
    case BuiltinId::W1: return make_w1();
    case BuiltinId::W2: return make_w2();
    case BuiltinId::D1: return make_d1();
    case BuiltinId::Sub10: return make_subtraction(10, 4);
    case BuiltinId::TicTacToe: return make_tictactoe();
    case BuiltinId::Hexapawn: return make_hexapawn();
    case BuiltinId::RepDemo: return make_repdemo(3, options.rep_count_initial);
  }
  throw GameError(ErrorCode::UnknownBuiltin, "unknown builtin");
}

GameDef get_builtin(std::string_view name, const BuiltinOptions& options) {
  auto id = parse_builtin(name);
  if (!id) throw GameError(ErrorCode::UnknownBuiltin, "unknown builtin '" + std::string(name) + "'");
  return get_builtin(*id, options);
}

gdf::Document builtin_document(BuiltinId id, const BuiltinOptions& options) {
  return gdf::export_game(get_builtin(id, options));
}

}  // namespace altgame::games
