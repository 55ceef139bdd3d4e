#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "altgame/cli/commands.hpp"
#include "altgame/cli/game_source.hpp"
#include "altgame/gdf.hpp"
#include "altgame/games.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using altgame::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run(args, {in, out, err});
  return {code, out.str(), err.str()};
}

fs::path temp_dir() {
  auto dir = fs::temp_directory_path() / ("altgame-cli-" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream b;
  b << in.rdbuf();
  return b.str();
}

}  // namespace

TEST_CASE("classify exit codes and report") {
  auto r = cli({"classify", "--builtin", "w1", "--exitcode"});
  CHECK(r.code == 10);
  CHECK(r.out.find("CASE_I\n") == 0);
  CHECK(cli({"classify", "--builtin", "w2", "--exitcode"}).code == 20);
  CHECK(cli({"classify", "--builtin", "d1", "--exitcode"}).code == 30);
  CHECK(cli({"classify", "--builtin", "d1"}).code == 0);
}

TEST_CASE("classify --json is a stable record") {
  auto r = cli({"classify", "--builtin", "t0", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["case"] == "III");
  CHECK(j["value"] == "0/1");
  CHECK(j["sign"] == "ZERO");
  CHECK(j["claims"]["P1"] == "unbeatable");
  CHECK(j.contains("stats"));
}

TEST_CASE("classify input errors") {
  auto r = cli({"classify", "missing.gdf.json"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(cli({"classify", "--builtin", "chess"}).code == 2);
  const fs::path bad = fs::path(ALTGAME_SOURCE_DIR) / "tests/data/malformed/P_RATIONAL.zero_denominator.json";
  r = cli({"classify", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("P_RATIONAL") != std::string::npos);
  const fs::path invalid = fs::path(ALTGAME_SOURCE_DIR) / "tests/data/malformed/E_HORIZON.cycle.json";
  CHECK(cli({"classify", invalid.string()}).code == 2);
  CHECK(cli({"classify", "--builtin", "tictactoe", "--budget", "10"}).code == 3);
  CHECK(cli({"frobnicate"}).code == 2);
}

TEST_CASE("classify reads GDF files in either mode") {
  const fs::path file = fs::path(ALTGAME_SOURCE_DIR) / "games/hexapawn.gdf.json";
  for (const char* mode : {"strict", "masked"}) {
    auto r = cli({"classify", file.string(), "--mode", mode, "--exitcode"});
    CHECK(r.code == 20);
  }
}

TEST_CASE("solve writes the strategy file") {
  auto r = cli({"solve", "--builtin", "w1", "--player", "1"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["game"] == "w1");
  CHECK(j["player"] == "P1");
  CHECK(j["kind"] == "basic");
  CHECK(j["claim"] == "winning");
  CHECK(j["tie_break"] == "lowest-index");
  CHECK(j["moves"] == nlohmann::ordered_json{{"", "R"}});

  j = nlohmann::ordered_json::parse(cli({"solve", "--builtin", "d1", "--player", "2"}).out);
  CHECK(j["moves"] == nlohmann::ordered_json{{"L", "y"}, {"R", "y"}});
  CHECK(j["claim"] == "unbeatable");

  j = nlohmann::ordered_json::parse(cli({"solve", "--builtin", "t0", "--player", "1"}).out);
  CHECK(j["claim"] == "unbeatable");
  CHECK(j["moves"].size() == 1);

  j = nlohmann::ordered_json::parse(cli({"solve", "--builtin", "w1", "--player", "2"}).out);
  CHECK(j["claim"] == "best-effort");

  CHECK(cli({"solve", "--builtin", "tictactoe", "--player", "1", "--max-entries", "5"}).code == 3);
}

TEST_CASE("verify strategy files") {
  const auto dir = temp_dir();
  const auto w1 = (dir / "w1.json").string();
  const auto d1 = (dir / "d1.json").string();
  REQUIRE(cli({"solve", "--builtin", "w1", "--player", "1", "--out", w1}).code == 0);
  REQUIRE(cli({"solve", "--builtin", "d1", "--player", "1", "--out", d1}).code == 0);

  auto r = cli({"verify", "--builtin", "w1", w1, "--claim", "winning"});
  CHECK(r.code == 0);
  r = cli({"verify", "--builtin", "d1", d1, "--claim", "winning"});
  CHECK(r.code == 4);
  CHECK(r.out.find("counterexample: y") != std::string::npos);
  CHECK(cli({"verify", "--builtin", "d1", d1}).code == 0);  // claim from the file: unbeatable
  CHECK(cli({"verify", "--builtin", "w1", d1}).code == 2);  // game name mismatch

  // Game given as a file path.
  const auto game = (dir / "w1.gdf.json").string();
  REQUIRE(cli({"export", "--builtin", "w1", "--out", game}).code == 0);
  CHECK(cli({"verify", game, w1, "--claim", "winning"}).code == 0);

  std::ofstream(dir / "junk.json") << "{\"game\": 3}";
  CHECK(cli({"verify", "--builtin", "w1", (dir / "junk.json").string()}).code == 2);
  CHECK(cli({"verify", "--builtin", "w1", w1, "--budget", "1"}).code == 3);
  fs::remove_all(dir);
}

TEST_CASE("solved tables of every builtin verify") {
  const auto dir = temp_dir();
  for (auto id : altgame::games::all_builtins()) {
    const std::string name = altgame::games::to_string(id);
    for (const char* player : {"1", "2"}) {
      const auto path = (dir / (name + player + ".json")).string();
      REQUIRE(cli({"solve", "--builtin", name, "--player", player, "--out", path}).code == 0);
      const auto claim = nlohmann::json::parse(slurp(path))["claim"].get<std::string>();
      CAPTURE(name);
      CAPTURE(player);
      if (claim != "best-effort") CHECK(cli({"verify", "--builtin", name, path}).code == 0);
    }
  }
  fs::remove_all(dir);
}

TEST_CASE("oracle subcommand") {
  auto r = cli({"oracle", "--builtin", "d1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("oracle: CASE_III") != std::string::npos);
  CHECK(r.out.find("agreement") != std::string::npos);
  CHECK(cli({"oracle", "--builtin", "w2"}).code == 0);
  CHECK(cli({"oracle", "--builtin", "tictactoe"}).code == 3);
}

TEST_CASE("play t0 finishes after two forced moves") {
  auto r = cli({"play", "--builtin", "t0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("payoffs: u=1/2 v=1/2 f=0/1") != std::string::npos);
  CHECK(r.out.find("DRAW") != std::string::npos);
}

TEST_CASE("play re-prompts on bad input and reports the result") {
  auto r = cli({"play", "--builtin", "w1"}, "Q\nL\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("'Q' is not legal here") != std::string::npos);
  CHECK(r.out.find("P2_WIN") != std::string::npos);
  CHECK(r.out.find("announced: CASE_I") != std::string::npos);
  CHECK(cli({"play", "--builtin", "w1"}, "").code == 1);  // input closed
}

TEST_CASE("hexapawn engine wins against random human lines") {
  std::mt19937 rng(7);
  const auto game = altgame::games::make_hexapawn();
  for (int round = 0; round < 20; ++round) {
    // Feed a long script of random labels; illegal ones are re-prompted.
    std::string script;
    const auto& labels = game.actions_p1().labels();
    for (int i = 0; i < 400; ++i) script += labels[rng() % labels.size()] + "\n";
    auto r = cli({"play", "--builtin", "hexapawn", "--human", "P1"}, script);
    REQUIRE(r.code == 0);
    CHECK(r.out.find("result:  P2_WIN") != std::string::npos);
  }
}

TEST_CASE("tictactoe engine never loses as player 1") {
  std::mt19937 rng(11);
  const auto game = altgame::games::make_tictactoe();
  for (int round = 0; round < 20; ++round) {
    std::string script;
    const auto& labels = game.actions_p2().labels();
    for (int i = 0; i < 400; ++i) script += labels[rng() % labels.size()] + "\n";
    auto r = cli({"play", "--builtin", "tictactoe", "--human", "P2"}, script);
    REQUIRE(r.code == 0);
    CHECK(r.out.find("result:  P2_WIN") == std::string::npos);
  }
}

TEST_CASE("export output matches the library serializer") {
  auto r = cli({"export", "--builtin", "hexapawn"});
  CHECK(r.code == 0);
  CHECK(r.out == altgame::gdf::serialize(altgame::games::builtin_document(altgame::games::BuiltinId::Hexapawn)));
}

TEST_CASE("strategy file helpers") {
  altgame::cli::StrategyFile f{"d1", altgame::Player::P2, "unbeatable", {{"L", "y"}, {"R", "y"}}};
  const auto text = altgame::cli::to_json(f).dump();
  const auto back = altgame::cli::parse_strategy_file(text);
  CHECK(back.game == "d1");
  CHECK(back.player == altgame::Player::P2);
  CHECK(back.moves == f.moves);
  CHECK_THROWS_AS(altgame::cli::parse_strategy_file("[]"), std::invalid_argument);
  CHECK_THROWS_AS(altgame::cli::parse_strategy_file("{\"game\":\"d1\",\"player\":\"P3\",\"kind\":\"basic\",\"moves\":{}}"),
                  std::invalid_argument);
  const auto g = altgame::games::make_d1();
  const auto s = altgame::cli::strategy_p2_from_table(g, f.moves);
  CHECK(s(std::vector<altgame::ActionId>{{0}}) == altgame::ActionId{1});
  const auto partial = altgame::cli::strategy_p2_from_table(g, {{"L", "y"}});
  CHECK_THROWS_AS(partial(std::vector<altgame::ActionId>{{1}}), std::invalid_argument);
}
