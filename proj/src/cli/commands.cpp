#include "altgame/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "altgame/cli/game_source.hpp"
#include "altgame/cli/session.hpp"
#include "altgame/engine.hpp"
#include "altgame/games.hpp"
#include "altgame/verifier.hpp"

namespace altgame::cli {

namespace {

struct SourceArgs {
  std::string path;
  std::string builtin;
  std::string mode;
  bool rep_count_initial = true;

  LoadOptions options() const {
    LoadOptions o;
    if (!path.empty()) o.path = path;
    if (!builtin.empty()) o.builtin = builtin;
    if (!mode.empty()) o.mode = gdf::parse_policy(mode);
    o.rep_count_initial = rep_count_initial;
    return o;
  }
};

void add_source_options(CLI::App* sub, SourceArgs& args, bool positional = true) {
  if (positional) sub->add_option("game", args.path, "GDF game file");
  sub->add_option("--builtin,-b", args.builtin, "Builtin game id");
  sub->add_option("--mode", args.mode, "Illegal-move policy for GDF sources")
      ->check(CLI::IsMember({"strict", "masked"}));
  sub->add_flag("--rep-count-initial,!--no-rep-count-initial", args.rep_count_initial,
                "Count the initial position toward repetition draws");
}

std::string case_line(Case c) { return std::string("CASE_") + to_string(c); }

std::string case_summary(Case c) {
  switch (c) {
    case Case::I: return "player 1 can force a win";
    case Case::II: return "player 2 can force a win";
    case Case::III: return "neither side can force a win; both have unbeatable strategies";
  }
  return "";
}

Player parse_player(const std::string& text) {
  if (text == "1" || text == "P1" || text == "p1") return Player::P1;
  if (text == "2" || text == "P2" || text == "p2") return Player::P2;
  throw std::invalid_argument("player must be 1 or 2, got '" + text + "'");
}

std::string labels_of(const GameDef& game, Player p, const std::vector<ActionId>& moves) {
  return join_labels(game.alphabet(p), moves);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  SourceArgs source;
  bool json = false;
  bool exitcode = false;
  bool parallel = false;
  std::uint64_t budget = SolverOptions{}.node_budget;
};

int cmd_classify(const ClassifyArgs& args, Streams io) {
  const auto src = load_game(args.source.options());
  SolverOptions opts;
  opts.node_budget = args.budget;
  opts.parallel = args.parallel;
  const auto& r = cached_classify(src, opts);
  if (args.json) {
    nlohmann::ordered_json j;
    j["game"] = src.game.name();
    j["horizon"] = src.game.horizon();
    j["case"] = to_string(r.game_case);
    j["value"] = r.value.str();
    j["sign"] = to_string(r.sign);
    j["claims"] = {{"P1", to_string(r.claim_p1)}, {"P2", to_string(r.claim_p2)}};
    j["stats"] = {{"nodes", r.stats.nodes},
                  {"memo_hits", r.stats.memo_hits},
                  {"elapsed_ms", r.stats.elapsed_ms}};
    io.out << j.dump() << '\n';
  } else {
    io.out << case_line(r.game_case) << '\n'
           << "game:    " << src.game.name() << " (horizon " << src.game.horizon() << ")\n"
           << "summary: " << case_summary(r.game_case) << '\n'
           << "value:   " << r.value.str() << '\n'
           << "sign:    " << to_string(r.sign) << '\n'
           << "P1:      " << to_string(r.claim_p1) << '\n'
           << "P2:      " << to_string(r.claim_p2) << '\n'
           << "stats:   nodes=" << r.stats.nodes << " memo_hits=" << r.stats.memo_hits
           << " elapsed_ms=" << r.stats.elapsed_ms << '\n';
  }
  if (!args.exitcode) return kOk;
  switch (r.game_case) {
    case Case::I: return kCaseI;
    case Case::II: return kCaseII;
    case Case::III: return kCaseIII;
  }
  return kOk;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  SourceArgs source;
  std::string player = "1";
  std::string out;
  std::size_t max_entries = 1'000'000;
  std::uint64_t budget = SolverOptions{}.node_budget;
};

int cmd_solve(const SolveArgs& args, Streams io) {
  const auto src = load_game(args.source.options());
  const Player player = parse_player(args.player);
  SolverOptions opts;
  opts.node_budget = args.budget;
  const auto& r = cached_classify(src, opts);

  StrategyFile file;
  file.game = src.game.name();
  file.player = player;
  if (player == Player::P1) {
    file.claim = to_string(r.claim_p1);
    file.moves = materialize_basic(src.game, r.strategy_p1, args.max_entries);
  } else {
    file.claim = to_string(r.claim_p2);
    file.moves = materialize_basic(src.game, r.strategy_p2, args.max_entries);
  }
  const std::string text = to_json(file).dump(2) + "\n";
  if (args.out.empty()) {
    io.out << text;
    return kOk;
  }
  std::ofstream f(args.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + args.out + "'");
  f << text;
  io.out << "wrote " << file.moves.size() << " entries (" << to_string(player) << ", "
         << file.claim << ") to " << args.out << '\n';
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  SourceArgs source;
  std::vector<std::string> files;
  std::string claim;
  std::uint64_t budget = EnumerationBudget{}.max_sequences;
};

int cmd_verify(const VerifyArgs& args, Streams io) {
  SourceArgs source = args.source;
  std::string strategy_path;
  if (!source.builtin.empty() && args.files.size() == 1) {
    strategy_path = args.files[0];
  } else if (source.builtin.empty() && args.files.size() == 2) {
    source.path = args.files[0];
    strategy_path = args.files[1];
  } else {
    io.err << "usage: verify (GAME | --builtin ID) STRATEGY\n";
    return kBadInput;
  }
  const auto src = load_game(source.options());
  const auto file = parse_strategy_file(read_text(strategy_path));
  if (file.game != src.game.name()) {
    io.err << "strategy is for game '" << file.game << "', loaded '" << src.game.name() << "'\n";
    return kBadInput;
  }
  const std::string claim_text = args.claim.empty() ? file.claim : args.claim;
  ClaimKind claim;
  if (claim_text == "winning")
    claim = ClaimKind::Winning;
  else if (claim_text == "unbeatable")
    claim = ClaimKind::Unbeatable;
  else {
    io.err << "nothing to verify for claim '" << claim_text
           << "'; pass --claim winning|unbeatable\n";
    return kBadInput;
  }

  EnumerationBudget budget;
  budget.max_sequences = args.budget;
  VerifyReport report;
  if (file.player == Player::P1)
    report = verify_p1(src.game, strategy_p1_from_table(src.game, file.moves).as_strategy(),
                       claim, budget);
  else
    report = verify_p2(src.game, strategy_p2_from_table(src.game, file.moves).as_strategy(),
                       claim, budget);

  if (report.holds) {
    io.out << "verified: " << to_string(file.player) << " " << to_string(claim) << " over "
           << report.sequences_checked << " rival sequences\n";
    return kOk;
  }
  io.out << "refuted: " << to_string(file.player) << " " << to_string(claim) << '\n'
         << "counterexample: "
         << labels_of(src.game, opponent(file.player), *report.counterexample) << '\n';
  return kRefuted;
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  SourceArgs source;
  std::uint64_t budget = EnumerationBudget{}.max_strategies;
};

int cmd_oracle(const OracleArgs& args, Streams io) {
  const auto src = load_game(args.source.options());
  EnumerationBudget budget;
  budget.max_strategies = args.budget;
  const Case oracle = oracle_classify(src.game, budget);
  const Case solver = cached_classify(src).game_case;
  io.out << "oracle: " << case_line(oracle) << '\n' << "solver: " << case_line(solver) << '\n';
  if (oracle != solver) {
    io.out << "DISAGREEMENT\n";
    return kDisagreement;
  }
  io.out << "agreement\n";
  return kOk;
}

// ---------------------------------------------------------------- play

struct PlayArgs {
  SourceArgs source;
  std::string human = "P1";
};

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

int cmd_play(const PlayArgs& args, Streams io) {
  auto options = args.source.options();
  // Terminal play never forfeits: GDF sources are always loaded masked.
  if (options.path || options.mode) options.mode = gdf::IllegalPolicy::Masked;
  const auto src = load_game(options);
  const auto& game = src.game;
  const Player human = parse_player(args.human);
  const Player engine = opponent(human);
  const auto& r = cached_classify(src);
  const Claim engine_claim = engine == Player::P1 ? r.claim_p1 : r.claim_p2;

  io.out << game.name() << ": " << case_line(r.game_case) << ", " << case_summary(r.game_case)
         << '\n'
         << "you are " << to_string(human) << "; the engine plays " << to_string(engine)
         << (engine_claim == Claim::Unbeatable ? " with an " : " with a ")
         << to_string(engine_claim) << " strategy\n";

  HistoryPrefix h;
  while (h.plies() < game.total_plies()) {
    const Player mover = h.to_move();
    const auto& alpha = game.alphabet(mover);
    if (mover == engine) {
      const auto& seen = h.moves_of(human);
      const ActionId a = engine == Player::P1 ? r.strategy_p1(seen) : r.strategy_p2(seen);
      push_checked(game, h, a);
      io.out << "engine: " << alpha.label(a) << '\n';
      continue;
    }
    const auto legal = game.legal_actions(h);
    if (legal.size() == 1) {
      push_checked(game, h, legal[0]);
      io.out << "you: " << alpha.label(legal[0]) << " (only legal move)\n";
      continue;
    }
    std::string listing;
    for (const auto a : legal) listing += (listing.empty() ? "" : " ") + alpha.label(a);
    for (;;) {
      io.out << "your move [" << listing << "]: " << std::flush;
      std::string line;
      if (!std::getline(io.in, line)) {
        io.err << "\ninput closed before the game ended\n";
        return kFailure;
      }
      const auto a = alpha.find(trim(line));
      if (a && std::find(legal.begin(), legal.end(), *a) != legal.end()) {
        push_checked(game, h, *a);
        break;
      }
      io.out << "'" << trim(line) << "' is not legal here\n";
    }
  }

  const Payoff p = game.payoff(h);
  const Rational f = p.u - p.v;
  io.out << "moves P1: " << labels_of(game, Player::P1, h.a) << '\n'
         << "moves P2: " << labels_of(game, Player::P2, h.b) << '\n'
         << "payoffs: u=" << p.u.str() << " v=" << p.v.str() << " f=" << f.str() << '\n'
         << "result:  " << games::to_string(games::tag_of(p)) << '\n';
  const auto note = game.note(h);
  if (!note.empty()) io.out << "note:    " << note << '\n';
  io.out << "announced: " << case_line(r.game_case) << " (" << case_summary(r.game_case) << ")\n";
  return kOk;
}

// ---------------------------------------------------------------- serve

struct ServeArgs {
  SourceArgs source;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string assets;
};

int cmd_serve(const ServeArgs& args, Streams io) {
  const auto src = load_game(args.source.options());
  SessionService service(src.game, cached_classify(src));
  HttpServer server(service, args.assets.empty() ? std::nullopt
                                                 : std::optional<std::string>(args.assets));
  const int port = server.bind(args.host, args.port);
  if (port < 0) {
    io.err << "cannot bind " << args.host << ":" << args.port << '\n';
    return kFailure;
  }
  io.out << "serving " << src.game.name() << " on http://" << args.host << ":" << port << '\n'
         << std::flush;
  server.listen();
  return kOk;
}

// ---------------------------------------------------------------- export

struct ExportArgs {
  SourceArgs source;
  std::string out;
  std::string policy = "masked";
};

int cmd_export(const ExportArgs& args, Streams io) {
  const auto src = load_game(args.source.options());
  const auto policy = gdf::parse_policy(args.policy).value_or(gdf::IllegalPolicy::Masked);
  const std::string text = gdf::serialize(gdf::export_game(src.game, policy));
  if (args.out.empty()) {
    io.out << text;
    return kOk;
  }
  std::ofstream f(args.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + args.out + "'");
  f << text;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Solve and play finite alternating-move games", "altgame"};
  app.require_subcommand(1);

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "Decide which player can force a win");
  add_source_options(classify_cmd, classify_args.source);
  classify_cmd->add_flag("--json", classify_args.json, "Machine-readable output");
  classify_cmd->add_flag("--exitcode", classify_args.exitcode, "Exit 10/20/30 for CASE_I/II/III");
  classify_cmd->add_flag("--parallel", classify_args.parallel, "OpenMP value search");
  classify_cmd->add_option("--budget", classify_args.budget, "Search node budget");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Write a basic strategy table");
  add_source_options(solve_cmd, solve_args.source);
  solve_cmd->add_option("--player,-p", solve_args.player, "1 or 2")->required();
  solve_cmd->add_option("--out,-o", solve_args.out, "Output file (default stdout)");
  solve_cmd->add_option("--max-entries", solve_args.max_entries, "Table size limit");
  solve_cmd->add_option("--budget", solve_args.budget, "Search node budget");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a strategy file against every rival line");
  add_source_options(verify_cmd, verify_args.source, false);
  verify_cmd->add_option("files", verify_args.files, "[GAME] STRATEGY")->required();
  verify_cmd->add_option("--claim", verify_args.claim, "winning or unbeatable")
      ->check(CLI::IsMember({"winning", "unbeatable"}));
  verify_cmd->add_option("--budget", verify_args.budget, "Rival sequence budget");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check by strategy enumeration");
  add_source_options(oracle_cmd, oracle_args.source);
  oracle_cmd->add_option("--budget", oracle_args.budget, "Strategy count budget per player");

  PlayArgs play_args;
  auto* play_cmd = app.add_subcommand("play", "Play against the engine in the terminal");
  add_source_options(play_cmd, play_args.source);
  play_cmd->add_option("--human", play_args.human, "Side you play (P1 or P2)");

  ServeArgs serve_args;
  auto* serve_cmd = app.add_subcommand("serve", "HTTP session service");
  add_source_options(serve_cmd, serve_args.source);
  serve_cmd->add_option("--host", serve_args.host, "Bind address");
  serve_cmd->add_option("--port", serve_args.port, "Port (0 picks one)");
  serve_cmd->add_option("--assets", serve_args.assets, "Directory served at /");

  ExportArgs export_args;
  auto* export_cmd = app.add_subcommand("export", "Write the game as a GDF document");
  add_source_options(export_cmd, export_args.source);
  export_cmd->add_option("--out,-o", export_args.out, "Output file (default stdout)");
  export_cmd->add_option("--policy", export_args.policy, "illegal_policy field")
      ->check(CLI::IsMember({"strict", "masked"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(classify_args, io);
    if (*solve_cmd) return cmd_solve(solve_args, io);
    if (*verify_cmd) return cmd_verify(verify_args, io);
    if (*oracle_cmd) return cmd_oracle(oracle_args, io);
    if (*play_cmd) return cmd_play(play_args, io);
    if (*serve_cmd) return cmd_serve(serve_args, io);
    if (*export_cmd) return cmd_export(export_args, io);
  } catch (const BudgetExceeded& e) {
    io.err << e.what() << '\n';
    return kBudget;
  } catch (const GameError& e) {
    io.err << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::InvalidDocument:
      case ErrorCode::UnknownBuiltin:
        return kBadInput;
      default:
        return kFailure;
    }
  } catch (const std::invalid_argument& e) {
    io.err << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kFailure;
}

}  // namespace altgame::cli
