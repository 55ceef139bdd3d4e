#include "altgame/gdf.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <unordered_map>

#include "json.hpp"

namespace altgame::gdf {

using nlohmann::json;
using nlohmann::ordered_json;

const char* to_string(IllegalPolicy p) { return p == IllegalPolicy::Strict ? "strict" : "masked"; }

std::optional<IllegalPolicy> parse_policy(std::string_view text) {
  if (text == "strict") return IllegalPolicy::Strict;
  if (text == "masked") return IllegalPolicy::Masked;
  return std::nullopt;
}

namespace {

std::vector<StateNode> sorted_states(std::vector<StateNode> states) {
  std::sort(states.begin(), states.end(),
            [](const StateNode& x, const StateNode& y) { return x.id < y.id; });
  return states;
}

std::string child(const std::string& path, const std::string& field) {
  std::string escaped;
  for (char c : field) {
    if (c == '~')
      escaped += "~0";
    else if (c == '/')
      escaped += "~1";
    else
      escaped += c;
  }
  return path + "/" + escaped;
}

std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

void expect_fields(const json& obj, const std::string& path, std::initializer_list<const char*> allowed,
                   std::initializer_list<const char*> required) {
  if (!obj.is_object()) throw ParseError("P_TYPE", path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; });
    if (!known) throw ParseError("P_UNKNOWN_FIELD", child(path, key), "unknown field '" + key + "'");
  }
  for (const char* r : required)
    if (!obj.contains(r)) throw ParseError("P_MISSING_FIELD", path, std::string("missing '") + r + "'");
}

std::string get_string(const json& obj, const std::string& path) {
  if (!obj.is_string()) throw ParseError("P_TYPE", path, "expected a string");
  return obj.get<std::string>();
}

Rational get_rational(const json& value, const std::string& path) {
  try {
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    if (value.is_string()) return Rational::parse(value.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError("P_RATIONAL", path, e.what());
  }
  throw ParseError("P_RATIONAL", path, "expected \"p/q\" text or an integer");
}

Payoff get_payoff(const json& obj, const std::string& path) {
  expect_fields(obj, path, {"u", "v"}, {"u", "v"});
  return Payoff{get_rational(obj["u"], child(path, "u")), get_rational(obj["v"], child(path, "v"))};
}

std::vector<std::string> get_labels(const json& arr, const std::string& path) {
  if (!arr.is_array()) throw ParseError("P_TYPE", path, "expected an array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string label = get_string(arr[i], child(path, i));
    if (label == kPassLabel) throw ParseError("P_RESERVED_LABEL", child(path, i), "'pass' is reserved");
    if (label.empty()) throw ParseError("P_TYPE", child(path, i), "empty label");
    labels.push_back(std::move(label));
  }
  return labels;
}

StateNode get_state(const json& obj, const std::string& path) {
  expect_fields(obj, path, {"id", "turn", "moves", "terminal"}, {"id", "turn"});
  StateNode node;
  node.id = get_string(obj["id"], child(path, "id"));
  std::string turn = get_string(obj["turn"], child(path, "turn"));
  if (turn == "P1")
    node.turn = Player::P1;
  else if (turn == "P2")
    node.turn = Player::P2;
  else
    throw ParseError("P_TYPE", child(path, "turn"), "turn must be \"P1\" or \"P2\"");
  if (obj.contains("moves")) {
    const auto& moves = obj["moves"];
    if (!moves.is_object()) throw ParseError("P_TYPE", child(path, "moves"), "expected an object");
    for (const auto& [label, target] : moves.items()) {
      if (label == kPassLabel)
        throw ParseError("P_RESERVED_LABEL", child(child(path, "moves"), label), "'pass' is reserved");
      node.moves.emplace(label, get_string(target, child(child(path, "moves"), label)));
    }
  }
  if (obj.contains("terminal")) node.terminal = get_payoff(obj["terminal"], child(path, "terminal"));
  return node;
}

ordered_json payoff_json(const Payoff& p) {
  ordered_json j;
  j["u"] = p.u.str();
  j["v"] = p.v.str();
  return j;
}

}  // namespace

bool operator==(const Document& x, const Document& y) {
  return x.name == y.name && x.horizon == y.horizon && x.p1_actions == y.p1_actions &&
         x.p2_actions == y.p2_actions && x.initial == y.initial &&
         x.illegal_policy == y.illegal_policy && x.illegal_payoff_p1 == y.illegal_payoff_p1 &&
         x.illegal_payoff_p2 == y.illegal_payoff_p2 && sorted_states(x.states) == sorted_states(y.states);
}

Document parse(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("P_SYNTAX", "", e.what());
  }
  expect_fields(root, "",
                {"name", "horizon", "p1_actions", "p2_actions", "initial", "illegal_policy",
                 "illegal_payoff_p1", "illegal_payoff_p2", "states"},
                {"name", "horizon", "p1_actions", "p2_actions", "initial", "illegal_policy", "states"});
  Document doc;
  doc.name = get_string(root["name"], "/name");
  if (!root["horizon"].is_number_integer()) throw ParseError("P_TYPE", "/horizon", "expected an integer");
  auto horizon = root["horizon"].get<std::int64_t>();
  if (horizon < 0 || horizon > 1'000'000) throw ParseError("P_RANGE", "/horizon", "horizon out of range");
  doc.horizon = static_cast<int>(horizon);
  doc.p1_actions = get_labels(root["p1_actions"], "/p1_actions");
  doc.p2_actions = get_labels(root["p2_actions"], "/p2_actions");
  doc.initial = get_string(root["initial"], "/initial");
  auto policy = parse_policy(get_string(root["illegal_policy"], "/illegal_policy"));
  if (!policy) throw ParseError("P_TYPE", "/illegal_policy", "expected \"strict\" or \"masked\"");
  doc.illegal_policy = *policy;
  if (root.contains("illegal_payoff_p1"))
    doc.illegal_payoff_p1 = get_payoff(root["illegal_payoff_p1"], "/illegal_payoff_p1");
  if (root.contains("illegal_payoff_p2"))
    doc.illegal_payoff_p2 = get_payoff(root["illegal_payoff_p2"], "/illegal_payoff_p2");
  const auto& states = root["states"];
  if (!states.is_array()) throw ParseError("P_TYPE", "/states", "expected an array");
  for (std::size_t i = 0; i < states.size(); ++i) doc.states.push_back(get_state(states[i], child("/states", i)));
  return doc;
}

std::vector<Violation> validate(const Document& doc) {
  std::vector<Violation> out;
  auto report = [&](std::string code, std::string location, std::string message) {
    out.push_back({std::move(code), std::move(location), std::move(message)});
  };

  for (auto [field, labels] : {std::pair{"p1_actions", &doc.p1_actions}, std::pair{"p2_actions", &doc.p2_actions}}) {
    if (labels->empty()) report("E_EMPTY_ALPHABET", std::string("/") + field, "no actions declared");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < labels->size(); ++i)
      if (!seen.insert((*labels)[i]).second)
        report("E_DUPLICATE_ACTION", child(std::string("/") + field, i), "duplicate label '" + (*labels)[i] + "'");
  }

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < doc.states.size(); ++i)
    if (!index.emplace(doc.states[i].id, i).second)
      report("E_DUPLICATE_ID", child("/states", i), "duplicate state id '" + doc.states[i].id + "'");

  auto init = index.find(doc.initial);
  if (init == index.end())
    report("E_INITIAL_MISSING", "/initial", "initial state '" + doc.initial + "' does not exist");
  else if (doc.states[init->second].turn != Player::P1)
    report("E_INITIAL_TURN", "/initial", "initial state must have player 1 to move");

  for (std::size_t i = 0; i < doc.states.size(); ++i) {
    const auto& s = doc.states[i];
    const std::string path = child("/states", i);
    if (s.terminal && !s.moves.empty())
      report("E_TERMINAL_SHAPE", path, "terminal state '" + s.id + "' has moves");
    if (!s.terminal && s.moves.empty())
      report("E_TERMINAL_SHAPE", path, "state '" + s.id + "' has neither moves nor a terminal payoff");
    const auto& labels = s.turn == Player::P1 ? doc.p1_actions : doc.p2_actions;
    for (const auto& [label, target] : s.moves) {
      const std::string mpath = child(child(path, "moves"), label);
      if (std::find(labels.begin(), labels.end(), label) == labels.end())
        report("E_UNKNOWN_ACTION", mpath, "'" + label + "' is not an action of " + to_string(s.turn));
      auto t = index.find(target);
      if (t == index.end()) {
        report("E_DANGLING_TARGET", mpath, "target '" + target + "' does not exist");
      } else if (doc.states[t->second].turn == s.turn) {
        report("E_TURN_ALTERNATION", mpath, "edge '" + s.id + "' -> '" + target + "' keeps " + to_string(s.turn) + " to move");
      }
    }
  }

  if (init == index.end()) return out;

  // Reachability, cycles and longest path from the initial state.
  const std::size_t n = doc.states.size();
  std::vector<int> color(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::size_t> longest(n, 0);
  bool cyclic = false;
  std::function<void(std::size_t)> dfs = [&](std::size_t u) {
    color[u] = 1;
    for (const auto& [label, target] : doc.states[u].moves) {
      auto t = index.find(target);
      if (t == index.end()) continue;
      const std::size_t v = t->second;
      if (color[v] == 1) {
        cyclic = true;
        continue;
      }
      if (color[v] == 0) dfs(v);
      longest[u] = std::max(longest[u], longest[v] + 1);
    }
    color[u] = 2;
  };
  dfs(init->second);

  for (std::size_t i = 0; i < n; ++i)
    if (color[i] == 0) report("E_UNREACHABLE", child("/states", i), "state '" + doc.states[i].id + "' is unreachable");
  const std::size_t limit = 2 * (static_cast<std::size_t>(doc.horizon) + 1);
  if (cyclic)
    report("E_HORIZON", "/states", "a cycle is reachable from the initial state");
  else if (longest[init->second] > limit)
    report("E_HORIZON", "/horizon",
           "a path needs " + std::to_string(longest[init->second]) + " plies, horizon allows " + std::to_string(limit));
  return out;
}

namespace {

struct Compiled {
  std::vector<std::string> ids;
  std::vector<std::optional<Payoff>> terminal;
  std::vector<std::vector<int>> next;  // per state, indexed by the mover's action
  int initial = 0;
  Payoff forfeit_p1;
  Payoff forfeit_p2;
  ActionId pass_p1;
  ActionId pass_p2;
  IllegalPolicy mode = IllegalPolicy::Masked;
};

struct Cursor {
  int state = 0;
  std::optional<Player> forfeit;
  std::size_t forfeit_ply = 0;
};

Cursor replay(const Compiled& g, const HistoryPrefix& h) {
  Cursor c{g.initial, std::nullopt, 0};
  for (std::size_t i = 0; i < h.plies(); ++i) {
    if (c.forfeit) continue;
    const Player mover = i % 2 == 0 ? Player::P1 : Player::P2;
    const ActionId x = h.ply(i);
    const ActionId pass = mover == Player::P1 ? g.pass_p1 : g.pass_p2;
    const auto& next = g.next[static_cast<std::size_t>(c.state)];
    if (x.index > pass.index)
      throw IllegalMove(ErrorCode::ActionOutOfRange, mover, i, "action index out of range");
    if (g.terminal[static_cast<std::size_t>(c.state)]) {
      if (g.mode == IllegalPolicy::Masked && x != pass)
        throw IllegalMove(ErrorCode::IllegalAction, mover, i, "only pass is legal after a terminal state");
      continue;
    }
    const int target = next[x.index];
    if (target < 0) {
      if (g.mode == IllegalPolicy::Masked)
        throw IllegalMove(ErrorCode::IllegalAction, mover, i,
                          "illegal action at state '" + g.ids[static_cast<std::size_t>(c.state)] + "'");
      c.forfeit = mover;
      c.forfeit_ply = i;
      continue;
    }
    c.state = target;
  }
  return c;
}

}  // namespace

GameDef to_game(const Document& doc, IllegalPolicy mode) {
  auto violations = validate(doc);
  if (!violations.empty()) {
    std::string msg = doc.name + ": " + std::to_string(violations.size()) + " violation(s); first " +
                      violations.front().code + " at " + violations.front().location + ": " +
                      violations.front().message;
    throw GameError(ErrorCode::InvalidDocument, msg);
  }

  auto with_pass = [](std::vector<std::string> labels) {
    labels.emplace_back(kPassLabel);
    return labels;
  };
  Alphabet p1(with_pass(doc.p1_actions));
  Alphabet p2(with_pass(doc.p2_actions));

  auto g = std::make_shared<Compiled>();
  g->mode = mode;
  g->pass_p1 = ActionId{static_cast<std::uint32_t>(doc.p1_actions.size())};
  g->pass_p2 = ActionId{static_cast<std::uint32_t>(doc.p2_actions.size())};
  g->forfeit_p1 = doc.illegal_payoff_p1.value_or(Payoff{Rational(0), Rational(1)});
  g->forfeit_p2 = doc.illegal_payoff_p2.value_or(Payoff{Rational(1), Rational(0)});
  std::unordered_map<std::string, int> index;
  for (const auto& s : doc.states) {
    index.emplace(s.id, static_cast<int>(g->ids.size()));
    g->ids.push_back(s.id);
    g->terminal.push_back(s.terminal);
  }
  for (const auto& s : doc.states) {
    const Alphabet& alphabet = s.turn == Player::P1 ? p1 : p2;
    std::vector<int> next(alphabet.size(), -1);
    for (const auto& [label, target] : s.moves) next[alphabet.find(label)->index] = index.at(target);
    g->next.push_back(std::move(next));
  }
  g->initial = index.at(doc.initial);

  GameDef::Parts parts;
  parts.name = doc.name;
  parts.horizon = doc.horizon;
  parts.p1 = p1;
  parts.p2 = p2;
  parts.payoff = [g](const FullHistory& h) {
    Cursor c = replay(*g, h);
    if (c.forfeit) return *c.forfeit == Player::P1 ? g->forfeit_p1 : g->forfeit_p2;
    const auto& t = g->terminal[static_cast<std::size_t>(c.state)];
    if (!t)
      throw GameError(ErrorCode::InvalidState,
                      "history ends at non-terminal state '" + g->ids[static_cast<std::size_t>(c.state)] + "'");
    return *t;
  };
  if (mode == IllegalPolicy::Masked) {
    parts.legal = [g](const HistoryPrefix& h) {
      Cursor c = replay(*g, h);
      const bool p1 = h.to_move() == Player::P1;
      if (g->terminal[static_cast<std::size_t>(c.state)]) return std::vector<ActionId>{p1 ? g->pass_p1 : g->pass_p2};
      std::vector<ActionId> legal;
      const auto& next = g->next[static_cast<std::size_t>(c.state)];
      for (std::uint32_t i = 0; i < next.size(); ++i)
        if (next[i] >= 0) legal.push_back(ActionId{i});
      return legal;
    };
  }
  parts.key = [g](const HistoryPrefix& h) {
    Cursor c = replay(*g, h);
    std::string key = c.forfeit ? std::string("!") + to_string(*c.forfeit) : g->ids[static_cast<std::size_t>(c.state)];
    key += (h.plies() % 2 == 0) ? "@1" : "@2";
    return key;
  };
  parts.note = [g](const FullHistory& h) {
    Cursor c = replay(*g, h);
    if (c.forfeit)
      return std::string(to_string(*c.forfeit)) + " forfeits by an illegal move at ply " + std::to_string(c.forfeit_ply);
    return "terminal state '" + g->ids[static_cast<std::size_t>(c.state)] + "'";
  };
  return GameDef(std::move(parts));
}

std::string serialize(const Document& doc) {
  auto line = [](const ordered_json& j) { return j.dump(); };
  std::string out = "{\n";
  out += "  \"name\": " + line(doc.name) + ",\n";
  out += "  \"horizon\": " + std::to_string(doc.horizon) + ",\n";
  out += "  \"p1_actions\": " + line(doc.p1_actions) + ",\n";
  out += "  \"p2_actions\": " + line(doc.p2_actions) + ",\n";
  out += "  \"initial\": " + line(doc.initial) + ",\n";
  out += "  \"illegal_policy\": " + line(to_string(doc.illegal_policy)) + ",\n";
  if (doc.illegal_payoff_p1) out += "  \"illegal_payoff_p1\": " + line(payoff_json(*doc.illegal_payoff_p1)) + ",\n";
  if (doc.illegal_payoff_p2) out += "  \"illegal_payoff_p2\": " + line(payoff_json(*doc.illegal_payoff_p2)) + ",\n";
  out += "  \"states\": [";
  auto states = sorted_states(doc.states);
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& s = states[i];
    ordered_json j;
    j["id"] = s.id;
    j["turn"] = to_string(s.turn);
    if (!s.moves.empty()) {
      const auto& labels = s.turn == Player::P1 ? doc.p1_actions : doc.p2_actions;
      ordered_json moves = ordered_json::object();
      for (const auto& label : labels)
        if (auto it = s.moves.find(label); it != s.moves.end()) moves[label] = it->second;
      for (const auto& [label, target] : s.moves)
        if (!moves.contains(label)) moves[label] = target;
      j["moves"] = std::move(moves);
    }
    if (s.terminal) j["terminal"] = payoff_json(*s.terminal);
    out += (i ? ",\n    " : "\n    ") + line(j);
  }
  out += states.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

}  // namespace altgame::gdf
