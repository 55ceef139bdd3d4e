#include "altgame/game.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace altgame {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IncompleteHistory: return "IncompleteHistory";
    case ErrorCode::ActionOutOfRange: return "ActionOutOfRange";
    case ErrorCode::IllegalAction: return "IllegalAction";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
    case ErrorCode::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorCode::MissingStateKey: return "MissingStateKey";
  }
  return "Unknown";
}

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw std::invalid_argument("empty action label");
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate action label '" + l + "'");
  }
}

std::optional<ActionId> Alphabet::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return ActionId{static_cast<std::uint32_t>(it - labels_.begin())};
}

GameDef::GameDef(Parts parts) : parts_(std::move(parts)) {
  if (parts_.horizon < 0) throw std::invalid_argument("negative horizon");
  if (parts_.p1.size() == 0 || parts_.p2.size() == 0)
    throw std::invalid_argument("empty action alphabet");
  if (!parts_.payoff) throw std::invalid_argument("game without payoff function");
}

std::vector<ActionId> GameDef::legal_actions(const HistoryPrefix& prefix) const {
  if (parts_.legal) return parts_.legal(prefix);
  const auto n = alphabet(prefix.to_move()).size();
  std::vector<ActionId> all(n);
  for (std::uint32_t i = 0; i < n; ++i) all[i] = ActionId{i};
  return all;
}

bool GameDef::is_legal(const HistoryPrefix& prefix, ActionId action) const {
  if (!alphabet(prefix.to_move()).contains(action)) return false;
  if (!parts_.legal) return true;
  auto legal = parts_.legal(prefix);
  return std::binary_search(legal.begin(), legal.end(), action);
}

Payoff GameDef::payoff(const FullHistory& h) const {
  if (h.a.size() != stages() || h.b.size() != stages())
    throw GameError(ErrorCode::IncompleteHistory,
                    "history has " + std::to_string(h.a.size()) + "+" +
                        std::to_string(h.b.size()) + " moves, expected " +
                        std::to_string(stages()) + " each");
  for (auto x : h.a)
    if (!parts_.p1.contains(x))
      throw GameError(ErrorCode::ActionOutOfRange, "player 1 action out of range");
  for (auto y : h.b)
    if (!parts_.p2.contains(y))
      throw GameError(ErrorCode::ActionOutOfRange, "player 2 action out of range");
  return parts_.payoff(h);
}

std::string GameDef::state_key(const HistoryPrefix& prefix) const {
  if (!parts_.key) throw GameError(ErrorCode::MissingStateKey, name() + " has no state key");
  return parts_.key(prefix);
}

std::string GameDef::note(const FullHistory& h) const {
  return parts_.note ? parts_.note(h) : std::string();
}

GameDef GameDef::with_payoffs(std::function<Payoff(const Payoff&)> map, std::string name) const {
  Parts p = parts_;
  if (!name.empty()) p.name = std::move(name);
  p.payoff = [inner = parts_.payoff, map = std::move(map)](const FullHistory& h) {
    return map(inner(h));
  };
  return GameDef(std::move(p));
}

std::string join_labels(const Alphabet& alphabet, const std::vector<ActionId>& moves, char sep) {
  std::string out;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (i) out += sep;
    out += alphabet.label(moves[i]);
  }
  return out;
}

}  // namespace altgame
