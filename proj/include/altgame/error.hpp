#pragma once

#include <stdexcept>
#include <string>

namespace altgame {

enum class ErrorCode {
  IncompleteHistory,
  ActionOutOfRange,
  IllegalAction,
  LengthMismatch,
  BudgetExceeded,
  InvalidState,
  ParseError,
  InvalidDocument,
  UnknownBuiltin,
  MissingStateKey,
};

const char* to_string(ErrorCode code);

/// Base error for every failure raised by the library.
class GameError : public std::runtime_error {
 public:
  GameError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class BudgetExceeded : public GameError {
 public:
  explicit BudgetExceeded(const std::string& what)
      : GameError(ErrorCode::BudgetExceeded, what) {}
};

}  // namespace altgame
