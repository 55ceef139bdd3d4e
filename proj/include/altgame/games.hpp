#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "altgame/gdf.hpp"
#include "altgame/game.hpp"

namespace altgame::games {

enum class GameResultTag { P1Win, P2Win, Draw, P1Illegal, P2Illegal };

const char* to_string(GameResultTag tag);

/// Win 1/0, loss 0/1, draw 1/2 each; an illegal move scores 0 for the
/// offender and 1 for the opponent.
Payoff outcome_to_payoffs(GameResultTag tag);

/// P1_WIN / P2_WIN / DRAW by comparing u and v.
GameResultTag tag_of(const Payoff& p);

enum class BuiltinId { T0, W1, W2, D1, Sub10, TicTacToe, Hexapawn, RepDemo };

const char* to_string(BuiltinId id);
std::optional<BuiltinId> parse_builtin(std::string_view name);
std::vector<BuiltinId> all_builtins();

struct BuiltinOptions {
  /// Repetition counting includes the initial position.
  bool rep_count_initial = true;
};

GameDef get_builtin(BuiltinId id, const BuiltinOptions& options = {});
/// Throws GameError(UnknownBuiltin).
GameDef get_builtin(std::string_view name, const BuiltinOptions& options = {});

/// Exported GDF document of a builtin.
gdf::Document builtin_document(BuiltinId id, const BuiltinOptions& options = {});

// Micro games (N = 0, direct construction, no pass action).
GameDef make_t0();  ///< A=[a], B=[b], single leaf (1/2, 1/2)
GameDef make_w1();  ///< A=[L,R], B=[x,y]; R wins outright
GameDef make_w2();  ///< every leaf (0, 1)
GameDef make_d1();  ///< (L,x)=draw (L,y)=P2 (R,x)=P1 (R,y)=draw

/// Subtraction game: remove 1 or 2 tokens per move, taking the last wins.
GameDef make_subtraction(int pile = 10, int horizon = 4);
GameDef make_tictactoe();
/// 3x3 hexapawn; promotion, capturing every enemy pawn, or leaving the
/// opponent without a legal move wins.
GameDef make_hexapawn();
/// Two tokens on a three-cell line that step into the free cell or stay.
/// Nobody can win; without a repetition rule play runs to the horizon.
GameDef make_shuttle(int horizon = 5);
GameDef make_repdemo(int limit = 3, bool count_initial = true);

/// Declares a draw when a (position, side to move) pair recurs and its
/// occurrence count reaches `limit`; afterwards only "pass" is legal
/// ("pass" is appended to an alphabet lacking it). With `count_initial`
/// the root position counts as its first occurrence.
GameDef repetition_wrap(const GameDef& game, int limit = 3, bool count_initial = true);

/// SplitMix64 stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Random game over alphabets a1..aK and b1..bM. Leaves are visited in
/// lexicographic order of (a_0, b_0, a_1, b_1, ...); each takes
/// payoff_set[next() % |payoff_set|] from one SplitMix64 stream seeded
/// with `seed`.
GameDef gen_random(std::uint64_t seed, int horizon, std::size_t size_a, std::size_t size_b,
                   const std::vector<Payoff>& payoff_set);

}  // namespace altgame::games
