#include "altgame/verifier.hpp"

#include <exception>
#include <limits>
#include <mutex>

#include "altgame/engine.hpp"

namespace altgame {

const char* to_string(ClaimKind c) { return c == ClaimKind::Winning ? "winning" : "unbeatable"; }

namespace {

bool claim_met(Player player, ClaimKind claim, const Rational& f) {
  const int s = f.sign();
  if (player == Player::P1) return claim == ClaimKind::Winning ? s > 0 : s >= 0;
  return claim == ClaimKind::Winning ? s < 0 : s <= 0;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

void check_sequence_budget(const GameDef& game, Player rival, const EnumerationBudget& budget) {
  const std::uint64_t count = saturating_pow(game.alphabet(rival).size(), game.stages());
  if (count > budget.max_sequences)
    throw BudgetExceeded(std::to_string(game.alphabet(rival).size()) + "^" +
                         std::to_string(game.stages()) + " rival sequences exceed the budget of " +
                         std::to_string(budget.max_sequences));
}

struct Partial {
  std::uint64_t checked = 0;
  std::optional<std::vector<ActionId>> counterexample;
};

// Depth-first walk over the rival's legal moves in index order, which visits
// complete rival sequences in lexicographic order. Stops at the first failure.
template <Player P>
class SequenceWalk {
 public:
  SequenceWalk(const GameDef& game, const Strategy<P>& s, ClaimKind claim)
      : game_(game), s_(s), claim_(claim) {}

  void walk(HistoryPrefix& h, Partial& out) {
    if (h.plies() == game_.total_plies()) {
      ++out.checked;
      if (!claim_met(P, claim_, diff(game_, h))) out.counterexample = h.moves_of(opponent(P));
      return;
    }
    if (h.to_move() == P) {
      push_checked(game_, h, s_(h));
      walk(h, out);
      h.pop();
      return;
    }
    for (ActionId r : game_.legal_actions(h)) {
      h.push(r);
      walk(h, out);
      h.pop();
      if (out.counterexample) return;
    }
  }

 private:
  const GameDef& game_;
  const Strategy<P>& s_;
  ClaimKind claim_;
};

template <Player P>
VerifyReport verify_kernel(const GameDef& game, const Strategy<P>& s, ClaimKind claim,
                           const EnumerationBudget& budget) {
  check_sequence_budget(game, opponent(P), budget);

  // Advance to the rival's first decision, then split its options.
  HistoryPrefix root;
  if (P == Player::P1) push_checked(game, root, s(root));
  const std::vector<ActionId> first = game.legal_actions(root);

  std::vector<Partial> parts(first.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;

#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(first.size()); ++i) {
    try {
      HistoryPrefix h = root;
      h.push(first[i]);
      SequenceWalk<P> walker(game, s, claim);
      walker.walk(h, parts[i]);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  VerifyReport report{P, claim, true, std::nullopt, 0};
  for (auto& part : parts) {
    report.sequences_checked += part.checked;
    if (part.counterexample) {
      report.holds = false;
      report.counterexample = std::move(part.counterexample);
      break;
    }
  }
  return report;
}

template <Player P>
VerifyReport verify_odometer(const GameDef& game, const Strategy<P>& s, ClaimKind claim,
                             const EnumerationBudget& budget) {
  check_sequence_budget(game, opponent(P), budget);
  const std::size_t radix = game.alphabet(opponent(P)).size();
  std::vector<ActionId> seq(game.stages(), ActionId{0});
  VerifyReport report{P, claim, true, std::nullopt, 0};
  while (true) {
    std::optional<FullHistory> h;
    try {
      if constexpr (P == Player::P1)
        h = respond_p1(game, s, seq);
      else
        h = respond_p2(game, seq, s);
    } catch (const IllegalMove& e) {
      if (e.offender() == P) throw;
    }
    if (h) {
      ++report.sequences_checked;
      if (!claim_met(P, claim, diff(game, *h))) {
        report.holds = false;
        report.counterexample = seq;
        return report;
      }
    }
    std::size_t k = seq.size();
    while (k > 0 && seq[k - 1].index + 1 == radix) seq[--k] = ActionId{0};
    if (k == 0) break;
    ++seq[k - 1].index;
  }
  return report;
}

}  // namespace

VerifyReport verify_p1(const GameDef& game, const Strategy1& xi, ClaimKind claim,
                       const EnumerationBudget& budget) {
  return verify_kernel<Player::P1>(game, xi, claim, budget);
}

VerifyReport verify_p2(const GameDef& game, const Strategy2& eta, ClaimKind claim,
                       const EnumerationBudget& budget) {
  return verify_kernel<Player::P2>(game, eta, claim, budget);
}

namespace reference {

VerifyReport verify_p1_serial(const GameDef& game, const Strategy1& xi, ClaimKind claim,
                              const EnumerationBudget& budget) {
  return verify_odometer<Player::P1>(game, xi, claim, budget);
}

VerifyReport verify_p2_serial(const GameDef& game, const Strategy2& eta, ClaimKind claim,
                              const EnumerationBudget& budget) {
  return verify_odometer<Player::P2>(game, eta, claim, budget);
}

}  // namespace reference

}  // namespace altgame
