#include <algorithm>
#include <vector>

#include "altgame/engine.hpp"
#include "altgame/games.hpp"
#include "altgame/solver.hpp"
#include "altgame/verifier.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace altgame;

namespace {

ActionId id(std::uint32_t i) { return ActionId{i}; }

const std::vector<Payoff> kThree = {{Rational(0), Rational(1)},
                                    {Rational(1, 2), Rational(1, 2)},
                                    {Rational(1), Rational(0)}};

Strategy1 p1_const(std::uint32_t a) { return constant_strategy<Player::P1>(id(a)).as_strategy(); }
Strategy2 p2_const(std::uint32_t b) { return constant_strategy<Player::P2>(id(b)).as_strategy(); }

void same_report(const VerifyReport& x, const VerifyReport& y) {
  CHECK(x.holds == y.holds);
  CHECK(x.counterexample == y.counterexample);
  CHECK(x.sequences_checked == y.sequences_checked);
}

}  // namespace

TEST_CASE("verify_p1 examples") {
  auto w1 = verify_p1(games::make_w1(), p1_const(1), ClaimKind::Winning);
  CHECK(w1.holds);
  CHECK(w1.sequences_checked == 2);
  auto d1w = verify_p1(games::make_d1(), p1_const(1), ClaimKind::Winning);
  CHECK_FALSE(d1w.holds);
  CHECK(d1w.counterexample == std::vector<ActionId>{id(1)});
  CHECK(verify_p1(games::make_d1(), p1_const(1), ClaimKind::Unbeatable).holds);
}

TEST_CASE("verify_p2 examples") {
  for (std::uint32_t b = 0; b < 2; ++b)
    CHECK(verify_p2(games::make_w2(), p2_const(b), ClaimKind::Winning).holds);
  CHECK(verify_p2(games::make_d1(), p2_const(1), ClaimKind::Unbeatable).holds);
  auto fail = verify_p2(games::make_d1(), p2_const(0), ClaimKind::Unbeatable);
  CHECK_FALSE(fail.holds);
  CHECK(fail.counterexample == std::vector<ActionId>{id(1)});
}

TEST_CASE("verifier budget is checked before enumeration") {
  EnumerationBudget b;
  b.max_sequences = 1;
  CHECK_THROWS_AS(verify_p1(games::make_w1(), p1_const(1), ClaimKind::Winning, b), BudgetExceeded);
  CHECK_THROWS_AS(reference::verify_p1_serial(games::make_w1(), p1_const(1), ClaimKind::Winning, b),
                  BudgetExceeded);
}

TEST_CASE("counterexamples reproduce the violation") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = games::gen_random(seed, 1, 2, 3, kThree);
    const auto xi = oracle::hashed_strategy_p1(g, seed);
    auto r = verify_p1(g, xi, ClaimKind::Unbeatable);
    const auto brute = oracle::brute_counterexample_p1(g, xi, false);
    CHECK(r.holds == !brute.has_value());
    CHECK(r.counterexample == brute);
    if (r.counterexample) CHECK(diff(g, respond_p1(g, xi, *r.counterexample)).sign() < 0);
  }
}

TEST_CASE("DFS verifier kernels match the literal enumeration") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = static_cast<int>(seed % 3);
    const auto g = games::gen_random(seed, n, 2, 2 + seed % 2, kThree);
    CAPTURE(seed);
    const auto xi = oracle::hashed_strategy_p1(g, seed + 100);
    const auto eta = oracle::hashed_strategy_p2(g, seed + 200);
    for (auto claim : {ClaimKind::Winning, ClaimKind::Unbeatable}) {
      same_report(verify_p1(g, xi, claim), reference::verify_p1_serial(g, xi, claim));
      same_report(verify_p2(g, eta, claim), reference::verify_p2_serial(g, eta, claim));
      CHECK(verify_p2(g, eta, claim).counterexample ==
            oracle::brute_counterexample_p2(g, eta, claim == ClaimKind::Winning));
    }
  }
}

TEST_CASE("verifier skips rival lines that are illegal") {
  const auto hex = games::make_hexapawn();
  const auto r = classify(hex);
  const auto kernel = verify_p2(hex, r.strategy_p2.as_strategy(), ClaimKind::Winning);
  const auto serial = reference::verify_p2_serial(hex, r.strategy_p2.as_strategy(), ClaimKind::Winning);
  CHECK(kernel.holds);
  same_report(kernel, serial);
  CHECK_FALSE(oracle::brute_counterexample_p2(hex, r.strategy_p2.as_strategy(), true));
}

TEST_CASE("strategy enumeration sizes") {
  CHECK(enumerate_strategies<Player::P1>(games::make_t0()).size() == 1);
  CHECK(enumerate_strategies<Player::P1>(games::make_w1()).size() == 2);
  CHECK(enumerate_strategies<Player::P2>(games::make_w1()).size() == 4);
  const auto g = games::gen_random(0, 1, 2, 2, kThree);
  const auto s1 = enumerate_strategies<Player::P1>(g);
  CHECK(s1.size() == 32);
  CHECK(s1.decision_points() == 5);
  CHECK(enumerate_strategies<Player::P2>(g).size() == 1024);
  EnumerationBudget tight;
  tight.max_strategies = 1000;
  CHECK_THROWS_AS(enumerate_strategies<Player::P2>(g, tight), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_strategies<Player::P1>(games::make_tictactoe()), BudgetExceeded);
}

TEST_CASE("enumerated strategies are pairwise distinct") {
  const auto g = games::gen_random(1, 1, 2, 2, kThree);
  const auto s1 = enumerate_strategies<Player::P1>(g);
  const auto nf = oracle::normal_form(g);
  std::vector<std::vector<ActionId>> tables;
  s1.for_each([&](const Strategy1& xi) {
    std::vector<ActionId> t;
    for (const auto& node : nf.p1_nodes) t.push_back(xi(node));
    tables.push_back(t);
  });
  std::sort(tables.begin(), tables.end());
  CHECK(std::adjacent_find(tables.begin(), tables.end()) == tables.end());
  CHECK(tables.size() == nf.p1_count);
}

TEST_CASE("oracle_classify examples") {
  CHECK(oracle_classify(games::make_w1()) == Case::I);
  CHECK(oracle_classify(games::make_w2()) == Case::II);
  CHECK(oracle_classify(games::make_t0()) == Case::III);
  CHECK(oracle_classify(games::make_d1()) == Case::III);
  CHECK_THROWS_AS(oracle_classify(games::make_tictactoe()), BudgetExceeded);
}

TEST_CASE("oracle agrees with the naive normal form and its serial reference") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = games::gen_random(seed, 1, 2, 2, kThree);
    CAPTURE(seed);
    const Case expected = oracle::naive_case(g);
    CHECK(oracle_classify(g) == expected);
    CHECK(reference::oracle_classify_serial(g) == expected);
  }
}

TEST_CASE("a winning basic strategy beats every full-memory opponent") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = games::gen_random(seed, 1, 2, 2, kThree);
    const auto r = classify(g);
    if (r.game_case != Case::I) continue;
    const auto xi = r.strategy_p1.as_strategy();
    REQUIRE(verify_p1(g, xi, ClaimKind::Winning).holds);
    enumerate_strategies<Player::P2>(g).for_each(
        [&](const Strategy2& eta) { CHECK(diff(g, playout(g, xi, eta)).sign() > 0); });
  }
}
