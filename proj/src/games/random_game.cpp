#include <stdexcept>

#include "altgame/games.hpp"

namespace altgame::games {

namespace {

std::vector<std::string> numbered(char prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

GameDef gen_random(std::uint64_t seed, int horizon, std::size_t size_a, std::size_t size_b,
                   const std::vector<Payoff>& payoff_set) {
  if (size_a < 1 || size_b < 1) throw std::invalid_argument("alphabet sizes must be positive");
  if (payoff_set.empty()) throw std::invalid_argument("empty payoff set");
  if (horizon < 0) throw std::invalid_argument("negative horizon");

  std::uint64_t leaves = 1;
  for (int t = 0; t <= horizon; ++t) {
    leaves *= size_a * size_b;
    if (leaves > 10'000'000) throw std::invalid_argument("random game too large");
  }

  std::vector<std::uint32_t> table(leaves);
  SplitMix64 rng(seed);
  for (auto& leaf : table) leaf = static_cast<std::uint32_t>(rng.next() % payoff_set.size());

  GameDef::Parts parts;
  parts.name = "random-" + std::to_string(seed);
  parts.horizon = horizon;
  parts.p1 = Alphabet(numbered('a', size_a));
  parts.p2 = Alphabet(numbered('b', size_b));
  parts.payoff = [table = std::move(table), payoff_set, size_a, size_b](const FullHistory& h) {
    std::uint64_t index = 0;
    for (std::size_t t = 0; t < h.a.size(); ++t) {
      index = index * size_a + h.a[t].index;
      index = index * size_b + h.b[t].index;
    }
    return payoff_set[table[index]];
  };
  return GameDef(std::move(parts));
}

}  // namespace altgame::games
