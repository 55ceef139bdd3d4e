#include <chrono>
#include <exception>
#include <mutex>
#include <vector>

#include <omp.h>

#include "altgame/kernels.hpp"

namespace altgame::kernels {

std::string node_key(const GameDef& game, const HistoryPrefix& h) {
  if (game.has_state_key()) {
    std::string key = game.state_key(h);
    key += (h.plies() % 2 == 0) ? "|1" : "|2";
    return key;
  }
  return history_key(h);
}

std::string history_key(const HistoryPrefix& h) {
  std::string key;
  key.reserve(h.plies() * 3 + 1);
  key += '#';
  for (std::size_t i = 0; i < h.plies(); ++i) {
    auto x = h.ply(i).index;
    key += static_cast<char>(x & 0xff);
    key += static_cast<char>((x >> 8) & 0xff);
    key += static_cast<char>((x >> 16) & 0xff);
  }
  return key;
}

ValueEntry ValueSearch::eval(HistoryPrefix& h) {
  budget_.charge();
  if (h.plies() == game_.total_plies()) {
    Payoff p = game_.payoff(h);
    return {p.u - p.v, ActionId{}};
  }
  std::string key = node_key(game_, h);
  if (auto it = memo_.find(key); it != memo_.end()) {
    ++hits_;
    return it->second;
  }
  const bool maximize = h.to_move() == Player::P1;
  std::optional<ValueEntry> best;
  for (ActionId a : game_.legal_actions(h)) {
    h.push(a);
    Rational v = eval(h).value;
    h.pop();
    if (!best || (maximize ? v > best->value : v < best->value)) best = ValueEntry{v, a};
  }
  if (!best) throw GameError(ErrorCode::InvalidState, "no legal action at ply " + std::to_string(h.plies()));
  memo_.emplace(std::move(key), *best);
  return *best;
}

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

ValueTable solve_values_serial(const GameDef& game, std::uint64_t node_budget) {
  auto start = std::chrono::steady_clock::now();
  NodeBudget budget(node_budget);
  ValueSearch search(game, budget);
  HistoryPrefix root;
  Rational value = search.eval(root).value;
  ValueTable table;
  table.root = value;
  table.stats.nodes = budget.used();
  table.stats.memo_hits = search.memo_hits();
  table.memo = std::make_shared<const ValueMemo>(std::move(search.memo()));
  table.stats.elapsed_ms = ms_since(start);
  return table;
}

ValueTable solve_values_parallel(const GameDef& game, std::uint64_t node_budget) {
  auto start = std::chrono::steady_clock::now();
  NodeBudget budget(node_budget);

  // Frontier: every legal (a_0, b_0) pair, or just a_0 when N = 0 would
  // make b_0 a leaf move (leaves carry no memo entry).
  std::vector<HistoryPrefix> frontier;
  const std::size_t depth = game.total_plies() > 2 ? 2 : 1;
  {
    HistoryPrefix root;
    for (ActionId a : game.legal_actions(root)) {
      root.push(a);
      if (depth == 1) {
        frontier.push_back(root);
      } else {
        for (ActionId b : game.legal_actions(root)) {
          root.push(b);
          frontier.push_back(root);
          root.pop();
        }
      }
      root.pop();
    }
  }

  // One memo per thread, kept across that thread's frontier nodes so that
  // transpositions between neighbouring subtrees are still shared.
  std::vector<ValueMemo> partial(static_cast<std::size_t>(omp_get_max_threads()));
  std::vector<std::uint64_t> hits(partial.size(), 0);
  std::exception_ptr failure;
  std::mutex failure_mutex;

#pragma omp parallel
  {
    ValueSearch search(game, budget);
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(frontier.size()); ++i) {
      try {
        HistoryPrefix h = frontier[i];
        search.eval(h);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
    const auto t = static_cast<std::size_t>(omp_get_thread_num());
    hits[t] = search.memo_hits();
    partial[t] = std::move(search.memo());
  }
  if (failure) std::rethrow_exception(failure);

  ValueMemo merged = std::move(partial[0]);
  std::uint64_t total_hits = 0;
  for (std::size_t i = 0; i < partial.size(); ++i) {
    total_hits += hits[i];
    // A key reached by two threads maps to the same entry in both, since
    // the search is deterministic and ties break to the lowest index.
    if (i > 0) merged.merge(partial[i]);
  }

  ValueSearch top(game, budget, std::move(merged));
  HistoryPrefix root;
  Rational value = top.eval(root).value;

  ValueTable table;
  table.root = value;
  table.stats.nodes = budget.used();
  table.stats.memo_hits = total_hits + top.memo_hits();
  table.memo = std::make_shared<const ValueMemo>(std::move(top.memo()));
  table.stats.elapsed_ms = ms_since(start);
  return table;
}

}  // namespace altgame::kernels
