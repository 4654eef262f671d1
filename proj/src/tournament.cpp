#include "ipd/tournament.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>

namespace ipd {

std::vector<int> rank_descending(const std::vector<double>& sums,
                                 double tie_tol) {
  const int n = static_cast<int>(sums.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return sums[a] > sums[b]; });
  std::vector<int> ranks(n, 0);
  int pos = 0;
  while (pos < n) {
    int end = pos;
    // group values within tie_tol of the group leader
    while (end + 1 < n && sums[order[pos]] - sums[order[end + 1]] <= tie_tol)
      ++end;
    for (int k = pos; k <= end; ++k) ranks[order[k]] = pos + 1;
    pos = end + 1;
  }
  return ranks;
}

TournamentResult run_tournament(const std::vector<RosterEntry>& roster,
                                const StageGame& g, double w,
                                bool include_self, double rank_tie_tol) {
  if (roster.empty()) throw std::invalid_argument("empty tournament roster");
  const int n = static_cast<int>(roster.size());
  const bool mixed_or_m2 =
      std::any_of(roster.begin(), roster.end(),
                  [](const RosterEntry& e) { return e.strategy.memory == 2; });
  if (mixed_or_m2 && w == 0.0)
    throw std::invalid_argument(
        "limit-of-means tournaments support memory-1 rosters only");

  TournamentResult res;
  res.include_self = include_self;
  res.game = g;
  res.w = w;
  res.matrix.assign(n, std::vector<double>(n, 0.0));
  for (const auto& e : roster) res.names.push_back(e.name);

  // pairings are independent; evaluate rows concurrently
  std::vector<std::future<void>> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    rows.push_back(std::async(std::launch::async, [&, i] {
      for (int j = 0; j < n; ++j) {
        if (mixed_or_m2) {
          res.matrix[i][j] = payoff_m2(roster[i].strategy.as_memory2(),
                                       roster[j].strategy.as_memory2(), g, w);
        } else {
          res.matrix[i][j] =
              payoff_m1_any(roster[i].strategy.m1, roster[j].strategy.m1, g, w);
        }
      }
    }));
  }
  for (auto& f : rows) f.get();

  res.row_sums.assign(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (include_self || i != j) res.row_sums[i] += res.matrix[i][j];
  res.ranks = rank_descending(res.row_sums, rank_tie_tol);
  return res;
}

TournamentResult aggregate_tournaments(
    const std::vector<TournamentResult>& results, double rank_tie_tol) {
  if (results.empty())
    throw std::invalid_argument("aggregate_tournaments needs >= 1 result");
  TournamentResult agg = results.front();
  for (std::size_t k = 1; k < results.size(); ++k) {
    const auto& r = results[k];
    if (r.names != agg.names)
      throw std::domain_error("aggregate_tournaments: roster mismatch");
    for (std::size_t i = 0; i < agg.matrix.size(); ++i) {
      for (std::size_t j = 0; j < agg.matrix.size(); ++j)
        agg.matrix[i][j] += r.matrix[i][j];
      agg.row_sums[i] += r.row_sums[i];
    }
  }
  agg.ranks = rank_descending(agg.row_sums, rank_tie_tol);
  return agg;
}

}  // namespace ipd
