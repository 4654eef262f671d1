#pragma once

#include <string>
#include <vector>

#include "ipd/payoff.hpp"
#include "ipd/stage_game.hpp"
#include "ipd/strategy.hpp"

namespace ipd {

// A memory-1 or memory-2 strategy under one roof; mixed rosters are played
// in the memory-2 representation.
struct AnyStrategy {
  int memory = 1;
  Memory1Strategy m1;
  Memory2Strategy m2;

  static AnyStrategy of(const Memory1Strategy& s) {
    AnyStrategy a;
    a.memory = 1;
    a.m1 = s;
    return a;
  }
  static AnyStrategy of(const Memory2Strategy& s) {
    AnyStrategy a;
    a.memory = 2;
    a.m2 = s;
    return a;
  }
  Memory2Strategy as_memory2() const {
    return memory == 1 ? lift_to_memory2(m1) : m2;
  }
};

struct RosterEntry {
  std::string name;
  AnyStrategy strategy;
};

struct TournamentResult {
  std::vector<std::string> names;
  std::vector<std::vector<double>> matrix;  // (i, j): payoff of i against j
  std::vector<double> row_sums;             // diagonal included iff include_self
  std::vector<int> ranks;                   // 1-based, ties share the top rank
  bool include_self = true;
  StageGame game;
  double w = 0.0;
};

// Round-robin over the roster at (g, w); w = 0 plays the limit of means
// (memory-1 rosters only). Row sums include self-play unless include_self is
// false. Ranks use standard competition ranking with sums closer than
// rank_tie_tol treated as tied.
TournamentResult run_tournament(const std::vector<RosterEntry>& roster,
                                const StageGame& g, double w,
                                bool include_self = true,
                                double rank_tie_tol = 1e-9);

// Entrywise sum of tournaments over identical rosters, re-ranked.
TournamentResult aggregate_tournaments(
    const std::vector<TournamentResult>& results, double rank_tie_tol = 1e-9);

// Competition ranking of sums, descending; values within tie_tol of each
// other share a rank.
std::vector<int> rank_descending(const std::vector<double>& sums,
                                 double tie_tol);

}  // namespace ipd
