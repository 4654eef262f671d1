#pragma once

#include <array>
#include <string>
#include <vector>

#include "ipd/strategy.hpp"

namespace ipd {

// 95% normal quantile; the published intervals are all consistent with this
// confidence level.
inline constexpr double kWilsonZ95 = 1.959964;

struct WilsonInterval {
  double lower = 0.0;
  double upper = 0.0;
  double point = 0.0;  // l_count / n
};

// Score interval for a binomial proportion, clipped to [0, 1].
WilsonInterval wilson_interval(int l_count, int n, double z = kWilsonZ95);

// Round to two decimals, half away from zero, as the printed tables do.
double round2(double v);

// Per-scenario (L count, trial count) observations from an elicitation run.
// Scenario order: R1; the four last-round outcomes; for memory-2 also the
// sixteen (o_{-1}, o_{-2}) histories.
struct ScenarioCounts {
  struct Cell {
    int l_count = 0;
    int n = 0;
  };

  int memory = 1;
  Cell r1;
  std::array<Cell, 4> after{};                  // LL, LR, RL, RR
  std::array<std::array<Cell, 4>, 4> h2{};      // memory-2 only

  void validate() const;

  static ScenarioCounts memory1(const std::array<int, 5>& l_counts, int n);
  static ScenarioCounts memory2(const std::array<int, 21>& l_counts, int n);

  std::string to_json() const;
  static ScenarioCounts from_json(const std::string& text);
};

struct InferredStrategy {
  int memory = 1;
  Memory1Strategy m1;
  Memory2Strategy m2;                  // valid when memory == 2
  std::vector<WilsonInterval> intervals;  // 5 or 21, scenario order
  std::string label;
  bool approx = false;
};

// Entrywise means l/n (exact rationals in double), intervals, and the
// nearest catalog label.
InferredStrategy infer_strategy(const ScenarioCounts& counts);

// Deterministic labeling rule. Entries are rounded at 0.5 (half up) to a
// pure profile and matched against the catalog; a strategy of generous
// tit-for-tat shape (sure cooperation on the TFT backbone, generosity
// entries strictly inside (0,1) with mean at most 0.5) is labeled GTFT
// before rounding. approx is false only for exact catalog matches. The
// published tables apply the threshold flexibly, so a few printed labels
// differ; those divergences are surfaced by the reproduce command.
std::pair<std::string, bool> label_strategy(const Memory1Strategy& s);

// Memory-2 labels are limited to the memory-2 catalog plus lifted memory-1
// names; unmatched profiles get the 21-bit string of the rounded profile.
std::pair<std::string, bool> label_strategy(const Memory2Strategy& s);

// "name" or "~name" for approximate matches.
std::string format_label(const std::string& name, bool approx);

}  // namespace ipd
