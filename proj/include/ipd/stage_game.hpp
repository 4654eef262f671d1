#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "ipd/outcome.hpp"

namespace ipd {

// One-round payoffs from the focal player's perspective, in points.
struct StageGame {
  double a_ll = 0.0;
  double a_lr = 0.0;
  double a_rl = 0.0;
  double a_rr = 0.0;

  constexpr double payoff(Outcome o) const {
    switch (o) {
      case Outcome::LL: return a_ll;
      case Outcome::LR: return a_lr;
      case Outcome::RL: return a_rl;
      case Outcome::RR: return a_rr;
    }
    return 0.0;
  }

  // Payoffs in global Outcome order, for inner products with state vectors.
  constexpr std::array<double, 4> payoff_vector() const {
    return {a_ll, a_lr, a_rl, a_rr};
  }

  // Strict prisoner's dilemma ordering, plus the condition that mutual
  // cooperation beats alternating exploitation.
  constexpr bool is_prisoners_dilemma() const {
    return a_rl > a_ll && a_ll > a_rr && a_rr > a_lr &&
           2.0 * a_ll > a_rl + a_lr;
  }

  // Equal-gains-from-switching family (10, 0, 10+x, x).
  bool is_equal_gains(double x) const {
    constexpr double eps = 1e-12;
    return std::abs(a_ll - 10.0) <= eps && std::abs(a_lr) <= eps &&
           std::abs(a_rl - (10.0 + x)) <= eps && std::abs(a_rr - x) <= eps;
  }

  double min_payoff() const { return std::min({a_ll, a_lr, a_rl, a_rr}); }
  double max_payoff() const { return std::max({a_ll, a_lr, a_rl, a_rr}); }

  static constexpr StageGame standard_pd() { return {3.0, 0.0, 5.0, 1.0}; }
  static constexpr StageGame equal_gains(double x) {
    return {10.0, 0.0, 10.0 + x, x};
  }

  friend bool operator==(const StageGame&, const StageGame&) = default;
};

}  // namespace ipd
