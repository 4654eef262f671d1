#pragma once

#include <Eigen/Dense>

#include "ipd/markov.hpp"
#include "ipd/stage_game.hpp"
#include "ipd/strategy.hpp"

namespace ipd {

using Matrix4 = Eigen::Matrix<Real, 4, 4>;
using Vector4 = Eigen::Matrix<Real, 4, 1>;
using Matrix16 = Eigen::Matrix<Real, 16, 16>;
using Vector16 = Eigen::Matrix<Real, 16, 1>;

// ---- memory-1 ----

// Row-stochastic matrix over the four outcomes, player 1 (q) perspective:
// entry (i, j) is the probability that the next round's outcome is j given
// the current outcome i. In row o, player 1 cooperates with probability
// q[o] and player 2 with probability p[swap(o)].
Matrix4 transition_matrix_m1(const Memory1Strategy& q,
                             const Memory1Strategy& p);

// Distribution of the round-1 outcome, player 1 perspective.
Vector4 initial_distribution_m1(const Memory1Strategy& q,
                                const Memory1Strategy& p);

// Player 1's expected per-round payoff of the repeated game with stopping
// probability w in (0, 1]:  < w v0 (I - (1-w) M)^{-1}, g >.
// w = 1 reduces to the one-shot expectation <v0, g>. Swap the arguments for
// player 2's payoff.
double payoff_m1(const Memory1Strategy& q, const Memory1Strategy& p,
                 const StageGame& g, double w);

// Long-run average payoff in the w = 0 limit of means, without execution
// errors: absorption probabilities from the round-1 distribution, weighted
// by the stationary per-round payoff of each closed recurrent class.
double payoff_m1_limit(const Memory1Strategy& q, const Memory1Strategy& p,
                       const StageGame& g);

// payoff_m1 for w > 0, payoff_m1_limit at w == 0.
double payoff_m1_any(const Memory1Strategy& q, const Memory1Strategy& p,
                     const StageGame& g, double w);

// ---- memory-2 ----

// Distribution of the (round-2 outcome, round-1 outcome) state, player 1
// perspective, at the flat index 4*i(o2) + j(o1).
Vector16 initial_distribution_m2(const Memory2Strategy& q,
                                 const Memory2Strategy& p);

// 16x16 chain over (o_{-1}, o_{-2}) states; from (o1, o2) only states
// (o_new, o1) are reachable.
Matrix16 transition_matrix_m2(const Memory2Strategy& q,
                              const Memory2Strategy& p);

// Player 1's expected per-round payoff for w in (0, 1]. The 16-state chain
// starts at round 2, so round 1 is accounted for explicitly:
//   pi = w <d1, g> + (1-w) < w v0 (I-(1-w)M)^{-1}, G >
// with d1 the round-1 outcome distribution and G the payoff of each state's
// most recent outcome. This composition equals the plain geometric sum
// w * sum_t (1-w)^{t-1} pi_t, so lifted memory-1 pairs give exactly
// payoff_m1 at every w.
double payoff_m2(const Memory2Strategy& q, const Memory2Strategy& p,
                 const StageGame& g, double w);

}  // namespace ipd
