#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ipd/payoff.hpp"
#include "ipd/stage_game.hpp"
#include "ipd/strategy.hpp"

namespace ipd {

inline constexpr double kClassifyTol = 1e-9;
inline constexpr std::uint32_t kNumDeterministicM1 = 32;
inline constexpr std::uint32_t kNumDeterministicM2 = 1u << 21;

// Deterministic strategies in lexicographic bit order over
// (p0, pLL, pLR, pRL, pRR [, h2...]): index 0 is ALLD, the last index ALLC.
Memory1Strategy deterministic_memory1(std::uint32_t index);
Memory2Strategy deterministic_memory2(std::uint32_t index);

struct DeviationReport {
  double payoff = 0.0;        // max over deterministic deviants of pi(dev, sigma)
  std::uint32_t index = 0;    // enumeration index of the maximizer
};

struct NashResult {
  bool is_nash = false;
  double self_payoff = 0.0;
  DeviationReport worst;
};

// Definition check against all deterministic same-memory deviants
// (sufficient by the reduction to deterministic memory-n deviations).
// w = 0 uses the limit of means and is supported for memory-1 only.
// With short_circuit the scan stops at the first violation, so `worst` holds
// a witness rather than the maximizer.
NashResult is_nash(const Memory1Strategy& sigma, const StageGame& g, double w,
                   double tol = kClassifyTol, bool short_circuit = false);
NashResult is_nash(const Memory2Strategy& sigma, const StageGame& g, double w,
                   double tol = kClassifyTol, bool short_circuit = false,
                   int threads = 0);

// Nash plus full mutual cooperation against itself. The definition is stated
// for strict prisoner's dilemmas; non-PD games are rejected.
bool is_partner(const Memory1Strategy& sigma, const StageGame& g, double w,
                double tol = kClassifyTol);
bool is_partner(const Memory2Strategy& sigma, const StageGame& g, double w,
                double tol = kClassifyTol, int threads = 0);

// pi(sigma, dev) >= pi(dev, sigma) - tol for every deterministic deviant.
bool is_rival(const Memory1Strategy& sigma, const StageGame& g, double w,
              double tol = kClassifyTol);
bool is_rival(const Memory2Strategy& sigma, const StageGame& g, double w,
              double tol = kClassifyTol, int threads = 0);

// Share (in percent) of n_samples random memory-1 opponents, entries i.i.d.
// uniform on [0,1], that strictly beat sigma's self-payoff. Deterministic
// for a fixed seed regardless of thread count.
double beat_percentage(const Memory1Strategy& sigma, const StageGame& g,
                       double w, std::size_t n_samples, std::uint64_t seed,
                       int threads = 0);

struct ClassifyOptions {
  double tol = kClassifyTol;
  bool require_pd = true;       // partner/rival preconditions
  bool compute_beat = true;     // beat percentage when not Nash (memory-1)
  std::size_t beat_samples = 1'000'000;
  std::uint64_t seed = 1;
  int threads = 0;              // 0 = hardware concurrency
};

struct Classification {
  StageGame game;
  double w = 0.0;
  bool is_nash = false;
  bool is_partner = false;
  bool is_rival = false;
  double self_payoff = 0.0;
  std::optional<double> beat_percentage;  // present iff not Nash
  double worst_deviation_payoff = 0.0;
  std::string worst_deviation;            // strategy JSON
};

Classification classify(const Memory1Strategy& sigma, const StageGame& g,
                        double w, const ClassifyOptions& opts = {});
Classification classify(const Memory2Strategy& sigma, const StageGame& g,
                        double w, const ClassifyOptions& opts = {});

struct PayoffRegionSample {
  // (opponent payoff against sigma, sigma payoff against that opponent)
  std::vector<std::pair<double, double>> points;
  double opp_min = 0.0, opp_max = 0.0;
  double self_min = 0.0, self_max = 0.0;
};

// Random opponents plus the 32 deterministic corners; the extreme points of
// the attainable payoff region come from the corners.
PayoffRegionSample payoff_region(const Memory1Strategy& sigma,
                                 const StageGame& g, double w,
                                 std::size_t n_samples, std::uint64_t seed);

// Best response payoff against a fixed memory-1 opponent by policy iteration
// on the 4-state decision process, for w > 0. Cross-check for the
// enumeration maximum.
double best_response_payoff_m1(const Memory1Strategy& sigma,
                               const StageGame& g, double w);

}  // namespace ipd
