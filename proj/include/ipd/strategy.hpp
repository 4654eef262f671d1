#pragma once

#include <array>
#include <string>

#include "ipd/outcome.hpp"

namespace ipd {

// Five cooperation probabilities: the opening move and the reaction to each
// outcome of the previous round (outcomes read from the player's own
// perspective).
struct Memory1Strategy {
  double p0 = 0.0;
  std::array<double, 4> after{};  // indexed by Outcome

  Memory1Strategy() = default;
  Memory1Strategy(double p0_, double p_ll, double p_lr, double p_rl,
                  double p_rr)
      : p0(p0_), after{p_ll, p_lr, p_rl, p_rr} {
    validate();
  }

  double reaction(Outcome last) const { return after[index_of(last)]; }

  bool is_deterministic() const;

  // Entries further than 1e-12 outside [0,1] are rejected; closer ones are
  // clamped (inference produces exact rationals, only float noise is absorbed).
  void validate();

  std::string to_json() const;
  static Memory1Strategy from_json(const std::string& text);

  friend bool operator==(const Memory1Strategy&,
                         const Memory1Strategy&) = default;
};

// Twenty-one cooperation probabilities: opening move, four round-2 reactions
// to the round-1 outcome, and sixteen reactions to the last two outcomes.
// h2 is indexed [most recent outcome][outcome before that].
struct Memory2Strategy {
  double p0 = 0.0;
  std::array<double, 4> r2{};
  std::array<std::array<double, 4>, 4> h2{};

  Memory2Strategy() = default;
  Memory2Strategy(double p0_, const std::array<double, 4>& r2_,
                  const std::array<std::array<double, 4>, 4>& h2_)
      : p0(p0_), r2(r2_), h2(h2_) {
    validate();
  }

  double reaction_round2(Outcome round1) const { return r2[index_of(round1)]; }
  double reaction(Outcome last, Outcome before) const {
    return h2[index_of(last)][index_of(before)];
  }

  // Flat index over the sixteen two-round histories: 4*i + j with
  // i = index(o_{-1}), j = index(o_{-2}).
  static constexpr int flat_index(Outcome last, Outcome before) {
    return 4 * index_of(last) + index_of(before);
  }

  bool is_deterministic() const;
  void validate();

  std::string to_json() const;
  static Memory2Strategy from_json(const std::string& text);

  friend bool operator==(const Memory2Strategy&,
                         const Memory2Strategy&) = default;
};

// Memory-1 behavior in the memory-2 representation: the reaction depends on
// the most recent outcome only.
Memory2Strategy lift_to_memory2(const Memory1Strategy& s);

}  // namespace ipd
