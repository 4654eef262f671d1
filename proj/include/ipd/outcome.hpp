#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <string_view>

namespace ipd {

// Joint outcome of one round, first letter is the focal player's action.
// The global ordering LL, LR, RL, RR is fixed; every vector and matrix in
// this library is indexed in this order.
enum class Outcome : int { LL = 0, LR = 1, RL = 2, RR = 3 };

inline constexpr std::array<Outcome, 4> all_outcomes{Outcome::LL, Outcome::LR,
                                                     Outcome::RL, Outcome::RR};

constexpr int index_of(Outcome o) { return static_cast<int>(o); }

constexpr Outcome outcome_from_index(int i) { return static_cast<Outcome>(i); }

// Perspective flip: what the co-player calls the same round.
constexpr Outcome swap_perspective(Outcome o) {
  switch (o) {
    case Outcome::LR: return Outcome::RL;
    case Outcome::RL: return Outcome::LR;
    default: return o;
  }
}

// true iff the focal player chose L in this outcome
constexpr bool focal_cooperated(Outcome o) {
  return o == Outcome::LL || o == Outcome::LR;
}

// true iff the co-player chose L in this outcome
constexpr bool coplayer_cooperated(Outcome o) {
  return o == Outcome::LL || o == Outcome::RL;
}

constexpr Outcome make_outcome(bool focal_l, bool coplayer_l) {
  return outcome_from_index((focal_l ? 0 : 2) + (coplayer_l ? 0 : 1));
}

constexpr std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::LL: return "LL";
    case Outcome::LR: return "LR";
    case Outcome::RL: return "RL";
    case Outcome::RR: return "RR";
  }
  return "??";
}

inline std::ostream& operator<<(std::ostream& os, Outcome o) {
  return os << to_string(o);
}

}  // namespace ipd
