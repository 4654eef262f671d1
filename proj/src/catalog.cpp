#include "ipd/catalog.hpp"

#include <stdexcept>

namespace ipd {
namespace strategies {

Memory1Strategy allc() { return {1, 1, 1, 1, 1}; }
Memory1Strategy alld() { return {0, 0, 0, 0, 0}; }
Memory1Strategy tft() { return {1, 1, 0, 1, 0}; }
Memory1Strategy wsls() { return {1, 1, 0, 0, 1}; }
Memory1Strategy grim() { return {1, 1, 0, 0, 0}; }
Memory1Strategy sgrim() { return {0, 1, 0, 0, 0}; }
Memory1Strategy forgiver() { return {1, 1, 0, 1, 1}; }
Memory1Strategy atft() { return {1, 0, 1, 0, 1}; }

Memory1Strategy gtft(double q) {
  if (!(q > 0.0 && q < 1.0))
    throw std::invalid_argument("GTFT generosity q must be in (0,1)");
  return {1, 1, q, 1, q};
}

Memory2Strategy tf2t() {
  Memory2Strategy s;
  s.p0 = 1;
  s.r2 = {1, 1, 1, 1};
  for (int last = 0; last < 4; ++last)
    for (int before = 0; before < 4; ++before) {
      bool co_defected_twice =
          !coplayer_cooperated(outcome_from_index(last)) &&
          !coplayer_cooperated(outcome_from_index(before));
      s.h2[last][before] = co_defected_twice ? 0 : 1;
    }
  return s;
}

Memory2Strategy aon2() {
  Memory2Strategy s;
  s.p0 = 1;
  s.r2 = {1, 0, 0, 1};
  for (int last = 0; last < 4; ++last)
    for (int before = 0; before < 4; ++before) {
      auto unanimous = [](Outcome o) {
        return o == Outcome::LL || o == Outcome::RR;
      };
      bool both_unanimous = unanimous(outcome_from_index(last)) &&
                            unanimous(outcome_from_index(before));
      s.h2[last][before] = both_unanimous ? 1 : 0;
    }
  return s;
}

// Plays TFT, except after detecting its own deviation from TFT play it
// answers with anti-TFT; it falls back to TFT once the last round was LL or
// the co-player defected in both of the last two rounds.
Memory2Strategy tft_atft() {
  Memory2Strategy s;
  s.p0 = 1;
  s.r2 = tft().after;
  auto tft_move = [](Outcome last) { return coplayer_cooperated(last) ? 1 : 0; };
  auto atft_move = [](Outcome last) { return coplayer_cooperated(last) ? 0 : 1; };
  for (int li = 0; li < 4; ++li)
    for (int bi = 0; bi < 4; ++bi) {
      Outcome last = outcome_from_index(li);
      Outcome before = outcome_from_index(bi);
      if (last == Outcome::LL) {
        s.h2[li][bi] = 1;
        continue;
      }
      if (!coplayer_cooperated(last) && !coplayer_cooperated(before)) {
        s.h2[li][bi] = tft_move(last);
        continue;
      }
      bool own_error = focal_cooperated(last) != coplayer_cooperated(before);
      s.h2[li][bi] = own_error ? atft_move(last) : tft_move(last);
    }
  return s;
}

}  // namespace strategies

const std::vector<NamedMemory1>& memory1_catalog() {
  static const std::vector<NamedMemory1> catalog = {
      {"ALLC", strategies::allc(), false},
      {"ALLD", strategies::alld(), false},
      {"TFT", strategies::tft(), false},
      {"GTFT", strategies::gtft(0.25), true},
      {"WSLS", strategies::wsls(), false},
      {"GRIM", strategies::grim(), false},
      {"Forgiver", strategies::forgiver(), false},
      {"SGRIM", strategies::sgrim(), false},
  };
  return catalog;
}

const std::vector<NamedMemory2>& memory2_catalog() {
  static const std::vector<NamedMemory2> catalog = [] {
    std::vector<NamedMemory2> v = {
        {"TF2T", strategies::tf2t()},
        {"AON-2", strategies::aon2()},
        {"TFT-ATFT", strategies::tft_atft()},
    };
    for (const auto& m1 : memory1_catalog())
      if (!m1.has_q_slot) v.push_back({m1.name, lift_to_memory2(m1.strategy)});
    return v;
  }();
  return catalog;
}

std::optional<Memory1Strategy> find_memory1(const std::string& name) {
  for (const auto& e : memory1_catalog())
    if (e.name == name) return e.strategy;
  return std::nullopt;
}

std::optional<Memory2Strategy> find_memory2(const std::string& name) {
  for (const auto& e : memory2_catalog())
    if (e.name == name) return e.strategy;
  return std::nullopt;
}

}  // namespace ipd
