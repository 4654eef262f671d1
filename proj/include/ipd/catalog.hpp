#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ipd/strategy.hpp"

namespace ipd {

// Well-known memory-1 strategies. GTFT carries a symbolic generosity slot q;
// gtft(q) instantiates it.
namespace strategies {

Memory1Strategy allc();
Memory1Strategy alld();
Memory1Strategy tft();
Memory1Strategy wsls();
Memory1Strategy grim();
Memory1Strategy sgrim();      // suspicious GRIM: opens with defection
Memory1Strategy forgiver();   // also called "Firm but Fair"
Memory1Strategy gtft(double q);
Memory1Strategy atft();       // anti-tit-for-tat, used by TFT-ATFT

// Memory-2 strategies.
Memory2Strategy tf2t();       // defect only after two co-player defections
Memory2Strategy aon2();       // cooperate only after two unanimous rounds
Memory2Strategy tft_atft();   // TFT with anti-TFT error recovery

}  // namespace strategies

struct NamedMemory1 {
  std::string name;
  Memory1Strategy strategy;   // for GTFT, the q slot is filled with 0.25
  bool has_q_slot = false;    // GTFT matches any q in (0, 0.5]
};

struct NamedMemory2 {
  std::string name;
  Memory2Strategy strategy;
};

// Pure memory-1 patterns plus GTFT, in the order used for label lookup.
const std::vector<NamedMemory1>& memory1_catalog();

// Table of relevant memory-2 strategies plus the lifted memory-1 catalog.
const std::vector<NamedMemory2>& memory2_catalog();

std::optional<Memory1Strategy> find_memory1(const std::string& name);
std::optional<Memory2Strategy> find_memory2(const std::string& name);

}  // namespace ipd
