#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ipd/outcome.hpp"
#include "ipd/stage_game.hpp"

namespace ipd::harness {

enum class TreatmentKind {
  baseline,
  framing,      // baseline game plus one framing sentence
  stopping,     // stopping probability w stated in the prompt
  equal_gains,  // payoffs (10, 0, 10+x, x)
  memory2,      // last two rounds reported, 21 scenarios
  one_shot,
  actual_play,  // dynamic full-history prompts, fixed round count
};

struct Treatment {
  TreatmentKind kind = TreatmentKind::baseline;
  std::string framing;      // framing sentence, kind == framing only
  double w = 0.0;           // kind == stopping
  double x = 0.0;           // kind == equal_gains
  bool at_least = false;    // kind == actual_play: "at least 10 rounds"
  int rounds = 10;          // kind == actual_play

  std::string id() const;
  static Treatment baseline_t() { return {}; }
  static Treatment framing_t(std::string text);
  static Treatment stopping_t(double w);
  static Treatment equal_gains_t(double x);
  static Treatment memory2_t();
  static Treatment one_shot_t();
  static Treatment actual_play_t(int rounds, bool at_least);
};

// Scenario identifiers: "R1"; "LL".."RR" for memory-1 last-round cases;
// "R2:LL".."R2:RR" and "H:LL,LR" style pairs for memory-2; "ONE" for the
// one-shot game.
std::vector<std::string> scenarios_for(const Treatment& t);

struct PromptSpec {
  Treatment treatment;
  std::string scenario;
  StageGame game;
  std::string system_text;  // fixed across all experiments
  std::string user_text;

  // structured view of the scenario, for scripted agents
  bool round1 = false;
  bool round2 = false;
  bool one_shot = false;
  std::optional<Outcome> last;    // focal perspective
  std::optional<Outcome> before;  // focal perspective, memory-2 only
};

// Renders the treatment's template byte-for-byte. Throws on a scenario that
// does not belong to the treatment.
PromptSpec render_prompt(const Treatment& t, const std::string& scenario,
                         const StageGame& game);

// Full-history prompt for one round of actual play. `history` holds the
// focal player's outcomes of rounds 1..k; the prompt asks for round k+1.
PromptSpec render_actual_play_prompt(const Treatment& t, const StageGame& game,
                                     const std::vector<Outcome>& history);

// Shortest decimal rendering of a payoff: integers print without a point.
std::string format_points(double v);

inline constexpr const char* kSystemPrompt = "Follow specified goals";

}  // namespace ipd::harness
