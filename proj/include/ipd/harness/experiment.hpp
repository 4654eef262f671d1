#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ipd/harness/agent.hpp"
#include "ipd/harness/prompt.hpp"
#include "ipd/inference.hpp"

namespace ipd::harness {

struct ExperimentRecord {
  std::string treatment;
  std::string scenario;
  std::string agent;
  int trial = 0;
  std::string raw;
  Action action = Action::Unparseable;
  std::string timestamp;  // empty for scripted agents, for replay determinism

  std::string to_jsonl() const;
};

struct ElicitationResult {
  Treatment treatment;
  StageGame game;
  // per scenario, in scenarios_for() order
  std::vector<std::string> scenario_ids;
  std::vector<int> l_counts;
  std::vector<int> parsed_counts;       // L + R responses
  std::vector<int> unparseable_counts;  // reported, never dropped
  std::vector<int> failed_counts;       // transport failures after retries
  std::vector<ExperimentRecord> records;

  // Throws if any scenario collected no parseable response.
  ScenarioCounts to_scenario_counts() const;
  std::string summary_json() const;
};

// `trials` independent single-turn queries per scenario. Trial t of scenario
// index s draws its randomness from substream(seed, s * trials + t), so runs
// replay exactly and scenario/trial order does not matter.
ElicitationResult run_elicitation(const Treatment& treatment,
                                  const StageGame& game, Agent& agent,
                                  int trials, std::uint64_t seed);

struct Transcript {
  Treatment treatment;
  StageGame game;
  std::vector<Outcome> outcomes;  // player 1 perspective
  double points1 = 0.0;
  double points2 = 0.0;
  std::vector<ExperimentRecord> records;
};

// Alternating full-history play over a fixed number of rounds. Each agent
// sees the history from its own perspective. An unparseable or failed
// response is recorded and treated as R for the remainder of the game.
Transcript run_actual_play(Agent& agent1, Agent& agent2, int rounds,
                           bool at_least, const StageGame& game,
                           std::uint64_t seed);

// Experiment configuration file: treatment, game, agent, trials, seed.
struct ExperimentConfig {
  Treatment treatment;
  StageGame game = StageGame::standard_pd();
  AgentConfig agent;
  int trials = 50;
  std::uint64_t seed = 1;

  static ExperimentConfig from_json(const std::string& text);
  std::string to_json() const;
};

}  // namespace ipd::harness
