#include "ipd/harness/experiment.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <stdexcept>

namespace ipd::harness {

namespace {

std::string now_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%FT%TZ", &tm);
  return buf;
}

bool is_scripted(const Agent& agent) {
  return dynamic_cast<const ScriptedAgent*>(&agent) != nullptr;
}

}  // namespace

std::string ExperimentRecord::to_jsonl() const {
  nlohmann::json j;
  j["treatment"] = treatment;
  j["scenario"] = scenario;
  j["agent"] = agent;
  j["trial"] = trial;
  j["raw"] = raw;
  j["action"] = harness::to_string(action);
  j["timestamp"] = timestamp;
  return j.dump();
}

ScenarioCounts ElicitationResult::to_scenario_counts() const {
  for (std::size_t i = 0; i < scenario_ids.size(); ++i)
    if (parsed_counts[i] < 1)
      throw std::domain_error("scenario " + scenario_ids[i] +
                              " has no parseable responses");
  const bool m2 = treatment.kind == TreatmentKind::memory2;
  ScenarioCounts c;
  c.memory = m2 ? 2 : 1;
  c.r1 = {l_counts[0], parsed_counts[0]};
  if (treatment.kind == TreatmentKind::one_shot) {
    // one-shot runs probe a single decision; reuse the round-1 slot and
    // mark the remaining scenarios as unobserved single-trial defects
    throw std::domain_error(
        "one-shot elicitations have a single scenario; read the summary "
        "instead of ScenarioCounts");
  }
  for (int i = 0; i < 4; ++i)
    c.after[i] = {l_counts[i + 1], parsed_counts[i + 1]};
  if (m2)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        c.h2[i][j] = {l_counts[5 + 4 * i + j], parsed_counts[5 + 4 * i + j]};
  c.validate();
  return c;
}

std::string ElicitationResult::summary_json() const {
  nlohmann::json j;
  j["treatment"] = treatment.id();
  j["game"] = {game.a_ll, game.a_lr, game.a_rl, game.a_rr};
  for (std::size_t i = 0; i < scenario_ids.size(); ++i) {
    nlohmann::json cell;
    cell["l"] = l_counts[i];
    cell["n"] = parsed_counts[i];
    cell["unparseable"] = unparseable_counts[i];
    cell["failed"] = failed_counts[i];
    j["scenarios"][scenario_ids[i]] = cell;
  }
  return j.dump(2);
}

ElicitationResult run_elicitation(const Treatment& treatment,
                                  const StageGame& game, Agent& agent,
                                  int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  ElicitationResult res;
  res.treatment = treatment;
  res.game = game;
  res.scenario_ids = scenarios_for(treatment);
  const std::size_t ns = res.scenario_ids.size();
  res.l_counts.assign(ns, 0);
  res.parsed_counts.assign(ns, 0);
  res.unparseable_counts.assign(ns, 0);
  res.failed_counts.assign(ns, 0);
  const bool scripted = is_scripted(agent);

  for (std::size_t s = 0; s < ns; ++s) {
    const PromptSpec prompt = render_prompt(treatment, res.scenario_ids[s], game);
    for (int t = 0; t < trials; ++t) {
      Xoshiro256 rng = substream(seed, s * static_cast<std::uint64_t>(trials) + t);
      ExperimentRecord rec;
      rec.treatment = treatment.id();
      rec.scenario = res.scenario_ids[s];
      rec.agent = agent.id();
      rec.trial = t;
      if (!scripted) rec.timestamp = now_iso8601();
      try {
        rec.raw = agent.query(prompt, rng);
        rec.action = parse_action(rec.raw);
      } catch (const std::runtime_error& e) {
        // transport failure after retries: record and continue
        rec.raw = std::string("<failed: ") + e.what() + ">";
        rec.action = Action::Unparseable;
        ++res.failed_counts[s];
      }
      switch (rec.action) {
        case Action::L:
          ++res.l_counts[s];
          ++res.parsed_counts[s];
          break;
        case Action::R:
          ++res.parsed_counts[s];
          break;
        case Action::Unparseable:
          ++res.unparseable_counts[s];
          break;
      }
      res.records.push_back(std::move(rec));
    }
  }
  return res;
}

Transcript run_actual_play(Agent& agent1, Agent& agent2, int rounds,
                           bool at_least, const StageGame& game,
                           std::uint64_t seed) {
  if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
  const Treatment t = Treatment::actual_play_t(rounds, at_least);
  Transcript out;
  out.treatment = t;
  out.game = game;

  std::vector<Outcome> hist1;  // player 1 perspective
  std::vector<Outcome> hist2;  // player 2 perspective
  const bool scripted1 = is_scripted(agent1);
  const bool scripted2 = is_scripted(agent2);

  for (int k = 0; k < rounds; ++k) {
    const PromptSpec p1 = render_actual_play_prompt(t, game, hist1);
    const PromptSpec p2 = render_actual_play_prompt(t, game, hist2);

    auto play = [&](Agent& agent, const PromptSpec& prompt, bool scripted,
                    std::uint64_t stream) {
      ExperimentRecord rec;
      rec.treatment = t.id();
      rec.scenario = prompt.scenario;
      rec.agent = agent.id();
      rec.trial = k;
      if (!scripted) rec.timestamp = now_iso8601();
      Xoshiro256 rng = substream(seed, stream);
      try {
        rec.raw = agent.query(prompt, rng);
        rec.action = parse_action(rec.raw);
      } catch (const std::runtime_error& e) {
        rec.raw = std::string("<failed: ") + e.what() + ">";
        rec.action = Action::Unparseable;
      }
      return rec;
    };

    ExperimentRecord r1 = play(agent1, p1, scripted1, 2 * k);
    ExperimentRecord r2 = play(agent2, p2, scripted2, 2 * k + 1);
    const bool l1 = r1.action == Action::L;
    const bool l2 = r2.action == Action::L;
    const Outcome o1 = make_outcome(l1, l2);
    hist1.push_back(o1);
    hist2.push_back(swap_perspective(o1));
    out.outcomes.push_back(o1);
    out.points1 += game.payoff(o1);
    out.points2 += game.payoff(swap_perspective(o1));
    out.records.push_back(std::move(r1));
    out.records.push_back(std::move(r2));
  }
  return out;
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ExperimentConfig c;
  const std::string kind = j.at("treatment").get<std::string>();
  if (kind == "baseline") c.treatment = Treatment::baseline_t();
  else if (kind == "framing")
    c.treatment = Treatment::framing_t(j.at("framing").get<std::string>());
  else if (kind == "stopping")
    c.treatment = Treatment::stopping_t(j.at("w").get<double>());
  else if (kind == "equal_gains")
    c.treatment = Treatment::equal_gains_t(j.at("x").get<double>());
  else if (kind == "memory2") c.treatment = Treatment::memory2_t();
  else if (kind == "one_shot") c.treatment = Treatment::one_shot_t();
  else if (kind == "actual_play")
    c.treatment = Treatment::actual_play_t(j.value("rounds", 10),
                                           j.value("at_least", false));
  else throw std::invalid_argument("unknown treatment: " + kind);

  if (c.treatment.kind == TreatmentKind::equal_gains)
    c.game = StageGame::equal_gains(c.treatment.x);
  if (j.contains("game")) {
    auto g = j["game"].get<std::array<double, 4>>();
    c.game = StageGame{g[0], g[1], g[2], g[3]};
  }
  c.agent = AgentConfig::from_json(j.at("agent").dump());
  c.trials = j.value("trials", 50);
  c.seed = j.value("seed", std::uint64_t{1});
  return c;
}

std::string ExperimentConfig::to_json() const {
  nlohmann::json j;
  switch (treatment.kind) {
    case TreatmentKind::baseline: j["treatment"] = "baseline"; break;
    case TreatmentKind::framing:
      j["treatment"] = "framing";
      j["framing"] = treatment.framing;
      break;
    case TreatmentKind::stopping:
      j["treatment"] = "stopping";
      j["w"] = treatment.w;
      break;
    case TreatmentKind::equal_gains:
      j["treatment"] = "equal_gains";
      j["x"] = treatment.x;
      break;
    case TreatmentKind::memory2: j["treatment"] = "memory2"; break;
    case TreatmentKind::one_shot: j["treatment"] = "one_shot"; break;
    case TreatmentKind::actual_play:
      j["treatment"] = "actual_play";
      j["rounds"] = treatment.rounds;
      j["at_least"] = treatment.at_least;
      break;
  }
  j["game"] = {game.a_ll, game.a_lr, game.a_rl, game.a_rr};
  j["agent"] = nlohmann::json::parse(agent.to_json());
  j["trials"] = trials;
  j["seed"] = seed;
  return j.dump(2);
}

}  // namespace ipd::harness
