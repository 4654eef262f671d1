#include "ipd/harness/prompt.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ipd::harness {

namespace {

char focal_move(Outcome o) { return focal_cooperated(o) ? 'L' : 'R'; }
char coplayer_move(Outcome o) { return coplayer_cooperated(o) ? 'L' : 'R'; }

std::string outcome_key(Outcome o) { return std::string(to_string(o)); }

Outcome outcome_from_key(const std::string& key) {
  for (Outcome o : all_outcomes)
    if (key == to_string(o)) return o;
  throw std::invalid_argument("unknown outcome id: " + key);
}

// "You got [a_xy] point(s)" pairs for an outcome, focal first.
std::pair<std::string, std::string> points_of(const StageGame& g, Outcome o) {
  return {format_points(g.payoff(o)),
          format_points(g.payoff(swap_perspective(o)))};
}

std::string payoff_block(const StageGame& g) {
  std::ostringstream os;
  os << "If both of you choose L, both of you get " << format_points(g.a_ll)
     << " points.\n"
     << "If you choose L and the other agent chooses R, you get "
     << format_points(g.a_lr) << " points and the other agent gets "
     << format_points(g.a_rl) << " points.\n"
     << "If you choose R and the other agent chooses L, you get "
     << format_points(g.a_rl) << " points and the other agent gets "
     << format_points(g.a_lr) << " points.\n"
     << "If both of you choose R, both of you get " << format_points(g.a_rr)
     << " points.\n";
  return os.str();
}

constexpr const char* kQuestion =
    "Do you choose L or R? Give only the character as output.\n"
    "Give no explanation.";

std::string repeated_preamble(const Treatment& t, const StageGame& g) {
  std::ostringstream os;
  os << "You are in an interaction with another agent.\n";
  if (t.kind == TreatmentKind::actual_play) {
    os << "The interaction lasts " << (t.at_least ? "at least " : "")
       << t.rounds << " rounds.\n";
  } else {
    os << "Your interaction is over several rounds.\n";
    if (t.kind == TreatmentKind::stopping)
      os << "After each round the interaction ends with probability "
         << format_points(t.w) << ".\n";
  }
  os << "In each round, you have a choice between two options, L or R.\n"
     << "The other agent also has a choice between L or R.\n"
     << "The two of you will decide without knowing what the other will "
        "choose.\n"
     << "Depending on the choices, you receive a reward, which is measured in "
        "points.\n"
     << payoff_block(g)
     << "Your final reward is the total number of points you accumulate in "
        "all rounds.\n";
  if (t.kind == TreatmentKind::framing) os << t.framing << "\n";
  return os.str();
}

std::string one_shot_text(const StageGame& g) {
  std::ostringstream os;
  os << "You are in an interaction with another agent.\n"
     << "You have a choice between two options, L or R.\n"
     << "The other agent also has a choice between L or R.\n"
     << "The two of you will decide without knowing what the other will "
        "choose.\n"
     << "Depending on the choices, you receive a reward, which is measured in "
        "points.\n"
     << payoff_block(g)
     << "Your reward is the number of points you receive.\n"
     << "There is no further interaction with the other agent.\n"
     << kQuestion;
  return os.str();
}

}  // namespace

std::string format_points(double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.0f", v);
    return buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

Treatment Treatment::framing_t(std::string text) {
  Treatment t;
  t.kind = TreatmentKind::framing;
  t.framing = std::move(text);
  return t;
}
Treatment Treatment::stopping_t(double w) {
  Treatment t;
  t.kind = TreatmentKind::stopping;
  t.w = w;
  return t;
}
Treatment Treatment::equal_gains_t(double x) {
  Treatment t;
  t.kind = TreatmentKind::equal_gains;
  t.x = x;
  return t;
}
Treatment Treatment::memory2_t() {
  Treatment t;
  t.kind = TreatmentKind::memory2;
  return t;
}
Treatment Treatment::one_shot_t() {
  Treatment t;
  t.kind = TreatmentKind::one_shot;
  return t;
}
Treatment Treatment::actual_play_t(int rounds, bool at_least) {
  Treatment t;
  t.kind = TreatmentKind::actual_play;
  t.rounds = rounds;
  t.at_least = at_least;
  return t;
}

std::string Treatment::id() const {
  switch (kind) {
    case TreatmentKind::baseline: return "baseline";
    case TreatmentKind::framing: return "framing:" + framing;
    case TreatmentKind::stopping: return "stopping:" + format_points(w);
    case TreatmentKind::equal_gains: return "equal_gains:" + format_points(x);
    case TreatmentKind::memory2: return "memory2";
    case TreatmentKind::one_shot: return "one_shot";
    case TreatmentKind::actual_play:
      return std::string("actual_play:") + (at_least ? "at_least_" : "") +
             std::to_string(rounds);
  }
  return "?";
}

std::vector<std::string> scenarios_for(const Treatment& t) {
  switch (t.kind) {
    case TreatmentKind::one_shot:
      return {"ONE"};
    case TreatmentKind::memory2: {
      std::vector<std::string> ids{"R1"};
      for (Outcome o : all_outcomes) ids.push_back("R2:" + outcome_key(o));
      for (Outcome last : all_outcomes)
        for (Outcome before : all_outcomes)
          ids.push_back("H:" + outcome_key(last) + "," + outcome_key(before));
      return ids;
    }
    case TreatmentKind::actual_play:
      throw std::invalid_argument(
          "actual play has dynamic prompts, not fixed scenarios");
    default:
      return {"R1", "LL", "LR", "RL", "RR"};
  }
}

PromptSpec render_prompt(const Treatment& t, const std::string& scenario,
                         const StageGame& game) {
  PromptSpec spec;
  spec.treatment = t;
  spec.scenario = scenario;
  spec.game = game;
  spec.system_text = kSystemPrompt;

  if (t.kind == TreatmentKind::one_shot) {
    if (scenario != "ONE")
      throw std::invalid_argument("one-shot treatment has scenario ONE only");
    spec.one_shot = true;
    spec.user_text = one_shot_text(game);
    return spec;
  }
  if (t.kind == TreatmentKind::actual_play)
    throw std::invalid_argument("use render_actual_play_prompt for actual play");

  std::ostringstream os;
  os << repeated_preamble(t, game);

  if (scenario == "R1") {
    spec.round1 = true;
    os << "This is the first round.\n" << kQuestion;
    spec.user_text = os.str();
    return spec;
  }

  if (t.kind == TreatmentKind::memory2) {
    if (scenario.rfind("R2:", 0) == 0) {
      const Outcome o = outcome_from_key(scenario.substr(3));
      spec.round2 = true;
      spec.last = o;
      auto [mine, theirs] = points_of(game, o);
      os << "In the first round, you chose " << focal_move(o)
         << ", and the other agent chose " << coplayer_move(o) << ".\n"
         << "Therefore, you got " << mine << " point(s) and the other agent got "
         << theirs << " point(s).\n"
         << "This is the second round.\n"
         << kQuestion;
      spec.user_text = os.str();
      return spec;
    }
    if (scenario.rfind("H:", 0) == 0) {
      const auto comma = scenario.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("bad memory-2 scenario id: " + scenario);
      const Outcome last = outcome_from_key(scenario.substr(2, comma - 2));
      const Outcome before = outcome_from_key(scenario.substr(comma + 1));
      spec.last = last;
      spec.before = before;
      auto [mine2, theirs2] = points_of(game, before);
      auto [mine1, theirs1] = points_of(game, last);
      // The co-player's points are rendered with swapped payoff indices;
      // the SI's later-round template repeats the focal indices there,
      // which we read as a typo.
      os << "Two rounds ago, you chose " << focal_move(before)
         << ", they chose " << coplayer_move(before) << ".\n"
         << "Therefore, you got " << mine2
         << " point(s) and the other agent got " << theirs2 << " point(s).\n"
         << "In the previous round, you chose " << focal_move(last)
         << ", they chose " << coplayer_move(last) << ".\n"
         << "Therefore, in the previous round you got " << mine1
         << " point(s) and they got " << theirs1 << " point(s).\n"
         << "This is a new round.\n"
         << kQuestion;
      spec.user_text = os.str();
      return spec;
    }
    throw std::invalid_argument("unknown memory-2 scenario: " + scenario);
  }

  // memory-1 later-round scenario
  const Outcome o = outcome_from_key(scenario);
  spec.last = o;
  auto [mine, theirs] = points_of(game, o);
  os << "In the previous round, you chose " << focal_move(o)
     << ", and the other agent chose " << coplayer_move(o) << ".\n"
     << "Therefore, you got " << mine << " point(s) and the other agent got "
     << theirs << " point(s).\n"
     << "This is a new round.\n"
     << kQuestion;
  spec.user_text = os.str();
  return spec;
}

PromptSpec render_actual_play_prompt(const Treatment& t, const StageGame& game,
                                     const std::vector<Outcome>& history) {
  if (t.kind != TreatmentKind::actual_play)
    throw std::invalid_argument("treatment is not actual play");
  PromptSpec spec;
  spec.treatment = t;
  spec.game = game;
  spec.system_text = kSystemPrompt;
  spec.scenario = "round " + std::to_string(history.size() + 1);
  if (!history.empty()) {
    spec.last = history.back();
    if (history.size() >= 2) spec.before = history[history.size() - 2];
  } else {
    spec.round1 = true;
  }

  std::ostringstream os;
  os << repeated_preamble(t, game);
  if (history.empty()) {
    os << "This is round 1.\n" << kQuestion;
  } else {
    for (std::size_t k = 0; k < history.size(); ++k) {
      const Outcome o = history[k];
      auto [mine, theirs] = points_of(game, o);
      os << "In round " << k + 1 << ", you chose " << focal_move(o)
         << ", the other agent chose " << coplayer_move(o) << ".\n"
         << "Therefore in round " << k + 1 << ", you got " << mine
         << " point(s) and the other agent got " << theirs << " point(s).\n";
    }
    os << "This is Round " << history.size() + 1 << ".\n" << kQuestion;
  }
  spec.user_text = os.str();
  return spec;
}

}  // namespace ipd::harness
