#include "ipd/inference.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <stdexcept>

#include "ipd/catalog.hpp"

namespace ipd {

WilsonInterval wilson_interval(int l_count, int n, double z) {
  if (n < 1) throw std::domain_error("wilson_interval requires n >= 1");
  if (l_count < 0 || l_count > n)
    throw std::domain_error("wilson_interval requires 0 <= l_count <= n");
  if (!(z > 0)) throw std::domain_error("wilson_interval requires z > 0");
  const double l = l_count;
  const double z2 = z * z;
  const double denom = n + z2;
  const double center = (l + z2 / 2.0) / denom;
  const double half =
      z * std::sqrt(l * (n - l) / static_cast<double>(n) + z2 / 4.0) / denom;
  WilsonInterval w;
  w.point = l / n;
  w.lower = std::max(0.0, center - half);
  w.upper = std::min(1.0, center + half);
  return w;
}

double round2(double v) {
  return std::copysign(std::floor(std::abs(v) * 100.0 + 0.5) / 100.0, v);
}

void ScenarioCounts::validate() const {
  if (memory != 1 && memory != 2)
    throw std::invalid_argument("ScenarioCounts.memory must be 1 or 2");
  auto check = [](const Cell& c) {
    if (c.n < 1 || c.l_count < 0 || c.l_count > c.n)
      throw std::invalid_argument("ScenarioCounts cell out of range");
  };
  check(r1);
  for (const auto& c : after) check(c);
  if (memory == 2)
    for (const auto& row : h2)
      for (const auto& c : row) check(c);
}

ScenarioCounts ScenarioCounts::memory1(const std::array<int, 5>& l_counts,
                                       int n) {
  ScenarioCounts c;
  c.memory = 1;
  c.r1 = {l_counts[0], n};
  for (int i = 0; i < 4; ++i) c.after[i] = {l_counts[i + 1], n};
  c.validate();
  return c;
}

ScenarioCounts ScenarioCounts::memory2(const std::array<int, 21>& l_counts,
                                       int n) {
  ScenarioCounts c;
  c.memory = 2;
  c.r1 = {l_counts[0], n};
  for (int i = 0; i < 4; ++i) c.after[i] = {l_counts[i + 1], n};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c.h2[i][j] = {l_counts[5 + 4 * i + j], n};
  c.validate();
  return c;
}

std::string ScenarioCounts::to_json() const {
  validate();
  nlohmann::json j;
  j["memory"] = memory;
  auto cell = [](const Cell& c) {
    return nlohmann::json{{"l", c.l_count}, {"n", c.n}};
  };
  j["r1"] = cell(r1);
  for (int i = 0; i < 4; ++i)
    j["after"][std::string(to_string(outcome_from_index(i)))] = cell(after[i]);
  if (memory == 2)
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        std::string key = std::string(to_string(outcome_from_index(i))) + "," +
                          std::string(to_string(outcome_from_index(k)));
        j["h2"][key] = cell(h2[i][k]);
      }
  return j.dump();
}

ScenarioCounts ScenarioCounts::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ScenarioCounts c;
  c.memory = j.at("memory").get<int>();
  auto cell = [](const nlohmann::json& jc) {
    return Cell{jc.at("l").get<int>(), jc.at("n").get<int>()};
  };
  c.r1 = cell(j.at("r1"));
  for (int i = 0; i < 4; ++i)
    c.after[i] =
        cell(j.at("after").at(std::string(to_string(outcome_from_index(i)))));
  if (c.memory == 2)
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        std::string key = std::string(to_string(outcome_from_index(i))) + "," +
                          std::string(to_string(outcome_from_index(k)));
        c.h2[i][k] = cell(j.at("h2").at(key));
      }
  c.validate();
  return c;
}

namespace {

bool is_pure(double v) { return v == 0.0 || v == 1.0; }

int round_half_up(double v) { return v >= 0.5 ? 1 : 0; }

std::array<int, 5> rounded_profile(const Memory1Strategy& s) {
  return {round_half_up(s.p0), round_half_up(s.after[0]),
          round_half_up(s.after[1]), round_half_up(s.after[2]),
          round_half_up(s.after[3])};
}

std::string bits_to_string(const std::vector<int>& bits) {
  std::string out;
  for (int b : bits) out.push_back(b ? '1' : '0');
  return out;
}

}  // namespace

std::pair<std::string, bool> label_strategy(const Memory1Strategy& s) {
  // exact catalog matches first
  for (const auto& entry : memory1_catalog()) {
    if (entry.has_q_slot) {
      const double q = s.after[index_of(Outcome::LR)];
      if (s.p0 == 1.0 && s.after[index_of(Outcome::LL)] == 1.0 &&
          s.after[index_of(Outcome::RL)] == 1.0 &&
          s.after[index_of(Outcome::RR)] == q && q > 0.0 && q <= 0.5)
        return {entry.name, false};
    } else if (s == entry.strategy) {
      return {entry.name, false};
    }
  }

  // generous tit-for-tat shape before rounding: TFT backbone rounds to
  // cooperation, both generosity slots strictly mixed, small on average
  const double plr = s.after[index_of(Outcome::LR)];
  const double prr = s.after[index_of(Outcome::RR)];
  if (round_half_up(s.p0) == 1 &&
      round_half_up(s.after[index_of(Outcome::LL)]) == 1 &&
      round_half_up(s.after[index_of(Outcome::RL)]) == 1 && plr > 0.0 &&
      plr < 1.0 && prr > 0.0 && prr < 1.0 && (plr + prr) / 2.0 <= 0.5)
    return {"GTFT", true};

  const auto profile = rounded_profile(s);
  const Memory1Strategy pure(profile[0], profile[1], profile[2], profile[3],
                             profile[4]);
  for (const auto& entry : memory1_catalog())
    if (!entry.has_q_slot && pure == entry.strategy)
      return {entry.name, true};

  const bool pure_input = is_pure(s.p0) && is_pure(s.after[0]) &&
                          is_pure(s.after[1]) && is_pure(s.after[2]) &&
                          is_pure(s.after[3]);
  return {bits_to_string({profile[0], profile[1], profile[2], profile[3],
                          profile[4]}),
          !pure_input};
}

std::pair<std::string, bool> label_strategy(const Memory2Strategy& s) {
  for (const auto& entry : memory2_catalog())
    if (s == entry.strategy) return {entry.name, false};

  Memory2Strategy rounded;
  rounded.p0 = round_half_up(s.p0);
  std::vector<int> bits{round_half_up(s.p0)};
  for (int i = 0; i < 4; ++i) {
    rounded.r2[i] = round_half_up(s.r2[i]);
    bits.push_back(round_half_up(s.r2[i]));
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      rounded.h2[i][j] = round_half_up(s.h2[i][j]);
      bits.push_back(round_half_up(s.h2[i][j]));
    }
  for (const auto& entry : memory2_catalog())
    if (rounded == entry.strategy) return {entry.name, true};

  return {bits_to_string(bits), !s.is_deterministic()};
}

std::string format_label(const std::string& name, bool approx) {
  return approx ? "~" + name : name;
}

InferredStrategy infer_strategy(const ScenarioCounts& counts) {
  counts.validate();
  InferredStrategy out;
  out.memory = counts.memory;
  auto mean = [](const ScenarioCounts::Cell& c) {
    return static_cast<double>(c.l_count) / c.n;
  };
  auto interval = [](const ScenarioCounts::Cell& c) {
    return wilson_interval(c.l_count, c.n);
  };

  if (counts.memory == 1) {
    out.m1 = Memory1Strategy(mean(counts.r1), mean(counts.after[0]),
                             mean(counts.after[1]), mean(counts.after[2]),
                             mean(counts.after[3]));
    out.intervals.push_back(interval(counts.r1));
    for (int i = 0; i < 4; ++i) out.intervals.push_back(interval(counts.after[i]));
    auto [name, approx] = label_strategy(out.m1);
    out.label = name;
    out.approx = approx;
  } else {
    Memory2Strategy s;
    s.p0 = mean(counts.r1);
    for (int i = 0; i < 4; ++i) s.r2[i] = mean(counts.after[i]);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) s.h2[i][j] = mean(counts.h2[i][j]);
    s.validate();
    out.m2 = s;
    out.intervals.push_back(interval(counts.r1));
    for (int i = 0; i < 4; ++i) out.intervals.push_back(interval(counts.after[i]));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) out.intervals.push_back(interval(counts.h2[i][j]));
    auto [name, approx] = label_strategy(out.m2);
    out.label = name;
    out.approx = approx;
  }
  return out;
}

}  // namespace ipd
