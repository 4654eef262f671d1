#include "ipd/strategy.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace ipd {

namespace {

constexpr double kClampBand = 1e-12;

double checked_probability(double v, const char* what) {
  if (v < -kClampBand || v > 1.0 + kClampBand)
    throw std::invalid_argument(std::string(what) +
                                ": probability outside [0,1]: " +
                                std::to_string(v));
  if (v < 0.0) return 0.0;
  if (v > 1.0) return 1.0;
  return v;
}

bool is_pure(double v) { return v == 0.0 || v == 1.0; }

}  // namespace

void Memory1Strategy::validate() {
  p0 = checked_probability(p0, "Memory1Strategy.p0");
  for (auto& v : after) v = checked_probability(v, "Memory1Strategy.after");
}

bool Memory1Strategy::is_deterministic() const {
  if (!is_pure(p0)) return false;
  for (double v : after)
    if (!is_pure(v)) return false;
  return true;
}

std::string Memory1Strategy::to_json() const {
  nlohmann::json j;
  j["memory"] = 1;
  j["p0"] = p0;
  j["entries"] = after;
  return j.dump();
}

Memory1Strategy Memory1Strategy::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("memory").get<int>() != 1)
    throw std::invalid_argument("expected memory-1 strategy JSON");
  auto entries = j.at("entries").get<std::array<double, 4>>();
  return Memory1Strategy(j.at("p0").get<double>(), entries[0], entries[1],
                         entries[2], entries[3]);
}

void Memory2Strategy::validate() {
  p0 = checked_probability(p0, "Memory2Strategy.p0");
  for (auto& v : r2) v = checked_probability(v, "Memory2Strategy.r2");
  for (auto& row : h2)
    for (auto& v : row) v = checked_probability(v, "Memory2Strategy.h2");
}

bool Memory2Strategy::is_deterministic() const {
  if (!is_pure(p0)) return false;
  for (double v : r2)
    if (!is_pure(v)) return false;
  for (const auto& row : h2)
    for (double v : row)
      if (!is_pure(v)) return false;
  return true;
}

std::string Memory2Strategy::to_json() const {
  nlohmann::json j;
  j["memory"] = 2;
  j["p0"] = p0;
  std::array<double, 20> entries{};
  for (int i = 0; i < 4; ++i) entries[i] = r2[i];
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) entries[4 + 4 * i + k] = h2[i][k];
  j["entries"] = entries;
  return j.dump();
}

Memory2Strategy Memory2Strategy::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("memory").get<int>() != 2)
    throw std::invalid_argument("expected memory-2 strategy JSON");
  auto entries = j.at("entries").get<std::array<double, 20>>();
  Memory2Strategy s;
  s.p0 = j.at("p0").get<double>();
  for (int i = 0; i < 4; ++i) s.r2[i] = entries[i];
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) s.h2[i][k] = entries[4 + 4 * i + k];
  s.validate();
  return s;
}

Memory2Strategy lift_to_memory2(const Memory1Strategy& s) {
  Memory2Strategy out;
  out.p0 = s.p0;
  out.r2 = s.after;
  for (int last = 0; last < 4; ++last)
    for (int before = 0; before < 4; ++before)
      out.h2[last][before] = s.after[last];
  return out;
}

}  // namespace ipd
