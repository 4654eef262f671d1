#include "ipd/harness/agent.hpp"

#include <httplib.h>
#include <nlohmann/json.hpp>

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace ipd::harness {

namespace {

bool is_trim_char(unsigned char c) {
  return std::isspace(c) || std::ispunct(c);
}

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_trim_char(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && is_trim_char(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Action parse_action(const std::string& raw) {
  const std::string t = trimmed(raw);
  if (t.size() == 1) {
    if (t[0] == 'L' || t[0] == 'l') return Action::L;
    if (t[0] == 'R' || t[0] == 'r') return Action::R;
  }
  // first standalone L or R token
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const char c = raw[i];
    if (c != 'L' && c != 'l' && c != 'R' && c != 'r') continue;
    const bool left_ok = i == 0 || !std::isalnum(static_cast<unsigned char>(raw[i - 1]));
    const bool right_ok =
        i + 1 == raw.size() || !std::isalnum(static_cast<unsigned char>(raw[i + 1]));
    if (left_ok && right_ok)
      return (c == 'L' || c == 'l') ? Action::L : Action::R;
  }
  return Action::Unparseable;
}

std::string to_string(Action a) {
  switch (a) {
    case Action::L: return "L";
    case Action::R: return "R";
    case Action::Unparseable: return "unparseable";
  }
  return "?";
}

AgentConfig AgentConfig::scripted(std::string id, AnyStrategy s) {
  AgentConfig c;
  c.kind = Kind::scripted;
  c.id = std::move(id);
  c.strategy = s;
  return c;
}

std::string AgentConfig::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  if (kind == Kind::scripted) {
    j["kind"] = "scripted";
    j["strategy"] = nlohmann::json::parse(
        strategy.memory == 1 ? strategy.m1.to_json() : strategy.m2.to_json());
  } else {
    j["kind"] = "remote";
    j["base_url"] = remote.base_url;
    j["path"] = remote.path;
    j["model"] = remote.model;
    if (remote.temperature) j["temperature"] = *remote.temperature;
    if (remote.top_p) j["top_p"] = *remote.top_p;
    if (remote.seed) j["seed"] = *remote.seed;
    j["api_key_env"] = remote.api_key_env;
    j["max_attempts"] = retry.max_attempts;
    j["backoff_ms"] = retry.backoff.count();
    j["min_interval_ms"] = rate.min_interval.count();
  }
  return j.dump();
}

AgentConfig AgentConfig::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  AgentConfig c;
  c.id = j.value("id", "agent");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "scripted") {
    c.kind = Kind::scripted;
    const std::string sj = j.at("strategy").dump();
    if (j.at("strategy").at("memory").get<int>() == 1)
      c.strategy = AnyStrategy::of(Memory1Strategy::from_json(sj));
    else
      c.strategy = AnyStrategy::of(Memory2Strategy::from_json(sj));
  } else if (kind == "remote") {
    c.kind = Kind::remote;
    c.remote.base_url = j.at("base_url").get<std::string>();
    c.remote.path = j.value("path", std::string("/v1/chat/completions"));
    c.remote.model = j.value("model", std::string());
    if (j.contains("temperature")) c.remote.temperature = j["temperature"].get<double>();
    if (j.contains("top_p")) c.remote.top_p = j["top_p"].get<double>();
    if (j.contains("seed")) c.remote.seed = j["seed"].get<long>();
    c.remote.api_key_env = j.value("api_key_env", std::string());
    c.retry.max_attempts = j.value("max_attempts", 3);
    c.retry.backoff = std::chrono::milliseconds(j.value("backoff_ms", 500));
    c.rate.min_interval = std::chrono::milliseconds(j.value("min_interval_ms", 500));
  } else {
    throw std::invalid_argument("unknown agent kind: " + kind);
  }
  return c;
}

ScriptedAgent::ScriptedAgent(std::string id, AnyStrategy strategy)
    : id_(std::move(id)), strategy_(strategy) {}

std::string ScriptedAgent::query(const PromptSpec& prompt, Xoshiro256& rng) {
  double coop = 0.0;
  if (prompt.round1 || prompt.one_shot) {
    coop = strategy_.memory == 1 ? strategy_.m1.p0 : strategy_.m2.p0;
  } else if (strategy_.memory == 1) {
    if (!prompt.last)
      throw std::invalid_argument("scripted agent: prompt carries no history");
    coop = strategy_.m1.reaction(*prompt.last);
  } else {
    if (!prompt.last)
      throw std::invalid_argument("scripted agent: prompt carries no history");
    if (prompt.round2 || !prompt.before)
      coop = strategy_.m2.reaction_round2(*prompt.last);
    else
      coop = strategy_.m2.reaction(*prompt.last, *prompt.before);
  }
  if (coop == 1.0) return "L";
  if (coop == 0.0) return "R";
  return rng.bernoulli(coop) ? "L" : "R";
}

RemoteAgent::RemoteAgent(const AgentConfig& config)
    : id_(config.id), config_(config),
      next_allowed_(std::chrono::steady_clock::now()) {}

std::string RemoteAgent::query(const PromptSpec& prompt, Xoshiro256&) {
  nlohmann::json body;
  body["model"] = config_.remote.model;
  body["messages"] = nlohmann::json::array(
      {{{"role", "system"}, {"content", prompt.system_text}},
       {{"role", "user"}, {"content", prompt.user_text}}});
  if (config_.remote.temperature) body["temperature"] = *config_.remote.temperature;
  if (config_.remote.top_p) body["top_p"] = *config_.remote.top_p;
  if (config_.remote.seed) body["seed"] = *config_.remote.seed;

  httplib::Headers headers;
  if (!config_.remote.api_key_env.empty()) {
    if (const char* key = std::getenv(config_.remote.api_key_env.c_str()))
      headers.emplace("Authorization", std::string("Bearer ") + key);
  }

  std::string last_error;
  for (int attempt = 0; attempt < config_.retry.max_attempts; ++attempt) {
    // token bucket: one request per min_interval
    auto now = std::chrono::steady_clock::now();
    if (now < next_allowed_) std::this_thread::sleep_for(next_allowed_ - now);
    next_allowed_ = std::chrono::steady_clock::now() + config_.rate.min_interval;

    httplib::Client client(config_.remote.base_url);
    client.set_read_timeout(120, 0);
    auto res = client.Post(config_.remote.path, headers, body.dump(),
                           "application/json");
    if (!res) {
      last_error = "transport error: " + httplib::to_string(res.error());
    } else if (res->status != 200) {
      last_error = "http status " + std::to_string(res->status);
    } else {
      try {
        nlohmann::json reply = nlohmann::json::parse(res->body);
        return reply.at("choices").at(0).at("message").at("content")
            .get<std::string>();
      } catch (const std::exception& e) {
        last_error = std::string("bad response body: ") + e.what();
      }
    }
    if (attempt + 1 < config_.retry.max_attempts)
      std::this_thread::sleep_for(config_.retry.backoff * (attempt + 1));
  }
  throw std::runtime_error("remote agent " + id_ + " failed: " + last_error);
}

std::unique_ptr<Agent> make_agent(const AgentConfig& config) {
  if (config.kind == AgentConfig::Kind::scripted)
    return std::make_unique<ScriptedAgent>(config.id, config.strategy);
  return std::make_unique<RemoteAgent>(config);
}

}  // namespace ipd::harness
