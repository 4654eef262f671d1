#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <string>

#include "ipd/harness/prompt.hpp"
#include "ipd/rng.hpp"
#include "ipd/tournament.hpp"

namespace ipd::harness {

enum class Action { L, R, Unparseable };

// Strict first: the trimmed response must be exactly "l" or "r" (any case,
// surrounding whitespace/punctuation ignored). Lenient fallback: the first
// standalone L/R token. Anything else is unparseable and reported, never
// silently dropped.
Action parse_action(const std::string& raw);

std::string to_string(Action a);

struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds backoff{500};
};

struct RateLimit {
  std::chrono::milliseconds min_interval{500};
};

struct RemoteEndpoint {
  std::string base_url;  // scheme://host[:port]
  std::string path = "/v1/chat/completions";
  std::string model;
  std::optional<double> temperature;
  std::optional<double> top_p;
  std::optional<long> seed;
  std::string api_key_env;  // name of the environment variable, never the key
};

struct AgentConfig {
  enum class Kind { scripted, remote } kind = Kind::scripted;
  std::string id;  // label used in experiment records
  AnyStrategy strategy;
  RemoteEndpoint remote;
  RetryPolicy retry;
  RateLimit rate;

  static AgentConfig scripted(std::string id, AnyStrategy s);

  std::string to_json() const;
  static AgentConfig from_json(const std::string& text);
};

class Agent {
 public:
  virtual ~Agent() = default;
  virtual const std::string& id() const = 0;
  // One single-turn query; the rng drives scripted sampling and is unused by
  // remote agents. Throws on transport failure after retries.
  virtual std::string query(const PromptSpec& prompt, Xoshiro256& rng) = 0;
};

// Answers from the configured strategy: cooperation probability looked up
// from the prompt's structured scenario, sampled with the caller's rng.
// Deterministic strategies answer deterministically.
class ScriptedAgent : public Agent {
 public:
  ScriptedAgent(std::string id, AnyStrategy strategy);
  const std::string& id() const override { return id_; }
  std::string query(const PromptSpec& prompt, Xoshiro256& rng) override;

 private:
  std::string id_;
  AnyStrategy strategy_;
};

// Minimal chat-completion client over HTTP(S) with retry and a token-bucket
// rate limit. The API key is read from the configured environment variable.
class RemoteAgent : public Agent {
 public:
  explicit RemoteAgent(const AgentConfig& config);
  const std::string& id() const override { return id_; }
  std::string query(const PromptSpec& prompt, Xoshiro256& rng) override;

 private:
  std::string id_;
  AgentConfig config_;
  std::chrono::steady_clock::time_point next_allowed_;
};

std::unique_ptr<Agent> make_agent(const AgentConfig& config);

}  // namespace ipd::harness
