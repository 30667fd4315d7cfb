#ifndef BLENDSMITH_SERVICE_H_
#define BLENDSMITH_SERVICE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "blendsmith/pipeline.h"
#include "blendsmith/ranking.h"
#include "blendsmith/resources.h"
#include "blendsmith/scoring.h"

namespace blendsmith {

inline constexpr const char* kVersion = "0.3.0";

// A request that does not match the JSON schema (HTTP 400).
class RequestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenerationRequest {
  std::string description;
  int top_k = 30;
  bool diversify = true;
  int iterations = 30;
  std::optional<AppealWeights> weights;
  int max_per_root = 5;
  // Keep only the best N candidates after scoring.
  std::optional<std::size_t> candidate_cap;
  // Report elapsed_ms in the body; off by default so bodies are reproducible.
  bool timing = false;
};

struct NameEntry {
  std::string display;
  std::string text;
  double appeal = 0.0;
  double readability = 0.0;
  double pronounceability = 0.0;
  double memorability = 0.0;
  double uniqueness = 0.0;
  std::vector<std::string> syllables;
  std::vector<std::string> sources;

  bool operator==(const NameEntry&) const = default;
};

struct GenerationResponse {
  std::vector<NameEntry> names;
  std::size_t candidate_count = 0;
  std::optional<std::int64_t> elapsed_ms;

  bool operator==(const GenerationResponse&) const = default;
};

struct RerankRequest {
  std::vector<NameEntry> names;
  AppealWeights weights;
  std::optional<int> top_k;
  bool diversify = true;
  int iterations = 30;
};

void to_json(nlohmann::json& j, const AppealWeights& w);
void from_json(const nlohmann::json& j, AppealWeights& w);
void to_json(nlohmann::json& j, const NameEntry& e);
void from_json(const nlohmann::json& j, NameEntry& e);
void to_json(nlohmann::json& j, const GenerationResponse& r);
void from_json(const nlohmann::json& j, GenerationResponse& r);

// Both throw RequestError on schema violations.
GenerationRequest parse_generation_request(const nlohmann::json& j);
RerankRequest parse_rerank_request(const nlohmann::json& j);

NameEntry to_entry(const Candidate& c);

/// Runs the full description-to-names flow against one shared store.
class Generator {
 public:
  explicit Generator(const ResourceStore& store, RuleTable rules = RuleTable::observed());

  // Throws PipelineError; every other failure is a fault.
  GenerationResponse generate(const GenerationRequest& request) const;

  // Scored candidates before selection; exposed for tools and tests.
  std::vector<Candidate> candidates(std::string_view description, int max_per_root,
                                    const AppealWeights& weights) const;

  const ResourceStore& store() const { return store_; }

 private:
  const ResourceStore& store_;
  AllowedRules allowed_;
};

/// Re-scores previously returned names under new weights and repeats the
/// selection step without regenerating.
GenerationResponse rerank(const RerankRequest& request);

// Ordering used for output: diversified picks or plain appeal order.
std::vector<Candidate> select_names(std::vector<Candidate> scored, bool diversify, int iterations,
                                    std::size_t top_k);

struct HttpReply {
  int status = 200;
  nlohmann::json body;
};

HttpReply handle_generate(const Generator& generator, const std::string& body);
HttpReply handle_rerank(const std::string& body);
HttpReply handle_health(const ResourceStore& store);

/// HTTP front end: POST /api/generate, POST /api/rerank, GET /api/health.
class Service {
 public:
  explicit Service(const ResourceStore& store);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Blocks until stop(). Returns false if the address cannot be bound.
  bool listen(const std::string& host, int port);
  // Binds an ephemeral port and returns it, or -1.
  int bind_any_port(const std::string& host);
  bool listen_after_bind();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace blendsmith

#endif  // BLENDSMITH_SERVICE_H_
