#include "blendsmith/service.h"

#include <chrono>
#include <cmath>
#include <unordered_map>

#include "httplib.h"

namespace blendsmith {

using nlohmann::json;

// ---------------------------------------------------------------------------
// JSON

void to_json(json& j, const AppealWeights& w) {
  j = json{{"readability", w.readability},
           {"pronounceability", w.pronounceability},
           {"memorability", w.memorability},
           {"uniqueness", w.uniqueness}};
}

void from_json(const json& j, AppealWeights& w) {
  if (j.is_array()) {
    if (j.size() != 4) throw RequestError("weights array must have 4 numbers");
    for (const auto& v : j) {
      if (!v.is_number()) throw RequestError("weights must be numbers");
    }
    w = {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
  } else if (j.is_object()) {
    auto field = [&](const char* key) {
      if (!j.contains(key) || !j.at(key).is_number()) {
        throw RequestError(std::string("weights.") + key + " must be a number");
      }
      return j.at(key).get<double>();
    };
    w = {field("readability"), field("pronounceability"), field("memorability"),
         field("uniqueness")};
  } else {
    throw RequestError("weights must be an object or an array of 4 numbers");
  }
  if (!std::isfinite(w.readability) || !std::isfinite(w.pronounceability) ||
      !std::isfinite(w.memorability) || !std::isfinite(w.uniqueness)) {
    throw RequestError("weights must be finite");
  }
}

void to_json(json& j, const NameEntry& e) {
  j = json{{"display", e.display},
           {"text", e.text},
           {"appeal", e.appeal},
           {"readability", e.readability},
           {"pronounceability", e.pronounceability},
           {"memorability", e.memorability},
           {"uniqueness", e.uniqueness},
           {"syllables", e.syllables},
           {"sources", e.sources}};
}

namespace {

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw RequestError(std::string("field '") + key + "' must be a number");
  }
  const double v = j.at(key).get<double>();
  if (!std::isfinite(v)) throw RequestError(std::string("field '") + key + "' must be finite");
  return v;
}

std::vector<std::string> string_list(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw RequestError(std::string("field '") + key + "' must be an array of strings");
  }
  std::vector<std::string> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_string()) throw RequestError(std::string("field '") + key + "' must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

int int_field(const json& j, const char* key, int fallback, int minimum) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw RequestError(std::string("field '") + key + "' must be an integer");
  const auto value = v.get<long long>();
  if (value < minimum || value > 1'000'000) {
    throw RequestError(std::string("field '") + key + "' is out of range");
  }
  return static_cast<int>(value);
}

bool bool_field(const json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) throw RequestError(std::string("field '") + key + "' must be a boolean");
  return j.at(key).get<bool>();
}

}  // namespace

void from_json(const json& j, NameEntry& e) {
  if (!j.is_object()) throw RequestError("name entries must be objects");
  e.syllables = string_list(j, "syllables");
  if (e.syllables.empty()) throw RequestError("name entries need at least one syllable");
  std::string joined;
  for (const auto& s : e.syllables) joined += s;
  e.text = j.contains("text") && j.at("text").is_string() ? j.at("text").get<std::string>() : joined;
  if (e.text != joined || !is_alpha_word(e.text)) {
    throw RequestError("name text must be the concatenation of its alphabetic syllables");
  }
  e.display = j.contains("display") && j.at("display").is_string()
                  ? j.at("display").get<std::string>()
                  : render_display(e.syllables);
  e.appeal = j.contains("appeal") ? number_field(j, "appeal") : 0.0;
  e.readability = number_field(j, "readability");
  e.pronounceability = number_field(j, "pronounceability");
  e.memorability = number_field(j, "memorability");
  e.uniqueness = number_field(j, "uniqueness");
  e.sources = j.contains("sources") ? string_list(j, "sources") : std::vector<std::string>{};
}

void to_json(json& j, const GenerationResponse& r) {
  j = json{{"names", r.names}, {"candidate_count", r.candidate_count}};
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
}

void from_json(const json& j, GenerationResponse& r) {
  if (!j.is_object() || !j.contains("names") || !j.at("names").is_array()) {
    throw RequestError("response must hold a 'names' array");
  }
  r.names.clear();
  for (const auto& e : j.at("names")) r.names.push_back(e.get<NameEntry>());
  r.candidate_count = j.value("candidate_count", std::size_t{0});
  r.elapsed_ms.reset();
  if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
}

GenerationRequest parse_generation_request(const json& j) {
  if (!j.is_object()) throw RequestError("request body must be a JSON object");
  if (!j.contains("description") || !j.at("description").is_string()) {
    throw RequestError("field 'description' must be a string");
  }
  GenerationRequest req;
  req.description = j.at("description").get<std::string>();
  req.top_k = int_field(j, "top_k", req.top_k, 1);
  req.iterations = int_field(j, "iterations", req.iterations, 1);
  req.max_per_root = int_field(j, "max_per_root", req.max_per_root, 0);
  req.diversify = bool_field(j, "diversify", req.diversify);
  req.timing = bool_field(j, "timing", req.timing);
  if (j.contains("candidate_cap")) {
    req.candidate_cap = static_cast<std::size_t>(int_field(j, "candidate_cap", 0, 1));
  }
  if (j.contains("weights") && !j.at("weights").is_null()) req.weights = j.at("weights").get<AppealWeights>();
  return req;
}

RerankRequest parse_rerank_request(const json& j) {
  if (!j.is_object()) throw RequestError("request body must be a JSON object");
  if (!j.contains("names") || !j.at("names").is_array()) {
    throw RequestError("field 'names' must be an array of previously returned names");
  }
  if (!j.contains("weights")) throw RequestError("field 'weights' is required");
  RerankRequest req;
  for (const auto& e : j.at("names")) req.names.push_back(e.get<NameEntry>());
  req.weights = j.at("weights").get<AppealWeights>();
  if (j.contains("top_k")) req.top_k = int_field(j, "top_k", 0, 1);
  req.diversify = bool_field(j, "diversify", req.diversify);
  req.iterations = int_field(j, "iterations", req.iterations, 1);
  return req;
}

// ---------------------------------------------------------------------------
// Generation

NameEntry to_entry(const Candidate& c) {
  NameEntry e;
  e.syllables = c.syllables();
  e.display = render_display(e.syllables);
  e.text = c.name();
  e.appeal = c.appeal;
  e.readability = c.scores.readability;
  e.pronounceability = c.scores.pronounceability;
  e.memorability = c.scores.memorability;
  e.uniqueness = c.scores.uniqueness;
  e.sources = c.raw.sources();
  return e;
}

Generator::Generator(const ResourceStore& store, RuleTable rules)
    : store_(store), allowed_(allowed_rules(rules)) {}

std::vector<Candidate> Generator::candidates(std::string_view description, int max_per_root,
                                             const AppealWeights& weights) const {
  const auto tokens = tokenize(description);
  const auto roots = extract_roots(tokens, store_.stopwords());
  const auto tagged = tag_pos(roots, store_.pos_lexicon());
  if (tagged.empty()) {
    throw PipelineError(PipelineError::Code::NoRoots, "no root word has a blendable POS tag");
  }
  const auto related = expand_related(tagged, store_.synonyms(), store_.similes(), max_per_root);
  const auto pool = build_syllable_pool(related, store_.hyphenation());
  if (pool.size() < 2) {
    throw PipelineError(PipelineError::Code::NoCandidates, "fewer than two syllables to blend");
  }
  const auto blends = generate_blends(pool, allowed_);
  return score_candidates(blends, store_, weights);
}

std::vector<Candidate> select_names(std::vector<Candidate> scored, bool diversify, int iterations,
                                    std::size_t top_k) {
  std::vector<Candidate> ordered;
  if (diversify) {
    ordered = diversify_select(scored, iterations).picks;
  } else {
    ordered = rank_by_appeal(std::move(scored));
  }
  if (ordered.size() > top_k) ordered.resize(top_k);
  return ordered;
}

GenerationResponse Generator::generate(const GenerationRequest& request) const {
  const auto start = std::chrono::steady_clock::now();
  const auto weights = request.weights.value_or(AppealWeights{});
  auto scored = candidates(request.description, request.max_per_root, weights);

  GenerationResponse response;
  response.candidate_count = scored.size();
  if (request.candidate_cap && scored.size() > *request.candidate_cap) {
    scored = rank_by_appeal(std::move(scored));
    scored.resize(*request.candidate_cap);
  }
  const auto top_k = static_cast<std::size_t>(std::max(1, request.top_k));
  for (const auto& c : select_names(std::move(scored), request.diversify, request.iterations, top_k)) {
    response.names.push_back(to_entry(c));
  }
  if (request.timing) {
    response.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  }
  return response;
}

GenerationResponse rerank(const RerankRequest& request) {
  std::vector<Candidate> rescored;
  rescored.reserve(request.names.size());
  for (const auto& e : request.names) {
    Candidate c;
    c.raw.text = e.text;
    for (std::size_t i = 0; i < e.syllables.size(); ++i) {
      SyllableUnit unit;
      unit.text = e.syllables[i];
      unit.tag = PosTag::Other;
      unit.index = static_cast<int>(i);
      unit.syllables = {e.syllables[i]};
      c.raw.units.push_back(std::move(unit));
    }
    c.scores.readability = e.readability;
    c.scores.pronounceability = e.pronounceability;
    c.scores.memorability = e.memorability;
    c.scores.uniqueness = e.uniqueness;
    c.appeal = appeal(c.scores, request.weights);
    rescored.push_back(std::move(c));
  }

  // Carry display names and sources through by text.
  std::unordered_map<std::string, const NameEntry*> by_text;
  for (const auto& e : request.names) by_text.emplace(e.text, &e);

  GenerationResponse response;
  response.candidate_count = rescored.size();
  const auto top_k = static_cast<std::size_t>(request.top_k.value_or(static_cast<int>(rescored.size())));
  for (const auto& c : select_names(std::move(rescored), request.diversify, request.iterations, top_k)) {
    NameEntry e = *by_text.at(c.name());
    e.appeal = c.appeal;
    response.names.push_back(std::move(e));
  }
  return response;
}

// ---------------------------------------------------------------------------
// HTTP

namespace {

HttpReply error_reply(int status, std::string_view kind, std::string_view message) {
  return {status, json{{"error", kind}, {"message", message}}};
}

json parse_body(const std::string& body) {
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw RequestError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

HttpReply handle_generate(const Generator& generator, const std::string& body) {
  try {
    const auto request = parse_generation_request(parse_body(body));
    return {200, generator.generate(request)};
  } catch (const RequestError& e) {
    return error_reply(400, "BadRequest", e.what());
  } catch (const json::exception& e) {
    return error_reply(400, "BadRequest", e.what());
  } catch (const PipelineError& e) {
    return error_reply(422, to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    return error_reply(500, "Internal", e.what());
  }
}

HttpReply handle_rerank(const std::string& body) {
  try {
    return {200, rerank(parse_rerank_request(parse_body(body)))};
  } catch (const RequestError& e) {
    return error_reply(400, "BadRequest", e.what());
  } catch (const json::exception& e) {
    return error_reply(400, "BadRequest", e.what());
  } catch (const std::exception& e) {
    return error_reply(500, "Internal", e.what());
  }
}

HttpReply handle_health(const ResourceStore& store) {
  return {200, json{{"status", "ok"}, {"version", kVersion}, {"resources", store.checksums()}}};
}

struct Service::Impl {
  explicit Impl(const ResourceStore& s) : store(s), generator(s) {}

  const ResourceStore& store;
  Generator generator;
  httplib::Server server;
};

Service::Service(const ResourceStore& store) : impl_(std::make_unique<Impl>(store)) {
  auto send = [](httplib::Response& res, const HttpReply& reply) {
    res.status = reply.status;
    res.set_content(reply.body.dump(), "application/json");
  };
  auto& server = impl_->server;
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  server.Post("/api/generate", [this, send](const httplib::Request& req, httplib::Response& res) {
    const auto start = std::chrono::steady_clock::now();
    send(res, handle_generate(impl_->generator, req.body));
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    res.set_header("X-Elapsed-Ms", std::to_string(ms.count()));
  });
  server.Post("/api/rerank", [send](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_rerank(req.body));
  });
  server.Get("/api/health", [this, send](const httplib::Request&, httplib::Response& res) {
    send(res, handle_health(impl_->store));
  });
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

Service::~Service() = default;

bool Service::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }

int Service::bind_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }

bool Service::listen_after_bind() { return impl_->server.listen_after_bind(); }

void Service::stop() { impl_->server.stop(); }

void Service::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace blendsmith
