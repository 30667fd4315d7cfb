#ifndef BLENDSMITH_CONFIG_H_
#define BLENDSMITH_CONFIG_H_

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "blendsmith/scoring.h"

namespace blendsmith {

inline constexpr std::string_view kEnvPrefix = "BLENDSMITH_";

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

// Reads the process environment.
std::optional<std::string> process_env(const std::string& name);

/// Settings resolved with precedence flag > environment > config file.
/// Keys are snake_case; the environment variable is BLENDSMITH_<KEY>.
class SettingSources {
 public:
  SettingSources(nlohmann::json config_file, EnvLookup env = process_env);

  // Loads the JSON config named by the flag or BLENDSMITH_CONFIG, if any.
  static SettingSources discover(const std::optional<std::string>& config_flag,
                                 EnvLookup env = process_env);

  std::optional<std::string> get(std::string_view key, const std::optional<std::string>& flag) const;
  std::string get_or(std::string_view key, const std::optional<std::string>& flag,
                     std::string fallback) const;
  int get_int(std::string_view key, const std::optional<std::string>& flag, int fallback) const;

 private:
  nlohmann::json config_;
  EnvLookup env_;
};

// "r,p,m,u" -> weights; throws std::invalid_argument.
AppealWeights parse_weights(std::string_view text);

struct BindAddress {
  std::string host = "127.0.0.1";
  int port = 8080;
};

// "HOST:PORT"; throws std::invalid_argument.
BindAddress parse_bind(std::string_view text);

}  // namespace blendsmith

#endif  // BLENDSMITH_CONFIG_H_
