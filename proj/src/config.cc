#include "blendsmith/config.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace blendsmith {

namespace {

std::string env_name(std::string_view key) {
  std::string name(kEnvPrefix);
  for (const char c : key) name += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return name;
}

std::string trimmed(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t");
  return std::string(text.substr(first, last - first + 1));
}

}  // namespace

std::optional<std::string> process_env(const std::string& name) {
  if (const char* value = std::getenv(name.c_str())) return std::string(value);
  return std::nullopt;
}

SettingSources::SettingSources(nlohmann::json config_file, EnvLookup env)
    : config_(std::move(config_file)), env_(std::move(env)) {
  if (!config_.is_null() && !config_.is_object()) {
    throw std::invalid_argument("config file must hold a JSON object");
  }
}

SettingSources SettingSources::discover(const std::optional<std::string>& config_flag,
                                        EnvLookup env) {
  auto path = config_flag;
  if (!path) path = env("BLENDSMITH_CONFIG");
  nlohmann::json config;
  if (path) {
    std::ifstream in(*path);
    if (!in) throw std::invalid_argument("cannot open config file " + *path);
    try {
      config = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument("config file " + *path + ": " + e.what());
    }
  }
  return SettingSources(std::move(config), std::move(env));
}

std::optional<std::string> SettingSources::get(std::string_view key,
                                               const std::optional<std::string>& flag) const {
  if (flag) return flag;
  if (auto value = env_(env_name(key))) return value;
  if (config_.is_object()) {
    const auto it = config_.find(std::string(key));
    if (it != config_.end()) {
      if (it->is_string()) return it->get<std::string>();
      if (it->is_array() && key == "weights") {
        std::string joined;
        for (const auto& v : *it) {
          if (!joined.empty()) joined += ',';
          joined += v.dump();
        }
        return joined;
      }
      return it->dump();
    }
  }
  return std::nullopt;
}

std::string SettingSources::get_or(std::string_view key, const std::optional<std::string>& flag,
                                   std::string fallback) const {
  auto value = get(key, flag);
  return value ? *value : std::move(fallback);
}

int SettingSources::get_int(std::string_view key, const std::optional<std::string>& flag,
                            int fallback) const {
  const auto value = get(key, flag);
  if (!value) return fallback;
  int out = 0;
  const auto text = trimmed(*value);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("setting '" + std::string(key) + "' must be an integer, got '" +
                                *value + "'");
  }
  return out;
}

AppealWeights parse_weights(std::string_view text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = trimmed(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size() || !std::isfinite(v)) {
      throw std::invalid_argument("weights must be four comma-separated numbers: '" +
                                  std::string(text) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (values.size() != 4) {
    throw std::invalid_argument("weights must be four comma-separated numbers: '" + std::string(text) + "'");
  }
  return {values[0], values[1], values[2], values[3]};
}

BindAddress parse_bind(std::string_view text) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw std::invalid_argument("bind address must be HOST:PORT");
  }
  BindAddress addr;
  addr.host = std::string(text.substr(0, colon));
  const auto port = text.substr(colon + 1);
  const auto [ptr, ec] = std::from_chars(port.data(), port.data() + port.size(), addr.port);
  if (ec != std::errc() || ptr != port.data() + port.size() || addr.port < 0 || addr.port > 65535) {
    throw std::invalid_argument("bind port must be 0-65535");
  }
  return addr;
}

}  // namespace blendsmith
