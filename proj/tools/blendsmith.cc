// blendsmith: generate, serve, evaluate and fit brand-name rankings.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "blendsmith/config.h"
#include "blendsmith/ranking.h"
#include "blendsmith/resources.h"
#include "blendsmith/service.h"

namespace {

using namespace blendsmith;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitPipeline = 3;

struct GenerateArgs {
  std::optional<std::string> config;
  std::optional<std::string> resources;
  std::optional<std::string> description;
  std::optional<std::string> top;
  std::optional<std::string> iterations;
  std::optional<std::string> weights;
  std::optional<std::string> format;
  std::optional<std::string> max_per_root;
  bool no_diversify = false;
  bool timing = false;
};

struct ServeArgs {
  std::optional<std::string> config;
  std::optional<std::string> resources;
  std::optional<std::string> bind;
};

struct EvalArgs {
  std::vector<std::string> ratings;
  std::vector<std::string> orders;
  std::optional<std::string> tau_a;
  std::optional<std::string> tau_b;
};

struct FitArgs {
  std::string preferences;
  FitOptions options;
};

std::string fmt_real(double v, const char* format = "%.4f") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

void print_table(const GenerationResponse& response) {
  std::printf("%-4s %-16s %8s %7s %7s %7s %7s\n", "#", "name", "appeal", "R", "P", "M", "U");
  int rank = 1;
  for (const auto& e : response.names) {
    std::printf("%-4d %-16s %8.4f %7.4f %7.4f %7.4f %7.4f\n", rank++, e.display.c_str(), e.appeal,
                e.readability, e.pronounceability, e.memorability, e.uniqueness);
  }
  std::printf("candidates: %zu\n", response.candidate_count);
  if (response.elapsed_ms) std::printf("elapsed: %lld ms\n", static_cast<long long>(*response.elapsed_ms));
}

int run_generate(const GenerateArgs& args) {
  GenerationRequest request;
  std::string resources_dir;
  std::string format;
  try {
    const auto settings = SettingSources::discover(args.config);
    resources_dir = settings.get_or("resources", args.resources, BLENDSMITH_DEFAULT_RESOURCES);
    format = settings.get_or("format", args.format, "text");
    if (format != "text" && format != "json") throw std::invalid_argument("--format must be text or json");
    request.description = args.description.value_or("");
    request.top_k = settings.get_int("top", args.top, request.top_k);
    request.iterations = settings.get_int("iterations", args.iterations, request.iterations);
    request.max_per_root = settings.get_int("max_per_root", args.max_per_root, request.max_per_root);
    if (request.top_k < 1 || request.iterations < 1 || request.max_per_root < 0) {
      throw std::invalid_argument("--top and --iterations must be >= 1, --max-per-root >= 0");
    }
    if (const auto w = settings.get("weights", args.weights)) request.weights = parse_weights(*w);
    request.diversify = !args.no_diversify;
    request.timing = args.timing;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const auto store = ResourceStore::load(resources_dir);
    const Generator generator(store);
    const auto response = generator.generate(request);
    if (format == "json") {
      std::cout << nlohmann::json(response).dump(2) << "\n";
    } else {
      print_table(response);
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const PipelineError& e) {
    std::cerr << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitPipeline;
  }
  return kExitOk;
}

int run_serve(const ServeArgs& args) {
  BindAddress bind;
  std::string resources_dir;
  try {
    const auto settings = SettingSources::discover(args.config);
    resources_dir = settings.get_or("resources", args.resources, BLENDSMITH_DEFAULT_RESOURCES);
    bind = parse_bind(settings.get_or("bind", args.bind, "127.0.0.1:8080"));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    const auto store = ResourceStore::load(resources_dir);
    Service service(store);
    std::cerr << "blendsmith " << kVersion << " listening on " << bind.host << ":" << bind.port << "\n";
    if (!service.listen(bind.host, bind.port)) {
      std::cerr << "error: cannot bind " << bind.host << ":" << bind.port << "\n";
      return kExitUsage;
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  }
  return kExitOk;
}

std::vector<std::string> read_names(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RankError(RankError::Code::Malformed, "cannot open " + path);
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    names.push_back(line.substr(first, last - first + 1));
  }
  return names;
}

// Rank vectors over the union of names; throws Mismatch when the sets differ.
std::pair<std::vector<int>, std::vector<int>> to_ranks(const std::vector<std::string>& a,
                                                       const std::vector<std::string>& b) {
  std::map<std::string, int> rank_a;
  std::map<std::string, int> rank_b;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!rank_a.emplace(a[i], static_cast<int>(i)).second) {
      throw RankError(RankError::Code::Mismatch, "duplicate name '" + a[i] + "'");
    }
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!rank_b.emplace(b[i], static_cast<int>(i)).second) {
      throw RankError(RankError::Code::Mismatch, "duplicate name '" + b[i] + "'");
    }
  }
  std::vector<int> ra;
  std::vector<int> rb;
  for (const auto& [name, r] : rank_a) {
    const auto it = rank_b.find(name);
    if (it == rank_b.end()) throw RankError(RankError::Code::Mismatch, "'" + name + "' missing from second ranking");
    ra.push_back(r);
    rb.push_back(it->second);
  }
  if (rank_a.size() != rank_b.size()) throw RankError(RankError::Code::Mismatch, "rankings cover different names");
  return {ra, rb};
}

int run_eval(const EvalArgs& args) {
  if (args.ratings.size() != args.orders.size()) {
    std::cerr << "error: --ratings and --order must be given the same number of times\n";
    return kExitUsage;
  }
  if (args.ratings.empty() && !(args.tau_a && args.tau_b)) {
    std::cerr << "error: nothing to evaluate\n";
    return kExitUsage;
  }
  try {
    double sum = 0.0;
    for (std::size_t i = 0; i < args.ratings.size(); ++i) {
      const auto ratings = load_ratings(args.ratings[i]);
      const auto order = read_names(args.orders[i]);
      if (ratings.size() != order.size()) {
        throw RankError(RankError::Code::Mismatch,
                        args.orders[i] + " and " + args.ratings[i] + " name different sets");
      }
      const double value = ndcg(order, ratings);
      sum += value;
      std::cout << "description " << (i + 1) << " (" << args.orders[i] << "): ndcg " << fmt_real(value)
                << "\n";
    }
    if (!args.ratings.empty()) {
      std::cout << "average ndcg " << fmt_real(sum / static_cast<double>(args.ratings.size())) << "\n";
    }
    if (args.tau_a && args.tau_b) {
      const auto [ra, rb] = to_ranks(read_names(*args.tau_a), read_names(*args.tau_b));
      std::cout << "kendall tau " << fmt_real(kendall_tau(ra, rb)) << "\n";
    }
  } catch (const RankError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
  return kExitOk;
}

int run_fit(const FitArgs& args) {
  try {
    const auto prefs = load_preferences(args.preferences);
    const auto w = fit_weights(prefs, args.options);
    std::cout << fmt_real(w.readability, "%.6g") << "," << fmt_real(w.pronounceability, "%.6g") << ","
              << fmt_real(w.memorability, "%.6g") << "," << fmt_real(w.uniqueness, "%.6g") << "\n";
    std::cerr << "training agreement " << fmt_real(pairwise_agreement(prefs, w)) << "\n";
  } catch (const RankError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate and rank blended brand names from a description"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate ranked names for a description");
  generate->add_option("--config", gen.config, "JSON config file");
  generate->add_option("--resources", gen.resources, "Resource directory");
  generate->add_option("--description", gen.description, "Entity description");
  generate->add_option("--top", gen.top, "Number of names to print (default 30)");
  generate->add_option("--iterations", gen.iterations, "Diversification iterations (default 30)");
  generate->add_option("--weights", gen.weights, "Appeal weights r,p,m,u");
  generate->add_option("--format", gen.format, "text or json");
  generate->add_option("--max-per-root", gen.max_per_root, "Synonyms kept per root (default 5)");
  generate->add_flag("--no-diversify", gen.no_diversify, "Rank by appeal only");
  generate->add_flag("--timing", gen.timing, "Report elapsed time");

  ServeArgs srv;
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--config", srv.config, "JSON config file");
  serve->add_option("--resources", srv.resources, "Resource directory");
  serve->add_option("--bind", srv.bind, "HOST:PORT (default 127.0.0.1:8080)");

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "nDCG of system orders against ratings; Kendall tau");
  eval->add_option("--ratings", ev.ratings, "Ratings TSV (name good fair bad), once per description");
  eval->add_option("--order", ev.orders, "System order, one name per line, once per description");
  eval->add_option("--tau-a", ev.tau_a, "First ranking file for Kendall tau");
  eval->add_option("--tau-b", ev.tau_b, "Second ranking file for Kendall tau");

  FitArgs fit;
  auto* fitcmd = app.add_subcommand("fit", "Fit appeal weights from pairwise preferences");
  fitcmd->add_option("--preferences", fit.preferences, "Preference TSV (8 columns)")->required();
  fitcmd->add_option("--epochs", fit.options.epochs)->check(CLI::PositiveNumber);
  fitcmd->add_option("--learning-rate", fit.options.learning_rate)->check(CLI::PositiveNumber);
  fitcmd->add_option("--regularization", fit.options.regularization)->check(CLI::PositiveNumber);
  fitcmd->add_option("--seed", fit.options.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (generate->parsed()) return run_generate(gen);
  if (serve->parsed()) return run_serve(srv);
  if (eval->parsed()) return run_eval(ev);
  if (fitcmd->parsed()) return run_fit(fit);
  return kExitUsage;
}
