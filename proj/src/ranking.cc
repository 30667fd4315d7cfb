#include "blendsmith/ranking.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace blendsmith {

bool ranks_before(const Candidate& a, const Candidate& b) {
  if (a.appeal != b.appeal) return a.appeal > b.appeal;
  return a.name() < b.name();
}

std::vector<Candidate> rank_by_appeal(std::vector<Candidate> candidates) {
  std::stable_sort(candidates.begin(), candidates.end(), ranks_before);
  return candidates;
}

// ---------------------------------------------------------------------------
// Diversification

DiversitySelection diversify_select(std::span<const Candidate> candidates, int iterations) {
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  const auto n = candidates.size();

  std::vector<std::vector<std::string>> distinct(n);
  std::vector<std::size_t> syllable_count(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto syllables = candidates[i].syllables();
    syllable_count[i] = syllables.size();
    std::sort(syllables.begin(), syllables.end());
    syllables.erase(std::unique(syllables.begin(), syllables.end()), syllables.end());
    distinct[i] = std::move(syllables);
  }

  DiversitySelection selection;
  selection.working_appeals.resize(n);
  for (std::size_t i = 0; i < n; ++i) selection.working_appeals[i] = candidates[i].appeal;
  auto& working = selection.working_appeals;
  std::vector<char> remaining(n, 1);

  for (int step = 0; step < iterations; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!remaining[i]) continue;
      if (best == n || working[i] > working[best] ||
          (working[i] == working[best] && candidates[i].name() < candidates[best].name())) {
        best = i;
      }
    }
    if (best == n) break;
    remaining[best] = 0;
    selection.picks.push_back(candidates[best]);
    selection.pick_appeals.push_back(working[best]);

    const auto& chosen = distinct[best];
    for (std::size_t i = 0; i < n; ++i) {
      if (!remaining[i]) continue;
      std::size_t shared = 0;
      for (const auto& s : distinct[i]) {
        if (std::binary_search(chosen.begin(), chosen.end(), s)) ++shared;
      }
      if (shared == 0) continue;
      working[i] *= 1.0 / static_cast<double>(shared * syllable_count[i]);
    }
  }
  return selection;
}

// ---------------------------------------------------------------------------
// Weight fitting

namespace {

double dot(const FeatureVector& a, const FeatureVector& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

FeatureVector as_vector(const AppealWeights& w) {
  return {w.readability, w.pronounceability, w.memorability, w.uniqueness};
}

}  // namespace

AppealWeights fit_weights(std::span<const PairwisePreference> preferences, const FitOptions& options) {
  if (!(options.epochs > 0 && options.learning_rate > 0.0 && options.regularization > 0.0)) {
    throw std::invalid_argument("fit hyperparameters must be positive");
  }
  if (preferences.empty()) throw RankError(RankError::Code::Unlearnable, "no preferences to fit");

  std::vector<FeatureVector> diffs;
  diffs.reserve(preferences.size());
  double squared_norms = 0.0;
  for (const auto& p : preferences) {
    FeatureVector d{};
    for (std::size_t k = 0; k < 4; ++k) {
      if (!std::isfinite(p.winner[k]) || !std::isfinite(p.loser[k])) {
        throw RankError(RankError::Code::Malformed, "non-finite feature value in preference");
      }
      d[k] = p.winner[k] - p.loser[k];
    }
    squared_norms += dot(d, d);
    diffs.push_back(d);
  }
  if (squared_norms == 0.0) {
    throw RankError(RankError::Code::Unlearnable, "every difference vector is zero");
  }
  // Training on unit-RMS differences makes the fitted direction independent
  // of the overall scale of the features.
  const double scale = std::sqrt(squared_norms / static_cast<double>(diffs.size()));
  for (auto& d : diffs) {
    for (auto& x : d) x /= scale;
  }

  FeatureVector w{};
  std::vector<std::size_t> order(diffs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(options.seed);
  const double lambda = options.regularization;
  std::uint64_t step = 0;
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (const auto idx : order) {
      ++step;
      const double eta = options.learning_rate / (1.0 + options.learning_rate * lambda * static_cast<double>(step));
      const auto& d = diffs[idx];
      const double margin = dot(w, d);
      const double shrink = 1.0 - 2.0 * eta * lambda;
      for (std::size_t k = 0; k < 4; ++k) {
        w[k] *= shrink;
        if (margin < 1.0) w[k] += eta * d[k];
      }
    }
  }
  return {w[0] / scale, w[1] / scale, w[2] / scale, w[3] / scale};
}

double pairwise_agreement(std::span<const PairwisePreference> preferences,
                          const AppealWeights& weights) {
  if (preferences.empty()) return 0.0;
  const auto w = as_vector(weights);
  std::size_t agree = 0;
  for (const auto& p : preferences) {
    if (dot(w, p.winner) > dot(w, p.loser)) ++agree;
  }
  return static_cast<double>(agree) / static_cast<double>(preferences.size());
}

// ---------------------------------------------------------------------------
// Metrics

namespace {

// Sorts values in place and returns the number of inversions.
std::uint64_t count_inversions(std::vector<int>& values, std::vector<int>& scratch, std::size_t lo,
                               std::size_t hi) {
  if (hi - lo < 2) return 0;
  const auto mid = lo + (hi - lo) / 2;
  auto inversions = count_inversions(values, scratch, lo, mid) +
                    count_inversions(values, scratch, mid, hi);
  std::size_t i = lo;
  std::size_t j = mid;
  std::size_t out = lo;
  while (i < mid && j < hi) {
    if (values[i] <= values[j]) {
      scratch[out++] = values[i++];
    } else {
      inversions += mid - i;
      scratch[out++] = values[j++];
    }
  }
  while (i < mid) scratch[out++] = values[i++];
  while (j < hi) scratch[out++] = values[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
            scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            values.begin() + static_cast<std::ptrdiff_t>(lo));
  return inversions;
}

}  // namespace

double kendall_tau(std::span<const int> rank_a, std::span<const int> rank_b) {
  if (rank_a.size() != rank_b.size()) {
    throw RankError(RankError::Code::Mismatch, "rankings have different lengths");
  }
  std::vector<int> sorted_a(rank_a.begin(), rank_a.end());
  std::vector<int> sorted_b(rank_b.begin(), rank_b.end());
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) throw RankError(RankError::Code::Mismatch, "rankings cover different ranks");
  if (std::adjacent_find(sorted_a.begin(), sorted_a.end()) != sorted_a.end()) {
    throw RankError(RankError::Code::Mismatch, "rankings must be strict");
  }
  const auto n = rank_a.size();
  if (n < 2) return 1.0;

  // Order items by rank_a; discordant pairs are inversions of rank_b.
  std::vector<std::size_t> items(n);
  std::iota(items.begin(), items.end(), std::size_t{0});
  std::sort(items.begin(), items.end(),
            [&](std::size_t x, std::size_t y) { return rank_a[x] < rank_a[y]; });
  std::vector<int> sequence(n);
  for (std::size_t i = 0; i < n; ++i) sequence[i] = rank_b[items[i]];
  std::vector<int> scratch(n);
  const auto discordant = static_cast<double>(count_inversions(sequence, scratch, 0, n));
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  return (pairs - 2.0 * discordant) / pairs;
}

double ndcg(std::span<const std::string> system_order, std::span<const RatedName> ratings) {
  std::unordered_map<std::string, double> relevance;
  for (const auto& r : ratings) {
    if (!relevance.emplace(r.name, r.relevance()).second) {
      throw RankError(RankError::Code::Mismatch, "duplicate rating for '" + r.name + "'");
    }
  }
  std::vector<double> gains;
  std::unordered_set<std::string> seen;
  for (const auto& name : system_order) {
    const auto it = relevance.find(name);
    if (it == relevance.end()) throw RankError(RankError::Code::Mismatch, "no rating for '" + name + "'");
    if (!seen.insert(name).second) {
      throw RankError(RankError::Code::Mismatch, "duplicate name '" + name + "' in system order");
    }
    gains.push_back(it->second);
  }
  auto dcg = [](const std::vector<double>& g) {
    double sum = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) sum += g[i] / std::log2(static_cast<double>(i) + 2.0);
    return sum;
  };
  auto ideal = gains;
  std::sort(ideal.begin(), ideal.end(), std::greater<>());
  const double ideal_dcg = dcg(ideal);
  if (ideal_dcg == 0.0) return 1.0;
  return dcg(gains) / ideal_dcg;
}

// ---------------------------------------------------------------------------
// Files

namespace {

template <typename Fn>
void for_each_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    fn(number, line);
  }
}

RankError malformed(std::string_view source, std::size_t line, const std::string& msg) {
  return RankError(RankError::Code::Malformed,
                   std::string(source) + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

std::vector<PairwisePreference> parse_preferences(std::istream& in, std::string_view source) {
  std::vector<PairwisePreference> out;
  for_each_line(in, [&](std::size_t number, const std::string& line) {
    std::istringstream fields(line);
    std::array<double, 8> values{};
    for (auto& v : values) {
      if (!(fields >> v)) throw malformed(source, number, "expected 8 numeric columns");
    }
    std::string extra;
    if (fields >> extra) throw malformed(source, number, "expected 8 numeric columns");
    out.push_back({{values[0], values[1], values[2], values[3]},
                   {values[4], values[5], values[6], values[7]}});
  });
  return out;
}

std::vector<RatedName> parse_ratings(std::istream& in, std::string_view source) {
  std::vector<RatedName> out;
  for_each_line(in, [&](std::size_t number, const std::string& line) {
    std::istringstream fields(line);
    RatedName r;
    std::string extra;
    if (!(fields >> r.name >> r.good >> r.fair >> r.bad) || (fields >> extra)) {
      throw malformed(source, number, "expected name<TAB>good<TAB>fair<TAB>bad");
    }
    if (r.good < 0 || r.fair < 0 || r.bad < 0) throw malformed(source, number, "negative count");
    out.push_back(std::move(r));
  });
  return out;
}

std::vector<PairwisePreference> load_preferences(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RankError(RankError::Code::Malformed, "cannot open " + path.string());
  return parse_preferences(in, path.string());
}

std::vector<RatedName> load_ratings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RankError(RankError::Code::Malformed, "cannot open " + path.string());
  return parse_ratings(in, path.string());
}

}  // namespace blendsmith
