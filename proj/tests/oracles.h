// Slow reference implementations used to cross-check the library.
#ifndef BLENDSMITH_TESTS_ORACLES_H_
#define BLENDSMITH_TESTS_ORACLES_H_

#include <array>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "blendsmith/ranking.h"

namespace oracles {

// Most characters of name[from..] coverable by disjoint dictionary words of
// length >= 3, found by trying every choice.
template <typename Dict>
std::size_t best_cover(const std::string& name, std::size_t from, const Dict& dict) {
  if (from >= name.size()) return 0;
  std::size_t best = best_cover(name, from + 1, dict);
  for (std::size_t len = 3; from + len <= name.size(); ++len) {
    if (dict.contains(name.substr(from, len))) {
      best = std::max(best, len + best_cover(name, from + len, dict));
    }
  }
  return best;
}

// Plain simulation of the greedy down-weighting selection. Returns picked names.
inline std::vector<std::string> diversify(const std::vector<std::string>& names,
                                          const std::vector<std::vector<std::string>>& syllables,
                                          std::vector<double> appeal, int iterations) {
  std::vector<std::string> picks;
  std::set<std::size_t> pool;
  for (std::size_t i = 0; i < names.size(); ++i) pool.insert(i);
  while (static_cast<int>(picks.size()) < iterations && !pool.empty()) {
    std::size_t chosen = *pool.begin();
    for (const auto i : pool) {
      if (appeal[i] > appeal[chosen] || (appeal[i] == appeal[chosen] && names[i] < names[chosen])) chosen = i;
    }
    pool.erase(chosen);
    picks.push_back(names[chosen]);
    const std::set<std::string> picked(syllables[chosen].begin(), syllables[chosen].end());
    for (const auto i : pool) {
      const std::set<std::string> own(syllables[i].begin(), syllables[i].end());
      double m = 0;
      for (const auto& s : own) m += picked.count(s);
      if (m > 0) appeal[i] = appeal[i] / (m * static_cast<double>(syllables[i].size()));
    }
  }
  return picks;
}

// (concordant - discordant) / pairs, by enumerating every pair.
inline double tau_by_pairs(const std::vector<int>& a, const std::vector<int>& b) {
  const auto n = a.size();
  if (n < 2) return 1.0;
  long score = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const long s = static_cast<long>((a[i] < a[j]) == (b[i] < b[j]));
      score += s ? 1 : -1;
    }
  }
  return static_cast<double>(score) / static_cast<double>(n * (n - 1) / 2);
}

// Preferences drawn from uniform feature vectors ordered by a known weight vector.
inline std::vector<blendsmith::PairwisePreference> synthetic_preferences(const std::array<double, 4>& truth,
                                                                         int count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<blendsmith::PairwisePreference> out;
  while (static_cast<int>(out.size()) < count) {
    blendsmith::FeatureVector a{unit(rng), unit(rng), unit(rng), unit(rng)};
    blendsmith::FeatureVector b{unit(rng), unit(rng), unit(rng), unit(rng)};
    double sa = 0, sb = 0;
    for (int k = 0; k < 4; ++k) {
      sa += truth[k] * a[k];
      sb += truth[k] * b[k];
    }
    if (sa == sb) continue;
    out.push_back(sa > sb ? blendsmith::PairwisePreference{a, b} : blendsmith::PairwisePreference{b, a});
  }
  return out;
}

}  // namespace oracles

#endif  // BLENDSMITH_TESTS_ORACLES_H_
