#include "blendsmith/scoring.h"

#include <algorithm>
#include <limits>

namespace blendsmith {

double readability_raw(std::string_view name, const HyphenationPatterns& patterns) {
  const auto syllables = syllabify(name, patterns).size();
  return kReadingEaseBase - kReadingEasePerSyllable * static_cast<double>(syllables);
}

double ngram_feature(std::string_view name, const NgramTable& table) {
  const auto order = static_cast<std::size_t>(table.order());
  if (name.size() < order) return 0.0;
  const auto windows = name.size() - order + 1;
  double sum = 0.0;
  for (std::size_t i = 0; i < windows; ++i) {
    sum += static_cast<double>(table.frequency(name.substr(i, order)));
  }
  return sum / static_cast<double>(windows);
}

double pronounceability_raw(std::string_view name, const NgramTable& bigrams,
                            const NgramTable& trigrams, const NgramTable& fourgrams) {
  if (name.size() < 2) throw ScoreError("name too short for n-gram scoring: '" + std::string(name) + "'");
  return (2.0 / 9.0) * ngram_feature(name, bigrams) + (3.0 / 9.0) * ngram_feature(name, trigrams) +
         (4.0 / 9.0) * ngram_feature(name, fourgrams);
}

double pronounceability_raw(std::string_view name, const ResourceStore& store) {
  return pronounceability_raw(name, store.ngrams(2), store.ngrams(3), store.ngrams(4));
}

double memorability(std::string_view name, const FrequencyDictionary& dict) {
  const auto n = name.size();
  if (n == 0) return 0.0;
  const auto longest = dict.max_word_length();
  // best[i]: most characters of name[0, i) covered by meaningful words.
  std::vector<std::size_t> best(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    best[i] = best[i - 1];
    for (std::size_t len = 3; len <= i && len <= longest; ++len) {
      const auto j = i - len;
      if (best[j] + len > best[i] && dict.contains(name.substr(j, len))) best[i] = best[j] + len;
    }
  }
  return static_cast<double>(best[n]) / static_cast<double>(n);
}

WeightedUsage usage_weighted(std::string_view name, const UsageStore& usage) {
  const auto* series = usage.series(name);
  if (series == nullptr || series->size() < 2) return {};
  const int first_year = series->front().year;
  double numerator = 0.0;
  double denominator = 0.0;
  for (const auto& point : *series) {
    const auto elapsed = static_cast<double>(point.year - first_year);
    numerator += point.value * elapsed;
    denominator += elapsed;
  }
  if (denominator <= 0.0) return {};
  return {numerator / denominator, true};
}

double normalize(double raw, Range range) {
  const double scaled = (raw - range.min) / (range.max - range.min);
  return std::clamp(scaled, 0.0, 1.0);
}

double uniqueness(std::string_view name, const UsageStore& usage, const FeatureStats& stats) {
  const auto weighted = usage_weighted(name, usage);
  if (!weighted.found) return 1.0;
  return std::clamp(1.0 - normalize(weighted.value, stats.usage), 0.0, 1.0);
}

double appeal(const FeatureScores& scores, const AppealWeights& weights) {
  return weights.readability * scores.readability +
         weights.pronounceability * scores.pronounceability +
         weights.memorability * scores.memorability + weights.uniqueness * scores.uniqueness;
}

FeatureScores score_name(std::string_view name, const ResourceStore& store) {
  if (!is_alpha_word(name)) throw ScoreError("candidate text is not alphabetic: '" + std::string(name) + "'");
  const auto& stats = store.norm_stats();
  FeatureScores s;
  s.readability_raw = readability_raw(name, store.hyphenation());
  s.pronounceability_raw = pronounceability_raw(name, store);
  s.memorability = memorability(name, store.dictionary());
  const auto weighted = usage_weighted(name, store.usage());
  s.usage_weighted = weighted.value;
  s.usage_found = weighted.found;
  s.readability = normalize(s.readability_raw, stats.readability);
  s.pronounceability = normalize(s.pronounceability_raw, stats.pronounceability);
  s.uniqueness = weighted.found ? std::clamp(1.0 - normalize(weighted.value, stats.usage), 0.0, 1.0)
                                : 1.0;
  return s;
}

std::vector<Candidate> score_candidates(std::span<const RawCandidate> candidates,
                                        const ResourceStore& store, const AppealWeights& weights) {
  std::vector<Candidate> scored;
  scored.reserve(candidates.size());
  for (const auto& raw : candidates) {
    Candidate c{raw, score_name(raw.text, store), 0.0};
    c.appeal = appeal(c.scores, weights);
    scored.push_back(std::move(c));
  }
  return scored;
}

// Declared in resources.h; lives here because it needs the raw features.
FeatureStats feature_stats(const ResourceStore& store) {
  const auto& dict = store.dictionary();
  if (dict.size() == 0) throw ResourceError("dictionary is empty");

  constexpr double inf = std::numeric_limits<double>::infinity();
  std::size_t min_syllables = std::numeric_limits<std::size_t>::max();
  std::size_t max_syllables = 0;
  Range pron{inf, -inf};
  Range usage{inf, -inf};
  for (const auto& [word, count] : dict.entries()) {
    const auto syllables = syllabify(word, store.hyphenation()).size();
    min_syllables = std::min(min_syllables, syllables);
    max_syllables = std::max(max_syllables, syllables);
    if (word.size() >= 2) {
      const double p = pronounceability_raw(word, store);
      pron.min = std::min(pron.min, p);
      pron.max = std::max(pron.max, p);
    }
    const auto weighted = usage_weighted(word, store.usage());
    if (weighted.found) {
      usage.min = std::min(usage.min, weighted.value);
      usage.max = std::max(usage.max, weighted.value);
    }
  }

  FeatureStats stats;
  stats.readability = {
      kReadingEaseBase - kReadingEasePerSyllable * static_cast<double>(max_syllables),
      kReadingEaseBase - kReadingEasePerSyllable * static_cast<double>(min_syllables)};
  stats.pronounceability = pron;
  stats.memorability = {0.0, 1.0};
  stats.usage = usage;

  auto require = [](const Range& r, const char* feature) {
    if (!(r.min < r.max)) {
      throw ResourceError(std::string("degenerate normalization range for ") + feature +
                          " over the dictionary");
    }
  };
  require(stats.readability, "readability");
  require(stats.pronounceability, "pronounceability");
  require(stats.usage, "usage");
  return stats;
}

}  // namespace blendsmith
