#ifndef BLENDSMITH_SCORING_H_
#define BLENDSMITH_SCORING_H_

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "blendsmith/pipeline.h"
#include "blendsmith/resources.h"

namespace blendsmith {

class ScoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flesch reading-ease reduced to a single word.
inline constexpr double kReadingEaseBase = 205.82;
inline constexpr double kReadingEasePerSyllable = 84.6;

struct FeatureScores {
  double readability_raw = 0.0;
  double pronounceability_raw = 0.0;
  double memorability = 0.0;
  double usage_weighted = 0.0;
  bool usage_found = false;
  // Normalized to [0,1].
  double readability = 0.0;
  double pronounceability = 0.0;
  double uniqueness = 1.0;
};

struct AppealWeights {
  double readability = 2.18;
  double pronounceability = 1.63;
  double memorability = 0.91;
  double uniqueness = 1.05;

  bool operator==(const AppealWeights&) const = default;
};

struct Candidate {
  RawCandidate raw;
  FeatureScores scores;
  double appeal = 0.0;

  const std::string& name() const { return raw.text; }
  std::vector<std::string> syllables() const { return raw.syllables(); }
};

double readability_raw(std::string_view name, const HyphenationPatterns& patterns);

// Mean n-gram frequency over the name's substrings of the table's order; 0
// when the name is shorter than the order.
double ngram_feature(std::string_view name, const NgramTable& table);

// Weighted back-off of the 2-, 3- and 4-gram features with weights l/9.
// Throws ScoreError for names shorter than two characters.
double pronounceability_raw(std::string_view name, const NgramTable& bigrams,
                            const NgramTable& trigrams, const NgramTable& fourgrams);
double pronounceability_raw(std::string_view name, const ResourceStore& store);

/// Largest fraction of the name covered by disjoint dictionary words of at
/// least three letters.
double memorability(std::string_view name, const FrequencyDictionary& dict);

struct WeightedUsage {
  double value = 0.0;
  bool found = false;
};

// Usage averaged with weights (t_k - t_1), so later years count more.
WeightedUsage usage_weighted(std::string_view name, const UsageStore& usage);

double uniqueness(std::string_view name, const UsageStore& usage, const FeatureStats& stats);

// Min-max scaling clamped to [0,1].
double normalize(double raw, Range range);

double appeal(const FeatureScores& scores, const AppealWeights& weights);

FeatureScores score_name(std::string_view name, const ResourceStore& store);

std::vector<Candidate> score_candidates(std::span<const RawCandidate> candidates,
                                        const ResourceStore& store, const AppealWeights& weights);

}  // namespace blendsmith

#endif  // BLENDSMITH_SCORING_H_
