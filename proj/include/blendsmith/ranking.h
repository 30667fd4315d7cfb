#ifndef BLENDSMITH_RANKING_H_
#define BLENDSMITH_RANKING_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "blendsmith/scoring.h"

namespace blendsmith {

class RankError : public std::runtime_error {
 public:
  enum class Code { Unlearnable, Mismatch, Malformed };

  RankError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// Descending appeal, ties by ascending name.
bool ranks_before(const Candidate& a, const Candidate& b);

std::vector<Candidate> rank_by_appeal(std::vector<Candidate> candidates);

struct DiversitySelection {
  std::vector<Candidate> picks;
  // Working appeal of each pick at the moment it was chosen.
  std::vector<double> pick_appeals;
  // Final working appeal of every input candidate, in input order.
  std::vector<double> working_appeals;
};

/// Greedy selection: take the highest working appeal, then scale down every
/// remaining name that shares syllables with it by 1/(shared * own syllable
/// count). Names sharing nothing are left alone. Picks leave the pool.
DiversitySelection diversify_select(std::span<const Candidate> candidates, int iterations = 30);

using FeatureVector = std::array<double, 4>;

inline FeatureVector feature_vector(const FeatureScores& s) {
  return {s.readability, s.pronounceability, s.memorability, s.uniqueness};
}

struct PairwisePreference {
  FeatureVector winner;
  FeatureVector loser;
};

struct FitOptions {
  int epochs = 200;
  double learning_rate = 0.1;
  double regularization = 1e-3;
  std::uint64_t seed = 17;
};

/// Linear pairwise max-margin fit (hinge loss plus L2) by stochastic
/// subgradient descent over winner-minus-loser difference vectors.
AppealWeights fit_weights(std::span<const PairwisePreference> preferences,
                          const FitOptions& options = {});

// Fraction of preferences whose winner scores strictly higher under weights.
double pairwise_agreement(std::span<const PairwisePreference> preferences,
                          const AppealWeights& weights);

/// Tau-a between two strict rank vectors; rank_a[i] and rank_b[i] are the
/// ranks the two orderings give item i.
double kendall_tau(std::span<const int> rank_a, std::span<const int> rank_b);

struct RatedName {
  std::string name;
  int good = 0;
  int fair = 0;
  int bad = 0;

  double relevance() const { return 1.0 * good + 0.5 * fair; }
};

double ndcg(std::span<const std::string> system_order, std::span<const RatedName> ratings);

std::vector<PairwisePreference> parse_preferences(std::istream& in, std::string_view source);
std::vector<RatedName> parse_ratings(std::istream& in, std::string_view source);
std::vector<PairwisePreference> load_preferences(const std::filesystem::path& path);
std::vector<RatedName> load_ratings(const std::filesystem::path& path);

}  // namespace blendsmith

#endif  // BLENDSMITH_RANKING_H_
