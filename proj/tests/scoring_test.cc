#include "blendsmith/scoring.h"

#include <random>

#include <gtest/gtest.h>

#include "oracles.h"

namespace blendsmith {
namespace {

const ResourceStore& fixture() {
  static const ResourceStore store = ResourceStore::load(BLENDSMITH_FIXTURE_DIR);
  return store;
}

TEST(ReadabilityTest, SyllableCounts) {
  const auto& pats = fixture().hyphenation();
  EXPECT_NEAR(readability_raw("owl", pats), 121.22, 1e-9);
  EXPECT_NEAR(readability_raw("expense", pats), 36.62, 1e-9);
  EXPECT_NEAR(readability_raw("application", pats), -132.58, 1e-9);
}

TEST(ReadabilityTest, EachSyllableCostsTheSame) {
  const auto& pats = fixture().hyphenation();
  for (const auto* word : {"split", "wisely", "creating", "application", "furniture"}) {
    const auto n = static_cast<double>(syllabify(word, pats).size());
    EXPECT_NEAR(readability_raw(word, pats), 205.82 - 84.6 * n, 1e-9) << word;
  }
}

TEST(PronounceabilityTest, BigramMean) {
  const NgramTable bigrams(2, {{"fa", 109}, {"ac", 343}, {"ce", 438}, {"eb", 29},
                               {"bo", 118}, {"oo", 114}, {"ok", 109}});
  EXPECT_DOUBLE_EQ(ngram_feature("facebook", bigrams), 1260.0 / 7.0);
  EXPECT_NEAR(ngram_feature("facebook", bigrams), 180.0, 1e-9);
  const NgramTable empty3(3, {});
  const NgramTable empty4(4, {});
  EXPECT_NEAR(pronounceability_raw("facebook", bigrams, empty3, empty4), 2.0 / 9.0 * 180.0, 1e-9);
}

TEST(PronounceabilityTest, ShortNamesUseAvailableOrders) {
  const NgramTable bigrams(2, {{"ab", 2}, {"bc", 4}});
  const NgramTable trigrams(3, {});
  const NgramTable fourgrams(4, {{"abcd", 99}});
  // "abc" has no 4-gram window, so only S2 contributes.
  EXPECT_NEAR(pronounceability_raw("abc", bigrams, trigrams, fourgrams), 2.0 / 9.0 * 3.0, 1e-12);
  EXPECT_EQ(pronounceability_raw("zz", bigrams, trigrams, fourgrams), 0.0);
  EXPECT_THROW(pronounceability_raw("a", bigrams, trigrams, fourgrams), ScoreError);
}

TEST(PronounceabilityTest, WeightsSumToOne) {
  const NgramTable b(2, {{"aa", 5}});
  const NgramTable t(3, {{"aaa", 5}});
  const NgramTable f(4, {{"aaaa", 5}});
  EXPECT_NEAR(pronounceability_raw("aaaaaa", b, t, f), 5.0, 1e-12);
}

FrequencyDictionary dict_of(std::initializer_list<const char*> words) {
  std::map<std::string, std::uint64_t> entries;
  for (const auto* w : words) entries[w] = 1;
  return FrequencyDictionary(entries);
}

TEST(MemorabilityTest, Examples) {
  const auto dict = dict_of({"face", "book", "ok"});
  EXPECT_DOUBLE_EQ(memorability("facebook", dict), 1.0);
  EXPECT_DOUBLE_EQ(memorability("xqzt", dict), 0.0);
  EXPECT_DOUBLE_EQ(memorability("bookx", dict), 0.8);
  // Two-letter words never count.
  EXPECT_DOUBLE_EQ(memorability("okok", dict), 0.0);
  EXPECT_DOUBLE_EQ(memorability("facebook", fixture().dictionary()), 1.0);
}

TEST(MemorabilityTest, PrefersLongerCoverOverGreedy) {
  // Greedy "abcd" leaves "ef"; "abc" + "def" covers all six.
  const auto dict = dict_of({"abcd", "abc", "def"});
  EXPECT_DOUBLE_EQ(memorability("abcdef", dict), 1.0);
}

TEST(MemorabilityTest, MatchesExhaustiveSearch) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> letter(0, 2);
  std::uniform_int_distribution<int> word_len(1, 5);
  std::uniform_int_distribution<int> name_len(1, 12);
  for (int trial = 0; trial < 500; ++trial) {
    std::map<std::string, std::uint64_t> entries;
    for (int w = 0; w < 6; ++w) {
      std::string word;
      for (int k = word_len(rng); k > 0; --k) word += static_cast<char>('a' + letter(rng));
      entries[word] = 1;
    }
    const FrequencyDictionary dict(entries);
    std::string name;
    for (int k = name_len(rng); k > 0; --k) name += static_cast<char>('a' + letter(rng));
    const double expected = static_cast<double>(oracles::best_cover(name, 0, dict)) / static_cast<double>(name.size());
    EXPECT_DOUBLE_EQ(memorability(name, dict), expected) << name;
  }
}

UsageStore usage_of(const std::string& word, std::vector<UsagePoint> points) {
  UsageStore store;
  for (const auto& p : points) store.add(word, p.year, p.value);
  store.finalize();
  return store;
}

TEST(UsageTest, WeightedByElapsedYears) {
  const auto flat = usage_of("flat", {{2000, 0.5}, {2001, 0.5}, {2002, 0.5}});
  EXPECT_NEAR(usage_weighted("flat", flat).value, 0.5, 1e-12);
  const auto rising = usage_of("rise", {{2000, 0.0}, {2001, 0.1}, {2002, 0.4}});
  const auto w = usage_weighted("rise", rising);
  EXPECT_TRUE(w.found);
  EXPECT_NEAR(w.value, 0.3, 1e-12);
  EXPECT_FALSE(usage_weighted("absent", rising).found);
}

TEST(UsageTest, FirstYearCarriesNoWeight) {
  const auto a = usage_of("w", {{2000, 0.9}, {2004, 0.2}});
  EXPECT_NEAR(usage_weighted("w", a).value, 0.2, 1e-12);
}

TEST(UniquenessTest, EndpointsAndAbsentSeries) {
  FeatureStats stats;
  stats.usage = {0.1, 0.5};
  const auto low = usage_of("low", {{2000, 0.1}, {2001, 0.1}});
  const auto high = usage_of("high", {{2000, 0.5}, {2001, 0.5}});
  const auto mid = usage_of("mid", {{2000, 0.3}, {2001, 0.3}});
  EXPECT_NEAR(uniqueness("low", low, stats), 1.0, 1e-12);
  EXPECT_NEAR(uniqueness("high", high, stats), 0.0, 1e-12);
  EXPECT_NEAR(uniqueness("mid", mid, stats), 0.5, 1e-12);
  EXPECT_EQ(uniqueness("neologism", mid, stats), 1.0);
  const auto beyond = usage_of("big", {{2000, 9.0}, {2001, 9.0}});
  EXPECT_EQ(uniqueness("big", beyond, stats), 0.0);
}

TEST(NormalizeTest, ClampsToUnitInterval) {
  const Range r{10.0, 20.0};
  EXPECT_EQ(normalize(10.0, r), 0.0);
  EXPECT_EQ(normalize(20.0, r), 1.0);
  EXPECT_DOUBLE_EQ(normalize(12.5, r), 0.25);
  EXPECT_EQ(normalize(-5.0, r), 0.0);
  EXPECT_EQ(normalize(99.0, r), 1.0);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> any(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = normalize(any(rng), r);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(AppealTest, DefaultWeightsExample) {
  FeatureScores s;
  s.readability = 0.77;
  s.pronounceability = 0.04;
  s.memorability = 1.0;
  s.uniqueness = 1.0;
  const double a = appeal(s, AppealWeights{});
  EXPECT_GE(a, 3.70);
  EXPECT_LE(a, 3.72);
  EXPECT_NEAR(a, 3.7038, 1e-9);
}

TEST(AppealTest, LinearInWeights) {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> weight(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    FeatureScores s;
    s.readability = unit(rng);
    s.pronounceability = unit(rng);
    s.memorability = unit(rng);
    s.uniqueness = unit(rng);
    const AppealWeights w1{weight(rng), weight(rng), weight(rng), weight(rng)};
    const AppealWeights w2{weight(rng), weight(rng), weight(rng), weight(rng)};
    const AppealWeights sum{w1.readability + w2.readability, w1.pronounceability + w2.pronounceability,
                            w1.memorability + w2.memorability, w1.uniqueness + w2.uniqueness};
    EXPECT_NEAR(appeal(s, sum), appeal(s, w1) + appeal(s, w2), 1e-9);
    const double c = weight(rng);
    const AppealWeights scaled{c * w1.readability, c * w1.pronounceability, c * w1.memorability,
                               c * w1.uniqueness};
    EXPECT_NEAR(appeal(s, scaled), c * appeal(s, w1), 1e-9);
    EXPECT_EQ(appeal(s, AppealWeights{0, 0, 0, 0}), 0.0);
  }
}

RawCandidate raw_of(std::vector<std::string> parts) {
  RawCandidate raw;
  for (auto& p : parts) {
    raw.text += p;
    raw.units.push_back({p, PosTag::Noun, {p, PosTag::Noun, WordOrigin::Root, p}, 0, {p}});
  }
  return raw;
}

TEST(ScoreCandidatesTest, EmptyInput) {
  EXPECT_TRUE(score_candidates({}, fixture(), AppealWeights{}).empty());
}

// Mean count of a name's n-grams over dictionary word types, counted directly.
double direct_ngram_mean(const std::string& name, std::size_t order, const FrequencyDictionary& dict) {
  if (name.size() < order) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i + order <= name.size(); ++i) {
    const auto gram = name.substr(i, order);
    for (const auto& [word, count] : dict.entries()) {
      for (std::size_t k = 0; k + order <= word.size(); ++k) {
        if (word.compare(k, order, gram) == 0) sum += 1.0;
      }
    }
  }
  return sum / static_cast<double>(name.size() - order + 1);
}

TEST(ScoreCandidatesTest, SplitwiseChain) {
  const auto& store = fixture();
  const std::vector<RawCandidate> raws{raw_of({"split", "wise"})};
  const auto scored = score_candidates(raws, store, AppealWeights{});
  ASSERT_EQ(scored.size(), 1u);
  const auto& s = scored[0].scores;
  const auto& stats = store.norm_stats();

  const double r_raw = 205.82 - 84.6 * 2.0;
  const double p_raw = 2.0 / 9.0 * direct_ngram_mean("splitwise", 2, store.dictionary()) +
                       3.0 / 9.0 * direct_ngram_mean("splitwise", 3, store.dictionary()) +
                       4.0 / 9.0 * direct_ngram_mean("splitwise", 4, store.dictionary());
  auto scale = [](double v, Range r) { return std::min(1.0, std::max(0.0, (v - r.min) / (r.max - r.min))); };
  const double r = scale(r_raw, stats.readability);
  const double p = scale(p_raw, stats.pronounceability);
  const double m = 1.0;  // split + wise
  const double u = 1.0;  // no usage series
  EXPECT_NEAR(s.readability_raw, r_raw, 1e-9);
  EXPECT_NEAR(s.pronounceability_raw, p_raw, 1e-9);
  EXPECT_NEAR(s.readability, r, 1e-9);
  EXPECT_NEAR(s.pronounceability, p, 1e-9);
  EXPECT_DOUBLE_EQ(s.memorability, m);
  EXPECT_DOUBLE_EQ(s.uniqueness, u);
  EXPECT_NEAR(scored[0].appeal, 2.18 * r + 1.63 * p + 0.91 * m + 1.05 * u, 1e-9);
}

TEST(ScoreCandidatesTest, CandidatesScoreIndependently) {
  const auto& store = fixture();
  const std::vector<RawCandidate> both{raw_of({"split", "wise"}), raw_of({"face", "book"})};
  const auto together = score_candidates(both, store, AppealWeights{});
  for (std::size_t i = 0; i < both.size(); ++i) {
    const std::vector<RawCandidate> alone{both[i]};
    const auto single = score_candidates(alone, store, AppealWeights{});
    EXPECT_EQ(single[0].appeal, together[i].appeal);
    EXPECT_EQ(single[0].name(), together[i].name());
  }
}

TEST(ScoreCandidatesTest, KnownBrandIsLessUnique) {
  const auto s = score_name("facebook", fixture());
  EXPECT_TRUE(s.usage_found);
  EXPECT_LT(s.uniqueness, 1.0);
  EXPECT_GE(s.uniqueness, 0.0);
}

TEST(ScoreCandidatesTest, ScoresStayInRange) {
  const auto& store = fixture();
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> letter(0, 25);
  std::uniform_int_distribution<int> len(2, 15);
  for (int i = 0; i < 300; ++i) {
    std::string name;
    for (int k = len(rng); k > 0; --k) name += static_cast<char>('a' + letter(rng));
    const auto s = score_name(name, store);
    for (const double v : {s.readability, s.pronounceability, s.memorability, s.uniqueness}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
  EXPECT_THROW(score_name("a1", store), ScoreError);
}

}  // namespace
}  // namespace blendsmith
