#include "blendsmith/resources.h"

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "blendsmith/scoring.h"

namespace blendsmith {
namespace {

std::istringstream lines(const std::string& text) { return std::istringstream(text); }

TEST(StopwordsTest, SkipsCommentsAndBlankLines) {
  auto in = lines("an\nto\n# note\n\n");
  const auto set = parse_stopwords(in, "stop");
  EXPECT_EQ(set.size(), 2u);
  EXPECT_TRUE(set.contains("an"));
  EXPECT_TRUE(set.contains("TO"));
  EXPECT_FALSE(set.contains("note"));
}

TEST(StopwordsTest, CaseFoldsAndDedupes) {
  auto in = lines("An\nAN\n");
  const auto set = parse_stopwords(in, "stop");
  EXPECT_EQ(set.size(), 1u);
  EXPECT_TRUE(set.contains("an"));
}

TEST(StopwordsTest, EmptyListIsAnError) {
  auto in = lines("# only a comment\n\n");
  EXPECT_THROW(parse_stopwords(in, "stop"), ResourceError);
}

TEST(PosLexiconTest, CountsBecomeRelativeFrequencies) {
  auto in = lines("split\tVERB\t9\nsplit\tNOUN\t1\nowl\tNOUN\t5\n");
  const auto lex = parse_pos_lexicon(in, "lex");
  const auto* split = lex.lookup("split");
  ASSERT_NE(split, nullptr);
  ASSERT_EQ(split->size(), 2u);
  EXPECT_EQ((*split)[0].tag, PosTag::Verb);
  EXPECT_DOUBLE_EQ((*split)[0].frequency, 0.9);
  EXPECT_EQ((*split)[1].tag, PosTag::Noun);
  EXPECT_DOUBLE_EQ((*split)[1].frequency, 0.1);
  const auto* owl = lex.lookup("owl");
  ASSERT_NE(owl, nullptr);
  ASSERT_EQ(owl->size(), 1u);
  EXPECT_DOUBLE_EQ((*owl)[0].frequency, 1.0);
  EXPECT_EQ(lex.lookup("missing"), nullptr);
}

TEST(PosLexiconTest, UnknownTagReportsLine) {
  auto in = lines("# header\nsplit\tXYZ\t3\n");
  try {
    parse_pos_lexicon(in, "lex");
    FAIL() << "expected ResourceError";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(PosLexiconTest, MalformedRows) {
  auto two_columns = lines("split\tVERB\n");
  EXPECT_THROW(parse_pos_lexicon(two_columns, "lex"), ResourceError);
  auto bad_count = lines("split\tVERB\tnine\n");
  EXPECT_THROW(parse_pos_lexicon(bad_count, "lex"), ResourceError);
}

TEST(PosLexiconTest, FrequenciesSumToOne) {
  auto in = lines("a\tNOUN\t3\na\tVERB\t4\na\tADJ\t5\nb\tADV\t7\nb\tOTHER\t2\n");
  const auto lex = parse_pos_lexicon(in, "lex");
  for (const auto* word : {"a", "b"}) {
    double sum = 0.0;
    for (const auto& tf : *lex.lookup(word)) sum += tf.frequency;
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(SynonymDbTest, LookupByWordAndTag) {
  auto in = lines("split\tVERB\tbreak\nsplit\tVERB\tsplit\nsplit\tNOUN\tcrack\n");
  const auto db = parse_synonyms(in, "syn");
  const auto& verbs = db.lookup("split", PosTag::Verb);
  ASSERT_EQ(verbs.size(), 1u);  // self-synonym dropped
  EXPECT_EQ(verbs[0], "break");
  EXPECT_EQ(db.lookup("split", PosTag::Noun).front(), "crack");
  EXPECT_TRUE(db.lookup("split", PosTag::Adverb).empty());
}

TEST(SynonymDbTest, RejectsMultiWordSynonyms) {
  auto in = lines("split\tVERB\tbreak up\n");
  EXPECT_THROW(parse_synonyms(in, "syn"), ResourceError);
}

TEST(SimileDbTest, WiseIsAnOwl) {
  auto in = lines("wise\towl\n");
  const auto db = parse_similes(in, "sim");
  ASSERT_EQ(db.lookup("wise").size(), 1u);
  EXPECT_EQ(db.lookup("wise")[0], "owl");
  auto bad = lines("wise\n");
  EXPECT_THROW(parse_similes(bad, "sim"), ResourceError);
}

TEST(UsageTest, GroupsAndSortsByYear) {
  auto in = lines("foo\t2001\t0.2\nfoo\t2000\t0.1\nbar\t1999\t0.5\n");
  const auto usage = parse_usage_series(in, "usage");
  const auto* foo = usage.series("foo");
  ASSERT_NE(foo, nullptr);
  ASSERT_EQ(foo->size(), 2u);
  EXPECT_EQ((*foo)[0].year, 2000);
  EXPECT_DOUBLE_EQ((*foo)[0].value, 0.1);
  EXPECT_EQ((*foo)[1].year, 2001);
  EXPECT_DOUBLE_EQ((*foo)[1].value, 0.2);
  // Single-year series cannot be weighted and are not stored.
  EXPECT_EQ(usage.series("bar"), nullptr);
}

TEST(UsageTest, DuplicateYearIsAnError) {
  auto in = lines("foo\t2000\t0.1\nfoo\t2000\t0.3\n");
  EXPECT_THROW(parse_usage_series(in, "usage"), ResourceError);
  auto negative = lines("foo\t2000\t-0.1\n");
  EXPECT_THROW(parse_usage_series(negative, "usage"), ResourceError);
}

TEST(HyphenationTest, PatternDecomposition) {
  const auto p = parse_hyphen_pattern(".ap4");
  EXPECT_EQ(p.skeleton, ".ap");
  ASSERT_EQ(p.weights.size(), 4u);
  EXPECT_EQ(p.weights[3], 4);  // after the character at index 2
  EXPECT_EQ(p.weights[0] + p.weights[1] + p.weights[2], 0);

  const auto q = parse_hyphen_pattern("1ca");
  EXPECT_EQ(q.skeleton, "ca");
  EXPECT_EQ(q.weights[0], 1);
}

TEST(HyphenationTest, InvalidPatterns) {
  EXPECT_THROW(parse_hyphen_pattern("abc"), ResourceError);
  EXPECT_THROW(parse_hyphen_pattern("1.2"), ResourceError);
  EXPECT_THROW(parse_hyphen_pattern("a12b"), ResourceError);
  EXPECT_THROW(parse_hyphen_pattern("a1.b"), ResourceError);
  EXPECT_THROW(parse_hyphen_pattern("a1-b"), ResourceError);
}

TEST(HyphenationTest, HeaderValues) {
  auto in = lines("LEFTMIN=2\nRIGHTMIN=3\n.ap4 1ca\n");
  const auto pats = parse_hyphenation_patterns(in, "hyph");
  EXPECT_EQ(pats.left_min(), 2);
  EXPECT_EQ(pats.right_min(), 3);
  EXPECT_EQ(pats.size(), 2u);
  EXPECT_NE(pats.find(".ap"), nullptr);
  auto zero = lines("LEFTMIN=0\n1ca\n");
  EXPECT_THROW(parse_hyphenation_patterns(zero, "hyph"), ResourceError);
  auto unknown = lines("MIDMIN=2\n1ca\n");
  EXPECT_THROW(parse_hyphenation_patterns(unknown, "hyph"), ResourceError);
}

TEST(HyphenationTest, SharedSkeletonsMerge) {
  auto in = lines("a1bc\nab2c\nab1c\n");
  const auto pats = parse_hyphenation_patterns(in, "hyph");
  EXPECT_EQ(pats.size(), 1u);
  const auto* p = pats.find("abc");
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->weights, (std::vector<std::uint8_t>{0, 1, 2, 0}));
}

TEST(FrequencyDictionaryTest, ParsesAndFilters) {
  auto in = lines("face\t50\nbook\t40\nFace\t1\nx1y\t5\n");
  const auto dict = parse_frequency_dictionary(in, "dict");
  EXPECT_EQ(dict.size(), 2u);
  EXPECT_EQ(dict.count("face"), 51u);
  EXPECT_EQ(dict.count("book"), 40u);
  EXPECT_FALSE(dict.contains("x1y"));
}

TEST(FrequencyDictionaryTest, DuplicatesAreSummed) {
  auto in = lines("Face\t1\nface\t2\n");
  const auto dict = parse_frequency_dictionary(in, "dict");
  EXPECT_EQ(dict.count("face"), 3u);
}

TEST(FrequencyDictionaryTest, NonPositiveCountIsAnError) {
  auto in = lines("face\t0\n");
  EXPECT_THROW(parse_frequency_dictionary(in, "dict"), ResourceError);
}

TEST(NgramTableTest, CountsOverWordTypes) {
  const auto t = build_ngram_table(FrequencyDictionary({{"abab", 1}}), 2);
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.frequency("ab"), 2u);
  EXPECT_EQ(t.frequency("ba"), 1u);

  EXPECT_EQ(build_ngram_table(FrequencyDictionary({{"to", 1}}), 3).size(), 0u);

  // face -> face; faces -> face, aces.
  const auto four = build_ngram_table(FrequencyDictionary({{"face", 1}, {"faces", 1}}), 4);
  EXPECT_EQ(four.size(), 2u);
  EXPECT_EQ(four.frequency("face"), 2u);
  EXPECT_EQ(four.frequency("aces"), 1u);
}

TEST(NgramTableTest, CountIsUnweightedByCorpusFrequency) {
  const auto t = build_ngram_table(FrequencyDictionary({{"abab", 1000}}), 2);
  EXPECT_EQ(t.frequency("ab"), 2u);
}

TEST(NgramTableTest, TotalMatchesWindowCount) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(1, 9);
  std::uniform_int_distribution<int> letter(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::map<std::string, std::uint64_t> entries;
    for (int w = 0; w < 20; ++w) {
      std::string word;
      for (int i = len(rng); i > 0; --i) word += static_cast<char>('a' + letter(rng));
      entries[word] = 1;
    }
    const FrequencyDictionary dict(entries);
    for (int order = 2; order <= 4; ++order) {
      std::uint64_t expected = 0;
      for (const auto& [word, count] : dict.entries()) {
        if (static_cast<int>(word.size()) >= order) expected += word.size() - order + 1;
      }
      EXPECT_EQ(build_ngram_table(dict, order).total(), expected);
    }
  }
}

TEST(NgramTableTest, RejectsBadOrder) {
  EXPECT_THROW(build_ngram_table(FrequencyDictionary({{"abc", 1}}), 5), ResourceError);
}

// A tiny but valid resource set: "ab1c" splits "abcd"-like words.
ResourceParts small_parts(std::map<std::string, std::uint64_t> words) {
  ResourceParts parts;
  parts.stopwords = StopwordSet({"the"});
  parts.hyphenation = HyphenationPatterns({parse_hyphen_pattern("o1n")}, 1, 1);
  parts.dictionary = FrequencyDictionary(std::move(words));
  parts.usage.add("on", 2000, 0.1);
  parts.usage.add("on", 2001, 0.3);
  parts.usage.add("bond", 2000, 0.2);
  parts.usage.add("bond", 2001, 0.2);
  parts.usage.finalize();
  return parts;
}

TEST(FeatureStatsTest, ReadabilityRangeFromSyllableCounts) {
  // "bond" -> bo|nd is two syllables under o1n; "cat" has no break.
  const auto store = ResourceStore::assemble(small_parts({{"bond", 3}, {"cat", 5}, {"on", 2}}));
  const auto& stats = store.norm_stats();
  EXPECT_NEAR(stats.readability.min, 36.62, 1e-9);
  EXPECT_NEAR(stats.readability.max, 121.22, 1e-9);
  EXPECT_EQ(stats.memorability.min, 0.0);
  EXPECT_EQ(stats.memorability.max, 1.0);
  EXPECT_LT(stats.pronounceability.min, stats.pronounceability.max);
  EXPECT_DOUBLE_EQ(stats.usage.min, 0.2);
  EXPECT_DOUBLE_EQ(stats.usage.max, 0.3);
}

TEST(FeatureStatsTest, SingleWordCorpusIsDegenerate) {
  EXPECT_THROW(ResourceStore::assemble(small_parts({{"bond", 3}})), ResourceError);
}

TEST(ResourceStoreTest, LoadsFixtureDeterministically) {
  const auto a = ResourceStore::load(BLENDSMITH_FIXTURE_DIR);
  const auto b = ResourceStore::load(BLENDSMITH_FIXTURE_DIR);
  EXPECT_EQ(a.checksums().size(), resource_file_names().size());
  EXPECT_EQ(a.checksums(), b.checksums());
  EXPECT_EQ(a.dictionary().size(), b.dictionary().size());
  EXPECT_EQ(a.norm_stats().pronounceability.max, b.norm_stats().pronounceability.max);
  EXPECT_EQ(a.norm_stats().usage.min, b.norm_stats().usage.min);
  EXPECT_TRUE(a.dictionary().contains("face"));
  EXPECT_EQ(a.similes().lookup("wise").front(), "owl");
}

TEST(ResourceStoreTest, MissingDirectory) {
  EXPECT_THROW(ResourceStore::load("/nonexistent/blendsmith"), ResourceError);
}

}  // namespace
}  // namespace blendsmith
