#ifndef BLENDSMITH_RESOURCES_H_
#define BLENDSMITH_RESOURCES_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace blendsmith {

/// Raised by every loader on malformed input. Carries the source and line
/// when the failure can be pinned to one.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
  ResourceError(std::string_view source, std::size_t line, std::string_view msg);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

enum class PosTag : std::uint8_t { Noun, Verb, Adjective, Adverb, Other };

inline constexpr std::array<PosTag, 4> kBlendableTags = {
    PosTag::Noun, PosTag::Verb, PosTag::Adjective, PosTag::Adverb};

std::string_view to_string(PosTag tag);
// Accepts the file spellings NOUN/VERB/ADJ/ADV/OTHER.
std::optional<PosTag> parse_pos_tag(std::string_view text);
inline bool is_blendable(PosTag tag) { return tag != PosTag::Other; }

std::string to_lower(std::string_view text);
bool is_alpha_word(std::string_view text);

class StopwordSet {
 public:
  StopwordSet() = default;
  explicit StopwordSet(std::unordered_set<std::string> words);

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

struct TagFrequency {
  PosTag tag;
  double frequency;
};

class PosLexicon {
 public:
  PosLexicon() = default;
  explicit PosLexicon(std::unordered_map<std::string, std::vector<TagFrequency>> entries)
      : entries_(std::move(entries)) {}

  // nullptr when the word is unknown.
  const std::vector<TagFrequency>* lookup(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::vector<TagFrequency>> entries_;
};

class SynonymDb {
 public:
  SynonymDb() = default;

  // Ignores self-synonyms and duplicates; keeps insertion order.
  void add(std::string_view word, PosTag tag, std::string_view synonym);
  const std::vector<std::string>& lookup(std::string_view word, PosTag tag) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::pair<std::string, PosTag>, std::vector<std::string>> entries_;
};

class SimileDb {
 public:
  SimileDb() = default;

  void add(std::string_view stem, std::string_view metaphor);
  const std::vector<std::string>& lookup(std::string_view stem) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> entries_;
};

/// One Liang pattern: a letter skeleton (with optional '.' anchors) and the
/// digit found before each skeleton character. weights has size
/// skeleton.size() + 1; weights[i] is the value between characters i-1 and i.
struct HyphenPattern {
  std::string skeleton;
  std::vector<std::uint8_t> weights;
};

HyphenPattern parse_hyphen_pattern(std::string_view text);

class HyphenationPatterns {
 public:
  HyphenationPatterns() = default;
  HyphenationPatterns(std::vector<HyphenPattern> patterns, int left_min, int right_min);

  const HyphenPattern* find(std::string_view skeleton) const;
  std::size_t max_skeleton_length() const { return max_length_; }
  std::size_t size() const { return patterns_.size(); }
  int left_min() const { return left_min_; }
  int right_min() const { return right_min_; }

 private:
  std::unordered_map<std::string, HyphenPattern> patterns_;
  std::size_t max_length_ = 0;
  int left_min_ = 2;
  int right_min_ = 2;
};

class FrequencyDictionary {
 public:
  FrequencyDictionary() = default;
  explicit FrequencyDictionary(std::map<std::string, std::uint64_t> entries);

  bool contains(std::string_view word) const;
  std::uint64_t count(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }
  std::size_t max_word_length() const { return max_length_; }
  // Sorted by word.
  const std::map<std::string, std::uint64_t, std::less<>>& entries() const { return entries_; }

 private:
  std::map<std::string, std::uint64_t, std::less<>> entries_;
  std::unordered_set<std::string> lookup_;
  std::size_t max_length_ = 0;
};

class NgramTable {
 public:
  NgramTable() = default;
  NgramTable(int order, std::unordered_map<std::string, std::uint64_t> counts);

  int order() const { return order_; }
  std::uint64_t frequency(std::string_view gram) const;
  std::uint64_t total() const;
  std::size_t size() const { return counts_.size(); }

 private:
  int order_ = 2;
  std::unordered_map<std::string, std::uint64_t> counts_;
};

// Counts n-grams over dictionary word types; each word contributes once.
NgramTable build_ngram_table(const FrequencyDictionary& dict, int order);

struct UsagePoint {
  int year;
  double value;
};

class UsageStore {
 public:
  UsageStore() = default;

  // Throws ResourceError on a duplicate (word, year).
  void add(std::string_view word, int year, double value);
  // Sorts each series by year and drops series with fewer than two points.
  void finalize();
  const std::vector<UsagePoint>* series(std::string_view word) const;
  std::size_t size() const { return series_.size(); }

 private:
  std::unordered_map<std::string, std::vector<UsagePoint>> series_;
};

struct Range {
  double min = 0.0;
  double max = 1.0;
};

struct FeatureStats {
  Range readability;
  Range pronounceability;
  Range memorability{0.0, 1.0};
  Range usage;
};

// Loaders. The stream variants take a source name used in error messages.
StopwordSet parse_stopwords(std::istream& in, std::string_view source);
PosLexicon parse_pos_lexicon(std::istream& in, std::string_view source);
SynonymDb parse_synonyms(std::istream& in, std::string_view source);
SimileDb parse_similes(std::istream& in, std::string_view source);
UsageStore parse_usage_series(std::istream& in, std::string_view source);
HyphenationPatterns parse_hyphenation_patterns(std::istream& in, std::string_view source);
FrequencyDictionary parse_frequency_dictionary(std::istream& in, std::string_view source);

StopwordSet load_stopwords(const std::filesystem::path& path);
PosLexicon load_pos_lexicon(const std::filesystem::path& path);
SynonymDb load_synonyms(const std::filesystem::path& path);
SimileDb load_similes(const std::filesystem::path& path);
UsageStore load_usage_series(const std::filesystem::path& path);
HyphenationPatterns load_hyphenation_patterns(const std::filesystem::path& path);
FrequencyDictionary load_frequency_dictionary(const std::filesystem::path& path);

struct ResourceParts {
  StopwordSet stopwords;
  PosLexicon pos_lexicon;
  SynonymDb synonyms;
  SimileDb similes;
  HyphenationPatterns hyphenation;
  FrequencyDictionary dictionary;
  UsageStore usage;
};

class ResourceStore;

/// Scores every dictionary word with the raw feature functions and records
/// per-feature ranges. Throws ResourceError when any range is degenerate.
FeatureStats feature_stats(const ResourceStore& store);

/// Immutable bundle of all linguistic data. Build once, share by const
/// reference across threads.
class ResourceStore {
 public:
  static ResourceStore assemble(ResourceParts parts);
  // Expects the file names listed in resource_file_names() under dir.
  static ResourceStore load(const std::filesystem::path& dir);

  const StopwordSet& stopwords() const { return parts_.stopwords; }
  const PosLexicon& pos_lexicon() const { return parts_.pos_lexicon; }
  const SynonymDb& synonyms() const { return parts_.synonyms; }
  const SimileDb& similes() const { return parts_.similes; }
  const HyphenationPatterns& hyphenation() const { return parts_.hyphenation; }
  const FrequencyDictionary& dictionary() const { return parts_.dictionary; }
  const UsageStore& usage() const { return parts_.usage; }
  // order in {2,3,4}
  const NgramTable& ngrams(int order) const;
  const FeatureStats& norm_stats() const { return stats_; }
  // file name -> FNV-1a 64 hex digest; empty when assembled in memory.
  const std::map<std::string, std::string>& checksums() const { return checksums_; }

 private:
  ResourceStore() = default;

  ResourceParts parts_;
  std::array<NgramTable, 3> ngrams_;
  FeatureStats stats_;
  std::map<std::string, std::string> checksums_;
};

const std::vector<std::string>& resource_file_names();

}  // namespace blendsmith

#endif  // BLENDSMITH_RESOURCES_H_
