#ifndef BLENDSMITH_PIPELINE_H_
#define BLENDSMITH_PIPELINE_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blendsmith/resources.h"

namespace blendsmith {

class PipelineError : public std::runtime_error {
 public:
  enum class Code { EmptyDescription, NoRoots, NoCandidates };

  PipelineError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

std::string_view to_string(PipelineError::Code code);

enum class WordOrigin { Root, Synonym, Metaphor };

std::string_view to_string(WordOrigin origin);

struct TaggedWord {
  std::string surface;
  PosTag tag = PosTag::Noun;
  WordOrigin origin = WordOrigin::Root;
  std::string root;

  bool operator==(const TaggedWord&) const = default;
};

/// A syllable, or a run of consecutive syllables of one word (a composite),
/// tagged with its parent word's POS.
struct SyllableUnit {
  std::string text;
  PosTag tag = PosTag::Noun;
  TaggedWord parent;
  int index = 0;  // first syllable position within the parent
  // The syllables covered; one element unless this is a composite.
  std::vector<std::string> syllables;

  bool is_composite() const { return syllables.size() > 1; }
};

struct RawCandidate {
  std::vector<SyllableUnit> units;
  std::string text;

  // Flattened syllable texts, composites expanded.
  std::vector<std::string> syllables() const;
  // Root word of each unit, in unit order.
  std::vector<std::string> sources() const;
};

using TagPair = std::pair<PosTag, PosTag>;

// Canonical (ordered) form of an unordered tag pair.
TagPair make_tag_pair(PosTag a, PosTag b);

class RuleTable {
 public:
  RuleTable() = default;
  explicit RuleTable(std::map<TagPair, double> rows, double threshold = 1.0);

  /// Blending rule percentages observed in an annotated brand-name corpus.
  static RuleTable observed();

  double percentage(PosTag a, PosTag b) const;
  double threshold() const { return threshold_; }
  RuleTable with_threshold(double threshold) const;
  const std::map<TagPair, double>& rows() const { return rows_; }

 private:
  std::map<TagPair, double> rows_;
  double threshold_ = 1.0;
};

using AllowedRules = std::set<TagPair>;

AllowedRules allowed_rules(const RuleTable& table);
bool is_allowed(const AllowedRules& rules, PosTag a, PosTag b);

// Splits on any non-alphabetic character and lowercases.
std::vector<std::string> tokenize(std::string_view description);

std::vector<std::string> extract_roots(std::span<const std::string> tokens,
                                       const StopwordSet& stopwords);

std::vector<TaggedWord> tag_pos(std::span<const std::string> roots, const PosLexicon& lexicon);

// Tag used for words missing from the lexicon.
PosTag suffix_tag(std::string_view word);

std::vector<TaggedWord> expand_related(std::span<const TaggedWord> words, const SynonymDb& synonyms,
                                       const SimileDb& similes, int max_per_root);

// Knuth-Liang hyphenation of a single lowercase word.
std::vector<std::string> syllabify(std::string_view word, const HyphenationPatterns& patterns);

struct PoolOptions {
  // Adds runs of two or more consecutive syllables anchored at either end of
  // a word (including the whole word) as single units.
  bool composites = true;
};

std::vector<SyllableUnit> build_syllable_pool(std::span<const TaggedWord> words,
                                              const HyphenationPatterns& patterns,
                                              PoolOptions options = {});

struct BlendOptions {
  bool two_units = true;
  bool three_units = true;
  std::size_t max_length = 15;
};

/// Every ordered arrangement of 2 or 3 distinct pool units whose tags are
/// pairwise allowed and whose parents come from different root words.
/// Output is sorted by text; the first arrangement producing a text wins.
std::vector<RawCandidate> generate_blends(std::span<const SyllableUnit> pool,
                                          const AllowedRules& rules, BlendOptions options = {});

// CamelCase at syllable boundaries, e.g. {"split", "wise"} -> "SplitWise".
std::string render_display(std::span<const std::string> syllables);

}  // namespace blendsmith

#endif  // BLENDSMITH_PIPELINE_H_
