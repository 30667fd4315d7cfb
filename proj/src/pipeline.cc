#include "blendsmith/pipeline.h"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace blendsmith {

std::string_view to_string(PipelineError::Code code) {
  switch (code) {
    case PipelineError::Code::EmptyDescription:
      return "EmptyDescription";
    case PipelineError::Code::NoRoots:
      return "NoRoots";
    case PipelineError::Code::NoCandidates:
      return "NoCandidates";
  }
  return "Unknown";
}

std::string_view to_string(WordOrigin origin) {
  switch (origin) {
    case WordOrigin::Root:
      return "root";
    case WordOrigin::Synonym:
      return "synonym";
    case WordOrigin::Metaphor:
      return "metaphor";
  }
  return "unknown";
}

std::vector<std::string> RawCandidate::syllables() const {
  std::vector<std::string> out;
  for (const auto& unit : units) out.insert(out.end(), unit.syllables.begin(), unit.syllables.end());
  return out;
}

std::vector<std::string> RawCandidate::sources() const {
  std::vector<std::string> out;
  out.reserve(units.size());
  for (const auto& unit : units) out.push_back(unit.parent.root);
  return out;
}

// ---------------------------------------------------------------------------
// Rules

TagPair make_tag_pair(PosTag a, PosTag b) { return a <= b ? TagPair{a, b} : TagPair{b, a}; }

RuleTable::RuleTable(std::map<TagPair, double> rows, double threshold) : threshold_(threshold) {
  for (const auto& [pair, pct] : rows) {
    if (!(pct >= 0.0)) throw std::invalid_argument("rule percentages must be non-negative");
    rows_[make_tag_pair(pair.first, pair.second)] = pct;
  }
}

RuleTable RuleTable::observed() {
  using T = PosTag;
  return RuleTable({
      {{T::Noun, T::Adjective}, 40.10},
      {{T::Noun, T::Verb}, 8.02},
      {{T::Noun, T::Adverb}, 4.81},
      {{T::Verb, T::Adjective}, 0.53},
      {{T::Verb, T::Adverb}, 3.7},
      {{T::Adjective, T::Adverb}, 3.2},
      {{T::Noun, T::Noun}, 36.36},
      {{T::Verb, T::Verb}, 0.00},
      {{T::Adjective, T::Adjective}, 3.28},
      {{T::Adverb, T::Adverb}, 0.00},
  });
}

double RuleTable::percentage(PosTag a, PosTag b) const {
  const auto it = rows_.find(make_tag_pair(a, b));
  return it == rows_.end() ? 0.0 : it->second;
}

RuleTable RuleTable::with_threshold(double threshold) const {
  RuleTable copy = *this;
  copy.threshold_ = threshold;
  return copy;
}

AllowedRules allowed_rules(const RuleTable& table) {
  AllowedRules allowed;
  for (const auto& [pair, pct] : table.rows()) {
    if (pct >= table.threshold()) allowed.insert(pair);
  }
  return allowed;
}

bool is_allowed(const AllowedRules& rules, PosTag a, PosTag b) {
  return rules.count(make_tag_pair(a, b)) > 0;
}

// ---------------------------------------------------------------------------
// Description to root words

std::vector<std::string> tokenize(std::string_view description) {
  std::vector<std::string> tokens;
  std::string current;
  for (const char c : description) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  if (tokens.empty()) {
    throw PipelineError(PipelineError::Code::EmptyDescription,
                        "description contains no alphabetic words");
  }
  return tokens;
}

std::vector<std::string> extract_roots(std::span<const std::string> tokens,
                                       const StopwordSet& stopwords) {
  std::vector<std::string> roots;
  for (const auto& token : tokens) {
    if (!stopwords.contains(token)) roots.push_back(token);
  }
  if (roots.empty()) {
    throw PipelineError(PipelineError::Code::NoRoots, "description contains only stopwords");
  }
  return roots;
}

namespace {

bool ends_with(std::string_view word, std::string_view suffix) {
  return word.size() > suffix.size() && word.substr(word.size() - suffix.size()) == suffix;
}

}  // namespace

PosTag suffix_tag(std::string_view word) {
  if (ends_with(word, "ly")) return PosTag::Adverb;
  if (ends_with(word, "ing") || ends_with(word, "ate")) return PosTag::Verb;
  if (ends_with(word, "ous") || ends_with(word, "ful") || ends_with(word, "ive")) {
    return PosTag::Adjective;
  }
  return PosTag::Noun;
}

std::vector<TaggedWord> tag_pos(std::span<const std::string> roots, const PosLexicon& lexicon) {
  std::vector<TaggedWord> tagged;
  for (const auto& root : roots) {
    PosTag tag = PosTag::Other;
    if (const auto* entries = lexicon.lookup(root)) {
      double best = -1.0;
      // Enum order doubles as the tie-break order; Other sorts last.
      for (const auto& e : *entries) {
        if (e.frequency > best || (e.frequency == best && e.tag < tag)) {
          best = e.frequency;
          tag = e.tag;
        }
      }
    } else {
      tag = suffix_tag(root);
    }
    if (!is_blendable(tag)) continue;
    const bool seen = std::any_of(tagged.begin(), tagged.end(), [&](const TaggedWord& w) {
      return w.surface == root && w.tag == tag;
    });
    if (!seen) tagged.push_back({root, tag, WordOrigin::Root, root});
  }
  return tagged;
}

namespace {

// Simile keys are adjective stems; "-ly" adverbs are looked up by stem.
std::vector<std::string> simile_keys(std::string_view word) {
  std::vector<std::string> keys{std::string(word)};
  if (ends_with(word, "ily")) {
    keys.push_back(std::string(word.substr(0, word.size() - 3)) + "y");
  }
  if (ends_with(word, "ly")) keys.emplace_back(word.substr(0, word.size() - 2));
  return keys;
}

}  // namespace

std::vector<TaggedWord> expand_related(std::span<const TaggedWord> words, const SynonymDb& synonyms,
                                       const SimileDb& similes, int max_per_root) {
  std::vector<TaggedWord> related;
  auto push = [&](TaggedWord word) {
    const bool seen = std::any_of(related.begin(), related.end(), [&](const TaggedWord& w) {
      return w.surface == word.surface && w.tag == word.tag;
    });
    if (!seen) related.push_back(std::move(word));
  };

  for (const auto& w : words) push({w.surface, w.tag, WordOrigin::Root, w.surface});

  const auto limit = static_cast<std::size_t>(std::max(0, max_per_root));
  for (const auto& w : words) {
    const auto& list = synonyms.lookup(w.surface, w.tag);
    for (std::size_t i = 0; i < list.size() && i < limit; ++i) {
      push({list[i], w.tag, WordOrigin::Synonym, w.surface});
    }
  }

  for (const auto& w : words) {
    if (w.tag != PosTag::Adjective && w.tag != PosTag::Adverb) continue;
    for (const auto& key : simile_keys(w.surface)) {
      const auto& list = similes.lookup(key);
      if (list.empty()) continue;
      for (const auto& metaphor : list) push({metaphor, w.tag, WordOrigin::Metaphor, w.surface});
      break;
    }
  }
  return related;
}

// ---------------------------------------------------------------------------
// Syllables

std::vector<std::string> syllabify(std::string_view word, const HyphenationPatterns& patterns) {
  const std::string lower = to_lower(word);
  const auto n = lower.size();
  const auto left = static_cast<std::size_t>(patterns.left_min());
  const auto right = static_cast<std::size_t>(patterns.right_min());
  if (n < left + right) return {lower};

  const std::string padded = "." + lower + ".";
  // values[p] is the score between padded[p-1] and padded[p].
  std::vector<std::uint8_t> values(padded.size() + 1, 0);
  const auto max_len = patterns.max_skeleton_length();
  for (std::size_t start = 0; start < padded.size(); ++start) {
    for (std::size_t len = 1; len <= max_len && start + len <= padded.size(); ++len) {
      const auto* pattern = patterns.find(std::string_view(padded).substr(start, len));
      if (pattern == nullptr) continue;
      for (std::size_t k = 0; k < pattern->weights.size(); ++k) {
        values[start + k] = std::max(values[start + k], pattern->weights[k]);
      }
    }
  }

  std::vector<std::string> syllables;
  std::size_t begin = 0;
  for (std::size_t cut = left; cut + right <= n; ++cut) {
    // A cut before lower[cut] sits between padded[cut] and padded[cut + 1].
    if (values[cut + 1] % 2 == 1) {
      syllables.push_back(lower.substr(begin, cut - begin));
      begin = cut;
    }
  }
  syllables.push_back(lower.substr(begin));
  return syllables;
}

std::vector<SyllableUnit> build_syllable_pool(std::span<const TaggedWord> words,
                                              const HyphenationPatterns& patterns,
                                              PoolOptions options) {
  std::vector<SyllableUnit> pool;
  std::set<std::pair<std::string, PosTag>> seen;
  auto push = [&](const TaggedWord& parent, int index, std::vector<std::string> parts) {
    std::string text;
    for (const auto& p : parts) text += p;
    if (!seen.insert({text, parent.tag}).second) return;
    pool.push_back({std::move(text), parent.tag, parent, index, std::move(parts)});
  };

  for (const auto& word : words) {
    const auto syllables = syllabify(word.surface, patterns);
    const auto count = static_cast<int>(syllables.size());
    for (int i = 0; i < count; ++i) push(word, i, {syllables[i]});
    if (!options.composites || count < 2) continue;
    for (int span = 2; span <= count; ++span) {
      push(word, 0, {syllables.begin(), syllables.begin() + span});
      if (span < count) push(word, count - span, {syllables.end() - span, syllables.end()});
    }
  }
  return pool;
}

// ---------------------------------------------------------------------------
// Blending

std::vector<RawCandidate> generate_blends(std::span<const SyllableUnit> pool,
                                          const AllowedRules& rules, BlendOptions options) {
  const auto size = pool.size();
  std::vector<int> root_id(size);
  {
    std::unordered_map<std::string, int> ids;
    for (std::size_t i = 0; i < size; ++i) {
      root_id[i] = ids.emplace(pool[i].parent.root, static_cast<int>(ids.size())).first->second;
    }
  }
  // compatible[i][j]: units i and j may appear together in one name.
  std::vector<std::vector<char>> compatible(size, std::vector<char>(size, 0));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      compatible[i][j] = root_id[i] != root_id[j] && is_allowed(rules, pool[i].tag, pool[j].tag);
    }
  }

  std::unordered_set<std::string> seen;
  std::vector<RawCandidate> out;
  auto emit = [&](std::initializer_list<std::size_t> picks) {
    std::string text;
    for (const auto p : picks) text += pool[p].text;
    if (!seen.insert(text).second) return;
    RawCandidate candidate;
    for (const auto p : picks) candidate.units.push_back(pool[p]);
    candidate.text = std::move(text);
    out.push_back(std::move(candidate));
  };

  for (std::size_t i = 0; i < size; ++i) {
    const auto len_i = pool[i].text.size();
    for (std::size_t j = 0; j < size; ++j) {
      if (!compatible[i][j]) continue;
      const auto len_ij = len_i + pool[j].text.size();
      if (len_ij > options.max_length) continue;
      if (options.two_units) emit({i, j});
      if (!options.three_units) continue;
      for (std::size_t k = 0; k < size; ++k) {
        if (!compatible[i][k] || !compatible[j][k]) continue;
        if (len_ij + pool[k].text.size() > options.max_length) continue;
        emit({i, j, k});
      }
    }
  }

  if (out.empty()) {
    throw PipelineError(PipelineError::Code::NoCandidates,
                        "no syllable combination satisfies the allowed blending rules");
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const RawCandidate& a, const RawCandidate& b) { return a.text < b.text; });
  return out;
}

std::string render_display(std::span<const std::string> syllables) {
  std::string out;
  for (const auto& s : syllables) {
    if (s.empty()) continue;
    out += static_cast<char>(std::toupper(static_cast<unsigned char>(s.front())));
    out.append(s, 1);
  }
  return out;
}

}  // namespace blendsmith
