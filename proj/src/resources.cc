#include "blendsmith/resources.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <iterator>
#include <sstream>

namespace blendsmith {

namespace {

std::string_view trim(std::string_view text) {
  const auto* ws = " \t\r\n\v\f";
  const auto first = text.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(ws);
  return text.substr(first, last - first + 1);
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(trim(line.substr(start, tab - start)));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

// Calls fn(line_number, content) for every non-blank, non-comment line.
template <typename Fn>
void for_each_record(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    fn(number, content);
  }
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open resource file: " + path.string());
  return in;
}

template <typename Parser>
auto load_with(const std::filesystem::path& path, Parser parser) {
  auto in = open_or_throw(path);
  return parser(in, path.string());
}

std::string fnv1a64_hex(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (std::istreambuf_iterator<char> it(in), end; it != end; ++it) {
    hash ^= static_cast<unsigned char>(*it);
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

const std::vector<std::string> kEmptyList;

}  // namespace

ResourceError::ResourceError(std::string_view source, std::size_t line, std::string_view msg)
    : std::runtime_error(std::string(source) + ":" + std::to_string(line) + ": " +
                         std::string(msg)),
      line_(line) {}

std::string_view to_string(PosTag tag) {
  switch (tag) {
    case PosTag::Noun:
      return "Noun";
    case PosTag::Verb:
      return "Verb";
    case PosTag::Adjective:
      return "Adjective";
    case PosTag::Adverb:
      return "Adverb";
    case PosTag::Other:
      break;
  }
  return "Other";
}

std::optional<PosTag> parse_pos_tag(std::string_view text) {
  if (text == "NOUN") return PosTag::Noun;
  if (text == "VERB") return PosTag::Verb;
  if (text == "ADJ") return PosTag::Adjective;
  if (text == "ADV") return PosTag::Adverb;
  if (text == "OTHER") return PosTag::Other;
  return std::nullopt;
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_alpha_word(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  });
}

// ---------------------------------------------------------------------------
// Containers

StopwordSet::StopwordSet(std::unordered_set<std::string> words) {
  for (const auto& w : words) words_.insert(to_lower(w));
}

bool StopwordSet::contains(std::string_view word) const {
  return words_.count(to_lower(word)) > 0;
}

const std::vector<TagFrequency>* PosLexicon::lookup(std::string_view word) const {
  const auto it = entries_.find(std::string(word));
  return it == entries_.end() ? nullptr : &it->second;
}

void SynonymDb::add(std::string_view word, PosTag tag, std::string_view synonym) {
  auto key = to_lower(word);
  auto value = to_lower(synonym);
  if (value == key) return;
  auto& list = entries_[{std::move(key), tag}];
  if (std::find(list.begin(), list.end(), value) == list.end()) list.push_back(std::move(value));
}

const std::vector<std::string>& SynonymDb::lookup(std::string_view word, PosTag tag) const {
  const auto it = entries_.find({std::string(word), tag});
  return it == entries_.end() ? kEmptyList : it->second;
}

void SimileDb::add(std::string_view stem, std::string_view metaphor) {
  auto value = to_lower(metaphor);
  auto& list = entries_[to_lower(stem)];
  if (std::find(list.begin(), list.end(), value) == list.end()) list.push_back(std::move(value));
}

const std::vector<std::string>& SimileDb::lookup(std::string_view stem) const {
  const auto it = entries_.find(std::string(stem));
  return it == entries_.end() ? kEmptyList : it->second;
}

HyphenPattern parse_hyphen_pattern(std::string_view text) {
  HyphenPattern pattern;
  pattern.weights.push_back(0);
  bool have_digit = false;
  bool last_was_digit = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      if (last_was_digit) throw ResourceError("consecutive digits in pattern '" + std::string(text) + "'");
      pattern.weights.back() = static_cast<std::uint8_t>(c - '0');
      have_digit = true;
      last_was_digit = true;
      continue;
    }
    last_was_digit = false;
    if (c == '.') {
      if (i != 0 && i != text.size() - 1) {
        throw ResourceError("anchor inside pattern '" + std::string(text) + "'");
      }
    } else if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw ResourceError("invalid character in pattern '" + std::string(text) + "'");
    }
    pattern.skeleton.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    pattern.weights.push_back(0);
  }
  const bool has_letter = std::any_of(pattern.skeleton.begin(), pattern.skeleton.end(),
                                      [](char c) { return c != '.'; });
  if (!has_letter) throw ResourceError("pattern without letters '" + std::string(text) + "'");
  if (!have_digit) throw ResourceError("pattern without digits '" + std::string(text) + "'");
  return pattern;
}

HyphenationPatterns::HyphenationPatterns(std::vector<HyphenPattern> patterns, int left_min,
                                         int right_min)
    : left_min_(left_min), right_min_(right_min) {
  if (left_min < 1 || right_min < 1) throw ResourceError("LEFTMIN and RIGHTMIN must be >= 1");
  for (auto& p : patterns) {
    max_length_ = std::max(max_length_, p.skeleton.size());
    // Patterns sharing a skeleton both apply, so keep the larger value at each gap.
    auto [it, inserted] = patterns_.try_emplace(p.skeleton, p);
    if (!inserted) {
      for (std::size_t k = 0; k < p.weights.size(); ++k) {
        it->second.weights[k] = std::max(it->second.weights[k], p.weights[k]);
      }
    }
  }
}

const HyphenPattern* HyphenationPatterns::find(std::string_view skeleton) const {
  const auto it = patterns_.find(std::string(skeleton));
  return it == patterns_.end() ? nullptr : &it->second;
}

FrequencyDictionary::FrequencyDictionary(std::map<std::string, std::uint64_t> entries) {
  for (auto& [word, count] : entries) {
    if (count == 0) throw ResourceError("dictionary count must be positive for '" + word + "'");
    max_length_ = std::max(max_length_, word.size());
    lookup_.insert(word);
    entries_.emplace(word, count);
  }
}

bool FrequencyDictionary::contains(std::string_view word) const {
  return lookup_.count(std::string(word)) > 0;
}

std::uint64_t FrequencyDictionary::count(std::string_view word) const {
  const auto it = entries_.find(word);
  return it == entries_.end() ? 0 : it->second;
}

NgramTable::NgramTable(int order, std::unordered_map<std::string, std::uint64_t> counts)
    : order_(order), counts_(std::move(counts)) {
  if (order < 2 || order > 4) throw ResourceError("n-gram order must be 2, 3 or 4");
  for (const auto& [gram, count] : counts_) {
    if (static_cast<int>(gram.size()) != order || count == 0) {
      throw ResourceError("invalid n-gram entry '" + gram + "'");
    }
  }
}

std::uint64_t NgramTable::frequency(std::string_view gram) const {
  const auto it = counts_.find(std::string(gram));
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t NgramTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& [gram, count] : counts_) sum += count;
  return sum;
}

NgramTable build_ngram_table(const FrequencyDictionary& dict, int order) {
  if (order < 2 || order > 4) throw ResourceError("n-gram order must be 2, 3 or 4");
  const auto n = static_cast<std::size_t>(order);
  std::unordered_map<std::string, std::uint64_t> counts;
  for (const auto& [word, count] : dict.entries()) {
    for (std::size_t i = 0; i + n <= word.size(); ++i) ++counts[word.substr(i, n)];
  }
  return NgramTable(order, std::move(counts));
}

void UsageStore::add(std::string_view word, int year, double value) {
  auto& points = series_[to_lower(word)];
  for (const auto& p : points) {
    if (p.year == year) {
      throw ResourceError("duplicate usage year " + std::to_string(year) + " for '" +
                          std::string(word) + "'");
    }
  }
  points.push_back({year, value});
}

void UsageStore::finalize() {
  for (auto it = series_.begin(); it != series_.end();) {
    auto& points = it->second;
    std::sort(points.begin(), points.end(),
              [](const UsagePoint& a, const UsagePoint& b) { return a.year < b.year; });
    if (points.size() < 2) {
      it = series_.erase(it);
    } else {
      ++it;
    }
  }
}

const std::vector<UsagePoint>* UsageStore::series(std::string_view word) const {
  const auto it = series_.find(std::string(word));
  return it == series_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Parsers

StopwordSet parse_stopwords(std::istream& in, std::string_view source) {
  std::unordered_set<std::string> words;
  for_each_record(in, [&](std::size_t, std::string_view content) {
    words.insert(to_lower(content));
  });
  if (words.empty()) throw ResourceError(std::string(source) + ": stopword list is empty");
  return StopwordSet(std::move(words));
}

PosLexicon parse_pos_lexicon(std::istream& in, std::string_view source) {
  // Counts are accumulated first so that a word's rows may be scattered.
  std::unordered_map<std::string, std::vector<std::pair<PosTag, std::uint64_t>>> counts;
  std::vector<std::string> order;
  for_each_record(in, [&](std::size_t line, std::string_view content) {
    const auto fields = split_tabs(content);
    if (fields.size() != 3) throw ResourceError(source, line, "expected word<TAB>tag<TAB>count");
    const auto tag = parse_pos_tag(fields[1]);
    if (!tag) throw ResourceError(source, line, "unknown POS tag '" + std::string(fields[1]) + "'");
    std::uint64_t count = 0;
    if (!parse_number(fields[2], count)) {
      throw ResourceError(source, line, "count is not a non-negative integer");
    }
    if (fields[0].empty()) throw ResourceError(source, line, "empty word");
    auto word = to_lower(fields[0]);
    auto& rows = counts[word];
    if (rows.empty()) order.push_back(word);
    auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.first == *tag; });
    if (it == rows.end()) {
      rows.emplace_back(*tag, count);
    } else {
      it->second += count;
    }
  });

  std::unordered_map<std::string, std::vector<TagFrequency>> entries;
  for (const auto& word : order) {
    const auto& rows = counts[word];
    std::uint64_t total = 0;
    for (const auto& r : rows) total += r.second;
    std::vector<TagFrequency> freqs;
    for (const auto& r : rows) {
      const double f = total == 0 ? 1.0 / static_cast<double>(rows.size())
                                  : static_cast<double>(r.second) / static_cast<double>(total);
      freqs.push_back({r.first, f});
    }
    entries.emplace(word, std::move(freqs));
  }
  return PosLexicon(std::move(entries));
}

SynonymDb parse_synonyms(std::istream& in, std::string_view source) {
  SynonymDb db;
  for_each_record(in, [&](std::size_t line, std::string_view content) {
    const auto fields = split_tabs(content);
    if (fields.size() != 3) throw ResourceError(source, line, "expected word<TAB>tag<TAB>synonym");
    const auto tag = parse_pos_tag(fields[1]);
    if (!tag) throw ResourceError(source, line, "unknown POS tag '" + std::string(fields[1]) + "'");
    if (!is_alpha_word(fields[0]) || !is_alpha_word(fields[2])) {
      throw ResourceError(source, line, "words must be single alphabetic tokens");
    }
    db.add(fields[0], *tag, fields[2]);
  });
  return db;
}

SimileDb parse_similes(std::istream& in, std::string_view source) {
  SimileDb db;
  for_each_record(in, [&](std::size_t line, std::string_view content) {
    const auto fields = split_tabs(content);
    if (fields.size() != 2) throw ResourceError(source, line, "expected word<TAB>metaphor");
    if (!is_alpha_word(fields[0]) || !is_alpha_word(fields[1])) {
      throw ResourceError(source, line, "words must be single alphabetic tokens");
    }
    db.add(fields[0], fields[1]);
  });
  return db;
}

UsageStore parse_usage_series(std::istream& in, std::string_view source) {
  UsageStore store;
  for_each_record(in, [&](std::size_t line, std::string_view content) {
    const auto fields = split_tabs(content);
    if (fields.size() != 3) throw ResourceError(source, line, "expected word<TAB>year<TAB>value");
    int year = 0;
    double value = 0.0;
    if (!parse_number(fields[1], year)) throw ResourceError(source, line, "year is not an integer");
    if (!parse_number(fields[2], value) || !(value >= 0.0)) {
      throw ResourceError(source, line, "usage value must be a non-negative real");
    }
    try {
      store.add(fields[0], year, value);
    } catch (const ResourceError& e) {
      throw ResourceError(source, line, e.what());
    }
  });
  store.finalize();
  return store;
}

HyphenationPatterns parse_hyphenation_patterns(std::istream& in, std::string_view source) {
  std::vector<HyphenPattern> patterns;
  int left_min = 2;
  int right_min = 2;
  for_each_record(in, [&](std::size_t line, std::string_view content) {
    const auto eq = content.find('=');
    if (eq != std::string_view::npos) {
      const auto key = trim(content.substr(0, eq));
      int value = 0;
      if (!parse_number(trim(content.substr(eq + 1)), value) || value < 1) {
        throw ResourceError(source, line, "header value must be a positive integer");
      }
      if (key == "LEFTMIN") {
        left_min = value;
      } else if (key == "RIGHTMIN") {
        right_min = value;
      } else {
        throw ResourceError(source, line, "unknown header '" + std::string(key) + "'");
      }
      return;
    }
    // Several whitespace-separated patterns per line are accepted, as in TeX files.
    std::istringstream tokens{std::string(content)};
    std::string token;
    while (tokens >> token) {
      try {
        patterns.push_back(parse_hyphen_pattern(token));
      } catch (const ResourceError& e) {
        throw ResourceError(source, line, e.what());
      }
    }
  });
  if (patterns.empty()) throw ResourceError(std::string(source) + ": no hyphenation patterns");
  return HyphenationPatterns(std::move(patterns), left_min, right_min);
}

FrequencyDictionary parse_frequency_dictionary(std::istream& in, std::string_view source) {
  std::map<std::string, std::uint64_t> entries;
  for_each_record(in, [&](std::size_t line, std::string_view content) {
    const auto fields = split_tabs(content);
    if (fields.size() != 2) throw ResourceError(source, line, "expected word<TAB>count");
    long long count = 0;
    if (!parse_number(fields[1], count)) throw ResourceError(source, line, "count is not an integer");
    if (count <= 0) throw ResourceError(source, line, "count must be positive");
    if (!is_alpha_word(fields[0])) return;
    entries[to_lower(fields[0])] += static_cast<std::uint64_t>(count);
  });
  return FrequencyDictionary(std::move(entries));
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
  return load_with(path, parse_stopwords);
}
PosLexicon load_pos_lexicon(const std::filesystem::path& path) {
  return load_with(path, parse_pos_lexicon);
}
SynonymDb load_synonyms(const std::filesystem::path& path) {
  return load_with(path, parse_synonyms);
}
SimileDb load_similes(const std::filesystem::path& path) { return load_with(path, parse_similes); }
UsageStore load_usage_series(const std::filesystem::path& path) {
  return load_with(path, parse_usage_series);
}
HyphenationPatterns load_hyphenation_patterns(const std::filesystem::path& path) {
  return load_with(path, parse_hyphenation_patterns);
}
FrequencyDictionary load_frequency_dictionary(const std::filesystem::path& path) {
  return load_with(path, parse_frequency_dictionary);
}

// ---------------------------------------------------------------------------
// Store

const std::vector<std::string>& resource_file_names() {
  static const std::vector<std::string> names = {
      "stopwords.txt", "pos_lexicon.tsv", "synonyms.tsv", "similes.tsv",
      "hyphenation.pat", "dictionary.tsv", "usage.tsv"};
  return names;
}

ResourceStore ResourceStore::assemble(ResourceParts parts) {
  if (parts.stopwords.size() == 0) throw ResourceError("stopword list is empty");
  if (parts.hyphenation.size() == 0) throw ResourceError("hyphenation patterns are empty");
  if (parts.dictionary.size() == 0) throw ResourceError("dictionary is empty");
  ResourceStore store;
  store.parts_ = std::move(parts);
  for (int order = 2; order <= 4; ++order) {
    store.ngrams_[order - 2] = build_ngram_table(store.parts_.dictionary, order);
  }
  store.stats_ = feature_stats(store);
  return store;
}

ResourceStore ResourceStore::load(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw ResourceError("resource directory not found: " + dir.string());
  }
  ResourceParts parts;
  parts.stopwords = load_stopwords(dir / "stopwords.txt");
  parts.pos_lexicon = load_pos_lexicon(dir / "pos_lexicon.tsv");
  parts.synonyms = load_synonyms(dir / "synonyms.tsv");
  parts.similes = load_similes(dir / "similes.tsv");
  parts.hyphenation = load_hyphenation_patterns(dir / "hyphenation.pat");
  parts.dictionary = load_frequency_dictionary(dir / "dictionary.tsv");
  parts.usage = load_usage_series(dir / "usage.tsv");
  auto store = assemble(std::move(parts));
  for (const auto& name : resource_file_names()) store.checksums_[name] = fnv1a64_hex(dir / name);
  return store;
}

const NgramTable& ResourceStore::ngrams(int order) const {
  if (order < 2 || order > 4) throw std::out_of_range("n-gram order must be 2, 3 or 4");
  return ngrams_[order - 2];
}

}  // namespace blendsmith
