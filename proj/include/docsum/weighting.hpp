#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "docsum/doc_model.hpp"
#include "docsum/recognizer.hpp"

namespace docsum {

// Case-insensitive cue phrases that mark high-salience sentences.
struct CueLexicon {
  std::vector<std::string> phrases;

  static CueLexicon defaults();
  static CueLexicon load(const std::filesystem::path& path);
};

struct KeywordRecord {
  std::size_t word_id = 0;
  std::string word;  // normalized; multi-word keywords join norms with ' '
  double frequency = 0.0;
  double place = 0.0;
  double format = 0.0;
  double user_weight = 0.0;

  double sum() const noexcept { return frequency + place + format + user_weight; }
  bool operator==(const KeywordRecord&) const = default;
};

struct WeightBreakdown {
  double location = 0.0;
  double cuephrase = 0.0;
  double statterm = 0.0;
  double addterm = 0.0;
  double total = 0.0;

  bool operator==(const WeightBreakdown&) const = default;
};

struct WeightContext {
  std::set<std::string> title_norms;
  std::vector<KeywordRecord> keywords;
  CueLexicon cues;

  static WeightContext build(const Document& doc, std::vector<KeywordRecord> keywords,
                             CueLexicon cues);
};

// Normalized word -> weight in [0, 1].
using UserWeights = std::map<std::string, double>;

UserWeights parse_user_weights(std::string_view json_text, Lang lang);
UserWeights load_user_weights(const std::filesystem::path& path, Lang lang);

// 1/(n*m) for n, m in {1, 3}; anything else throws InvalidPosition.
double location(int n, int m);

double cuephrase(const SentenceUnit& sentence, const CueLexicon& cues);
double statterm(const SentenceUnit& sentence, std::span<const KeywordRecord> keywords);
double addterm(const SentenceUnit& sentence, const std::set<std::string>& title_norms);

// True when the keyword's norm sequence occurs contiguously in the sentence.
bool contains_keyword(const SentenceUnit& sentence, const KeywordRecord& keyword);

inline constexpr std::size_t kDefaultKeywordCount = 10;

std::vector<KeywordRecord> derive_keywords(const Document& doc, std::size_t count);
std::vector<KeywordRecord> derive_keywords(const Document& doc, std::size_t count,
                                           const Stopwords& stopwords);

void apply_user_weights(std::vector<KeywordRecord>& keywords, const UserWeights& weights);

WeightBreakdown weigh(const SentenceUnit& sentence, const WeightContext& ctx);

// Optional post-ranking boost: total plus the mean user weight of the
// keywords the sentence contains.
double boosted_total(const SentenceUnit& sentence, const WeightBreakdown& breakdown,
                     const WeightContext& ctx);

// Sum of the four keyword components; each must lie in [0, 1].
double word_weight(const KeywordRecord& rec);

}  // namespace docsum
