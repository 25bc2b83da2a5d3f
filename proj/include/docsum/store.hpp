#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "docsum/recognizer.hpp"
#include "docsum/weighting.hpp"

namespace docsum {

// Persisted analysis trace: Sentence, Keywords and Words-Sentence entities.
// JSON field names match the entity attribute names.

struct SentenceRecord {
  std::size_t sentence_id = 0;  // SentenceID
  double words_weight = 0.0;    // WordsWeight
  double format = 0.0;          // Format
  double place = 0.0;           // Place
  double sum = 0.0;             // Sum

  bool operator==(const SentenceRecord&) const = default;
};

struct KeywordRow {
  std::size_t word_id = 0;  // WordID
  std::string word;         // Word
  double frequency = 0.0;   // Frequency
  double place = 0.0;       // Place
  double format = 0.0;      // Format
  double user_weight = 0.0; // UserWeight
  double sum = 0.0;         // Sum
  std::optional<std::size_t> sentence_id;  // SentenceID of first occurrence

  bool operator==(const KeywordRow&) const = default;
};

struct WordSentenceLink {
  std::size_t id = 0;           // ID
  std::size_t word_id = 0;      // WordID
  std::size_t sentence_id = 0;  // SentenceID

  bool operator==(const WordSentenceLink&) const = default;
};

struct Analysis {
  std::vector<SentenceRecord> sentences;
  std::vector<KeywordRow> keywords;
  std::vector<WordSentenceLink> links;

  bool operator==(const Analysis&) const = default;
};

double sentence_sum(const SentenceRecord& r) noexcept;
double keyword_sum(const KeywordRow& r) noexcept;

// Builds the records for one document.  Sentence Place is the location
// score, Format is 1 for sentences from emphasized blocks, WordsWeight sums
// the word weights of the distinct keywords the sentence contains.
Analysis build_analysis(const Document& doc, const std::vector<KeywordRecord>& keywords);

// Throws InvariantViolation on inconsistent sums, out-of-range components,
// duplicate ids or dangling links.
void validate(const Analysis& analysis);

nlohmann::json analysis_to_json(const Analysis& analysis);
// Extra fields on any object are ignored; missing or mistyped fields throw
// SchemaMismatch.  The result is validated.
Analysis analysis_from_json(const nlohmann::json& j);

void save_analysis(const Analysis& analysis, const std::filesystem::path& path);
Analysis load_analysis(const std::filesystem::path& path);

}  // namespace docsum
