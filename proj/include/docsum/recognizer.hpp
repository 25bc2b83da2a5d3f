#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "docsum/doc_model.hpp"

namespace docsum {

enum class Element { title, author, keyword, main, literature };
enum class FontStyle { bold, italic, underline, normal };

std::string_view to_string(Element element) noexcept;
std::string_view to_string(FontStyle style) noexcept;
std::optional<Element> parse_element(std::string_view s) noexcept;
std::optional<FontStyle> parse_font_style(std::string_view s) noexcept;

struct RecognitionRule {
  int id = 0;
  Element element = Element::main;
  std::optional<Zone> place;
  std::vector<Align> align_set;       // empty: any alignment
  std::vector<FontStyle> font_set;    // empty: any styling
  std::vector<std::string> triggers;  // empty: no trigger required

  bool operator==(const RecognitionRule&) const = default;
};

struct RuleTable {
  std::vector<RecognitionRule> rules;

  bool operator==(const RuleTable&) const = default;
};

// The five structure rules: title, author, keyword, main, literature.
RuleTable default_rule_table();

// Throws InvalidConfig on duplicate ids.  Rules are kept sorted by id.
void validate(RuleTable& table);

RuleTable parse_rule_table(std::string_view json_text);
RuleTable load_rule_table(const std::filesystem::path& path);
std::string rule_table_to_json(const RuleTable& table);

bool match_rule(const Block& block, const RecognitionRule& rule);

// Byte offset and length of the earliest trigger occurrence in `text`
// (longest trigger on ties).  Letters and digits on either side of a trigger
// that itself starts or ends with one block the match, so "By" does not fire
// inside "Abby".
struct TriggerHit {
  std::size_t offset = 0;
  std::size_t length = 0;
};
std::optional<TriggerHit> find_trigger(std::string_view text,
                                       const std::vector<std::string>& triggers);

struct Match {
  std::size_t block_index = 0;
  std::optional<int> rule_id;  // empty when assigned by a fallback
  Element element = Element::main;

  bool operator==(const Match&) const = default;
};

struct Document {
  Lang lang = Lang::uk;
  std::string title;
  std::vector<std::string> keywords;
  std::vector<std::string> authors;
  std::vector<SentenceUnit> main;  // all sentences of M, paragraph_id groups them
  std::size_t paragraph_count = 0;
  std::vector<std::string> literature;
  std::vector<Match> matches;  // one per source block, in block order
};

Document recognize(const RawDocument& doc, const RuleTable& table);

// Segments main-part paragraphs into sentence units with their structural
// positions.  Exposed for callers that build documents without a rule table.
std::vector<SentenceUnit> wrap_paragraphs(const std::vector<const Block*>& paragraphs, Lang lang,
                                          std::size_t* paragraph_count = nullptr);

}  // namespace docsum
