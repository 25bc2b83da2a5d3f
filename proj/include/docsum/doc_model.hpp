#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "docsum/lexicon.hpp"

namespace docsum {

enum class Align { left, center, right, justify };
enum class Zone { begin, center, end };

std::string_view to_string(Align align) noexcept;
std::string_view to_string(Zone zone) noexcept;
std::optional<Align> parse_align(std::string_view s) noexcept;
std::optional<Zone> parse_zone(std::string_view s) noexcept;

// Splits `count` ordered units into begin/center/end runs.  The begin run
// has ceil(count/3) units and the end run ceil(rest/2), so small counts fill
// begin first: 1 -> B, 2 -> B E, 3 -> B C E, 4 -> B B C E.
Zone tercile_zone(std::size_t index, std::size_t count) noexcept;

// Structural position value used by the location score: 1 at the begin or
// end of a sequence, 3 in the middle.
int tercile_position(std::size_t index, std::size_t count) noexcept;

struct Block {
  std::string text;
  Align align = Align::left;
  bool bold = false;
  bool italic = false;
  bool underline = false;
  bool caps = false;
  std::size_t index = 0;
  Zone zone = Zone::begin;

  bool emphasized() const noexcept { return bold || italic || underline; }
  bool operator==(const Block&) const = default;
};

struct RawDocument {
  std::vector<Block> blocks;
  Lang lang = Lang::uk;
};

struct Token {
  std::string surface;
  std::string norm;
  std::size_t length = 0;  // code points in norm
  std::size_t offset = 0;  // byte offset of surface in the tokenized string

  bool operator==(const Token&) const = default;
};

struct SentenceUnit {
  std::size_t id = 0;
  std::string text;
  std::vector<Token> tokens;
  std::size_t paragraph_id = 0;
  int n = 1;  // position within the main part
  int m = 1;  // position within the paragraph
  bool emphasized = false;  // source block carried bold/italic/underline
};

// Stop-word membership on normalized forms.
class Stopwords {
 public:
  Stopwords() = default;
  Stopwords(std::span<const std::string> words, Lang lang);

  static const Stopwords& defaults(Lang lang);

  bool contains(std::string_view norm) const;
  std::size_t size() const noexcept { return norms_.size(); }

 private:
  std::unordered_set<std::string> norms_;
};

// Tokens that take part in similarity, fusion and keyword derivation.
inline constexpr std::size_t kMinContentLength = 3;
bool is_content(const Token& token, const Stopwords& stopwords);

RawDocument parse_docjson(std::string_view bytes);
std::string serialize_docjson(const RawDocument& doc);

RawDocument parse_plaintext(std::string_view bytes, Lang lang);
std::string serialize_plaintext(const RawDocument& doc);

// Recomputes index and zone of every block from its position.
void assign_zones(std::vector<Block>& blocks);

std::vector<std::string> segment(std::string_view text, Lang lang);
std::vector<std::string> segment(std::string_view text, std::span<const std::string> abbreviations);

std::vector<Token> tokenize(std::string_view sentence, Lang lang);

// Lowercases, drops apostrophes and combining marks, then strips the
// language's suffix list until no suffix applies to a form of >= 5 letters.
std::string normalize_word(std::string_view word, Lang lang);

}  // namespace docsum
