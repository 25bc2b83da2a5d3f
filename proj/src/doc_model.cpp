#include "docsum/doc_model.hpp"

#include <algorithm>
#include <array>

#include <json.hpp>

#include "docsum/error.hpp"
#include "docsum/text.hpp"

namespace docsum {

using json = nlohmann::json;

std::string_view to_string(Align align) noexcept {
  switch (align) {
    case Align::left: return "left";
    case Align::center: return "center";
    case Align::right: return "right";
    case Align::justify: return "justify";
  }
  return "left";
}

std::string_view to_string(Zone zone) noexcept {
  switch (zone) {
    case Zone::begin: return "BEGIN";
    case Zone::center: return "CENTER";
    case Zone::end: return "END";
  }
  return "BEGIN";
}

std::optional<Align> parse_align(std::string_view s) noexcept {
  if (s == "left") return Align::left;
  if (s == "center") return Align::center;
  if (s == "right") return Align::right;
  if (s == "justify") return Align::justify;
  return std::nullopt;
}

std::optional<Zone> parse_zone(std::string_view s) noexcept {
  if (s == "BEGIN") return Zone::begin;
  if (s == "CENTER") return Zone::center;
  if (s == "END") return Zone::end;
  return std::nullopt;
}

Zone tercile_zone(std::size_t index, std::size_t count) noexcept {
  const std::size_t begin_count = (count + 2) / 3;
  const std::size_t end_count = (count - begin_count + 1) / 2;
  if (index < begin_count) return Zone::begin;
  if (index >= count - end_count) return Zone::end;
  return Zone::center;
}

int tercile_position(std::size_t index, std::size_t count) noexcept {
  return tercile_zone(index, count) == Zone::center ? 3 : 1;
}

void assign_zones(std::vector<Block>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    blocks[i].index = i;
    blocks[i].zone = tercile_zone(i, blocks.size());
  }
}

// ---------------------------------------------------------------------------
// docjson

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::MalformedInput, "docjson: " + what);
}

bool read_flag(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) return false;
  if (!it->is_boolean()) malformed(std::string("\"") + key + "\" must be a boolean");
  return it->get<bool>();
}

}  // namespace

RawDocument parse_docjson(std::string_view bytes) {
  if (!text::is_valid_utf8(bytes)) malformed("input is not valid UTF-8");
  json root;
  try {
    root = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  if (!root.is_object()) malformed("top level must be an object");
  for (const auto& [key, value] : root.items()) {
    if (key != "lang" && key != "blocks") malformed("unknown field \"" + key + "\"");
  }
  const auto lang_it = root.find("lang");
  if (lang_it == root.end() || !lang_it->is_string()) malformed("\"lang\" must be a string");
  const auto lang = parse_lang(lang_it->get<std::string>());
  if (!lang) malformed("unsupported lang \"" + lang_it->get<std::string>() + "\"");

  const auto blocks_it = root.find("blocks");
  if (blocks_it == root.end() || !blocks_it->is_array()) malformed("\"blocks\" must be an array");

  RawDocument doc;
  doc.lang = *lang;
  for (const auto& item : *blocks_it) {
    if (!item.is_object()) malformed("block must be an object");
    for (const auto& [key, value] : item.items()) {
      static constexpr std::array<std::string_view, 6> kKnown = {"text", "align", "bold",
                                                                 "italic", "underline", "caps"};
      if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) {
        malformed("unknown block field \"" + key + "\"");
      }
    }
    Block block;
    const auto text_it = item.find("text");
    if (text_it == item.end() || !text_it->is_string()) malformed("block \"text\" must be a string");
    block.text = text_it->get<std::string>();
    if (const auto align_it = item.find("align"); align_it != item.end()) {
      if (!align_it->is_string()) malformed("block \"align\" must be a string");
      const auto align = parse_align(align_it->get<std::string>());
      if (!align) malformed("unknown align \"" + align_it->get<std::string>() + "\"");
      block.align = *align;
    }
    block.bold = read_flag(item, "bold");
    block.italic = read_flag(item, "italic");
    block.underline = read_flag(item, "underline");
    block.caps = read_flag(item, "caps");
    doc.blocks.push_back(std::move(block));
  }
  if (doc.blocks.empty()) throw Error(ErrorKind::EmptyDocument, "docjson: no blocks");
  assign_zones(doc.blocks);
  return doc;
}

std::string serialize_docjson(const RawDocument& doc) {
  json blocks = json::array();
  for (const auto& b : doc.blocks) {
    blocks.push_back({{"text", b.text},
                      {"align", std::string(to_string(b.align))},
                      {"bold", b.bold},
                      {"italic", b.italic},
                      {"underline", b.underline},
                      {"caps", b.caps}});
  }
  json root = {{"lang", std::string(to_string(doc.lang))}, {"blocks", std::move(blocks)}};
  return root.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// plain text

RawDocument parse_plaintext(std::string_view bytes, Lang lang) {
  if (!text::is_valid_utf8(bytes)) {
    throw Error(ErrorKind::MalformedInput, "plain text: input is not valid UTF-8");
  }
  RawDocument doc;
  doc.lang = lang;
  std::string group;
  bool open = false;
  auto flush = [&] {
    if (open) {
      Block block;
      block.text = std::move(group);
      doc.blocks.push_back(std::move(block));
    }
    group.clear();
    open = false;
  };
  for (std::string_view line : text::split_lines(bytes)) {
    if (text::trim(line).empty()) {
      flush();
      continue;
    }
    if (open) group += '\n';
    group += line;
    open = true;
  }
  flush();
  if (doc.blocks.empty()) throw Error(ErrorKind::EmptyDocument, "plain text: no non-blank lines");
  assign_zones(doc.blocks);
  return doc;
}

std::string serialize_plaintext(const RawDocument& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.blocks.size(); ++i) {
    if (i > 0) out += "\n\n";
    out += doc.blocks[i].text;
  }
  out += '\n';
  return out;
}

// ---------------------------------------------------------------------------
// segmentation

namespace {

bool is_terminal(char32_t cp) { return cp == '.' || cp == '!' || cp == '?'; }

bool is_closing(char32_t cp) {
  return cp == ')' || cp == ']' || cp == '"' || cp == '\'' || cp == 0xBB || cp == 0x201D ||
         cp == 0x2019;
}

bool is_opening(char32_t cp) {
  return cp == '(' || cp == '[' || cp == '"' || cp == '\'' || cp == 0xAB || cp == 0x201C ||
         cp == 0x201E;
}

// The whitespace-delimited word ending at byte `end` (exclusive), without
// leading opening punctuation.
std::string_view word_before(std::string_view s, std::size_t end) {
  std::size_t start = end;
  while (start > 0) {
    std::size_t lead = start - 1;
    while (lead > 0 && (static_cast<unsigned char>(s[lead]) & 0xC0) == 0x80) --lead;
    std::size_t probe = lead;
    if (text::is_space(text::next_codepoint(s, probe))) break;
    start = lead;
  }
  std::size_t pos = start;
  while (pos < end) {
    std::size_t next = pos;
    if (!is_opening(text::next_codepoint(s, next))) break;
    pos = next;
  }
  return s.substr(pos, end - pos);
}

bool is_initial(std::string_view word) {
  // "<capital>." where the capital is one code point.
  if (word.size() < 2 || word.back() != '.') return false;
  std::size_t pos = 0;
  const char32_t cp = text::next_codepoint(word, pos);
  return text::is_upper(cp) && pos == word.size() - 1;
}

}  // namespace

std::vector<std::string> segment(std::string_view input, Lang lang) {
  return segment(input, lexicon::default_abbreviations(lang));
}

std::vector<std::string> segment(std::string_view input,
                                 std::span<const std::string> abbreviations) {
  std::vector<std::string> sentences;
  auto emit = [&](std::size_t from, std::size_t to) {
    const std::string_view piece = text::trim(input.substr(from, to - from));
    if (!piece.empty()) sentences.emplace_back(piece);
  };

  std::size_t start = 0;
  std::size_t pos = 0;
  while (pos < input.size()) {
    const std::size_t at = pos;
    const char32_t cp = text::next_codepoint(input, pos);
    if (!is_terminal(cp)) continue;

    std::size_t run_end = pos;
    std::size_t run_length = 1;
    while (run_end < input.size()) {
      std::size_t next = run_end;
      if (!is_terminal(text::next_codepoint(input, next))) break;
      run_end = next;
      ++run_length;
    }
    std::size_t close_end = run_end;
    while (close_end < input.size()) {
      std::size_t next = close_end;
      if (!is_closing(text::next_codepoint(input, next))) break;
      close_end = next;
    }
    pos = run_end;

    std::size_t ws_end = close_end;
    while (ws_end < input.size()) {
      std::size_t next = ws_end;
      if (!text::is_space(text::next_codepoint(input, next))) break;
      ws_end = next;
    }
    if (ws_end == close_end || ws_end >= input.size()) continue;

    std::size_t look = ws_end;
    char32_t head = text::next_codepoint(input, look);
    while (is_opening(head) && look < input.size()) head = text::next_codepoint(input, look);
    if (!text::is_upper(head) && !text::is_digit(head)) continue;

    if (run_length == 1 && cp == '.') {
      const std::string_view word = word_before(input, at + 1);
      const std::string lower = text::to_lower(word);
      if (is_initial(word) ||
          std::find(abbreviations.begin(), abbreviations.end(), lower) != abbreviations.end()) {
        continue;
      }
    }
    emit(start, close_end);
    start = ws_end;
    pos = ws_end;
  }
  emit(start, input.size());
  return sentences;
}

// ---------------------------------------------------------------------------
// tokens

namespace {

struct SuffixList {
  std::vector<std::string> suffixes;  // longest first
};

const SuffixList& suffixes_for(Lang lang) {
  static const SuffixList uk{{"ами", "ів", "ою", "ах", "и", "і"}};
  static const SuffixList en{{"ing", "es", "ed", "s"}};
  return lang == Lang::uk ? uk : en;
}

constexpr std::size_t kMinStemLength = 5;

}  // namespace

std::string normalize_word(std::string_view word, Lang lang) {
  std::string norm;
  norm.reserve(word.size());
  std::size_t pos = 0;
  std::size_t letters = 0;
  while (pos < word.size()) {
    const char32_t cp = text::next_codepoint(word, pos);
    if (!text::is_letter(cp) && !text::is_digit(cp)) continue;
    text::append_utf8(norm, text::fold_case(cp));
    ++letters;
  }
  const auto& list = suffixes_for(lang).suffixes;
  bool stripped = true;
  while (stripped && letters >= kMinStemLength) {
    stripped = false;
    for (const auto& suffix : list) {
      if (norm.size() > suffix.size() && norm.ends_with(suffix)) {
        norm.resize(norm.size() - suffix.size());
        letters -= text::codepoint_count(suffix);
        stripped = true;
        break;
      }
    }
  }
  return norm;
}

std::vector<Token> tokenize(std::string_view sentence, Lang lang) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < sentence.size()) {
    std::size_t start = pos;
    char32_t cp = text::next_codepoint(sentence, pos);
    if (!text::is_word_char(cp)) continue;
    std::size_t end = pos;
    char32_t prev = cp;
    while (end < sentence.size()) {
      std::size_t next = end;
      const char32_t c = text::next_codepoint(sentence, next);
      if (text::is_word_char(c)) {
        prev = c;
        end = next;
        continue;
      }
      if (text::is_apostrophe(c) && text::is_letter(prev) && next < sentence.size()) {
        std::size_t after = next;
        if (text::is_letter(text::next_codepoint(sentence, after))) {
          prev = c;
          end = next;
          continue;
        }
      }
      break;
    }
    Token token;
    token.surface = std::string(sentence.substr(start, end - start));
    token.norm = normalize_word(token.surface, lang);
    token.length = text::codepoint_count(token.norm);
    token.offset = start;
    if (!token.norm.empty()) tokens.push_back(std::move(token));
    pos = end;
  }
  return tokens;
}

Stopwords::Stopwords(std::span<const std::string> words, Lang lang) {
  for (const auto& w : words) {
    std::string norm = normalize_word(w, lang);
    if (!norm.empty()) norms_.insert(std::move(norm));
  }
}

const Stopwords& Stopwords::defaults(Lang lang) {
  static const Stopwords uk(lexicon::default_stopwords(Lang::uk), Lang::uk);
  static const Stopwords en(lexicon::default_stopwords(Lang::en), Lang::en);
  return lang == Lang::uk ? uk : en;
}

bool Stopwords::contains(std::string_view norm) const {
  return norms_.find(std::string(norm)) != norms_.end();
}

bool is_content(const Token& token, const Stopwords& stopwords) {
  return token.length >= kMinContentLength && !stopwords.contains(token.norm);
}

}  // namespace docsum
