#include "docsum/recognizer.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "docsum/error.hpp"
#include "docsum/lexicon.hpp"
#include "docsum/text.hpp"

namespace docsum {

using json = nlohmann::json;

std::string_view to_string(Element element) noexcept {
  switch (element) {
    case Element::title: return "title";
    case Element::author: return "author";
    case Element::keyword: return "keyword";
    case Element::main: return "main";
    case Element::literature: return "literature";
  }
  return "main";
}

std::string_view to_string(FontStyle style) noexcept {
  switch (style) {
    case FontStyle::bold: return "bold";
    case FontStyle::italic: return "italic";
    case FontStyle::underline: return "underline";
    case FontStyle::normal: return "normal";
  }
  return "normal";
}

std::optional<Element> parse_element(std::string_view s) noexcept {
  for (auto e : {Element::title, Element::author, Element::keyword, Element::main,
                 Element::literature}) {
    if (to_string(e) == s) return e;
  }
  return std::nullopt;
}

std::optional<FontStyle> parse_font_style(std::string_view s) noexcept {
  for (auto f : {FontStyle::bold, FontStyle::italic, FontStyle::underline, FontStyle::normal}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

RuleTable default_rule_table() {
  RuleTable table;
  table.rules = {
      {1, Element::title, Zone::begin, {Align::center, Align::right}, {FontStyle::bold}, {}},
      {2, Element::author, Zone::begin, {Align::center, Align::left}, {}, {"By", "©", "(C)"}},
      {3,
       Element::keyword,
       Zone::begin,
       {},
       {},
       {"Keyword", "Keywords", "Ключові слова", "Ключевые слова"}},
      {4, Element::main, Zone::center, {}, {}, {}},
      {5, Element::literature, Zone::end, {}, {FontStyle::normal, FontStyle::italic}, {}},
  };
  return table;
}

void validate(RuleTable& table) {
  std::stable_sort(table.rules.begin(), table.rules.end(),
                   [](const auto& a, const auto& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < table.rules.size(); ++i) {
    if (table.rules[i].id == table.rules[i - 1].id) {
      throw Error(ErrorKind::InvalidConfig,
                  "rule table: duplicate rule id " + std::to_string(table.rules[i].id));
    }
  }
}

// ---------------------------------------------------------------------------
// rule table files

namespace {

[[noreturn]] void bad_table(const std::string& what) {
  throw Error(ErrorKind::InvalidConfig, "rule table: " + what);
}

std::vector<std::string> string_array(const json& rule, const char* key) {
  std::vector<std::string> out;
  const auto it = rule.find(key);
  if (it == rule.end()) return out;
  if (!it->is_array()) bad_table(std::string("\"") + key + "\" must be an array");
  for (const auto& v : *it) {
    if (!v.is_string()) bad_table(std::string("\"") + key + "\" entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

RuleTable parse_rule_table(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    bad_table(e.what());
  }
  if (!root.is_object() || !root.contains("rules") || !root["rules"].is_array()) {
    bad_table("expected an object with a \"rules\" array");
  }
  RuleTable table;
  for (const auto& item : root["rules"]) {
    if (!item.is_object()) bad_table("rule must be an object");
    for (const auto& [key, value] : item.items()) {
      static const std::set<std::string> kKnown = {"id",   "element", "place",
                                                   "align", "font",   "triggers"};
      if (!kKnown.contains(key)) bad_table("unknown rule field \"" + key + "\"");
    }
    RecognitionRule rule;
    if (!item.contains("id") || !item["id"].is_number_integer()) bad_table("rule \"id\" required");
    rule.id = item["id"].get<int>();
    if (!item.contains("element") || !item["element"].is_string()) {
      bad_table("rule \"element\" required");
    }
    const auto element = parse_element(item["element"].get<std::string>());
    if (!element) bad_table("unknown element \"" + item["element"].get<std::string>() + "\"");
    rule.element = *element;
    if (const auto it = item.find("place"); it != item.end() && !it->is_null()) {
      const auto zone = it->is_string() ? parse_zone(it->get<std::string>()) : std::nullopt;
      if (!zone) bad_table("\"place\" must be BEGIN, CENTER, END or null");
      rule.place = zone;
    }
    for (const auto& a : string_array(item, "align")) {
      const auto align = parse_align(a);
      if (!align) bad_table("unknown align \"" + a + "\"");
      rule.align_set.push_back(*align);
    }
    for (const auto& f : string_array(item, "font")) {
      const auto style = parse_font_style(f);
      if (!style) bad_table("unknown font style \"" + f + "\"");
      rule.font_set.push_back(*style);
    }
    rule.triggers = string_array(item, "triggers");
    table.rules.push_back(std::move(rule));
  }
  validate(table);
  return table;
}

RuleTable load_rule_table(const std::filesystem::path& path) {
  return parse_rule_table(read_file(path));
}

std::string rule_table_to_json(const RuleTable& table) {
  json rules = json::array();
  for (const auto& r : table.rules) {
    json align = json::array();
    for (auto a : r.align_set) align.push_back(std::string(to_string(a)));
    json font = json::array();
    for (auto f : r.font_set) font.push_back(std::string(to_string(f)));
    rules.push_back({{"id", r.id},
                     {"element", std::string(to_string(r.element))},
                     {"place", r.place ? json(std::string(to_string(*r.place))) : json(nullptr)},
                     {"align", std::move(align)},
                     {"font", std::move(font)},
                     {"triggers", r.triggers}});
  }
  return json{{"rules", std::move(rules)}}.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// matching

namespace {

bool word_edge_before(std::string_view s, std::size_t offset) {
  if (offset == 0) return true;
  std::size_t lead = offset - 1;
  while (lead > 0 && (static_cast<unsigned char>(s[lead]) & 0xC0) == 0x80) --lead;
  return !text::is_word_char(text::next_codepoint(s, lead));
}

bool word_edge_after(std::string_view s, std::size_t offset) {
  if (offset >= s.size()) return true;
  return !text::is_word_char(text::next_codepoint(s, offset));
}

bool starts_with_word_char(std::string_view s) {
  std::size_t pos = 0;
  return !s.empty() && text::is_word_char(text::next_codepoint(s, pos));
}

bool ends_with_word_char(std::string_view s) {
  if (s.empty()) return false;
  std::size_t lead = s.size() - 1;
  while (lead > 0 && (static_cast<unsigned char>(s[lead]) & 0xC0) == 0x80) --lead;
  return text::is_word_char(text::next_codepoint(s, lead));
}

bool font_matches(const Block& block, const std::vector<FontStyle>& font_set) {
  if (font_set.empty()) return true;
  const bool plain = !block.bold && !block.italic && !block.underline && !block.caps;
  for (auto style : font_set) {
    switch (style) {
      case FontStyle::bold: if (block.bold) return true; break;
      case FontStyle::italic: if (block.italic) return true; break;
      case FontStyle::underline: if (block.underline) return true; break;
      case FontStyle::normal: if (plain) return true; break;
    }
  }
  return false;
}

}  // namespace

std::optional<TriggerHit> find_trigger(std::string_view raw,
                                       const std::vector<std::string>& triggers) {
  const std::string folded = text::to_lower(raw);
  std::optional<TriggerHit> best;
  for (const auto& trigger : triggers) {
    if (trigger.empty()) continue;
    const std::string needle = text::to_lower(trigger);
    const bool check_front = starts_with_word_char(needle);
    const bool check_back = ends_with_word_char(needle);
    for (std::size_t at = folded.find(needle); at != std::string::npos;
         at = folded.find(needle, at + 1)) {
      if (check_front && !word_edge_before(folded, at)) continue;
      if (check_back && !word_edge_after(folded, at + needle.size())) continue;
      if (!best || at < best->offset || (at == best->offset && needle.size() > best->length)) {
        best = TriggerHit{at, needle.size()};
      }
      break;
    }
  }
  return best;
}

bool match_rule(const Block& block, const RecognitionRule& rule) {
  if (rule.place && block.zone != *rule.place) return false;
  if (!rule.align_set.empty() &&
      std::find(rule.align_set.begin(), rule.align_set.end(), block.align) ==
          rule.align_set.end()) {
    return false;
  }
  if (!font_matches(block, rule.font_set)) return false;
  if (!rule.triggers.empty() && !find_trigger(block.text, rule.triggers)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// recognition

namespace {

std::string clean_item(std::string_view item) {
  item = text::trim(item);
  while (!item.empty() && (item.back() == '.' || item.back() == ',' || item.back() == ';')) {
    item.remove_suffix(1);
    item = text::trim(item);
  }
  return std::string(item);
}

// Drops separators (':', '-', dashes) and whitespace at the front.
std::string_view skip_leaders(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = pos;
    const char32_t cp = text::next_codepoint(s, next);
    if (!text::is_space(cp) && cp != ':' && cp != '-' && cp != 0x2013 && cp != 0x2014) break;
    pos = next;
  }
  return s.substr(pos);
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> items;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',' || s[i] == ';') {
      std::string item = clean_item(s.substr(start, i - start));
      if (!item.empty()) items.push_back(std::move(item));
      start = i + 1;
    }
  }
  return items;
}

std::vector<std::string> split_authors(std::string_view s) {
  // Commas, semicolons and the conjunctions "and" / "та" separate names.
  std::vector<std::string> items;
  for (const auto& part : split_list(s)) {
    std::string_view rest = part;
    while (true) {
      std::optional<TriggerHit> hit = find_trigger(rest, {"and", "та"});
      if (!hit) break;
      std::string left = clean_item(rest.substr(0, hit->offset));
      if (!left.empty()) items.push_back(std::move(left));
      rest = rest.substr(hit->offset + hit->length);
    }
    std::string last = clean_item(rest);
    if (!last.empty()) items.push_back(std::move(last));
  }
  return items;
}

std::string strip_triggers(std::string_view s, const std::vector<std::string>& triggers) {
  std::string out(s);
  while (const auto hit = find_trigger(out, triggers)) {
    out.erase(hit->offset, hit->length);
  }
  return std::string(skip_leaders(out));
}

const RecognitionRule* rule_by_id(const RuleTable& table, int id) {
  for (const auto& r : table.rules) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

}  // namespace

std::vector<SentenceUnit> wrap_paragraphs(const std::vector<const Block*>& paragraphs, Lang lang,
                                          std::size_t* paragraph_count) {
  struct Pending {
    std::string text;
    std::size_t paragraph;
    std::size_t index_in_paragraph;
    std::size_t paragraph_size;
    bool emphasized;
  };
  std::vector<Pending> pending;
  std::size_t paragraph = 0;
  for (const Block* block : paragraphs) {
    auto sentences = segment(block->text, lang);
    if (sentences.empty()) continue;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      pending.push_back(
          {std::move(sentences[i]), paragraph, i, sentences.size(), block->emphasized()});
    }
    ++paragraph;
  }
  if (paragraph_count) *paragraph_count = paragraph;

  std::vector<SentenceUnit> units;
  units.reserve(pending.size());
  for (std::size_t i = 0; i < pending.size(); ++i) {
    SentenceUnit u;
    u.id = i;
    u.tokens = tokenize(pending[i].text, lang);
    u.text = std::move(pending[i].text);
    u.paragraph_id = pending[i].paragraph;
    u.n = tercile_position(i, pending.size());
    u.m = tercile_position(pending[i].index_in_paragraph, pending[i].paragraph_size);
    u.emphasized = pending[i].emphasized;
    units.push_back(std::move(u));
  }
  return units;
}

Document recognize(const RawDocument& raw, const RuleTable& table) {
  if (raw.blocks.empty()) throw Error(ErrorKind::EmptyDocument, "document has no blocks");

  Document doc;
  doc.lang = raw.lang;
  doc.matches.resize(raw.blocks.size());

  bool structured = false;
  for (std::size_t i = 0; i < raw.blocks.size(); ++i) {
    Match& match = doc.matches[i];
    match.block_index = i;
    for (const auto& rule : table.rules) {
      if (match_rule(raw.blocks[i], rule)) {
        match.rule_id = rule.id;
        match.element = rule.element;
        break;
      }
    }
    if (match.rule_id && (match.element == Element::title || match.element == Element::author ||
                          match.element == Element::keyword)) {
      structured = true;
    }
  }

  // Literature is the trailing run of literature-matching blocks, and only in
  // documents that show front-matter structure; anything else falls to main.
  bool in_tail = true;
  for (std::size_t i = raw.blocks.size(); i-- > 0;) {
    Match& match = doc.matches[i];
    const bool literature = match.element == Element::literature;
    if (literature && (!structured || !in_tail)) {
      match.element = Element::main;
      match.rule_id.reset();
    }
    if (!literature) in_tail = false;
  }

  const bool has_title = std::any_of(doc.matches.begin(), doc.matches.end(), [](const Match& m) {
    return m.element == Element::title;
  });
  if (!has_title) {
    const auto main_count = std::count_if(doc.matches.begin(), doc.matches.end(),
                                          [](const Match& m) { return m.element == Element::main; });
    for (auto& m : doc.matches) {
      if (m.element != Element::main) continue;
      doc.title = std::string(text::trim(raw.blocks[m.block_index].text));
      if (main_count > 1) {
        m.element = Element::title;
        m.rule_id.reset();
      }
      break;
    }
  }

  std::vector<const Block*> paragraphs;
  bool title_taken = !doc.title.empty();
  for (const auto& m : doc.matches) {
    const Block& block = raw.blocks[m.block_index];
    switch (m.element) {
      case Element::title:
        if (!title_taken) {
          doc.title = std::string(text::trim(block.text));
          title_taken = true;
        }
        break;
      case Element::author: {
        const RecognitionRule* rule = m.rule_id ? rule_by_id(table, *m.rule_id) : nullptr;
        const std::string names = rule ? strip_triggers(block.text, rule->triggers) : block.text;
        for (auto& a : split_authors(names)) doc.authors.push_back(std::move(a));
        break;
      }
      case Element::keyword: {
        const RecognitionRule* rule = m.rule_id ? rule_by_id(table, *m.rule_id) : nullptr;
        std::string_view list = block.text;
        if (rule) {
          if (const auto hit = find_trigger(block.text, rule->triggers)) {
            list = list.substr(hit->offset + hit->length);
          }
        }
        for (auto& k : split_list(skip_leaders(list))) doc.keywords.push_back(std::move(k));
        break;
      }
      case Element::main:
        paragraphs.push_back(&block);
        break;
      case Element::literature: {
        const auto entry = text::trim(block.text);
        if (!entry.empty()) doc.literature.emplace_back(entry);
        break;
      }
    }
  }

  doc.main = wrap_paragraphs(paragraphs, raw.lang, &doc.paragraph_count);
  if (doc.main.empty()) {
    throw Error(ErrorKind::EmptyDocument, "document has no main-part sentences");
  }
  return doc;
}

}  // namespace docsum
