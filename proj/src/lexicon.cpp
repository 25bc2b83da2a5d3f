#include "docsum/lexicon.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "docsum/error.hpp"
#include "docsum/text.hpp"

namespace docsum {

std::string_view to_string(Lang lang) noexcept { return lang == Lang::uk ? "uk" : "en"; }

std::optional<Lang> parse_lang(std::string_view tag) noexcept {
  if (tag == "uk") return Lang::uk;
  if (tag == "en") return Lang::en;
  return std::nullopt;
}

namespace lexicon {

const std::vector<std::string>& default_cues() {
  static const std::vector<std::string> cues = {
      "Conclusion", "In the end",  "By the way",   "In summary", "To sum up",
      "Висновки",   "Висновок",    "Отже",         "Таким чином", "Підсумовуючи",
  };
  return cues;
}

const std::vector<std::string>& default_stopwords(Lang lang) {
  static const std::vector<std::string> uk = {
      "а",     "або",    "але",   "б",     "без",   "би",    "був",   "була",  "були",
      "було",  "бути",   "в",     "вам",   "вас",   "ваш",   "вже",   "ви",    "від",
      "він",   "вона",   "вони",  "воно",  "всі",   "все",   "всього", "г",    "де",
      "для",   "до",     "є",     "ж",     "же",    "з",     "за",    "зі",    "і",
      "із",    "її",     "їх",    "й",     "як",    "який",  "яка",   "яке",   "які",
      "якщо",  "коли",   "лише",  "між",   "ми",    "мій",   "на",    "над",   "навіть",
      "нам",   "нас",    "не",    "неї",   "нього", "ні",    "них",   "ним",   "о",
      "об",    "один",   "однак", "особливо", "от", "па",   "під",   "після", "по",
      "при",   "про",    "саме",  "свій",  "своє",  "своїх", "себе",  "собі",  "та",
      "так",   "також",  "там",   "те",    "тим",   "тих",   "ті",    "тільки", "то",
      "тобто", "той",    "тому",  "треба", "ту",    "у",     "усі",   "хоча",  "це",
      "цей",   "ці",     "цих",   "цього", "цьому", "ця",    "час",   "через", "чи",
      "що",    "щоб",    "ще",    "я",     "його",  "можна", "може",  "має",   "мають",
      "перед", "поки",   "тощо",  "дуже",  "більш", "менш",  "кожен", "інші",  "інших",
  };
  static const std::vector<std::string> en = {
      "a",      "about",  "above",   "after",  "again",  "against", "all",   "also",
      "am",     "an",     "and",     "any",    "are",    "as",      "at",    "be",
      "because", "been",  "before",  "being",  "below",  "between", "both",  "but",
      "by",     "can",    "could",   "did",    "do",     "does",    "doing", "down",
      "during", "each",   "few",     "for",    "from",   "further", "had",   "has",
      "have",   "having", "he",      "her",    "here",   "hers",    "him",   "his",
      "how",    "i",      "if",      "in",     "into",   "is",      "it",    "its",
      "itself", "just",   "may",     "me",     "might",  "more",    "most",  "must",
      "my",     "no",     "nor",     "not",    "now",    "of",      "off",   "on",
      "once",   "only",   "or",      "other",  "our",    "ours",    "out",   "over",
      "own",    "same",   "shall",   "she",    "should", "so",      "some",  "such",
      "than",   "that",   "the",     "their",  "theirs", "them",    "then",  "there",
      "these",  "they",   "this",    "those",  "through", "to",     "too",   "under",
      "until",  "up",     "very",    "was",    "we",     "were",    "what",  "when",
      "where",  "which",  "while",   "who",    "whom",   "why",     "will",  "with",
      "would",  "you",    "your",    "yours",
  };
  return lang == Lang::uk ? uk : en;
}

const std::vector<std::string>& default_abbreviations(Lang lang) {
  static const std::vector<std::string> uk = {
      "див.", "рис.", "табл.", "напр.", "т.д.", "т.п.", "т.ч.", "ін.",   "ім.",
      "ст.",  "рр.",  "проф.", "акад.", "доц.", "вид.", "мал.", "зб.",   "арк.",
      "гл.",  "розд.", "пп.",  "вул.",  "обл.", "тис.", "млн.", "млрд.", "грн.",
      "ред.", "англ.", "лат.", "укр.",  "к.т.н.", "д.т.н.", "№.",
  };
  static const std::vector<std::string> en = {
      "e.g.", "i.e.", "etc.", "fig.", "figs.", "eq.",  "eqs.", "mr.",  "mrs.",
      "ms.",  "dr.",  "prof.", "vs.", "al.",   "no.",  "vol.", "pp.",  "ch.",
      "sec.", "cf.",  "approx.", "dept.", "jr.", "sr.", "st.", "inc.", "ltd.",
      "co.",  "tab.", "ref.", "refs.",
  };
  return lang == Lang::uk ? uk : en;
}

std::vector<std::string> parse_line_list(std::string_view content) {
  std::vector<std::string> entries;
  for (std::string_view line : text::split_lines(content)) {
    line = text::trim(line);
    if (line.empty() || line.front() == '#') continue;
    entries.emplace_back(line);
  }
  return entries;
}

std::vector<std::string> load_line_list(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  if (!text::is_valid_utf8(content)) {
    throw Error(ErrorKind::MalformedInput, path.string() + ": not valid UTF-8");
  }
  return parse_line_list(content);
}

std::string format_line_list(const std::vector<std::string>& entries, std::string_view header) {
  std::string out;
  if (!header.empty()) {
    out += "# ";
    out += header;
    out += '\n';
  }
  for (const auto& e : entries) {
    out += e;
    out += '\n';
  }
  return out;
}

}  // namespace lexicon

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoFailure, "cannot open " + path.string());
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorKind::IoFailure, "cannot read " + path.string());
  return content;
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoFailure, "cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorKind::IoFailure, "cannot write " + path.string());
}

}  // namespace docsum
