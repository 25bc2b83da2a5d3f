#include "docsum/weighting.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include <json.hpp>

#include "docsum/error.hpp"
#include "docsum/lexicon.hpp"
#include "docsum/text.hpp"

namespace docsum {

using json = nlohmann::json;

CueLexicon CueLexicon::defaults() { return CueLexicon{lexicon::default_cues()}; }

CueLexicon CueLexicon::load(const std::filesystem::path& path) {
  return CueLexicon{lexicon::load_line_list(path)};
}

UserWeights parse_user_weights(std::string_view json_text, Lang lang) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, std::string("user weights: ") + e.what());
  }
  if (!root.is_object()) {
    throw Error(ErrorKind::MalformedInput, "user weights: expected an object of word -> weight");
  }
  UserWeights weights;
  for (const auto& [word, value] : root.items()) {
    if (!value.is_number()) {
      throw Error(ErrorKind::MalformedInput, "user weights: \"" + word + "\" is not a number");
    }
    const double w = value.get<double>();
    if (!(w >= 0.0 && w <= 1.0)) {
      throw Error(ErrorKind::ComponentOutOfRange,
                  "user weights: \"" + word + "\" must lie in [0, 1]");
    }
    std::string key;
    for (const auto& t : tokenize(word, lang)) {
      if (!key.empty()) key += ' ';
      key += t.norm;
    }
    if (!key.empty()) weights[key] = w;
  }
  return weights;
}

UserWeights load_user_weights(const std::filesystem::path& path, Lang lang) {
  return parse_user_weights(read_file(path), lang);
}

double location(int n, int m) {
  const auto valid = [](int v) { return v == 1 || v == 3; };
  if (!valid(n) || !valid(m)) {
    throw Error(ErrorKind::InvalidPosition, "location: positions must be 1 or 3, got (" +
                                                std::to_string(n) + ", " + std::to_string(m) + ")");
  }
  return 1.0 / static_cast<double>(n * m);
}

double cuephrase(const SentenceUnit& sentence, const CueLexicon& cues) {
  const std::string folded = text::to_lower(sentence.text);
  for (const auto& phrase : cues.phrases) {
    if (phrase.empty()) continue;
    if (folded.find(text::to_lower(phrase)) != std::string::npos) return 1.0;
  }
  return 0.0;
}

namespace {

std::vector<std::string_view> split_norms(std::string_view word) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= word.size()) {
    const std::size_t sp = word.find(' ', start);
    const std::size_t end = sp == std::string_view::npos ? word.size() : sp;
    if (end > start) parts.push_back(word.substr(start, end - start));
    if (sp == std::string_view::npos) break;
    start = sp + 1;
  }
  return parts;
}

std::size_t count_occurrences(const SentenceUnit& sentence,
                              const std::vector<std::string_view>& norms) {
  if (norms.empty() || norms.size() > sentence.tokens.size()) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + norms.size() <= sentence.tokens.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < norms.size() && hit; ++j) {
      hit = sentence.tokens[i + j].norm == norms[j];
    }
    if (hit) ++count;
  }
  return count;
}

}  // namespace

bool contains_keyword(const SentenceUnit& sentence, const KeywordRecord& keyword) {
  return count_occurrences(sentence, split_norms(keyword.word)) > 0;
}

double statterm(const SentenceUnit& sentence, std::span<const KeywordRecord> keywords) {
  std::size_t hits = 0;
  for (const auto& k : keywords) {
    if (contains_keyword(sentence, k)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(std::max<std::size_t>(1, keywords.size()));
}

double addterm(const SentenceUnit& sentence, const std::set<std::string>& title_norms) {
  std::size_t eligible = 0;
  std::size_t related = 0;
  for (const auto& t : sentence.tokens) {
    if (t.length < kMinContentLength) continue;
    ++eligible;
    if (title_norms.contains(t.norm)) ++related;
  }
  return eligible == 0 ? 0.0 : static_cast<double>(related) / static_cast<double>(eligible);
}

std::vector<KeywordRecord> derive_keywords(const Document& doc, std::size_t count) {
  return derive_keywords(doc, count, Stopwords::defaults(doc.lang));
}

std::vector<KeywordRecord> derive_keywords(const Document& doc, std::size_t count,
                                           const Stopwords& stopwords) {
  if (count < 1) throw Error(ErrorKind::InvalidConfig, "keyword count must be at least 1");

  std::map<std::string, std::size_t> vocabulary;
  for (const auto& s : doc.main) {
    for (const auto& t : s.tokens) {
      if (is_content(t, stopwords)) ++vocabulary[t.norm];
    }
  }
  std::size_t max_count = 0;
  for (const auto& [norm, c] : vocabulary) max_count = std::max(max_count, c);

  std::vector<std::string> words;
  if (!doc.keywords.empty()) {
    for (const auto& k : doc.keywords) {
      std::string word;
      for (const auto& t : tokenize(k, doc.lang)) {
        if (!word.empty()) word += ' ';
        word += t.norm;
      }
      if (!word.empty() && std::find(words.begin(), words.end(), word) == words.end()) {
        words.push_back(std::move(word));
      }
    }
  } else {
    std::vector<std::pair<std::string, std::size_t>> ranked(vocabulary.begin(), vocabulary.end());
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    for (std::size_t i = 0; i < ranked.size() && i < count; ++i) words.push_back(ranked[i].first);
  }

  std::vector<KeywordRecord> records;
  records.reserve(words.size());
  for (std::size_t id = 0; id < words.size(); ++id) {
    KeywordRecord rec;
    rec.word_id = id;
    rec.word = words[id];
    const auto norms = split_norms(rec.word);
    std::size_t raw = 0;
    std::size_t containing = 0;
    double place_sum = 0.0;
    for (const auto& s : doc.main) {
      const std::size_t occ = count_occurrences(s, norms);
      if (occ == 0) continue;
      raw += occ;
      ++containing;
      place_sum += location(s.n, s.m);
      if (s.emphasized) rec.format = 1.0;
    }
    if (max_count > 0) {
      rec.frequency = std::min(1.0, static_cast<double>(raw) / static_cast<double>(max_count));
    }
    if (containing > 0) rec.place = place_sum / static_cast<double>(containing);
    records.push_back(std::move(rec));
  }
  return records;
}

void apply_user_weights(std::vector<KeywordRecord>& keywords, const UserWeights& weights) {
  for (auto& k : keywords) {
    const auto it = weights.find(k.word);
    k.user_weight = it == weights.end() ? 0.0 : it->second;
  }
}

WeightContext WeightContext::build(const Document& doc, std::vector<KeywordRecord> keywords,
                                   CueLexicon cues) {
  WeightContext ctx;
  for (const auto& t : tokenize(doc.title, doc.lang)) {
    if (t.length >= kMinContentLength) ctx.title_norms.insert(t.norm);
  }
  ctx.keywords = std::move(keywords);
  ctx.cues = std::move(cues);
  return ctx;
}

WeightBreakdown weigh(const SentenceUnit& sentence, const WeightContext& ctx) {
  WeightBreakdown b;
  b.location = location(sentence.n, sentence.m);
  b.cuephrase = cuephrase(sentence, ctx.cues);
  b.statterm = statterm(sentence, ctx.keywords);
  b.addterm = addterm(sentence, ctx.title_norms);
  b.total = b.location + b.cuephrase + b.statterm + b.addterm;
  return b;
}

double boosted_total(const SentenceUnit& sentence, const WeightBreakdown& breakdown,
                     const WeightContext& ctx) {
  double sum = 0.0;
  std::size_t matched = 0;
  for (const auto& k : ctx.keywords) {
    if (!contains_keyword(sentence, k)) continue;
    sum += k.user_weight;
    ++matched;
  }
  return matched == 0 ? breakdown.total : breakdown.total + sum / static_cast<double>(matched);
}

double word_weight(const KeywordRecord& rec) {
  const auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_unit(rec.frequency) || !in_unit(rec.place) || !in_unit(rec.format) ||
      !in_unit(rec.user_weight)) {
    throw Error(ErrorKind::ComponentOutOfRange,
                "word weight components must lie in [0, 1] (word \"" + rec.word + "\")");
  }
  return rec.sum();
}

}  // namespace docsum
