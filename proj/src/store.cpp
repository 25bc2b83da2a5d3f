#include "docsum/store.hpp"

#include <cmath>
#include <map>
#include <set>

#include "docsum/error.hpp"
#include "docsum/lexicon.hpp"

namespace docsum {

using json = nlohmann::json;

double sentence_sum(const SentenceRecord& r) noexcept {
  return r.words_weight + r.format + r.place;
}

double keyword_sum(const KeywordRow& r) noexcept {
  return r.frequency + r.place + r.format + r.user_weight;
}

Analysis build_analysis(const Document& doc, const std::vector<KeywordRecord>& keywords) {
  Analysis a;
  a.keywords.reserve(keywords.size());
  for (const auto& k : keywords) {
    KeywordRow row;
    row.word_id = k.word_id;
    row.word = k.word;
    row.frequency = k.frequency;
    row.place = k.place;
    row.format = k.format;
    row.user_weight = k.user_weight;
    row.sum = word_weight(k);
    a.keywords.push_back(std::move(row));
  }

  for (const auto& s : doc.main) {
    SentenceRecord rec;
    rec.sentence_id = s.id;
    for (std::size_t i = 0; i < keywords.size(); ++i) {
      if (!contains_keyword(s, keywords[i])) continue;
      a.links.push_back({a.links.size(), keywords[i].word_id, s.id});
      rec.words_weight += a.keywords[i].sum;
      if (!a.keywords[i].sentence_id) a.keywords[i].sentence_id = s.id;
    }
    rec.format = s.emphasized ? 1.0 : 0.0;
    rec.place = location(s.n, s.m);
    rec.sum = sentence_sum(rec);
    a.sentences.push_back(rec);
  }
  return a;
}

namespace {

[[noreturn]] void violation(const std::string& what) {
  throw Error(ErrorKind::InvariantViolation, "analysis: " + what);
}

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

void validate(const Analysis& a) {
  std::map<std::size_t, const SentenceRecord*> sentences;
  for (const auto& s : a.sentences) {
    if (!sentences.emplace(s.sentence_id, &s).second) {
      violation("duplicate SentenceID " + std::to_string(s.sentence_id));
    }
    if (!(s.words_weight >= 0.0) || !std::isfinite(s.words_weight)) {
      violation("WordsWeight out of range for sentence " + std::to_string(s.sentence_id));
    }
    if (s.format != 0.0 && s.format != 1.0) {
      violation("Format must be 0 or 1 for sentence " + std::to_string(s.sentence_id));
    }
    if (!(s.place > 0.0 && s.place <= 1.0)) {
      violation("Place out of range for sentence " + std::to_string(s.sentence_id));
    }
    if (s.sum != sentence_sum(s)) {
      violation("Sum does not equal WordsWeight + Format + Place for sentence " +
                std::to_string(s.sentence_id));
    }
  }

  std::map<std::size_t, const KeywordRow*> words;
  for (const auto& k : a.keywords) {
    if (!words.emplace(k.word_id, &k).second) {
      violation("duplicate WordID " + std::to_string(k.word_id));
    }
    if (!in_unit(k.frequency) || !in_unit(k.place) || !in_unit(k.format) ||
        !in_unit(k.user_weight)) {
      violation("keyword component outside [0, 1] for WordID " + std::to_string(k.word_id));
    }
    if (k.sum != keyword_sum(k)) {
      violation("Sum does not equal Frequency + Place + Format + UserWeight for WordID " +
                std::to_string(k.word_id));
    }
    if (k.sentence_id && !sentences.contains(*k.sentence_id)) {
      violation("keyword SentenceID " + std::to_string(*k.sentence_id) + " does not resolve");
    }
  }

  std::set<std::size_t> link_ids;
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  std::map<std::size_t, double> linked_weight;
  for (const auto& l : a.links) {
    if (!link_ids.insert(l.id).second) violation("duplicate link ID " + std::to_string(l.id));
    if (!pairs.emplace(l.word_id, l.sentence_id).second) {
      violation("duplicate (WordID, SentenceID) link");
    }
    const auto word = words.find(l.word_id);
    if (word == words.end()) violation("link WordID " + std::to_string(l.word_id) + " dangles");
    if (!sentences.contains(l.sentence_id)) {
      violation("link SentenceID " + std::to_string(l.sentence_id) + " dangles");
    }
    linked_weight[l.sentence_id] += word->second->sum;
  }
  for (const auto& s : a.sentences) {
    const double expected = linked_weight[s.sentence_id];
    if (std::abs(expected - s.words_weight) > 1e-9 * (1.0 + std::abs(expected))) {
      violation("WordsWeight disagrees with linked keywords for sentence " +
                std::to_string(s.sentence_id));
    }
  }
}

json analysis_to_json(const Analysis& a) {
  json sentences = json::array();
  for (const auto& s : a.sentences) {
    sentences.push_back({{"SentenceID", s.sentence_id},
                         {"WordsWeight", s.words_weight},
                         {"Format", s.format},
                         {"Place", s.place},
                         {"Sum", s.sum}});
  }
  json keywords = json::array();
  for (const auto& k : a.keywords) {
    keywords.push_back({{"WordID", k.word_id},
                        {"Word", k.word},
                        {"Frequency", k.frequency},
                        {"Place", k.place},
                        {"Format", k.format},
                        {"UserWeight", k.user_weight},
                        {"Sum", k.sum},
                        {"SentenceID", k.sentence_id ? json(*k.sentence_id) : json(nullptr)}});
  }
  json links = json::array();
  for (const auto& l : a.links) {
    links.push_back({{"ID", l.id}, {"WordID", l.word_id}, {"SentenceID", l.sentence_id}});
  }
  return {{"sentences", std::move(sentences)},
          {"keywords", std::move(keywords)},
          {"links", std::move(links)}};
}

namespace {

[[noreturn]] void mismatch(const std::string& what) {
  throw Error(ErrorKind::SchemaMismatch, "analysis: " + what);
}

const json& field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) mismatch(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t id_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    mismatch(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

double number_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number()) mismatch(std::string("\"") + key + "\" must be a number");
  return v.get<double>();
}

const json& array_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_array()) mismatch(std::string("\"") + key + "\" must be an array");
  return v;
}

void require_object(const json& v, const char* what) {
  if (!v.is_object()) mismatch(std::string(what) + " must be an object");
}

}  // namespace

Analysis analysis_from_json(const json& j) {
  require_object(j, "analysis");
  Analysis a;
  for (const auto& s : array_field(j, "sentences")) {
    require_object(s, "sentence");
    SentenceRecord r;
    r.sentence_id = id_field(s, "SentenceID");
    r.words_weight = number_field(s, "WordsWeight");
    r.format = number_field(s, "Format");
    r.place = number_field(s, "Place");
    r.sum = number_field(s, "Sum");
    a.sentences.push_back(r);
  }
  for (const auto& k : array_field(j, "keywords")) {
    require_object(k, "keyword");
    KeywordRow r;
    r.word_id = id_field(k, "WordID");
    const json& word = field(k, "Word");
    if (!word.is_string()) mismatch("\"Word\" must be a string");
    r.word = word.get<std::string>();
    r.frequency = number_field(k, "Frequency");
    r.place = number_field(k, "Place");
    r.format = number_field(k, "Format");
    r.user_weight = number_field(k, "UserWeight");
    r.sum = number_field(k, "Sum");
    if (!field(k, "SentenceID").is_null()) r.sentence_id = id_field(k, "SentenceID");
    a.keywords.push_back(std::move(r));
  }
  for (const auto& l : array_field(j, "links")) {
    require_object(l, "link");
    a.links.push_back({id_field(l, "ID"), id_field(l, "WordID"), id_field(l, "SentenceID")});
  }
  validate(a);
  return a;
}

void save_analysis(const Analysis& analysis, const std::filesystem::path& path) {
  validate(analysis);
  write_file(path, analysis_to_json(analysis).dump(2) + "\n");
}

Analysis load_analysis(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  json j;
  try {
    j = json::parse(content);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::SchemaMismatch, std::string("analysis: ") + e.what());
  }
  return analysis_from_json(j);
}

}  // namespace docsum
