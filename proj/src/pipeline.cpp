#include "docsum/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include <json.hpp>

#include "docsum/error.hpp"
#include "docsum/lexicon.hpp"

namespace docsum {

using json = nlohmann::json;

std::optional<InputFormat> parse_input_format(std::string_view s) noexcept {
  if (s == "docjson") return InputFormat::docjson;
  if (s == "txt") return InputFormat::txt;
  if (s == "auto") return InputFormat::detect;
  return std::nullopt;
}

void PipelineConfig::validate() const {
  if (inputs.empty()) throw Error(ErrorKind::InvalidConfig, "--input: at least one input required");
  if (ratio && max_sentences) {
    throw Error(ErrorKind::InvalidConfig, "--ratio and --max-sentences are mutually exclusive");
  }
  if (ratio && !(*ratio > 0.0 && *ratio <= 1.0)) {
    throw Error(ErrorKind::InvalidLimit, "--ratio must lie in (0, 1]");
  }
  if (max_sentences && *max_sentences < 1) {
    throw Error(ErrorKind::InvalidLimit, "--max-sentences must be at least 1");
  }
  if (!(clip_factor > 0.0)) {
    throw Error(ErrorKind::InvalidClipFactor, "--clip-factor must be greater than 0");
  }
  try {
    validate_thresholds(dup_threshold, fuse_threshold);
  } catch (const Error& e) {
    throw Error(e.kind(), std::string("--dup-threshold/--fuse-threshold: ") + e.what());
  }
  if (keyword_count < 1) throw Error(ErrorKind::InvalidConfig, "--keywords must be at least 1");
  if (jobs < 1) throw Error(ErrorKind::InvalidConfig, "--jobs must be at least 1");
  if (relations_path && !subjects_path) {
    throw Error(ErrorKind::InvalidConfig, "--relations requires --subjects");
  }
}

SummaryLimit PipelineConfig::limit() const {
  if (max_sentences) return SummaryLimit::max_sentences(*max_sentences);
  return SummaryLimit::ratio(ratio.value_or(kDefaultRatio));
}

Resources Resources::load(const PipelineConfig& config) {
  Resources r;
  auto wrap = [](const std::filesystem::path& path, const char* flag, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      throw Error(e.kind(), std::string(flag) + " " + path.string() + ": " + e.what());
    }
  };
  if (config.rules_path) {
    wrap(*config.rules_path, "--rules", [&] { r.rules = load_rule_table(*config.rules_path); });
  }
  if (config.cues_path) {
    wrap(*config.cues_path, "--cues", [&] { r.cues = CueLexicon::load(*config.cues_path); });
  }
  if (config.user_weights_path) {
    wrap(*config.user_weights_path, "--user-weights", [&] {
      const std::string content = read_file(*config.user_weights_path);
      for (Lang lang : {Lang::uk, Lang::en}) r.user_weights[lang] = parse_user_weights(content, lang);
    });
  }
  if (config.subjects_path) {
    wrap(*config.subjects_path, "--subjects",
         [&] { r.subjects = load_subjects(*config.subjects_path); });
  }
  return r;
}

namespace {

bool looks_like_txt(const std::string& path) {
  std::string ext = std::filesystem::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".txt";
}

template <class Fn>
auto in_stage(const std::string& path, std::string_view stage, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + std::string(stage) + ": " + e.what());
  }
}

}  // namespace

DocumentResult analyze_document(std::string_view bytes, const std::string& path, std::size_t id,
                                const PipelineConfig& config, const Resources& resources,
                                bool analyze_only) {
  DocumentResult result;
  result.id = id;
  result.path = path;

  const RawDocument raw = in_stage(path, "decode", [&] {
    const bool txt = config.format == InputFormat::txt ||
                     (config.format == InputFormat::detect && looks_like_txt(path));
    return txt ? parse_plaintext(bytes, config.lang) : parse_docjson(bytes);
  });

  // Structure recognition also wraps the main part into sentences.
  result.document = in_stage(path, "structure", [&] { return recognize(raw, resources.rules); });
  const Document& doc = result.document;

  result.keywords = in_stage(path, "keywords", [&] {
    auto keywords = derive_keywords(doc, config.keyword_count);
    if (const auto it = resources.user_weights.find(doc.lang); it != resources.user_weights.end()) {
      apply_user_weights(keywords, it->second);
    }
    return keywords;
  });

  in_stage(path, "weights", [&] {
    const WeightContext ctx = WeightContext::build(doc, result.keywords, resources.cues);
    result.sentences.reserve(doc.main.size());
    for (const auto& s : doc.main) {
      SentenceTrace t;
      t.ref = {id, s.id};
      t.paragraph = s.paragraph_id;
      t.text = s.text;
      t.n = s.n;
      t.m = s.m;
      t.breakdown = weigh(s, ctx);
      t.usefulness = config.boost ? boosted_total(s, t.breakdown, ctx) : t.breakdown.total;
      result.sentences.push_back(std::move(t));
    }
    result.analysis = build_analysis(doc, result.keywords);
    return 0;
  });

  if (analyze_only) return result;

  in_stage(path, "selection", [&] {
    const Stopwords& stopwords = Stopwords::defaults(doc.lang);
    std::vector<Candidate> candidates;
    candidates.reserve(doc.main.size());
    for (const auto& s : doc.main) {
      candidates.push_back(make_candidate({id, s.id}, result.sentences[s.id].usefulness,
                                          content_signature(s, stopwords)));
    }
    const auto ranked = rank(std::move(candidates), config.clip_factor);
    for (std::size_t i = 0; i < ranked.size(); ++i) result.sentences[ranked[i].ref.sentence].rank = i;
    result.selected = order_output(select_summary(ranked, config.limit()));
    for (const auto& c : result.selected) result.sentences[c.ref.sentence].selected = true;
    return 0;
  });
  return result;
}

SummaryOutput run(const PipelineConfig& config, RunMode mode) {
  config.validate();
  if (mode == RunMode::relations && !config.subjects_path) {
    throw Error(ErrorKind::InvalidConfig, "--subjects is required for relations");
  }
  const Resources resources = Resources::load(config);

  SummaryOutput output;
  const std::size_t count = config.inputs.size();
  output.documents.resize(count);
  std::vector<std::exception_ptr> failures(count);

  auto work = [&](std::size_t i) {
    const std::string path = config.inputs[i].string();
    try {
      const std::string bytes = in_stage(path, "decode", [&] { return read_file(config.inputs[i]); });
      output.documents[i] =
          analyze_document(bytes, path, i, config, resources, mode != RunMode::summarize);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  };

  const std::size_t workers = std::min(config.jobs, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) work(i);
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  if (config.subjects_path && (mode == RunMode::relations || config.relations_path)) {
    RelationGraph graph;
    for (const auto& d : output.documents) {
      auto part = in_stage(d.path, "relations",
                           [&] { return extract_relations(d.document, resources.subjects, d.id); });
      for (auto& e : part.edges) graph.edges.push_back(std::move(e));
    }
    output.relations = std::move(graph);
  }
  if (mode != RunMode::summarize) return output;

  ConsolidatedRepository repository(output.documents.front().document.lang, config.dup_threshold,
                                    config.fuse_threshold);
  for (auto& d : output.documents) {
    for (const auto& c : d.selected) {
      const auto outcome = repository.consolidate(d.document.main[c.ref.sentence], c.ref);
      d.sentences[c.ref.sentence].consolidation = outcome.kind;
    }
  }
  for (const auto& e : repository.entries()) {
    output.abstract.push_back(e.sentence.text);
    output.provenance.push_back(e.ref);
  }
  return output;
}

namespace {

// Block text may span several source lines; the summary keeps one sentence
// per line.
std::string single_line(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (c == '\n' || c == '\r' || c == '\t' || c == ' ') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

}  // namespace

std::string render_summary(const SummaryOutput& output) {
  std::string out;
  for (const auto& line : output.abstract) {
    out += single_line(line);
    out += '\n';
  }
  return out;
}

std::string render_trace(const SummaryOutput& output) {
  json documents = json::array();
  for (const auto& d : output.documents) {
    json analysis = analysis_to_json(d.analysis);
    auto& sentences = analysis["sentences"];
    for (std::size_t i = 0; i < d.sentences.size(); ++i) {
      const SentenceTrace& t = d.sentences[i];
      json& s = sentences[i];
      s["Paragraph"] = t.paragraph;
      s["Text"] = t.text;
      s["N"] = t.n;
      s["M"] = t.m;
      s["Location"] = t.breakdown.location;
      s["Cuephrase"] = t.breakdown.cuephrase;
      s["Statterm"] = t.breakdown.statterm;
      s["Addterm"] = t.breakdown.addterm;
      s["Total"] = t.breakdown.total;
      s["Usefulness"] = t.usefulness;
      s["Rank"] = t.rank ? json(*t.rank) : json(nullptr);
      s["Selected"] = t.selected;
      s["Consolidation"] =
          t.consolidation ? json(std::string(to_string(*t.consolidation))) : json(nullptr);
    }
    json entry = {{"Document", d.id},
                  {"Path", d.path},
                  {"Lang", std::string(to_string(d.document.lang))},
                  {"Title", d.document.title},
                  {"Authors", d.document.authors},
                  {"AuthorKeywords", d.document.keywords},
                  {"Literature", d.document.literature}};
    for (auto& [key, value] : analysis.items()) entry[key] = std::move(value);
    documents.push_back(std::move(entry));
  }
  json abstract = json::array();
  for (std::size_t i = 0; i < output.abstract.size(); ++i) {
    abstract.push_back({{"Text", output.abstract[i]},
                        {"Document", output.provenance[i].document},
                        {"SentenceID", output.provenance[i].sentence}});
  }
  return json{{"documents", std::move(documents)}, {"abstract", std::move(abstract)}}.dump(2) +
         "\n";
}

void write_outputs(const SummaryOutput& output, const PipelineConfig& config) {
  if (config.out_path) write_file(*config.out_path, render_summary(output));
  if (config.trace_path) write_file(*config.trace_path, render_trace(output));
  if (config.relations_path && output.relations) {
    write_file(*config.relations_path, relations_to_json(*output.relations));
  }
}

std::optional<DumpTarget> parse_dump_target(std::string_view s) noexcept {
  if (s == "rules") return DumpTarget::rules;
  if (s == "cues") return DumpTarget::cues;
  if (s == "stopwords") return DumpTarget::stopwords;
  return std::nullopt;
}

std::string dump_defaults(DumpTarget what, Lang lang) {
  switch (what) {
    case DumpTarget::rules:
      return rule_table_to_json(default_rule_table());
    case DumpTarget::cues:
      return lexicon::format_line_list(lexicon::default_cues(), "cue phrases, one per line");
    case DumpTarget::stopwords:
      return lexicon::format_line_list(
          lexicon::default_stopwords(lang),
          std::string("stop words (") + std::string(to_string(lang)) + "), one per line");
  }
  return {};
}

}  // namespace docsum
