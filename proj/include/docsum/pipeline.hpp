#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "docsum/doc_model.hpp"
#include "docsum/fusion.hpp"
#include "docsum/recognizer.hpp"
#include "docsum/selector.hpp"
#include "docsum/store.hpp"
#include "docsum/weighting.hpp"

namespace docsum {

enum class InputFormat { detect, docjson, txt };

std::optional<InputFormat> parse_input_format(std::string_view s) noexcept;

struct PipelineConfig {
  std::vector<std::filesystem::path> inputs;
  InputFormat format = InputFormat::detect;  // detect: ".txt" -> txt, else docjson
  Lang lang = Lang::uk;                      // language of txt inputs
  std::optional<double> ratio;               // exactly one of ratio / max_sentences
  std::optional<std::size_t> max_sentences;
  double clip_factor = kDefaultClipFactor;
  double dup_threshold = kDefaultDupThreshold;
  double fuse_threshold = kDefaultFuseThreshold;
  std::size_t keyword_count = kDefaultKeywordCount;
  bool boost = false;
  std::optional<std::filesystem::path> rules_path;
  std::optional<std::filesystem::path> cues_path;
  std::optional<std::filesystem::path> user_weights_path;
  std::optional<std::filesystem::path> subjects_path;
  std::optional<std::filesystem::path> out_path;
  std::optional<std::filesystem::path> trace_path;
  std::optional<std::filesystem::path> relations_path;
  std::size_t jobs = 1;

  // Throws with the offending flag named in the message.
  void validate() const;
  SummaryLimit limit() const;
};

// Rule table, lexicons and dictionaries loaded once per run.
struct Resources {
  RuleTable rules = default_rule_table();
  CueLexicon cues = CueLexicon::defaults();
  std::map<Lang, UserWeights> user_weights;
  std::vector<std::string> subjects;

  static Resources load(const PipelineConfig& config);
};

// Per-sentence record of every stage's output.
struct SentenceTrace {
  SentenceRef ref;
  std::size_t paragraph = 0;
  std::string text;
  int n = 1;
  int m = 1;
  WeightBreakdown breakdown;
  double usefulness = 0.0;
  std::optional<std::size_t> rank;
  bool selected = false;
  std::optional<ConsolidationKind> consolidation;
};

struct DocumentResult {
  std::size_t id = 0;
  std::string path;
  Document document;
  std::vector<KeywordRecord> keywords;
  Analysis analysis;
  std::vector<SentenceTrace> sentences;  // indexed by sentence id
  std::vector<Candidate> selected;       // source order
};

struct SummaryOutput {
  std::vector<std::string> abstract;
  std::vector<SentenceRef> provenance;  // source of each abstract line
  std::vector<DocumentResult> documents;
  std::optional<RelationGraph> relations;
};

enum class RunMode {
  summarize,  // full pipeline
  analyze,    // stop after weighting
  relations,  // subject-constant graph only
};

// Decodes, recognizes, forms keywords, weighs and (unless analyze_only)
// ranks and selects one document.  Errors carry the path and stage name.
DocumentResult analyze_document(std::string_view bytes, const std::string& path, std::size_t id,
                                const PipelineConfig& config, const Resources& resources,
                                bool analyze_only = false);

// Runs the pipeline over config.inputs in order.  Does not write files.
SummaryOutput run(const PipelineConfig& config, RunMode mode = RunMode::summarize);

std::string render_summary(const SummaryOutput& output);
std::string render_trace(const SummaryOutput& output);

// Writes summary, trace and relations to the configured paths.
void write_outputs(const SummaryOutput& output, const PipelineConfig& config);

enum class DumpTarget { rules, cues, stopwords };

std::optional<DumpTarget> parse_dump_target(std::string_view s) noexcept;
std::string dump_defaults(DumpTarget what, Lang lang = Lang::uk);

}  // namespace docsum
