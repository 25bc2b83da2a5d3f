// docsum: extractive multi-document summarizer.
//
//   docsum summarize --input a.json b.json --ratio 0.2 --out summary.txt --trace trace.json
//   docsum analyze   --input a.json --trace trace.json
//   docsum relations --input a.json --subjects subjects.txt
//   docsum dump rules|cues|stopwords [--lang uk|en]

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "docsum/error.hpp"
#include "docsum/pipeline.hpp"

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string format = "auto";
  std::string lang = "uk";
  std::optional<double> ratio;
  std::optional<std::size_t> max_sentences;
  double clip_factor = docsum::kDefaultClipFactor;
  double dup_threshold = docsum::kDefaultDupThreshold;
  double fuse_threshold = docsum::kDefaultFuseThreshold;
  std::size_t keyword_count = docsum::kDefaultKeywordCount;
  bool boost = false;
  std::string rules, cues, user_weights, subjects, out, trace, relations;
  std::size_t jobs = 1;
};

void add_pipeline_flags(CLI::App& cmd, Options& o, bool ranking) {
  cmd.add_option("-i,--input,inputs", o.inputs, "Input documents, processed in this order")
      ->required();
  cmd.add_option("--format", o.format, "Input format: docjson, txt or auto (by extension)")
      ->check(CLI::IsMember({"docjson", "txt", "auto"}))
      ->capture_default_str();
  cmd.add_option("--lang", o.lang, "Language of txt inputs")
      ->check(CLI::IsMember({"uk", "en"}))
      ->capture_default_str();
  cmd.add_option("--cues", o.cues, "Cue phrase file (one phrase per line, '#' comments)");
  cmd.add_option("--user-weights", o.user_weights, "JSON map word -> weight in [0, 1]");
  cmd.add_option("--rules", o.rules, "Recognition rule table (JSON, see `dump rules`)");
  cmd.add_option("--keywords", o.keyword_count,
                 "Keywords derived when a document lists none")
      ->capture_default_str();
  cmd.add_option("--trace", o.trace, "Write the analysis trace (JSON) here");
  cmd.add_option("--jobs", o.jobs, "Documents analyzed in parallel")->capture_default_str();
  if (!ranking) return;
  auto* ratio = cmd.add_option("--ratio", o.ratio, "Summary length as a fraction of sentences (default 0.2)");
  auto* max = cmd.add_option("--max-sentences", o.max_sentences, "Summary length as a sentence count");
  ratio->excludes(max);
  cmd.add_option("--clip-factor", o.clip_factor, "Redundancy clip factor k > 0")
      ->capture_default_str();
  cmd.add_option("--dup-threshold", o.dup_threshold, "Similarity at which a sentence is dropped")
      ->capture_default_str();
  cmd.add_option("--fuse-threshold", o.fuse_threshold, "Similarity at which sentences are fused")
      ->capture_default_str();
  cmd.add_flag("--boost", o.boost, "Add mean user weight of matched keywords to usefulness (off by default)");
  cmd.add_option("--subjects", o.subjects, "Subject-constant dictionary (one per line)");
  cmd.add_option("--out", o.out, "Write the summary here instead of stdout");
  cmd.add_option("--relations", o.relations, "Write the relation graph (JSON) here");
}

docsum::PipelineConfig to_config(const Options& o) {
  docsum::PipelineConfig c;
  for (const auto& in : o.inputs) c.inputs.emplace_back(in);
  c.format = docsum::parse_input_format(o.format).value_or(docsum::InputFormat::detect);
  c.lang = docsum::parse_lang(o.lang).value_or(docsum::Lang::uk);
  c.ratio = o.ratio;
  c.max_sentences = o.max_sentences;
  c.clip_factor = o.clip_factor;
  c.dup_threshold = o.dup_threshold;
  c.fuse_threshold = o.fuse_threshold;
  c.keyword_count = o.keyword_count;
  c.boost = o.boost;
  c.jobs = o.jobs;
  auto set = [](std::optional<std::filesystem::path>& dst, const std::string& v) {
    if (!v.empty()) dst = v;
  };
  set(c.rules_path, o.rules);
  set(c.cues_path, o.cues);
  set(c.user_weights_path, o.user_weights);
  set(c.subjects_path, o.subjects);
  set(c.out_path, o.out);
  set(c.trace_path, o.trace);
  set(c.relations_path, o.relations);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extractive multi-document summarizer with a weighted-sentence trace"};
  app.require_subcommand(1);

  Options summarize_opts;
  auto* summarize = app.add_subcommand("summarize", "Run the full pipeline and emit an abstract");
  add_pipeline_flags(*summarize, summarize_opts, true);

  Options analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "Stop after weighting and emit the trace only");
  add_pipeline_flags(*analyze, analyze_opts, false);

  Options relations_opts;
  auto* relations = app.add_subcommand("relations", "Extract the subject-constant relation graph");
  relations->add_option("-i,--input,inputs", relations_opts.inputs, "Input documents")->required();
  relations->add_option("--format", relations_opts.format, "docjson, txt or auto")
      ->check(CLI::IsMember({"docjson", "txt", "auto"}));
  relations->add_option("--lang", relations_opts.lang, "Language of txt inputs")
      ->check(CLI::IsMember({"uk", "en"}));
  relations->add_option("--subjects", relations_opts.subjects, "Subject-constant dictionary")
      ->required();
  relations->add_option("--relations,--out", relations_opts.relations,
                        "Write the graph here instead of stdout");
  relations->add_option("--rules", relations_opts.rules, "Recognition rule table (JSON)");

  std::string dump_what;
  std::string dump_lang = "uk";
  auto* dump = app.add_subcommand("dump", "Print an embedded default for editing");
  dump->add_option("what", dump_what, "rules, cues or stopwords")
      ->required()
      ->check(CLI::IsMember({"rules", "cues", "stopwords"}));
  dump->add_option("--lang", dump_lang, "Stop-word language")
      ->check(CLI::IsMember({"uk", "en"}))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*dump) {
      std::cout << docsum::dump_defaults(*docsum::parse_dump_target(dump_what),
                                         *docsum::parse_lang(dump_lang));
      return 0;
    }
    if (*summarize) {
      const auto config = to_config(summarize_opts);
      const auto output = docsum::run(config, docsum::RunMode::summarize);
      docsum::write_outputs(output, config);
      if (!config.out_path) std::cout << docsum::render_summary(output);
      return output.abstract.empty() ? 1 : 0;
    }
    if (*analyze) {
      const auto config = to_config(analyze_opts);
      const auto output = docsum::run(config, docsum::RunMode::analyze);
      if (config.trace_path) {
        docsum::write_outputs(output, config);
      } else {
        std::cout << docsum::render_trace(output);
      }
      return 0;
    }
    if (*relations) {
      auto config = to_config(relations_opts);
      const auto output = docsum::run(config, docsum::RunMode::relations);
      if (config.relations_path) {
        docsum::write_outputs(output, config);
      } else {
        std::cout << docsum::relations_to_json(*output.relations);
      }
      return 0;
    }
  } catch (const docsum::Error& e) {
    std::cerr << "docsum: " << docsum::to_string(e.kind()) << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "docsum: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
