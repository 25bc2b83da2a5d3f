// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "docsum/error.hpp"
#include "docsum/fusion.hpp"
#include "docsum/pipeline.hpp"
#include "docsum/recognizer.hpp"
#include "docsum/selector.hpp"
#include "docsum/store.hpp"
#include "docsum/weighting.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace {

using namespace docsum;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr double kSumTolerance = 1e-12;
constexpr double kRankBudgetSeconds = 1.0;
constexpr double kPipelineBudgetSeconds = 10.0;
constexpr double kCueCoverage = 0.9;
constexpr std::size_t kMinCueTokens = 3;

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

SentenceUnit unit(const std::string& text, Lang lang, std::size_t id = 0) {
  SentenceUnit s;
  s.id = id;
  s.text = text;
  s.tokens = tokenize(text, lang);
  return s;
}

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("docsum_acceptance_" + std::to_string(::getpid()) + "_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

Verdict location_table() {
  Verdict v;
  const int pos[] = {1, 3};
  for (int n : pos) {
    for (int m : pos) {
      const double want = 1.0 / (n * m);
      if (location(n, m) != want) v.fail("location(" + std::to_string(n) + "," + std::to_string(m) + ")");
    }
  }
  for (auto [n, m] : std::vector<std::pair<int, int>>{{0, 1}, {2, 1}, {1, 2}, {3, 4}, {-1, 3}}) {
    try {
      location(n, m);
      v.fail("no error for (" + std::to_string(n) + "," + std::to_string(m) + ")");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvalidPosition) v.fail("wrong error kind");
    }
  }
  return v;
}

Verdict weight_ranges() {
  Verdict v;
  testing::Rng rng(1001);
  std::size_t checked = 0;
  while (checked < 1000) {
    const Lang lang = checked % 2 ? Lang::uk : Lang::en;
    const auto g = testing::structured_document(rng, lang, {3, 6, 4, testing::coin(rng)});
    const auto doc = recognize(g.raw, default_rule_table());
    const auto ctx = WeightContext::build(doc, derive_keywords(doc, kDefaultKeywordCount),
                                          CueLexicon::defaults());
    for (const auto& s : doc.main) {
      const auto w = weigh(s, ctx);
      const bool loc_ok = w.location == 1.0 || w.location == 1.0 / 3 || w.location == 1.0 / 9;
      const bool cue_ok = w.cuephrase == 0.0 || w.cuephrase == 1.0;
      const bool stat_ok = w.statterm >= 0.0 && w.statterm <= 1.0;
      const bool add_ok = w.addterm >= 0.0 && w.addterm <= 1.0;
      const double sum = w.location + w.cuephrase + w.statterm + w.addterm;
      if (!loc_ok || !cue_ok || !stat_ok || !add_ok) v.fail("component out of range: " + s.text);
      if (std::abs(w.total - sum) > kSumTolerance) v.fail("total differs from component sum");
      if (w.total < 1.0 / 9 - kSumTolerance || w.total > 4.0 + kSumTolerance) v.fail("total out of range");
      if (++checked == 1000) break;
    }
  }
  return v;
}

Verdict rank_matches_brute_force() {
  Verdict v;
  testing::Rng rng(1003);
  const auto start = Clock::now();
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = testing::uniform(rng, 1, 6);
    std::vector<Candidate> cs;
    std::vector<testing::OracleItem> items;
    std::vector<std::vector<double>> sim(n, std::vector<double>(n, 0.0));
    SimilarityMatrix matrix(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double q = testing::uniform_real(rng, 1e-3, 4.0);
      cs.push_back(make_candidate({0, i}, q, {}));
      items.push_back({0, i, q});
      for (std::size_t j = 0; j < i; ++j) {
        const double s = testing::coin(rng, 0.3) ? 0.0 : testing::uniform_real(rng, 0.0, 1.0);
        sim[i][j] = sim[j][i] = s;
        matrix.set(i, j, s);
      }
    }
    const double k = testing::uniform_real(rng, 0.1, 10.0);
    const auto expected = testing::brute_force_rank(items, sim, k);
    const auto actual = rank(cs, k, matrix);
    std::vector<std::size_t> got;
    for (const auto& c : actual) got.push_back(c.ref.sentence);
    if (got != expected) v.fail("order differs in trial " + std::to_string(trial));
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= kRankBudgetSeconds) v.fail("took " + std::to_string(elapsed) + " s");
  return v;
}

Verdict near_duplicate_demoted() {
  Verdict v;
  const auto stop = Stopwords::defaults(Lang::en);
  const auto x = unit("The ranking system selects useful sentences.", Lang::en, 0);
  const auto y = unit("Fusion merges overlapping text.", Lang::en, 1);
  const auto x2 = unit("The ranking system selects useful sentences quickly.", Lang::en, 2);
  std::vector<Candidate> cs{make_candidate({0, 0}, 3.0, content_signature(x, stop)),
                            make_candidate({0, 1}, 1.5, content_signature(y, stop)),
                            make_candidate({0, 2}, 2.9, content_signature(x2, stop))};
  const auto out = rank(cs, kDefaultClipFactor);
  std::vector<std::size_t> order;
  for (const auto& c : out) order.push_back(c.ref.sentence);
  if (order != std::vector<std::size_t>{0, 1, 2}) v.fail("X' not ranked after Y");
  return v;
}

Verdict recognition_exact() {
  Verdict v;
  testing::Rng rng(1005);
  for (int i = 0; i < 20; ++i) {
    const auto g = testing::structured_document(rng, i % 2 ? Lang::uk : Lang::en,
                                                {3, 8, 4, testing::coin(rng)});
    const auto doc = recognize(g.raw, default_rule_table());
    for (std::size_t b = 0; b < g.expected.size(); ++b) {
      if (doc.matches[b].element != g.expected[b]) {
        v.fail("doc " + std::to_string(i) + " block " + std::to_string(b));
      }
    }
  }
  return v;
}

std::multiset<std::string> norm_multiset(const std::string& text, Lang lang) {
  const auto v = testing::content_norms(text, lang);
  return {v.begin(), v.end()};
}

Verdict fusion_properties() {
  Verdict v;
  testing::Rng rng(1007);
  for (int i = 0; i < 200; ++i) {
    const Lang lang = i % 2 ? Lang::uk : Lang::en;
    const auto& stop = Stopwords::defaults(lang);
    const auto a = unit(testing::distinct_sentence(rng, lang, 10, 2, 8), lang);
    const auto b = unit(testing::distinct_sentence(rng, lang, 10, 2, 8), lang);
    const auto na = testing::content_norms(a.text, lang);
    const auto nb = testing::content_norms(b.text, lang);

    std::set<std::string> set_union(na.begin(), na.end());
    set_union.insert(nb.begin(), nb.end());
    const auto united = norm_multiset(fuse(a, b, FusionMode::unite, stop).text, lang);
    if (united != std::multiset<std::string>(set_union.begin(), set_union.end())) {
      v.fail("union: " + a.text + " | " + b.text);
    }

    const auto inter = testing::content_norms(fuse(a, b, FusionMode::intersect, stop).text, lang);
    if (inter.size() != testing::lcs_length(na, nb) || !testing::is_subsequence(inter, na) ||
        !testing::is_subsequence(inter, nb)) {
      v.fail("intersection: " + a.text + " | " + b.text);
    }

    const auto x = unit(testing::overlapping_sentence(rng, lang, 6, 1, 10), lang);
    if (norm_multiset(fuse(x, x, FusionMode::unite, stop).text, lang) != norm_multiset(x.text, lang)) {
      v.fail("fuse(x, x): " + x.text);
    }
  }
  return v;
}

Verdict no_duplicates_survive() {
  Verdict v;
  testing::Rng rng(1009);
  const Lang lang = Lang::en;
  ConsolidatedRepository repo(lang, 0.8, 0.5);
  for (std::size_t i = 0; i < 100; ++i) {
    repo.consolidate(unit(testing::overlapping_sentence(rng, lang, 8, 2, 5), lang, i), {i / 10, i % 10});
  }
  const auto& e = repo.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const double s = testing::jaccard(testing::content_norms(e[i].sentence.text, lang),
                                        testing::content_norms(e[j].sentence.text, lang));
      if (s >= 0.8) v.fail("entries " + std::to_string(i) + " and " + std::to_string(j));
    }
  }
  return v;
}

Verdict store_round_trip() {
  Verdict v;
  testing::Rng rng(1011);
  const auto dir = scratch_dir("store");
  const auto file = dir / "analysis.json";
  for (int i = 0; i < 50; ++i) {
    const auto a = testing::random_analysis(rng);
    save_analysis(a, file);
    if (!(load_analysis(file) == a)) v.fail("round trip " + std::to_string(i));
  }
  auto j = nlohmann::json::parse(read_file(file));
  if (j["sentences"].empty()) {
    v.fail("no sentence to corrupt");
  } else {
    j["sentences"][0]["Sum"] = j["sentences"][0]["Sum"].get<double>() + 0.5;
    write_file(file, j.dump());
    try {
      load_analysis(file);
      v.fail("corrupted Sum accepted");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvariantViolation) v.fail("wrong error kind for corrupted Sum");
    }
  }
  fs::remove_all(dir);
  return v;
}

Verdict deterministic_and_fast() {
  Verdict v;
  testing::Rng rng(1013);
  const auto dir = scratch_dir("pipeline");
  PipelineConfig config;
  for (int i = 0; i < 100; ++i) {
    const auto g = testing::structured_document(rng, i % 2 ? Lang::uk : Lang::en, {50, 50, 4, false});
    const auto path = dir / ("doc" + std::to_string(i) + ".json");
    write_file(path, serialize_docjson(g.raw));
    config.inputs.push_back(path);
  }
  config.jobs = 4;
  std::string summary[2];
  std::string trace[2];
  for (int r = 0; r < 2; ++r) {
    const auto start = Clock::now();
    const auto out = run(config);
    summary[r] = render_summary(out);
    trace[r] = render_trace(out);
    const double elapsed = seconds_since(start);
    if (elapsed >= kPipelineBudgetSeconds) v.fail("run " + std::to_string(r) + " took " + std::to_string(elapsed) + " s");
  }
  if (summary[0] != summary[1]) v.fail("summaries differ");
  if (trace[0] != trace[1]) v.fail("traces differ");
  if (summary[0].empty()) v.fail("empty summary");
  fs::remove_all(dir);
  return v;
}

Verdict conclusions_selected() {
  Verdict v;
  testing::Rng rng(1015);
  const auto dir = scratch_dir("conclusions");
  int hits = 0;
  const int total = 20;
  for (int i = 0; i < total; ++i) {
    const auto g = testing::structured_document(rng, i % 2 ? Lang::uk : Lang::en, {4, 8, 4, true});
    const auto path = dir / ("doc" + std::to_string(i) + ".json");
    write_file(path, serialize_docjson(g.raw));
    PipelineConfig config;
    config.inputs = {path};
    config.ratio = 0.2;
    const auto out = run(config);
    const auto& doc = out.documents[0];
    const bool hit = std::any_of(doc.sentences.begin(), doc.sentences.end(), [&](const SentenceTrace& s) {
      return s.selected && s.breakdown.cuephrase == 1.0 &&
             doc.document.main[s.ref.sentence].tokens.size() >= kMinCueTokens;
    });
    hits += hit;
  }
  const double coverage = static_cast<double>(hits) / total;
  std::ostringstream detail;
  detail << hits << "/" << total;
  if (coverage < kCueCoverage) v.fail(detail.str());
  v.detail = detail.str();
  fs::remove_all(dir);
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"location table is exact and other positions are rejected", location_table},
      {"weight components stay in range and total equals their sum", weight_ranges},
      {"greedy ranking matches the brute-force simulator", rank_matches_brute_force},
      {"near-duplicate is ranked after a dissimilar sentence", near_duplicate_demoted},
      {"recognizer labels generated articles exactly", recognition_exact},
      {"fusion union, intersection and self-union properties", fusion_properties},
      {"consolidated repository keeps no pair at the duplicate threshold", no_duplicates_survive},
      {"store round trip and corrupted Sum rejection", store_round_trip},
      {"pipeline is deterministic and within its time budget", deterministic_and_fast},
      {"conclusion cue sentences reach the abstract", conclusions_selected},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first;
    if (!v.detail.empty()) std::cout << " (" << v.detail << ")";
    std::cout << '\n';
    failures += !v.pass;
  }
  return failures == 0 ? 0 : 1;
}
