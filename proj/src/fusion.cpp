#include "docsum/fusion.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "docsum/error.hpp"
#include "docsum/lexicon.hpp"
#include "docsum/text.hpp"

namespace docsum {

std::string_view to_string(FusionMode mode) noexcept {
  return mode == FusionMode::unite ? "union" : "intersection";
}

std::string_view to_string(ConsolidationKind kind) noexcept {
  switch (kind) {
    case ConsolidationKind::appended: return "appended";
    case ConsolidationKind::fused: return "fused";
    case ConsolidationKind::dropped: return "dropped";
  }
  return "appended";
}

std::vector<std::pair<std::size_t, std::size_t>> content_lcs(const SentenceUnit& a,
                                                             const SentenceUnit& b,
                                                             const Stopwords& stopwords) {
  std::vector<std::size_t> ca;
  std::vector<std::size_t> cb;
  for (std::size_t i = 0; i < a.tokens.size(); ++i) {
    if (is_content(a.tokens[i], stopwords)) ca.push_back(i);
  }
  for (std::size_t j = 0; j < b.tokens.size(); ++j) {
    if (is_content(b.tokens[j], stopwords)) cb.push_back(j);
  }
  // Suffix table: len[i][j] = LCS length of ca[i..] and cb[j..].
  const std::size_t rows = ca.size() + 1;
  const std::size_t cols = cb.size() + 1;
  std::vector<std::size_t> len(rows * cols, 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return len[i * cols + j]; };
  for (std::size_t i = ca.size(); i-- > 0;) {
    for (std::size_t j = cb.size(); j-- > 0;) {
      if (a.tokens[ca[i]].norm == b.tokens[cb[j]].norm) {
        at(i, j) = at(i + 1, j + 1) + 1;
      } else {
        at(i, j) = std::max(at(i + 1, j), at(i, j + 1));
      }
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ca.size() && j < cb.size()) {
    if (a.tokens[ca[i]].norm == b.tokens[cb[j]].norm) {
      pairs.emplace_back(ca[i], cb[j]);
      ++i;
      ++j;
    } else if (at(i + 1, j) >= at(i, j + 1)) {
      ++i;
    } else {
      ++j;
    }
  }
  return pairs;
}

namespace {

char terminal_punctuation(std::string_view s) {
  s = text::trim(s);
  if (!s.empty() && (s.back() == '.' || s.back() == '!' || s.back() == '?')) return s.back();
  return 0;
}

class Emitter {
 public:
  explicit Emitter(const Stopwords& stopwords) : stopwords_(stopwords) {}

  bool seen(const Token& t) const { return emitted_.contains(t.norm); }
  bool content(const Token& t) const { return is_content(t, stopwords_); }

  void emit(const Token& t) {
    if (content(t)) {
      if (!emitted_.insert(t.norm).second) return;
    }
    surfaces_.push_back(t.surface);
  }

  // Aligned tokens are always kept, even when the norm repeats.
  void keep(const Token& t) {
    if (content(t)) emitted_.insert(t.norm);
    surfaces_.push_back(t.surface);
  }

  std::string text(char terminal) const {
    std::string out;
    for (const auto& s : surfaces_) {
      if (!out.empty()) out += ' ';
      out += s;
    }
    if (!out.empty() && terminal) out += terminal;
    return out;
  }

 private:
  const Stopwords& stopwords_;
  std::unordered_set<std::string> emitted_;
  std::vector<std::string> surfaces_;
};

}  // namespace

FusionResult fuse(const SentenceUnit& a, const SentenceUnit& b, FusionMode mode,
                  const Stopwords& stopwords, SentenceRef a_ref, SentenceRef b_ref) {
  FusionResult result;
  result.mode = mode;
  result.sources = {a_ref, b_ref};
  const auto pairs = content_lcs(a, b, stopwords);
  Emitter out(stopwords);

  if (mode == FusionMode::intersect) {
    for (const auto& [ia, ib] : pairs) out.keep(a.tokens[ia]);
    result.text = out.text(terminal_punctuation(a.text));
    return result;
  }

  std::size_t next_a = 0;
  std::size_t next_b = 0;
  auto walk_gap = [&](std::size_t end_a, std::size_t end_b) {
    for (std::size_t i = next_a; i < end_a; ++i) out.emit(a.tokens[i]);
    // b contributes the stretch between its first and last new content token.
    std::optional<std::size_t> first;
    std::optional<std::size_t> last;
    for (std::size_t j = next_b; j < end_b; ++j) {
      const Token& t = b.tokens[j];
      if (out.content(t) && !out.seen(t)) {
        if (!first) first = j;
        last = j;
      }
    }
    if (first) {
      for (std::size_t j = *first; j <= *last; ++j) out.emit(b.tokens[j]);
    }
  };
  for (const auto& [ia, ib] : pairs) {
    walk_gap(ia, ib);
    out.keep(a.tokens[ia]);
    next_a = ia + 1;
    next_b = ib + 1;
  }
  walk_gap(a.tokens.size(), b.tokens.size());
  result.text = out.text(terminal_punctuation(a.text));
  return result;
}

// ---------------------------------------------------------------------------
// repository

void validate_thresholds(double dup_threshold, double fuse_threshold) {
  if (!(dup_threshold > 0.0 && dup_threshold <= 1.0)) {
    throw Error(ErrorKind::InvalidConfig, "dup threshold must lie in (0, 1]");
  }
  if (!(fuse_threshold >= 0.0 && fuse_threshold < dup_threshold)) {
    throw Error(ErrorKind::InvalidConfig, "fuse threshold must lie in [0, dup threshold)");
  }
}

ConsolidatedRepository::ConsolidatedRepository(Lang lang, double dup_threshold,
                                               double fuse_threshold)
    : lang_(lang), dup_threshold_(dup_threshold), fuse_threshold_(fuse_threshold) {
  validate_thresholds(dup_threshold, fuse_threshold);
}

ConsolidationOutcome ConsolidatedRepository::consolidate(const SentenceUnit& candidate,
                                                         SentenceRef ref) {
  const Stopwords& stopwords = Stopwords::defaults(lang_);
  SimilaritySignature signature = content_signature(candidate, stopwords);

  ConsolidationOutcome outcome;
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const double sim = similarity(signature, entries_[i].signature);
    if (!best || sim > outcome.similarity) {
      best = i;
      outcome.similarity = sim;
    }
  }

  if (best && outcome.similarity >= dup_threshold_) {
    outcome.kind = ConsolidationKind::dropped;
    outcome.entry = *best;
    return outcome;
  }

  if (best && outcome.similarity >= fuse_threshold_) {
    RepositoryEntry& target = entries_[*best];
    FusionResult fused = fuse(candidate, target.sentence, FusionMode::unite, stopwords, ref,
                              target.ref);
    SentenceUnit merged = target.sentence;
    merged.tokens = tokenize(fused.text, lang_);
    merged.text = std::move(fused.text);
    SimilaritySignature merged_sig = content_signature(merged, stopwords);

    // Falls back to appending when the merged text reaches another entry.
    bool keeps_invariant = !merged.tokens.empty();
    for (std::size_t j = 0; j < entries_.size() && keeps_invariant; ++j) {
      if (j != *best && similarity(merged_sig, entries_[j].signature) >= dup_threshold_) {
        keeps_invariant = false;
      }
    }
    if (keeps_invariant) {
      target.sentence = std::move(merged);
      target.signature = std::move(merged_sig);
      target.fused_from.push_back(ref);
      outcome.kind = ConsolidationKind::fused;
      outcome.entry = *best;
      return outcome;
    }
  }

  RepositoryEntry entry;
  entry.ref = ref;
  entry.sentence = candidate;
  entry.signature = std::move(signature);
  entries_.push_back(std::move(entry));
  outcome.kind = ConsolidationKind::appended;
  outcome.entry = entries_.size() - 1;
  return outcome;
}

// ---------------------------------------------------------------------------
// relations

std::vector<std::string> RelationGraph::nodes() const {
  std::set<std::string> all;
  for (const auto& e : edges) {
    all.insert(e.subject);
    all.insert(e.object);
  }
  return {all.begin(), all.end()};
}

namespace {

bool punctuation_between(const SentenceUnit& s, const Token& prev, const Token& next) {
  const std::size_t from = prev.offset + prev.surface.size();
  for (std::size_t pos = from; pos < next.offset;) {
    if (!text::is_space(text::next_codepoint(s.text, pos))) return true;
  }
  return false;
}

}  // namespace

RelationGraph extract_relations(const Document& doc, const std::vector<std::string>& subjects,
                                std::size_t document_id) {
  if (subjects.empty()) throw Error(ErrorKind::InvalidConfig, "subject dictionary is empty");
  const Stopwords& stopwords = Stopwords::defaults(doc.lang);

  struct Constant {
    std::string name;
    std::vector<std::string> norms;
  };
  std::vector<Constant> constants;
  for (const auto& s : subjects) {
    Constant c{std::string(text::trim(s)), {}};
    for (const auto& t : tokenize(c.name, doc.lang)) c.norms.push_back(t.norm);
    if (!c.norms.empty()) constants.push_back(std::move(c));
  }

  RelationGraph graph;
  for (const auto& sentence : doc.main) {
    const auto& tokens = sentence.tokens;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      for (const auto& c : constants) {
        if (i + c.norms.size() > tokens.size()) continue;
        bool hit = true;
        for (std::size_t k = 0; k < c.norms.size() && hit; ++k) {
          hit = tokens[i + k].norm == c.norms[k];
        }
        if (!hit) continue;
        std::string object;
        std::size_t prev = i + c.norms.size() - 1;
        for (std::size_t j = prev + 1; j < tokens.size() && j - prev <= kRelationWindow; ++j) {
          if (punctuation_between(sentence, tokens[j - 1], tokens[j])) break;
          if (stopwords.contains(tokens[j].norm)) break;
          if (!object.empty()) object += ' ';
          object += tokens[j].surface;
        }
        if (!object.empty()) {
          graph.edges.push_back({c.name, std::move(object), {document_id, sentence.id}});
        }
      }
    }
  }
  return graph;
}

std::vector<std::string> load_subjects(const std::filesystem::path& path) {
  return lexicon::load_line_list(path);
}

std::string relations_to_json(const RelationGraph& graph) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : graph.edges) {
    edges.push_back({{"subject", e.subject},
                     {"object", e.object},
                     {"sentence", std::to_string(e.sentence.document) + ":" +
                                      std::to_string(e.sentence.sentence)}});
  }
  return nlohmann::json{{"edges", std::move(edges)}}.dump(2) + "\n";
}

}  // namespace docsum
