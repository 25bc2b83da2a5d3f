#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "docsum/doc_model.hpp"
#include "docsum/recognizer.hpp"
#include "docsum/selector.hpp"

namespace docsum {

enum class FusionMode { unite, intersect };

std::string_view to_string(FusionMode mode) noexcept;  // "union" / "intersection"

struct FusionResult {
  std::string text;
  FusionMode mode = FusionMode::unite;
  std::pair<SentenceRef, SentenceRef> sources;
};

// Aligns the content-norm sequences of `a` and `b` by their longest common
// subsequence.  Intersection emits the common tokens with a's surfaces.
// Union walks both sentences: each aligned pair is emitted once, gap tokens
// whose norm is already out are dropped, a's segment precedes b's at each
// gap, and b contributes only the span between its first and last new
// content token of each gap.  Without repeated norms inside either source,
// every content norm of the union appears exactly once.
FusionResult fuse(const SentenceUnit& a, const SentenceUnit& b, FusionMode mode,
                  const Stopwords& stopwords, SentenceRef a_ref = {}, SentenceRef b_ref = {});

// Indices (into the token lists) of one longest common subsequence of the
// two content-norm sequences.
std::vector<std::pair<std::size_t, std::size_t>> content_lcs(const SentenceUnit& a,
                                                             const SentenceUnit& b,
                                                             const Stopwords& stopwords);

inline constexpr double kDefaultDupThreshold = 0.8;
inline constexpr double kDefaultFuseThreshold = 0.5;

struct RepositoryEntry {
  SentenceRef ref;  // source of the first sentence stored here
  SentenceUnit sentence;
  SimilaritySignature signature;
  std::vector<SentenceRef> fused_from;
};

enum class ConsolidationKind { appended, fused, dropped };

std::string_view to_string(ConsolidationKind kind) noexcept;

struct ConsolidationOutcome {
  ConsolidationKind kind = ConsolidationKind::appended;
  std::size_t entry = 0;     // entry appended to, fused into, or matched
  double similarity = 0.0;   // best similarity against the repository
};

// Cross-document store of accepted sentences.  Invariant: no two entries
// have similarity >= dup threshold.  Single writer.
class ConsolidatedRepository {
 public:
  explicit ConsolidatedRepository(Lang lang, double dup_threshold = kDefaultDupThreshold,
                                  double fuse_threshold = kDefaultFuseThreshold);

  ConsolidationOutcome consolidate(const SentenceUnit& candidate, SentenceRef ref);

  const std::vector<RepositoryEntry>& entries() const noexcept { return entries_; }
  double dup_threshold() const noexcept { return dup_threshold_; }
  double fuse_threshold() const noexcept { return fuse_threshold_; }

 private:
  Lang lang_;
  double dup_threshold_;
  double fuse_threshold_;
  std::vector<RepositoryEntry> entries_;
};

void validate_thresholds(double dup_threshold, double fuse_threshold);

// ---------------------------------------------------------------------------
// relations

struct RelationEdge {
  std::string subject;
  std::string object;
  SentenceRef sentence;

  bool operator==(const RelationEdge&) const = default;
};

struct RelationGraph {
  std::vector<RelationEdge> edges;

  // Subjects and object phrases, sorted and unique.
  std::vector<std::string> nodes() const;
};

inline constexpr std::size_t kRelationWindow = 3;

// For every occurrence of a subject constant in the main part, captures up to
// three following tokens, stopping at punctuation, a stop word or the end of
// the sentence.  Empty captures produce no edge.
RelationGraph extract_relations(const Document& doc, const std::vector<std::string>& subjects,
                                std::size_t document_id = 0);

std::vector<std::string> load_subjects(const std::filesystem::path& path);

// {"edges":[{"subject":..,"object":..,"sentence":"<doc>:<sentence>"}]}
std::string relations_to_json(const RelationGraph& graph);

}  // namespace docsum
