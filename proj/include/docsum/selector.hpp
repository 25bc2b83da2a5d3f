#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "docsum/doc_model.hpp"

namespace docsum {

struct SentenceRef {
  std::size_t document = 0;
  std::size_t sentence = 0;

  auto operator<=>(const SentenceRef&) const = default;
};

// Sorted, de-duplicated content norms of a sentence.
struct SimilaritySignature {
  std::vector<std::string> terms;

  bool operator==(const SimilaritySignature&) const = default;
};

SimilaritySignature content_signature(const SentenceUnit& sentence, const Stopwords& stopwords);

// Jaccard index of the two term sets; 0 when both are empty.
double similarity(const SimilaritySignature& a, const SimilaritySignature& b);
double similarity(const SentenceUnit& a, const SentenceUnit& b, const Stopwords& stopwords);

struct Candidate {
  SentenceRef ref;
  double q = 0.0;  // initial usefulness
  double p = 0.0;  // current usefulness
  SimilaritySignature signature;
};

Candidate make_candidate(SentenceRef ref, double q, SimilaritySignature signature);

// Pairwise similarities indexed by candidate position.
class SimilarityMatrix {
 public:
  explicit SimilarityMatrix(std::size_t n = 0) : n_(n), values_(n * n, 0.0) {}

  static SimilarityMatrix from_signatures(std::span<const Candidate> candidates);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) {
    values_[i * n_ + j] = v;
    values_[j * n_ + i] = v;
  }

 private:
  std::size_t n_;
  std::vector<double> values_;
};

inline constexpr double kDefaultClipFactor = 2.0;

// Greedy usefulness clipping.  Each step moves the remaining candidate with
// the highest p to the selected list, then divides every remaining p by
// (1 + k * similarity to the pick).
class SelectionState {
 public:
  SelectionState(std::vector<Candidate> candidates, double clip_factor, SimilarityMatrix matrix);

  bool done() const noexcept { return remaining_.empty(); }
  const Candidate& step();

  std::size_t initial_count() const noexcept { return candidates_.size(); }
  double clip_factor() const noexcept { return k_; }
  std::vector<Candidate> remaining() const;
  const std::vector<Candidate>& selected() const noexcept { return selected_; }

 private:
  std::vector<Candidate> candidates_;
  std::vector<std::size_t> remaining_;
  std::vector<Candidate> selected_;
  double k_;
  SimilarityMatrix matrix_;
};

// Strict order used to pick among equal usefulness: earlier sentence
// position first, then lower document id.
bool precedes_on_tie(const SentenceRef& a, const SentenceRef& b) noexcept;

std::vector<Candidate> rank(std::vector<Candidate> candidates, double clip_factor);
std::vector<Candidate> rank(std::vector<Candidate> candidates, double clip_factor,
                            const SimilarityMatrix& matrix);

class SummaryLimit {
 public:
  static SummaryLimit ratio(double r);
  static SummaryLimit max_sentences(std::size_t n);

  // Number of sentences to take out of `available`; at least 1 when
  // anything is available.
  std::size_t count(std::size_t available) const;

  std::optional<double> ratio_value() const noexcept { return ratio_; }
  std::optional<std::size_t> max_value() const noexcept { return max_; }

 private:
  std::optional<double> ratio_;
  std::optional<std::size_t> max_;
};

inline constexpr double kDefaultRatio = 0.2;

std::vector<Candidate> select_summary(std::span<const Candidate> ranked, const SummaryLimit& limit);

// Source order: document id, then sentence id.
std::vector<Candidate> order_output(std::vector<Candidate> selected);

}  // namespace docsum
