#include "docsum/selector.hpp"

#include <algorithm>
#include <cmath>

#include "docsum/error.hpp"

namespace docsum {

SimilaritySignature content_signature(const SentenceUnit& sentence, const Stopwords& stopwords) {
  SimilaritySignature sig;
  for (const auto& t : sentence.tokens) {
    if (is_content(t, stopwords)) sig.terms.push_back(t.norm);
  }
  std::sort(sig.terms.begin(), sig.terms.end());
  sig.terms.erase(std::unique(sig.terms.begin(), sig.terms.end()), sig.terms.end());
  return sig;
}

double similarity(const SimilaritySignature& a, const SimilaritySignature& b) {
  std::size_t common = 0;
  auto ia = a.terms.begin();
  auto ib = b.terms.begin();
  while (ia != a.terms.end() && ib != b.terms.end()) {
    const int c = ia->compare(*ib);
    if (c == 0) {
      ++common;
      ++ia;
      ++ib;
    } else if (c < 0) {
      ++ia;
    } else {
      ++ib;
    }
  }
  const std::size_t total = a.terms.size() + b.terms.size() - common;
  return total == 0 ? 0.0 : static_cast<double>(common) / static_cast<double>(total);
}

double similarity(const SentenceUnit& a, const SentenceUnit& b, const Stopwords& stopwords) {
  return similarity(content_signature(a, stopwords), content_signature(b, stopwords));
}

Candidate make_candidate(SentenceRef ref, double q, SimilaritySignature signature) {
  return Candidate{ref, q, q, std::move(signature)};
}

SimilarityMatrix SimilarityMatrix::from_signatures(std::span<const Candidate> candidates) {
  SimilarityMatrix m(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    m.set(i, i, similarity(candidates[i].signature, candidates[i].signature));
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      m.set(i, j, similarity(candidates[i].signature, candidates[j].signature));
    }
  }
  return m;
}

bool precedes_on_tie(const SentenceRef& a, const SentenceRef& b) noexcept {
  if (a.sentence != b.sentence) return a.sentence < b.sentence;
  return a.document < b.document;
}

SelectionState::SelectionState(std::vector<Candidate> candidates, double clip_factor,
                               SimilarityMatrix matrix)
    : candidates_(std::move(candidates)), k_(clip_factor), matrix_(std::move(matrix)) {
  if (!(clip_factor > 0.0) || !std::isfinite(clip_factor)) {
    throw Error(ErrorKind::InvalidClipFactor, "clip factor must be a finite value > 0");
  }
  if (matrix_.size() != candidates_.size()) {
    throw Error(ErrorKind::InvalidConfig, "similarity matrix size does not match candidates");
  }
  remaining_.reserve(candidates_.size());
  for (std::size_t i = 0; i < candidates_.size(); ++i) {
    if (!(candidates_[i].q > 0.0)) {
      throw Error(ErrorKind::InvalidConfig, "candidate usefulness must be > 0");
    }
    candidates_[i].p = candidates_[i].q;
    remaining_.push_back(i);
  }
  selected_.reserve(candidates_.size());
}

const Candidate& SelectionState::step() {
  auto best = remaining_.begin();
  for (auto it = std::next(best); it != remaining_.end(); ++it) {
    const Candidate& c = candidates_[*it];
    const Candidate& b = candidates_[*best];
    if (c.p > b.p || (c.p == b.p && precedes_on_tie(c.ref, b.ref))) best = it;
  }
  const std::size_t picked = *best;
  remaining_.erase(best);
  for (std::size_t j : remaining_) {
    const double sim = matrix_(j, picked);
    if (sim > 0.0) candidates_[j].p = candidates_[j].p / (1.0 + k_ * sim);
  }
  selected_.push_back(candidates_[picked]);
  return selected_.back();
}

std::vector<Candidate> SelectionState::remaining() const {
  std::vector<Candidate> out;
  out.reserve(remaining_.size());
  for (std::size_t i : remaining_) out.push_back(candidates_[i]);
  return out;
}

std::vector<Candidate> rank(std::vector<Candidate> candidates, double clip_factor) {
  SimilarityMatrix matrix = SimilarityMatrix::from_signatures(candidates);
  return rank(std::move(candidates), clip_factor, matrix);
}

std::vector<Candidate> rank(std::vector<Candidate> candidates, double clip_factor,
                            const SimilarityMatrix& matrix) {
  SelectionState state(std::move(candidates), clip_factor, matrix);
  while (!state.done()) state.step();
  return state.selected();
}

SummaryLimit SummaryLimit::ratio(double r) {
  if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorKind::InvalidLimit, "ratio must lie in (0, 1]");
  SummaryLimit limit;
  limit.ratio_ = r;
  return limit;
}

SummaryLimit SummaryLimit::max_sentences(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidLimit, "max sentences must be at least 1");
  SummaryLimit limit;
  limit.max_ = n;
  return limit;
}

std::size_t SummaryLimit::count(std::size_t available) const {
  if (available == 0) return 0;
  std::size_t wanted = 1;
  if (ratio_) {
    // ceil with a 1e-9 slack.
    const double scaled = *ratio_ * static_cast<double>(available);
    wanted = static_cast<std::size_t>(std::ceil(scaled - 1e-9));
  } else if (max_) {
    wanted = *max_;
  }
  return std::clamp<std::size_t>(wanted, 1, available);
}

std::vector<Candidate> select_summary(std::span<const Candidate> ranked,
                                      const SummaryLimit& limit) {
  const std::size_t n = limit.count(ranked.size());
  return {ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::vector<Candidate> order_output(std::vector<Candidate> selected) {
  std::sort(selected.begin(), selected.end(),
            [](const Candidate& a, const Candidate& b) { return a.ref < b.ref; });
  return selected;
}

}  // namespace docsum
