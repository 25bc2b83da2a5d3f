#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "docsum/error.hpp"
#include "docsum/fusion.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace docsum {
namespace {

SentenceUnit unit(const std::string& text, Lang lang = Lang::en, std::size_t id = 0) {
  SentenceUnit s;
  s.id = id;
  s.text = text;
  s.tokens = tokenize(text, lang);
  return s;
}

std::multiset<std::string> norm_multiset(const std::string& text, Lang lang) {
  const auto v = testing::content_norms(text, lang);
  return {v.begin(), v.end()};
}

const Stopwords& en_stop() { return Stopwords::defaults(Lang::en); }

TEST(Fuse, UnionOfOverlappingSentences) {
  const auto r = fuse(unit("the system analyzes text"), unit("the system stores text"),
                      FusionMode::unite, en_stop());
  EXPECT_EQ(r.text, "the system analyzes stores text");
  EXPECT_EQ(norm_multiset(r.text, Lang::en),
            (std::multiset<std::string>{"system", "analyz", "stor", "text"}));
  EXPECT_EQ(r.mode, FusionMode::unite);
  EXPECT_EQ(to_string(r.mode), "union");
}

TEST(Fuse, IdenticalUnionIsItself) {
  const auto r = fuse(unit("Graph methods rank graph nodes."), unit("Graph methods rank graph nodes."),
                      FusionMode::unite, en_stop());
  EXPECT_EQ(r.text, "Graph methods rank graph nodes.");
}

TEST(Fuse, DisjointIntersectionIsEmpty) {
  const auto r = fuse(unit("alpha beta gamma."), unit("delta epsilon."), FusionMode::intersect,
                      en_stop());
  EXPECT_EQ(r.text, "");
  EXPECT_EQ(to_string(r.mode), "intersection");
}

TEST(Fuse, IntersectionUsesFirstSurfaces) {
  const auto r = fuse(unit("Systems index Documents quickly."), unit("a system indexes documents"),
                      FusionMode::intersect, en_stop(), {0, 1}, {1, 2});
  EXPECT_EQ(r.text, "Systems index Documents.");
  EXPECT_EQ(r.sources.first, (SentenceRef{0, 1}));
  EXPECT_EQ(r.sources.second, (SentenceRef{1, 2}));
}

TEST(Fuse, LcsPairsPointAtEqualNorms) {
  const auto a = unit("one graph of nodes and edges");
  const auto b = unit("edges join graph nodes");
  const auto pairs = content_lcs(a, b, en_stop());
  ASSERT_EQ(pairs.size(), 2u);
  for (const auto& [i, j] : pairs) EXPECT_EQ(a.tokens[i].norm, b.tokens[j].norm);
}

TEST(FuseProperty, UnionIsSetUnionAndCommutesOnNorms) {
  testing::Rng rng(71);
  for (int i = 0; i < 500; ++i) {
    const Lang lang = i % 2 ? Lang::uk : Lang::en;
    const auto a = unit(testing::distinct_sentence(rng, lang, 12, 2, 8), lang);
    const auto b = unit(testing::distinct_sentence(rng, lang, 12, 2, 8), lang);
    const auto& stop = Stopwords::defaults(lang);
    const auto ab = fuse(a, b, FusionMode::unite, stop);
    const auto ba = fuse(b, a, FusionMode::unite, stop);

    std::set<std::string> expected;
    for (const auto& n : testing::content_norms(a.text, lang)) expected.insert(n);
    for (const auto& n : testing::content_norms(b.text, lang)) expected.insert(n);
    const auto got = norm_multiset(ab.text, lang);
    EXPECT_EQ(std::multiset<std::string>(expected.begin(), expected.end()), got)
        << a.text << " | " << b.text << " -> " << ab.text;
    EXPECT_EQ(norm_multiset(ba.text, lang), got);
  }
}

TEST(FuseProperty, IntersectionIsCommonSubsequenceOfLcsLength) {
  testing::Rng rng(73);
  for (int i = 0; i < 500; ++i) {
    const Lang lang = i % 2 ? Lang::uk : Lang::en;
    // Repeats allowed here.
    const auto a = unit(testing::overlapping_sentence(rng, lang, 8, 2, 10), lang);
    const auto b = unit(testing::overlapping_sentence(rng, lang, 8, 2, 10), lang);
    const auto r = fuse(a, b, FusionMode::intersect, Stopwords::defaults(lang));
    const auto na = testing::content_norms(a.text, lang);
    const auto nb = testing::content_norms(b.text, lang);
    const auto out = testing::content_norms(r.text, lang);
    EXPECT_EQ(out.size(), testing::lcs_length(na, nb));
    EXPECT_TRUE(testing::is_subsequence(out, na));
    EXPECT_TRUE(testing::is_subsequence(out, nb));
  }
}

TEST(FuseProperty, UnionWithItselfKeepsNormMultiset) {
  testing::Rng rng(79);
  for (int i = 0; i < 300; ++i) {
    const Lang lang = i % 2 ? Lang::uk : Lang::en;
    const auto x = unit(testing::overlapping_sentence(rng, lang, 6, 1, 12), lang);
    const auto r = fuse(x, x, FusionMode::unite, Stopwords::defaults(lang));
    EXPECT_EQ(norm_multiset(r.text, lang), norm_multiset(x.text, lang)) << x.text;
  }
}

TEST(Repository, DropsFusesAppends) {
  ConsolidatedRepository repo(Lang::en);
  EXPECT_EQ(repo.consolidate(unit("alpha beta gamma delta."), {0, 0}).kind,
            ConsolidationKind::appended);
  const auto dup = repo.consolidate(unit("Alpha beta gamma delta!"), {1, 0});
  EXPECT_EQ(dup.kind, ConsolidationKind::dropped);
  EXPECT_EQ(dup.similarity, 1.0);
  EXPECT_EQ(repo.consolidate(unit("omega sigma."), {1, 1}).kind, ConsolidationKind::appended);
  EXPECT_EQ(repo.entries().size(), 2u);

  // {alpha, beta, gamma, delta} vs {alpha, beta, gamma, epsilon}: Jaccard 3/5.
  const auto fused = repo.consolidate(unit("alpha beta gamma epsilon."), {2, 0});
  EXPECT_EQ(fused.kind, ConsolidationKind::fused);
  EXPECT_EQ(fused.similarity, 0.6);
  EXPECT_EQ(fused.entry, 0u);
  EXPECT_EQ(repo.entries().size(), 2u);
  EXPECT_EQ(repo.entries()[0].sentence.text, "alpha beta gamma epsilon delta.");
  EXPECT_EQ(repo.entries()[0].fused_from, (std::vector<SentenceRef>{{2, 0}}));
  EXPECT_EQ(repo.entries()[0].ref, (SentenceRef{0, 0}));
}

TEST(Repository, ThresholdValidation) {
  EXPECT_THROW(ConsolidatedRepository(Lang::en, 0.5, 0.5), Error);
  EXPECT_THROW(ConsolidatedRepository(Lang::en, 0.0, 0.0), Error);
  EXPECT_THROW(ConsolidatedRepository(Lang::en, 1.2, 0.5), Error);
  EXPECT_THROW(ConsolidatedRepository(Lang::en, 0.8, -0.1), Error);
  EXPECT_NO_THROW(ConsolidatedRepository(Lang::en, 1.0, 0.0));
}

TEST(RepositoryProperty, NoPairReachesDupThreshold) {
  testing::Rng rng(83);
  for (int trial = 0; trial < 40; ++trial) {
    const Lang lang = trial % 2 ? Lang::uk : Lang::en;
    const double dup = testing::uniform_real(rng, 0.3, 1.0);
    const double fuse_at = testing::uniform_real(rng, 0.0, dup - 1e-6);
    ConsolidatedRepository repo(lang, dup, fuse_at);
    for (std::size_t i = 0; i < 20; ++i) {
      repo.consolidate(unit(testing::overlapping_sentence(rng, lang, 10, 2, 6), lang, i), {0, i});
    }
    const auto& e = repo.entries();
    EXPECT_LE(e.size(), 20u);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        const double s = testing::jaccard(testing::content_norms(e[i].sentence.text, lang),
                                          testing::content_norms(e[j].sentence.text, lang));
        EXPECT_LT(s, dup);
      }
    }
  }
}

Document doc_with(const std::vector<std::string>& sentences, Lang lang) {
  Document d;
  d.lang = lang;
  for (std::size_t i = 0; i < sentences.size(); ++i) d.main.push_back(unit(sentences[i], lang, i));
  return d;
}

TEST(Relations, CapturesFollowingTokens) {
  const auto g = extract_relations(doc_with({"система формує реферат"}, Lang::uk), {"система"}, 4);
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.edges[0], (RelationEdge{"система", "формує реферат", {4, 0}}));
  EXPECT_EQ(g.nodes(), (std::vector<std::string>{"система", "формує реферат"}));
}

TEST(Relations, StopsAtPunctuationStopwordsAndWindow) {
  const auto d = doc_with({"The system builds, then stops.", "A system of rules.",
                           "Every system ranks short plain sentences.", "Ends with system."},
                          Lang::en);
  const auto g = extract_relations(d, {"system"});
  ASSERT_EQ(g.edges.size(), 2u);
  EXPECT_EQ(g.edges[0].object, "builds");
  EXPECT_EQ(g.edges[1].object, "ranks short plain");
  EXPECT_EQ(g.edges[1].sentence.sentence, 2u);
}

TEST(Relations, AbsentSubjectAndEmptyDictionary) {
  const auto d = doc_with({"Nothing relevant here."}, Lang::en);
  EXPECT_TRUE(extract_relations(d, {"system"}).edges.empty());
  EXPECT_THROW(extract_relations(d, {}), Error);
}

TEST(Relations, JsonShape) {
  RelationGraph g;
  g.edges.push_back({"система", "формує реферат", {1, 2}});
  const auto j = nlohmann::json::parse(relations_to_json(g));
  EXPECT_EQ(j["edges"][0]["subject"], "система");
  EXPECT_EQ(j["edges"][0]["sentence"], "1:2");
}

TEST(RelationsProperty, SubjectsComeFromDictionary) {
  testing::Rng rng(89);
  const auto& vocab = testing::vocabulary(Lang::uk);
  const std::vector<std::string> subjects{vocab[0], vocab[1], vocab[2]};
  for (int i = 0; i < 50; ++i) {
    std::vector<std::string> sentences;
    for (int s = 0; s < 10; ++s) sentences.push_back(testing::overlapping_sentence(rng, Lang::uk, 8, 2, 10));
    const auto g = extract_relations(doc_with(sentences, Lang::uk), subjects);
    for (const auto& e : g.edges) {
      EXPECT_NE(std::find(subjects.begin(), subjects.end(), e.subject), subjects.end());
      EXPECT_FALSE(e.object.empty());
    }
  }
}

}  // namespace
}  // namespace docsum
