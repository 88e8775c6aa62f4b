// Copyright 2026 The seglm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seglm/ngram.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "seglm/error.h"
#include "seglm/model.h"
#include "test_util.h"

namespace seglm {
namespace {

using testing::U;

TEST(NGramCounts, PaddingConvention) {
  Lexicon lex;
  const WordId ab = lex.Add(U"ab"), c = lex.Add(U"c");
  NGramCounts n;
  n.AddSentence(std::vector<WordId>{ab, c});
  EXPECT_EQ(n.unigram(ab), 1u);
  EXPECT_EQ(n.unigram(c), 1u);
  EXPECT_EQ(n.unigram(kEos), 1u);
  EXPECT_EQ(n.unigram(kBos), 0u);
  EXPECT_EQ(n.unigrams().size(), 3u);
  EXPECT_EQ(n.total_tokens(), 3u);
  EXPECT_EQ(n.trigram(kBos, kBos, ab), 1u);
  EXPECT_EQ(n.trigram(kBos, ab, c), 1u);
  EXPECT_EQ(n.trigram(ab, c, kEos), 1u);
  EXPECT_EQ(n.trigrams().size(), 3u);
  EXPECT_EQ(n.bigram(kBos, ab), 1u);
  EXPECT_EQ(n.bigram(ab, c), 1u);
  EXPECT_EQ(n.bigram(c, kEos), 1u);
  EXPECT_TRUE(n.CheckConsistency());
}

TEST(NGramCounts, MergeDoubles) {
  const auto corpus = testing::RandomCorpus(testing::ToyWords(), 40, 5);
  const Lexicon lex = testing::MakeLexicon(testing::ToyWords());
  const NGramCounts once = CountNGrams(corpus, lex);
  NGramCounts twice = once;
  twice.Merge(once);
  EXPECT_EQ(twice.total_tokens(), 2 * once.total_tokens());
  for (const auto& [k, v] : once.trigrams()) {
    EXPECT_EQ(twice.trigrams().at(k), 2 * v);
  }
  for (const auto& [k, v] : once.bigrams()) {
    EXPECT_EQ(twice.bigrams().at(k), 2 * v);
  }
  for (const auto& [k, v] : once.unigrams()) {
    EXPECT_EQ(twice.unigrams().at(k), 2 * v);
  }
  EXPECT_TRUE(twice.CheckConsistency());

  SegmentedCorpus doubled = corpus;
  doubled.sentences.insert(doubled.sentences.end(), corpus.sentences.begin(),
                           corpus.sentences.end());
  EXPECT_EQ(CountNGrams(doubled, lex), twice);
}

TEST(NGramCounts, OutOfLexiconIsUnk) {
  Lexicon lex;
  lex.Add(U"ab");
  const auto corpus = ParseSegmented("ab zz ab\n");
  const NGramCounts n = CountNGrams(corpus, lex);
  EXPECT_EQ(n.unigram(kUnk), 1u);
  EXPECT_EQ(n.unigram(lex.Lookup(U"ab")), 2u);
  EXPECT_EQ(n.trigram(kBos, 3, kUnk), 1u);
}

TEST(NGramCounts, PackRoundTrip) {
  const auto k = NGramCounts::Pack(kMaxWordId, 7, kNoContext);
  EXPECT_EQ(NGramCounts::Unpack(k, 2), kMaxWordId);
  EXPECT_EQ(NGramCounts::Unpack(k, 1), 7u);
  EXPECT_EQ(NGramCounts::Unpack(k, 0), kNoContext);
}

TEST(Lambdas, Simplex) {
  EXPECT_TRUE(Lambdas{}.OnSimplex());
  EXPECT_FALSE((Lambdas{0.5, 0.5, 0.5, -0.5}).OnSimplex());
  EXPECT_FALSE((Lambdas{0.5, 0.5, 0.5, 0.5}).OnSimplex());
}

TEST(InterpolatedTrigram, UniformOnly) {
  const auto corpus = testing::RandomCorpus(testing::ToyWords(), 30, 1);
  Lexicon lex;
  for (int i = 0; i < 48; ++i) lex.Add(std::u32string(1, U'A' + i));
  ASSERT_EQ(lex.event_count(), 50u);
  const InterpolatedTrigram m(CountNGrams(corpus, lex), {0, 0, 0, 1},
                              lex.event_count());
  for (WordId w = 0; w < lex.size(); ++w) {
    if (w == kBos) continue;
    EXPECT_DOUBLE_EQ(m.LogProb(w, {kBos, kBos}), std::log(1.0 / 50));
    EXPECT_DOUBLE_EQ(m.LogProb(w, {7, 9}), std::log(1.0 / 50));
  }
}

TEST(InterpolatedTrigram, UnigramOnly) {
  NGramCounts n;
  n.AddUnigram(3, 3);
  n.AddUnigram(4, 1);
  const InterpolatedTrigram m(n, {0, 0, 1, 0}, 5);
  EXPECT_NEAR(m.LogProb(3, {}), std::log(3.0 / 4), 1e-15);
  EXPECT_NEAR(m.LogProb(3, {4, 4}), std::log(3.0 / 4), 1e-15);
  EXPECT_NEAR(m.LogProb(4, History::None()), std::log(1.0 / 4), 1e-15);
  EXPECT_EQ(m.LogProb(kEos, {}), -std::numeric_limits<double>::infinity());
}

TEST(InterpolatedTrigram, MatchesBruteForce) {
  const std::vector<std::u32string> words = {U"a", U"b", U"c", U"d", U"e"};
  const Lexicon lex = testing::MakeLexicon(words);
  const auto corpus = testing::RandomCorpus(words, 12, 4, 5);
  const auto ids = ToIds(corpus, lex);
  const Lambdas l{0.4, 0.3, 0.2, 0.1};
  const InterpolatedTrigram m(CountNGrams(corpus, lex), l, lex.event_count());
  const testing::BruteForceMixture oracle(ids, l, lex.event_count());
  for (WordId u = 0; u < lex.size(); ++u) {
    for (WordId v = 0; v < lex.size(); ++v) {
      if (v == kBos && u != kBos) continue;
      for (WordId w = 0; w < lex.size(); ++w) {
        if (w == kBos) continue;
        ASSERT_NEAR(m.Prob(w, {u, v}), oracle.Prob(w, u, v), 1e-14)
            << u << " " << v << " " << w;
      }
    }
  }
}

TEST(InterpolatedTrigram, Normalized) {
  std::vector<std::u32string> words;
  for (int i = 0; i < 48; ++i) words.push_back(std::u32string(1, U'A' + i));
  const Lexicon lex = testing::MakeLexicon(words);
  // 48 words, UNK and EOS.
  ASSERT_EQ(lex.event_count(), 50u);
  const auto corpus = testing::RandomCorpus(words, 200, 9, 8);
  const InterpolatedTrigram m(CountNGrams(corpus, lex), {0.4, 0.3, 0.2, 0.1},
                              lex.event_count());
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<WordId> id(0, lex.size() - 1);
  for (int t = 0; t < 50; ++t) {
    History h{id(rng), id(rng)};
    if (t == 0) h = {kBos, kBos};
    if (t == 1) h = History::None();
    double sum = 0;
    for (WordId w = 0; w < lex.size(); ++w) {
      if (w != kBos) sum += m.Prob(w, h);
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

std::vector<std::vector<WordId>> UniformIid(std::size_t vocab,
                                            std::size_t sentences,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<WordId> w(kFirstWordId,
                                          kFirstWordId + vocab - 1);
  std::vector<std::vector<WordId>> out(sentences);
  for (auto& s : out) {
    s.resize(10);
    for (auto& x : s) x = w(rng);
  }
  return out;
}

NGramCounts Count(const std::vector<std::vector<WordId>>& sentences) {
  NGramCounts n;
  for (const auto& s : sentences) n.AddSentence(s);
  return n;
}

TEST(EstimateLambdas, MonotoneLikelihood) {
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto train = UniformIid(30, 300, seed);
    auto heldout = UniformIid(30, 40, seed + 100);
    // Some repeated structure so the higher orders earn weight.
    for (std::size_t i = 0; i < 20; ++i) heldout.push_back(train[i]);
    EmOptions opts;
    opts.max_iters = 40;
    opts.tol = -std::numeric_limits<double>::infinity();
    const EmResult r = EstimateLambdas(Count(train), heldout, 31, opts);
    ASSERT_EQ(r.log_likelihood.size(), 41u);
    EXPECT_EQ(r.iterations, 40);
    for (std::size_t k = 1; k < r.log_likelihood.size(); ++k) {
      EXPECT_GE(r.log_likelihood[k],
                r.log_likelihood[k - 1] - 1e-9 * std::abs(r.log_likelihood[k]));
    }
    EXPECT_TRUE(r.lambdas.OnSimplex(1e-12));
  }
}

TEST(EstimateLambdas, UniformDataFavorsLowOrders) {
  const auto train = UniformIid(200, 500, 5);
  const auto heldout = UniformIid(200, 200, 6);
  const EmResult r = EstimateLambdas(Count(train), heldout, 201, {});
  EXPECT_GE(r.lambdas.unigram + r.lambdas.uniform, 0.9);
}

TEST(EstimateLambdas, DeterministicTrigrams) {
  // w_i = (w_{i-2} + w_{i-1}) mod 20: each two-word history has a single
  // continuation.
  std::vector<std::vector<WordId>> sentences;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<WordId> start(0, 19);
  for (int s = 0; s < 100; ++s) {
    std::vector<WordId> x = {start(rng), start(rng)};
    while (x.size() < 60) x.push_back((x[x.size() - 2] + x.back()) % 20);
    for (auto& w : x) w += kFirstWordId;
    sentences.push_back(x);
  }
  const EmResult r = EstimateLambdas(Count(sentences), sentences, 21, {});
  EXPECT_GE(r.lambdas.trigram, 0.9);
}

TEST(EstimateLambdas, EmptyHeldout) {
  EXPECT_THROW(EstimateLambdas(NGramCounts{}, {}, 5, {}), EmptyHeldout);
}

}  // namespace
}  // namespace seglm
