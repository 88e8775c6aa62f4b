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

#include "seglm/model.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <string>

#include "seglm/error.h"
#include "test_util.h"

namespace seglm {
namespace {

using testing::U;

UnknownWordModel CharsFrom(const char* text, double gamma = 0.4,
                           std::size_t d = 10) {
  UnknownWordModel m(gamma, d);
  m.AddText(U(text));
  return m;
}

TEST(UnknownWordModel, PermutationInvariant) {
  const auto m = CharsFrom("aabbbcd");
  EXPECT_DOUBLE_EQ(m.LogProb(U"abc"), m.LogProb(U"cba"));
  EXPECT_DOUBLE_EQ(m.LogProb(U"abzd"), m.LogProb(U"dzba"));
}

TEST(UnknownWordModel, TooLong) {
  const auto m = CharsFrom("abc", 0.4, 3);
  EXPECT_NO_THROW(m.LogProb(U"abc"));
  EXPECT_THROW(m.LogProb(U"abca"), TooLong);
  EXPECT_THROW(m.LogProb(U""), ValidationError);
}

TEST(UnknownWordModel, LengthDecay) {
  const auto m = CharsFrom("abab", 0.5);
  // (1-γ)γ^(k-1)/(1-γ^d) times the character product.
  const double norm = 1 - std::pow(0.5, 10);
  const double pa = 3.0 / 7, pb = 3.0 / 7;
  EXPECT_NEAR(m.LogProb(U"ab"), std::log(0.5 * 0.5 / norm * pa * pb), 1e-12);
  EXPECT_NEAR(m.LogProb(U"abab"),
              std::log(0.5 * 0.125 / norm * pa * pb * pa * pb), 1e-12);
  EXPECT_LT(m.LogProb(U"abab"), m.LogProb(U"ab"));
}

TEST(UnknownWordModel, Normalized) {
  const auto m = CharsFrom("aaabbc", 0.4, 6);
  double lengths = 0;
  for (std::size_t k = 1; k <= 6; ++k) lengths += std::exp(m.LengthLogProb(k));
  EXPECT_NEAR(lengths, 1.0, 1e-12);
  const double chars = m.CharProb(U'a') + m.CharProb(U'b') + m.CharProb(U'c') +
                       m.UnseenCharProb();
  EXPECT_NEAR(chars, 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(m.CharProb(U'z'), m.UnseenCharProb());
}

TEST(SentenceLogProb, SingleWord) {
  const auto m = testing::ToyModel();
  const Sentence s = Sentence::FromUtf8("ab");
  const WordId ab = m.lexicon().Lookup(U"ab");
  EXPECT_DOUBLE_EQ(m.SentenceLogProb(s, Segmentation::Whole(2)),
                   m.WordLogProb(ab, {kBos, kBos}) +
                       m.WordLogProb(kEos, {kBos, ab}));
}

TEST(SentenceLogProb, BosReset) {
  const auto m = testing::ToyModel();
  const auto a = ParseSegmented("ab cd\n").sentences[0];
  const auto b = ParseSegmented("e abc\n").sentences[0];
  const auto joint = ParseSegmented("ab cd e abc\n").sentences[0];
  EXPECT_NE(m.SentenceLogProb(a) + m.SentenceLogProb(b),
            m.SentenceLogProb(joint));
}

TEST(SentenceLogProb, MatchesReference) {
  const auto m = testing::ToyModel();
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    const Sentence s = testing::RandomSentence(rng, 9);
    ForEachSegmentation(s.size(), 4, [&](const Segmentation& seg) {
      ASSERT_NEAR(m.SentenceLogProb(s, seg),
                  testing::ReferenceSentenceLogProb(m, s, seg), 1e-12);
    });
  }
}

TEST(UnseenLogProb, HistoryFreeUsesLowerOrders) {
  const auto m = testing::ToyModel();
  const auto c = m.trigram().Components(kUnk, History::None());
  const double f1 = static_cast<double>(m.counts().unigram(kUnk)) /
                    static_cast<double>(m.counts().total_tokens());
  EXPECT_DOUBLE_EQ(c[0], f1);
  EXPECT_DOUBLE_EQ(c[1], f1);
  EXPECT_DOUBLE_EQ(c[2], f1);
  EXPECT_DOUBLE_EQ(m.UnseenLogProb(U"ff"),
                   m.WordLogProb(kUnk, History::None()) +
                       m.unknown().LogProb(U"ff"));
}

InterpolatedTrigramModel UniformModel(const SegmentedCorpus& corpus,
                                      std::size_t words) {
  Lexicon lex;
  for (std::size_t i = 0; i < words; ++i) {
    lex.Add(std::u32string(1, static_cast<char32_t>(U'A' + i)));
  }
  return InterpolatedTrigramModel(lex, CountNGrams(corpus, lex), {0, 0, 0, 1},
                                  UnknownWordModel());
}

TEST(Perplexity, UniformEqualsEventCount) {
  const auto corpus = ParseSegmented("A B C\nD E\nF\n");
  const auto m = UniformModel(corpus, 48);
  ASSERT_EQ(m.event_count(), 50u);
  EXPECT_NEAR(Perplexity(m, corpus), 50.0, 1e-9);
}

TEST(Perplexity, MatchesReference) {
  const auto m = testing::ToyModel();
  const auto corpus = testing::RandomCorpus(testing::ToyWords(), 50, 99);
  double lp = 0, n = 0;
  for (const auto& s : corpus.sentences) {
    lp += testing::ReferenceSentenceLogProb(m, s.sentence, s.segmentation);
    n += static_cast<double>(s.segmentation.word_count() + 1);
  }
  EXPECT_NEAR(Perplexity(m, corpus), std::exp(-lp / n), 1e-9);
  EXPECT_THROW(Perplexity(m, SegmentedCorpus{}), EmptyCorpus);
}

TEST(Perplexity, DegenerateCorpusApproachesOne) {
  SegmentedCorpus corpus;
  for (int i = 0; i < 40; ++i) {
    corpus.sentences.push_back(ParseSegmented("ab c de f\n").sentences[0]);
  }
  TrainOptions opts;
  opts.em.max_iters = 200;
  opts.em.tol = -std::numeric_limits<double>::infinity();
  const auto m = TrainModel(corpus, BuildVocabulary(corpus), opts);
  EXPECT_GT(m.lambdas().trigram + m.lambdas().bigram, 0.999);
  EXPECT_LT(Perplexity(m, corpus), 1.001);
}

TEST(BuildVocabulary, FirstSeenOrderAndMinCount) {
  const auto c = ParseSegmented("b a b\nc a\n");
  const Lexicon v = BuildVocabulary(c);
  EXPECT_EQ(v.Words(), (std::vector<std::u32string>{U"b", U"a", U"c"}));
  const Lexicon v2 = BuildVocabulary(c, 2);
  EXPECT_EQ(v2.Words(), (std::vector<std::u32string>{U"b", U"a"}));
}

TEST(HeldoutIndices, Validation) {
  EXPECT_THROW(HeldoutIndices(10, 0.0, 1), ValidationError);
  EXPECT_THROW(HeldoutIndices(10, 1.0, 1), ValidationError);
  EXPECT_THROW(HeldoutIndices(1, 0.5, 1), ValidationError);
  EXPECT_EQ(HeldoutIndices(10, 0.01, 1).size(), 1u);
  EXPECT_EQ(HeldoutIndices(10, 0.99, 1).size(), 9u);
  EXPECT_EQ(HeldoutIndices(10, 0.3, 1), HeldoutIndices(10, 0.3, 1));
}

TEST(TrainModel, LambdasOnSimplexAndDeterministic) {
  const auto corpus = testing::RandomCorpus(testing::ToyWords(), 100, 3);
  EmResult em;
  const auto a = TrainModel(corpus, BuildVocabulary(corpus), {}, &em);
  const auto b = TrainModel(corpus, BuildVocabulary(corpus), {});
  EXPECT_TRUE(a.lambdas().OnSimplex());
  EXPECT_EQ(a.lambdas(), em.lambdas);
  EXPECT_EQ(SerializeModel(a), SerializeModel(b));
  EXPECT_EQ(a.counts(), CountNGrams(corpus, a.lexicon()));
}

TEST(ModelFile, RoundTripBitIdentical) {
  const auto m = testing::ToyModel(5, {0.1234567890123, 0.2, 0.3, 0.3765432109877});
  const std::string text = SerializeModel(m);
  const auto back = ParseModel(text);
  EXPECT_EQ(SerializeModel(back), text);
  EXPECT_EQ(back.lexicon(), m.lexicon());
  EXPECT_EQ(back.counts(), m.counts());
  EXPECT_EQ(back.lambdas(), m.lambdas());
  EXPECT_EQ(back.unknown(), m.unknown());

  testing::TempDir dir("model");
  SaveModel(m, dir / "m.seglm");
  EXPECT_EQ(SerializeModel(LoadModel(dir / "m.seglm")), text);
  EXPECT_THROW(LoadModel(dir / "missing.seglm"), IoError);
}

TEST(ModelFile, BadMagic) {
  std::string text = SerializeModel(testing::ToyModel());
  text.replace(0, 7, "SEGLM 2");
  EXPECT_THROW(ParseModel(text), BadMagic);
}

TEST(ModelFile, TruncatedTrigramSection) {
  const std::string text = SerializeModel(testing::ToyModel());
  const std::size_t tri = text.find("[3GRAM]");
  ASSERT_NE(tri, std::string::npos);
  const std::size_t cut = text.find('\n', text.find('\n', tri) + 1);
  try {
    ParseModel(text.substr(0, cut + 1));
    FAIL();
  } catch (const TruncatedSection& e) {
    EXPECT_EQ(e.section(), "[3GRAM]");
  }
}

}  // namespace
}  // namespace seglm
