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

#include "seglm/eval.h"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <utility>

#include "seglm/error.h"
#include "seglm/segmenter.h"
#include "test_util.h"

namespace seglm {
namespace {

using testing::U;

SegmentedSentence Seg(const char* line) {
  return ParseSegmented(line).sentences.at(0);
}

// n_c from explicit span sets.
double SpanOracle(const SegmentedSentence& a, const SegmentedSentence& b) {
  auto spans = [](const Segmentation& s) {
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t k = 0; k < s.word_count(); ++k) {
      out.insert({s.word_begin(k), s.word_end(k)});
    }
    return out;
  };
  const auto x = spans(a.segmentation), y = spans(b.segmentation);
  double common = 0;
  for (const auto& p : x) common += y.count(p);
  return 0.5 * (common / x.size() + common / y.size());
}

TEST(Agreement, Identity) {
  const auto a = Seg("ab c de");
  const auto s = Agreement(a, a);
  EXPECT_EQ(s.common, 3u);
  EXPECT_DOUBLE_EQ(s.value(), 1.0);
}

TEST(Agreement, FiveTwelfths) {
  const auto s = Agreement(Seg("ab c d"), Seg("ab cd"));
  EXPECT_EQ(s.common, 1u);
  EXPECT_EQ(s.words_a, 3u);
  EXPECT_EQ(s.words_b, 2u);
  EXPECT_DOUBLE_EQ(s.value(), 5.0 / 12);
}

TEST(Agreement, Mismatch) {
  EXPECT_THROW(Agreement(Seg("ab c"), Seg("ab d")), SentenceMismatch);
  EXPECT_THROW(CorpusAgreement(ParseSegmented("a\nb\n"), ParseSegmented("a\n")),
               SentenceMismatch);
}

TEST(Agreement, MatchesSpanOracleAndIsSymmetric) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const Sentence s = testing::RandomSentence(rng, 8);
    const auto all = EnumerateSegmentations(s.size(), s.size());
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    const SegmentedSentence a(s, all[pick(rng)]), b(s, all[pick(rng)]);
    EXPECT_DOUBLE_EQ(Agreement(a, b).value(), SpanOracle(a, b));
    EXPECT_DOUBLE_EQ(Agreement(a, b).value(), Agreement(b, a).value());
  }
}

TEST(CorpusAgreement, SelfAndSingleSentence) {
  const auto c = ParseSegmented("ab c d\nxy z\n");
  EXPECT_DOUBLE_EQ(CorpusAgreement(c, c).value(), 1.0);
  EXPECT_DOUBLE_EQ(
      CorpusAgreement(ParseSegmented("ab c d\n"), ParseSegmented("ab cd\n"))
          .value(),
      5.0 / 12);
}

TEST(CorpusAgreement, MicroAndMacroDiffer) {
  // Sentence 1 agrees fully on one word; sentence 2 shares 1 of 4 vs 1.
  const auto a = ParseSegmented("ab\nw x y z\n");
  const auto b = ParseSegmented("ab\nwxyz\n");
  // Pooled: n_c = 1, n_1 = 5, n_2 = 2.
  EXPECT_DOUBLE_EQ(CorpusAgreement(a, b).value(), 0.5 * (1.0 / 5 + 1.0 / 2));
  // Per sentence: 1 and 0.
  EXPECT_DOUBLE_EQ(CorpusAgreementMacro(a, b), 0.5);
}

TEST(DiscoveryMetrics, Cases) {
  const std::set<std::u32string> gold = {U"y", U"z"};
  auto r = DiscoveryMetrics({{U"y"}, {U"z"}}, gold);
  EXPECT_DOUBLE_EQ(r.precision, 1.0);
  EXPECT_DOUBLE_EQ(r.recall, 1.0);
  r = DiscoveryMetrics({}, gold);
  EXPECT_DOUBLE_EQ(r.precision, 1.0);
  EXPECT_DOUBLE_EQ(r.recall, 0.0);
  r = DiscoveryMetrics({{U"x", U"y"}}, gold);
  EXPECT_DOUBLE_EQ(r.precision, 0.5);
  EXPECT_DOUBLE_EQ(r.recall, 0.5);
  EXPECT_EQ(r.hits, 1u);
}

TEST(FormatAgreementTable, LowerTriangle) {
  const auto a = ParseSegmented("ab c d\n");
  const auto b = ParseSegmented("ab cd\n");
  const std::string t = FormatAgreementTable({"A", "B"}, {a, b});
  EXPECT_EQ(t, "      A     B\nA\nB     41.7\n");
}

}  // namespace
}  // namespace seglm
