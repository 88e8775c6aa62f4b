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

#include "seglm/lexicon.h"

#include <gtest/gtest.h>

#include "seglm/error.h"
#include "seglm/utf8.h"
#include "test_util.h"

namespace seglm {
namespace {

TEST(Lexicon, ReservedIds) {
  Lexicon lex;
  EXPECT_EQ(lex.size(), 3u);
  EXPECT_EQ(lex.word_count(), 0u);
  const WordId a = lex.Add(U"ab");
  EXPECT_EQ(a, kFirstWordId);
  EXPECT_EQ(lex.Add(U"ab"), a);
  EXPECT_EQ(lex.Lookup(U"zz"), kUnk);
  EXPECT_EQ(lex.word(a), U"ab");
  EXPECT_EQ(lex.event_count(), 3u);
  EXPECT_EQ(lex.max_word_length(), 2u);
}

TEST(Lexicon, CopyKeepsIndex) {
  Lexicon lex;
  lex.Add(U"ab");
  lex.Add(U"c");
  Lexicon copy = lex;
  lex.Add(U"d");
  EXPECT_EQ(copy.Lookup(U"c"), kFirstWordId + 1);
  EXPECT_FALSE(copy.Contains(U"d"));
  copy = lex;
  EXPECT_TRUE(copy.Contains(U"d"));
}

TEST(Vocabulary, RoundTrip) {
  const Lexicon lex = ParseVocabulary("一二\nab\n\nc\n");
  EXPECT_EQ(lex.word_count(), 3u);
  EXPECT_EQ(ParseVocabulary(FormatVocabulary(lex)), lex);
  EXPECT_THROW(ParseVocabulary("a b\n"), FormatError);
}

TEST(Utf8, RoundTrip) {
  const std::string s = "a\xc3\xa9\xe4\xb8\x80\xf0\x9f\x98\x80";
  const auto u = DecodeUtf8(s);
  EXPECT_EQ(u, (std::u32string{U'a', 0xE9, 0x4E00, 0x1F600}));
  EXPECT_EQ(EncodeUtf8(u), s);
  EXPECT_THROW(DecodeUtf8("\xed\xa0\x80"), EncodingError);
  EXPECT_TRUE(IsSeparatorOrControl(U'\t'));
  EXPECT_TRUE(IsSeparatorOrControl(0x3000));
  EXPECT_FALSE(IsSeparatorOrControl(U'x'));
}

}  // namespace
}  // namespace seglm
