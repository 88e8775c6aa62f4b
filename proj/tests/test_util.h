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

// Test helpers and reference implementations that share no code with the
// library beyond its data types.

#ifndef SEGLM_TESTS_TEST_UTIL_H_
#define SEGLM_TESTS_TEST_UTIL_H_

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "seglm/corpus.h"
#include "seglm/lexicon.h"
#include "seglm/model.h"
#include "seglm/ngram.h"
#include "seglm/segmenter.h"

namespace seglm::testing {

inline std::u32string U(const char* utf8) {
  std::u32string out;
  const auto* p = reinterpret_cast<const unsigned char*>(utf8);
  while (*p) {
    char32_t c;
    int extra;
    if (*p < 0x80) { c = *p; extra = 0; }
    else if (*p < 0xE0) { c = *p & 0x1F; extra = 1; }
    else if (*p < 0xF0) { c = *p & 0x0F; extra = 2; }
    else { c = *p & 0x07; extra = 3; }
    ++p;
    for (int i = 0; i < extra; ++i) c = (c << 6) | (*p++ & 0x3F);
    out.push_back(c);
  }
  return out;
}

inline Sentence S(const char* ascii) { return Sentence::FromUtf8(ascii); }

// Direct relative-frequency trigram mixture, by scanning the padded
// sentences for every query. A history with no observations falls back to
// the next lower order.
class BruteForceMixture {
 public:
  BruteForceMixture(std::vector<std::vector<WordId>> sentences, Lambdas l,
                    std::size_t events)
      : l_(l), events_(events) {
    for (auto& s : sentences) {
      std::vector<WordId> p = {kBos, kBos};
      p.insert(p.end(), s.begin(), s.end());
      p.push_back(kEos);
      padded_.push_back(std::move(p));
    }
  }

  double Prob(WordId w, WordId u, WordId v) const {
    double uni_num = 0, uni_den = 0, bi_num = 0, bi_den = 0, tri_num = 0,
           tri_den = 0;
    for (const auto& p : padded_) {
      for (std::size_t i = 2; i < p.size(); ++i) {
        uni_den += 1;
        if (p[i] == w) uni_num += 1;
        if (p[i - 1] == v) {
          bi_den += 1;
          if (p[i] == w) bi_num += 1;
          if (p[i - 2] == u) {
            tri_den += 1;
            if (p[i] == w) tri_num += 1;
          }
        }
      }
    }
    const double f0 = 1.0 / static_cast<double>(events_);
    const double f1 = uni_den > 0 ? uni_num / uni_den : f0;
    const double f2 = bi_den > 0 ? bi_num / bi_den : f1;
    const double f3 = tri_den > 0 ? tri_num / tri_den : f2;
    return l_.trigram * f3 + l_.bigram * f2 + l_.unigram * f1 +
           l_.uniform * f0;
  }

 private:
  Lambdas l_;
  std::size_t events_;
  std::vector<std::vector<WordId>> padded_;
};

// Σ log P over one sentence, scored word by word with the model's public
// single-token queries.
inline double ReferenceSentenceLogProb(const InterpolatedTrigramModel& m,
                                       const Sentence& s,
                                       const Segmentation& seg) {
  WordId u = kBos, v = kBos;
  double total = 0;
  for (const auto& w : seg.Words(s)) {
    const WordId id = m.lexicon().Lookup(w);
    if (id == kUnk) {
      total += m.WordLogProb(kUnk, History{u, v}) + m.unknown().LogProb(w);
    } else {
      total += m.WordLogProb(id, History{u, v});
    }
    u = v;
    v = id;
  }
  return total + m.WordLogProb(kEos, History{u, v});
}

struct OracleBest {
  Segmentation segmentation = Segmentation::Whole(1);
  double logprob = -std::numeric_limits<double>::infinity();
};

// Exhaustive search with the library tie-break: higher score, then fewer
// words, then lexicographically smaller boundaries.
inline OracleBest BruteForceSegment(const InterpolatedTrigramModel& m,
                                    const Sentence& s, std::size_t d,
                                    bool allow_unseen = true) {
  OracleBest best;
  bool found = false;
  ForEachSegmentation(s.size(), d, [&](const Segmentation& seg) {
    if (!allow_unseen) {
      for (const auto& w : seg.Words(s)) {
        if (!m.lexicon().Contains(w)) return;
      }
    }
    const double lp = ReferenceSentenceLogProb(m, s, seg);
    bool better = !found || lp > best.logprob;
    if (found && lp == best.logprob) {
      if (seg.word_count() != best.segmentation.word_count()) {
        better = seg.word_count() < best.segmentation.word_count();
      } else {
        better = seg.boundaries() < best.segmentation.boundaries();
      }
    }
    if (better) {
      best.segmentation = seg;
      best.logprob = lp;
      found = true;
    }
  });
  return best;
}

// Toy setting: 12 words over the alphabet "abcdef" and a seeded corpus.
inline std::vector<std::u32string> ToyWords() {
  std::vector<std::u32string> out;
  for (const char* w : {"a", "b", "c", "d", "e", "f", "ab", "cd", "ef", "abc",
                        "bca", "fed"}) {
    out.push_back(U(w));
  }
  return out;
}

inline SegmentedCorpus RandomCorpus(const std::vector<std::u32string>& words,
                                    std::size_t sentences, std::uint64_t seed,
                                    std::size_t max_words = 6) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<std::size_t> len(1, max_words);
  SegmentedCorpus c;
  for (std::size_t i = 0; i < sentences; ++i) {
    std::vector<std::u32string> ws;
    const std::size_t m = len(rng);
    for (std::size_t k = 0; k < m; ++k) ws.push_back(words[pick(rng)]);
    c.sentences.push_back(SegmentedSentence::FromWords(ws));
  }
  return c;
}

inline Lexicon MakeLexicon(const std::vector<std::u32string>& words) {
  Lexicon lex;
  for (const auto& w : words) lex.Add(w);
  return lex;
}

// The corpus also draws a few words outside the lexicon so that UNK has
// mass.
inline InterpolatedTrigramModel ToyModel(
    std::uint64_t seed = 7, Lambdas lambdas = {0.3, 0.3, 0.3, 0.1}) {
  const auto known = ToyWords();
  auto words = known;
  for (const char* w : {"ff", "dab", "ce"}) words.push_back(U(w));
  const auto corpus = RandomCorpus(words, 200, seed);
  Lexicon lex = MakeLexicon(known);
  UnknownWordModel unk;
  for (const auto& s : corpus.sentences) unk.AddText(s.sentence.chars());
  return InterpolatedTrigramModel(lex, CountNGrams(corpus, lex), lambdas,
                                  std::move(unk));
}

inline Sentence RandomSentence(std::mt19937_64& rng, std::size_t max_len,
                               const char* alphabet = "abcdef") {
  const std::string a(alphabet);
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::size_t> ch(0, a.size() - 1);
  std::string s(len(rng), ' ');
  for (auto& c : s) c = a[ch(rng)];
  return Sentence::FromUtf8(s);
}

class TempDir {
 public:
  explicit TempDir(const std::string& name) {
    path_ = std::filesystem::temp_directory_path() /
            ("seglm_" + name + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& f) const {
    return path_ / f;
  }

 private:
  std::filesystem::path path_;
};

}  // namespace seglm::testing

#endif  // SEGLM_TESTS_TEST_UTIL_H_
