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

// Language-model segmentation of delimiter-free sentences.
//
// Two decoders share one lattice of candidate words (every span of at most
// `max_word_length` characters that is a lexicon word or, when allowed,
// an unseen word priced by the spelling model):
//
//  * kExact keeps one DP state per (previous word span, last word span),
//    so the trigram history of every hypothesis is exact and the result is
//    the true argmax of the sentence log-probability.
//
//  * kPaper keeps one state per character position k. L(k) is the best
//    score of the first k characters and p(k) the end of the preceding
//    word; a new word ending at k is scored with the history read off the
//    best path into its start. Cheaper, but not guaranteed optimal under a
//    trigram.
//
// Both modes start from L(0) = 0 with history (BOS, BOS), and break score
// ties by fewer words, then by the lexicographically smallest boundary
// list.

#ifndef SEGLM_SEGMENTER_H_
#define SEGLM_SEGMENTER_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "seglm/corpus.h"
#include "seglm/lexicon.h"
#include "seglm/model.h"

namespace seglm {

enum class SegmentMode { kExact, kPaper };

struct SegmenterConfig {
  std::size_t max_word_length = 10;
  SegmentMode mode = SegmentMode::kExact;
  bool allow_unseen = true;
};

struct UnseenWord {
  std::u32string word;
  // 0-based half-open character span.
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const UnseenWord&, const UnseenWord&) = default;
};

struct ScoredSegmentation {
  Segmentation segmentation;
  // Equals model.SentenceLogProb(sentence, segmentation).
  double logprob = 0;
  std::vector<UnseenWord> unseen_words;
};

// Throws Unsegmentable when allow_unseen is false and the lexicon cannot
// tile the sentence; ValidationError when max_word_length is 0.
ScoredSegmentation Segment(const InterpolatedTrigramModel& model,
                           const Sentence& sentence,
                           const SegmenterConfig& config = {});

std::vector<ScoredSegmentation> SegmentAll(
    const InterpolatedTrigramModel& model, const RawCorpus& corpus,
    const SegmenterConfig& config = {});

// Position-indexed table of the kPaper decoder. Index k runs over 0..n;
// backpointer[0] is unused and score[k] is -inf where no prefix tiling
// exists. score[k] carries no EOS term.
struct PaperTable {
  std::vector<double> score;
  std::vector<std::size_t> backpointer;
};

PaperTable BuildPaperTable(const InterpolatedTrigramModel& model,
                           const Sentence& sentence,
                           const SegmenterConfig& config);

// Follows p(n), p(p(n)), ... back to 0. `p` holds p(1)..p(n), so p[k-1]
// is the end of the word preceding the one that ends at k.
Segmentation Backtrace(std::span<const std::size_t> p);

// Left to right, take the longest lexicon word of at most `max_length`
// characters at each position; a single character when none matches.
Segmentation GreedyLongestMatch(const Lexicon& lexicon,
                                const Sentence& sentence,
                                std::size_t max_length);

SegmentedCorpus GreedySegmentCorpus(const Lexicon& lexicon,
                                    const RawCorpus& corpus,
                                    std::size_t max_length);

// Exhaustive enumeration of every segmentation with word lengths <= d,
// for use as a test oracle. Throws TooLong when n exceeds
// kMaxEnumerationLength.
inline constexpr std::size_t kMaxEnumerationLength = 20;
void ForEachSegmentation(std::size_t n, std::size_t d,
                         const std::function<void(const Segmentation&)>& fn);
std::vector<Segmentation> EnumerateSegmentations(std::size_t n, std::size_t d);

}  // namespace seglm

#endif  // SEGLM_SEGMENTER_H_
