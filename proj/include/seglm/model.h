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

// Word trigram language model with an open vocabulary.
//
// In-lexicon words are scored by the interpolated trigram. A string
// outside the lexicon is scored as the UNK class under the trigram times
// a spelling probability from UnknownWordModel:
//
//   log P(s | h) = log P(UNK | h) + log P_unk(s).
//
// All logs are natural logs.

#ifndef SEGLM_MODEL_H_
#define SEGLM_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "seglm/corpus.h"
#include "seglm/lexicon.h"
#include "seglm/ngram.h"

namespace seglm {

// Spelling model for out-of-lexicon strings: a truncated geometric length
// prior times an add-one-smoothed character unigram.
//
//   P_unk(s) = (1 - g) g^(|s|-1) / (1 - g^d) * Π p(s_i),   1 <= |s| <= d
//
// p(c) = (count(c) + 1) / (N + A + 1) over the A seen characters plus one
// bucket shared by every unseen character, so P_unk sums to one over all
// strings of length 1..d.
class UnknownWordModel {
 public:
  static constexpr double kDefaultGamma = 0.4;
  static constexpr std::size_t kDefaultMaxLength = 10;

  explicit UnknownWordModel(double gamma = kDefaultGamma,
                            std::size_t max_length = kDefaultMaxLength);

  void AddText(std::u32string_view text);
  void AddCharCount(char32_t c, std::uint64_t n);

  double CharProb(char32_t c) const;
  double UnseenCharProb() const;
  double LengthLogProb(std::size_t length) const;
  // Throws TooLong when |s| > max_length; ValidationError when empty.
  double LogProb(std::u32string_view s) const;

  double gamma() const { return gamma_; }
  std::size_t max_length() const { return max_length_; }
  std::uint64_t total_chars() const { return total_; }
  const std::map<char32_t, std::uint64_t>& char_counts() const {
    return counts_;
  }

  friend bool operator==(const UnknownWordModel&,
                         const UnknownWordModel&) = default;

 private:
  double gamma_;
  std::size_t max_length_;
  std::map<char32_t, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

class InterpolatedTrigramModel {
 public:
  InterpolatedTrigramModel(Lexicon lexicon, NGramCounts counts,
                           Lambdas lambdas, UnknownWordModel unk);

  const Lexicon& lexicon() const { return lexicon_; }
  const NGramCounts& counts() const { return trigram_.counts(); }
  const Lambdas& lambdas() const { return trigram_.lambdas(); }
  const UnknownWordModel& unknown() const { return unk_; }
  const InterpolatedTrigram& trigram() const { return trigram_; }
  std::size_t event_count() const { return trigram_.event_count(); }

  // log P(w | h) for an id in the event set (a word, UNK or EOS).
  double WordLogProb(WordId w, History h) const {
    return trigram_.LogProb(w, h);
  }
  // log P(UNK | h) + log P_unk(s). Throws TooLong.
  double UnseenLogProb(std::u32string_view s, History h) const;
  // History-free variant: the UNK class probability under a context that
  // has no trigram or bigram counts.
  double UnseenLogProb(std::u32string_view s) const {
    return UnseenLogProb(s, History::None());
  }
  // Scores `word` by lexicon lookup; returns its id (kUnk when unseen).
  double TokenLogProb(std::u32string_view word, History h,
                      WordId* id = nullptr) const;

  // Σ log P(w_i | w_{i-2} w_{i-1}) over w_1..w_m, EOS with BOS padding.
  double SentenceLogProb(const Sentence& s, const Segmentation& seg) const;
  double SentenceLogProb(const SegmentedSentence& s) const {
    return SentenceLogProb(s.sentence, s.segmentation);
  }

 private:
  Lexicon lexicon_;
  InterpolatedTrigram trigram_;
  UnknownWordModel unk_;
};

// Words counted in the lexicon, out-of-lexicon words as UNK.
NGramCounts CountNGrams(const SegmentedCorpus& corpus, const Lexicon& lexicon);

// Maps every word of every sentence to lexicon ids.
std::vector<std::vector<WordId>> ToIds(const SegmentedCorpus& corpus,
                                       const Lexicon& lexicon);

EmResult EstimateLambdas(const NGramCounts& train,
                         const SegmentedCorpus& heldout,
                         const Lexicon& lexicon, const EmOptions& options);

// exp(-Σ log P / N), N = words + one EOS per sentence. Throws EmptyCorpus.
double Perplexity(const InterpolatedTrigramModel& model,
                  const SegmentedCorpus& corpus);

// Every word occurring at least `min_count` times, in first-seen order.
Lexicon BuildVocabulary(const SegmentedCorpus& corpus,
                        std::uint64_t min_count = 1);

struct TrainOptions {
  double heldout_fraction = 0.1;
  std::uint64_t seed = 42;
  EmOptions em;
  double gamma = UnknownWordModel::kDefaultGamma;
  std::size_t max_unseen_length = UnknownWordModel::kDefaultMaxLength;
};

// Held-out rows for weight estimation: a seeded sample of
// max(1, round(fraction * n)) sentence indices, sorted. The remaining
// indices must be non-empty; throws TooSmall / ValidationError.
std::vector<std::size_t> HeldoutIndices(std::size_t n, double fraction,
                                        std::uint64_t seed);

// Splits off a held-out slice, counts the rest, estimates the weights by
// EM on the slice, then recounts the whole corpus. The spelling model is
// trained on every character of the corpus.
InterpolatedTrigramModel TrainModel(const SegmentedCorpus& corpus,
                                    Lexicon lexicon,
                                    const TrainOptions& options,
                                    EmResult* em_result = nullptr);

// Text model file: "SEGLM 1" then [LEXICON], [LAMBDA], [UNK], [1GRAM],
// [2GRAM] and [3GRAM] sections, each header followed by a tab and its
// record count. Records are tab separated and sorted, so equal models
// serialize to equal bytes.
std::string SerializeModel(const InterpolatedTrigramModel& model);
InterpolatedTrigramModel ParseModel(std::string_view text);
void SaveModel(const InterpolatedTrigramModel& model,
               const std::filesystem::path& path);
InterpolatedTrigramModel LoadModel(const std::filesystem::path& path);

}  // namespace seglm

#endif  // SEGLM_MODEL_H_
