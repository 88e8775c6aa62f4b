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

#ifndef SEGLM_CHAR_MODEL_H_
#define SEGLM_CHAR_MODEL_H_

#include <cstdint>
#include <span>
#include <vector>

#include "seglm/corpus.h"
#include "seglm/lexicon.h"
#include "seglm/model.h"
#include "seglm/ngram.h"

namespace seglm {

// Interpolated trigram over characters. Each character is a one-symbol
// "word" in the lexicon; characters unseen in training map to UNK.
class CharTrigramModel {
 public:
  CharTrigramModel(Lexicon alphabet, NGramCounts counts, Lambdas lambdas);

  const Lexicon& alphabet() const { return alphabet_; }
  const InterpolatedTrigram& trigram() const { return trigram_; }
  const Lambdas& lambdas() const { return trigram_.lambdas(); }

  std::vector<WordId> ToIds(const Sentence& s) const;
  // Σ log P(c_i | c_{i-2} c_{i-1}) + log P(EOS | ..).
  double SentenceLogProb(const Sentence& s) const;

 private:
  Lexicon alphabet_;
  InterpolatedTrigram trigram_;
};

// Alphabet = every training character; weights by EM on a held-out slice,
// then counts over all of `train`.
CharTrigramModel TrainCharModel(const RawCorpus& train,
                                const TrainOptions& options);

// exp(-Σ log P / N) with N = characters + one EOS per sentence.
double CharPerplexity(const CharTrigramModel& model, const RawCorpus& corpus);

struct CharBaseline {
  double char_perplexity = 0;
  std::size_t test_chars = 0;
  std::size_t test_sentences = 0;
};

// Seeded half/half split of the corpus; trains on one half and reports
// per-character perplexity on the other. Throws EmptyCorpus / TooSmall.
CharBaseline CharPerplexityBaseline(const RawCorpus& corpus,
                                    const TrainOptions& options);

}  // namespace seglm

#endif  // SEGLM_CHAR_MODEL_H_
