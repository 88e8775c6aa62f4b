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

#include "seglm/char_model.h"

#include <cmath>

#include "seglm/error.h"

namespace seglm {

CharTrigramModel::CharTrigramModel(Lexicon alphabet, NGramCounts counts,
                                   Lambdas lambdas)
    : alphabet_(std::move(alphabet)),
      trigram_(std::move(counts), lambdas, alphabet_.event_count()) {}

std::vector<WordId> CharTrigramModel::ToIds(const Sentence& s) const {
  std::vector<WordId> ids;
  ids.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    ids.push_back(alphabet_.Lookup(s.span(i, i + 1)));
  }
  return ids;
}

double CharTrigramModel::SentenceLogProb(const Sentence& s) const {
  double total = 0.0;
  History h;
  for (WordId c : ToIds(s)) {
    total += trigram_.LogProb(c, h);
    h = h.Shift(c);
  }
  return total + trigram_.LogProb(kEos, h);
}

CharTrigramModel TrainCharModel(const RawCorpus& train,
                                const TrainOptions& options) {
  if (train.empty()) throw EmptyCorpus();
  Lexicon alphabet;
  for (const auto& s : train.sentences) {
    for (std::size_t i = 0; i < s.size(); ++i) alphabet.Add(s.span(i, i + 1));
  }
  auto to_ids = [&](const Sentence& s) {
    std::vector<WordId> ids;
    for (std::size_t i = 0; i < s.size(); ++i) {
      ids.push_back(alphabet.Lookup(s.span(i, i + 1)));
    }
    return ids;
  };

  const auto heldout_idx =
      HeldoutIndices(train.size(), options.heldout_fraction, options.seed);
  NGramCounts fit;
  std::vector<std::vector<WordId>> heldout;
  std::size_t next = 0;
  for (std::size_t i = 0; i < train.size(); ++i) {
    auto ids = to_ids(train.sentences[i]);
    if (next < heldout_idx.size() && heldout_idx[next] == i) {
      heldout.push_back(std::move(ids));
      ++next;
    } else {
      fit.AddSentence(ids);
    }
  }
  const EmResult em =
      EstimateLambdas(fit, heldout, alphabet.event_count(), options.em);

  NGramCounts all;
  for (const auto& s : train.sentences) all.AddSentence(to_ids(s));
  return CharTrigramModel(std::move(alphabet), std::move(all), em.lambdas);
}

double CharPerplexity(const CharTrigramModel& model, const RawCorpus& corpus) {
  if (corpus.empty()) throw EmptyCorpus();
  double log_prob = 0.0;
  std::size_t n = 0;
  for (const auto& s : corpus.sentences) {
    log_prob += model.SentenceLogProb(s);
    n += s.size() + 1;
  }
  return std::exp(-log_prob / static_cast<double>(n));
}

CharBaseline CharPerplexityBaseline(const RawCorpus& corpus,
                                    const TrainOptions& options) {
  if (corpus.empty()) throw EmptyCorpus();
  auto [train, test] = SplitHalves(corpus, options.seed);
  const CharTrigramModel model = TrainCharModel(train, options);
  CharBaseline out;
  out.char_perplexity = CharPerplexity(model, test);
  out.test_sentences = test.size();
  for (const auto& s : test.sentences) out.test_chars += s.size();
  return out;
}

}  // namespace seglm
