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

#include "seglm/bootstrap.h"

#include "seglm/error.h"
#include "seglm/eval.h"

namespace seglm {

namespace {

InterpolatedTrigramModel TrainInitial(const SegmentedCorpus& t1,
                                      const Lexicon& v0,
                                      const BootstrapConfig& config) {
  if (t1.empty()) throw EmptyCorpus();
  if (v0.word_count() == 0) throw EmptyVocabulary();
  if (config.iterations < 1) throw ValidationError("iterations must be >= 1");
  return TrainModel(t1, v0, config.train);
}

}  // namespace

std::vector<std::u32string> SelectAboveThreshold(
    const std::map<std::u32string, std::uint64_t>& counters,
    std::uint64_t threshold) {
  std::vector<std::u32string> out;
  for (const auto& [word, n] : counters) {
    if (n > threshold) out.push_back(word);
  }
  return out;
}

Bootstrap::Bootstrap(SegmentedCorpus t1, RawCorpus t2, Lexicon v0,
                     BootstrapConfig config)
    : config_(std::move(config)),
      vocab_(std::move(v0)),
      model_(TrainInitial(t1, vocab_, config_)) {
  raw_[0] = t1.ToRaw();
  raw_[1] = std::move(t2);
  eval_ = t1;
  segmented_[0] = std::move(t1);
}

void Bootstrap::SetEvaluationCorpus(SegmentedCorpus corpus) {
  if (corpus.empty()) throw EmptyCorpus();
  eval_ = std::move(corpus);
}

void Bootstrap::SetGold(int half, SegmentedCorpus gold) {
  if (gold.size() != raw_.at(half).size()) throw SentenceMismatch(0);
  gold_.at(half) = std::move(gold);
}

IterationReport Bootstrap::RunIteration() {
  const int half = iteration_ % 2;
  const RawCorpus& target = raw_[half];
  if (target.empty()) throw EmptyCorpus();

  counters_.clear();
  SegmentedCorpus segmented;
  segmented.sentences.reserve(target.size());
  for (const auto& sentence : target.sentences) {
    ScoredSegmentation best = Segment(model_, sentence, config_.segmenter);
    for (const auto& w : best.unseen_words) ++counters_[w.word];
    segmented.sentences.emplace_back(sentence, std::move(best.segmentation));
  }
  segmented_[half] = std::move(segmented);

  std::vector<std::u32string> added =
      SelectAboveThreshold(counters_, config_.threshold);
  for (const auto& w : added) vocab_.Add(w);

  TrainOptions train = config_.train;
  train.seed += static_cast<std::uint64_t>(iteration_);
  if (config_.union_training && !segmented_[1 - half].empty()) {
    SegmentedCorpus both = segmented_[0];
    both.sentences.insert(both.sentences.end(),
                          segmented_[1].sentences.begin(),
                          segmented_[1].sentences.end());
    model_ = TrainModel(both, vocab_, train);
  } else {
    model_ = TrainModel(segmented_[half], vocab_, train);
  }

  IterationReport report;
  report.iteration = iteration_;
  report.vocab_size = vocab_.word_count();
  report.words_added = added.size();
  report.perplexity = Perplexity(model_, eval_);
  if (gold_[half]) {
    report.agreement = CorpusAgreement(segmented_[half], *gold_[half]).value();
  }
  discovered_log_.push_back(std::move(added));
  ++iteration_;
  return report;
}

std::vector<IterationReport> Bootstrap::Run(int iterations) {
  if (iterations < 1) throw ValidationError("iterations must be >= 1");
  std::vector<IterationReport> reports;
  for (int k = 0; k < iterations; ++k) reports.push_back(RunIteration());
  return reports;
}

}  // namespace seglm
