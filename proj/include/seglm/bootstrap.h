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

// Alternating segment/retrain procedure for vocabulary discovery.
//
// The corpus is split into halves T1 (given segmented) and T2 (raw). LM0 is
// trained on T1 with the initial vocabulary V0. Iteration i (from 1)
// segments half (i mod 2) -- T2 when odd, T1 when even -- with LM(i-1),
// counts every out-of-vocabulary word in the optimal segmentations, adds
// those whose count is strictly greater than the threshold to the
// vocabulary, and trains LM(i) on the freshly segmented half.

#ifndef SEGLM_BOOTSTRAP_H_
#define SEGLM_BOOTSTRAP_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seglm/corpus.h"
#include "seglm/lexicon.h"
#include "seglm/model.h"
#include "seglm/segmenter.h"

namespace seglm {

struct BootstrapConfig {
  // Words need a per-iteration count strictly greater than this.
  std::uint64_t threshold = 3;
  int iterations = 1;
  SegmenterConfig segmenter;
  TrainOptions train;
  // Train LM(i) on both segmented halves instead of only the current one.
  bool union_training = false;
};

struct IterationReport {
  int iteration = 0;
  std::size_t vocab_size = 0;
  std::size_t words_added = 0;
  // Perplexity of LM(i) on the evaluation corpus.
  double perplexity = 0;
  // Agreement with the gold segmentation of the half just segmented.
  std::optional<double> agreement;
};

class Bootstrap {
 public:
  // Trains LM0. Throws EmptyCorpus / EmptyVocabulary.
  Bootstrap(SegmentedCorpus t1, RawCorpus t2, Lexicon v0,
            BootstrapConfig config);

  IterationReport RunIteration();
  std::vector<IterationReport> Run(int iterations);

  // Fixed corpus for the per-iteration perplexity. Defaults to T1 as
  // given at construction.
  void SetEvaluationCorpus(SegmentedCorpus corpus);
  // Gold segmentation of half 0 (T1) or 1 (T2), same sentence order.
  void SetGold(int half, SegmentedCorpus gold);

  // Index i of the next iteration to run.
  int iteration() const { return iteration_; }
  const Lexicon& vocabulary() const { return vocab_; }
  const InterpolatedTrigramModel& model() const { return model_; }
  const BootstrapConfig& config() const { return config_; }
  // Counters of the most recent iteration.
  const std::map<std::u32string, std::uint64_t>& counters() const {
    return counters_;
  }
  // Words added by iteration 1, 2, ...
  const std::vector<std::vector<std::u32string>>& discovered_log() const {
    return discovered_log_;
  }
  // Current segmentation of half 0 or 1; empty until it has been produced.
  const SegmentedCorpus& segmented(int half) const {
    return segmented_.at(half);
  }
  const RawCorpus& raw(int half) const { return raw_.at(half); }

 private:
  BootstrapConfig config_;
  std::array<RawCorpus, 2> raw_;
  std::array<SegmentedCorpus, 2> segmented_;
  std::array<std::optional<SegmentedCorpus>, 2> gold_;
  SegmentedCorpus eval_;
  Lexicon vocab_;
  InterpolatedTrigramModel model_;
  std::map<std::u32string, std::uint64_t> counters_;
  std::vector<std::vector<std::u32string>> discovered_log_;
  int iteration_ = 1;
};

// Words with count > threshold, in ascending code point order.
std::vector<std::u32string> SelectAboveThreshold(
    const std::map<std::u32string, std::uint64_t>& counters,
    std::uint64_t threshold);

}  // namespace seglm

#endif  // SEGLM_BOOTSTRAP_H_
