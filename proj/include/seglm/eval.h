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

#ifndef SEGLM_EVAL_H_
#define SEGLM_EVAL_H_

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "seglm/corpus.h"

namespace seglm {

// Word agreement between two segmentations of the same text:
// ½ (n_c / n_1 + n_c / n_2), the mean of recall and precision, where n_c
// counts words whose character span occurs in both.
struct AgreementScore {
  std::uint64_t common = 0;
  std::uint64_t words_a = 0;
  std::uint64_t words_b = 0;

  double value() const;
  AgreementScore& operator+=(const AgreementScore& o) {
    common += o.common;
    words_a += o.words_a;
    words_b += o.words_b;
    return *this;
  }
};

// Throws SentenceMismatch(0) if the character sequences differ.
AgreementScore Agreement(const SegmentedSentence& a,
                         const SegmentedSentence& b);

// Pooled counts over all sentence pairs, formula applied once.
AgreementScore CorpusAgreement(const SegmentedCorpus& a,
                               const SegmentedCorpus& b);
// Mean of the per-sentence values.
double CorpusAgreementMacro(const SegmentedCorpus& a,
                            const SegmentedCorpus& b);

struct DiscoveryReport {
  std::set<std::u32string> discovered;
  std::set<std::u32string> gold;
  std::size_t hits = 0;
  // 1 when nothing was discovered.
  double precision = 1;
  // 1 when the gold set is empty.
  double recall = 1;
};

// Union of every iteration's additions scored against the hidden words.
DiscoveryReport DiscoveryMetrics(
    const std::vector<std::vector<std::u32string>>& discovered_log,
    const std::set<std::u32string>& gold_hidden);

// Lower-triangular agreement matrix, one row and column per corpus.
std::string FormatAgreementTable(const std::vector<std::string>& names,
                                 const std::vector<SegmentedCorpus>& corpora);

}  // namespace seglm

#endif  // SEGLM_EVAL_H_
