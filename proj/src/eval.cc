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

#include <algorithm>
#include <cstdio>

#include "seglm/error.h"

namespace seglm {

double AgreementScore::value() const {
  if (words_a == 0 || words_b == 0) return words_a == words_b ? 1.0 : 0.0;
  const double c = static_cast<double>(common);
  return 0.5 * (c / static_cast<double>(words_a) +
                c / static_cast<double>(words_b));
}

AgreementScore Agreement(const SegmentedSentence& a,
                         const SegmentedSentence& b) {
  if (a.sentence != b.sentence) throw SentenceMismatch(0);
  const auto& x = a.segmentation.boundaries();
  const auto& y = b.segmentation.boundaries();
  AgreementScore s{0, x.size(), y.size()};
  // A word is shared when both lists contain its end and its start.
  std::size_t i = 0, j = 0;
  std::size_t prev_x = 0, prev_y = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] == y[j]) {
      if (prev_x == prev_y) ++s.common;
      prev_x = x[i++];
      prev_y = y[j++];
    } else if (x[i] < y[j]) {
      prev_x = x[i++];
    } else {
      prev_y = y[j++];
    }
  }
  return s;
}

AgreementScore CorpusAgreement(const SegmentedCorpus& a,
                               const SegmentedCorpus& b) {
  if (a.size() != b.size()) {
    throw SentenceMismatch(std::min(a.size(), b.size()));
  }
  AgreementScore total;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a.sentences[k].sentence != b.sentences[k].sentence) {
      throw SentenceMismatch(k);
    }
    total += Agreement(a.sentences[k], b.sentences[k]);
  }
  return total;
}

double CorpusAgreementMacro(const SegmentedCorpus& a,
                            const SegmentedCorpus& b) {
  if (a.size() != b.size()) {
    throw SentenceMismatch(std::min(a.size(), b.size()));
  }
  if (a.empty()) return 1.0;
  double sum = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a.sentences[k].sentence != b.sentences[k].sentence) {
      throw SentenceMismatch(k);
    }
    sum += Agreement(a.sentences[k], b.sentences[k]).value();
  }
  return sum / static_cast<double>(a.size());
}

DiscoveryReport DiscoveryMetrics(
    const std::vector<std::vector<std::u32string>>& discovered_log,
    const std::set<std::u32string>& gold_hidden) {
  DiscoveryReport r;
  for (const auto& iteration : discovered_log) {
    r.discovered.insert(iteration.begin(), iteration.end());
  }
  r.gold = gold_hidden;
  for (const auto& w : r.discovered) r.hits += r.gold.count(w);
  if (!r.discovered.empty()) {
    r.precision = static_cast<double>(r.hits) /
                  static_cast<double>(r.discovered.size());
  }
  if (!r.gold.empty()) {
    r.recall =
        static_cast<double>(r.hits) / static_cast<double>(r.gold.size());
  }
  return r;
}

std::string FormatAgreementTable(const std::vector<std::string>& names,
                                 const std::vector<SegmentedCorpus>& corpora) {
  if (names.size() != corpora.size()) {
    throw ValidationError("one name per corpus is required");
  }
  std::size_t width = 6;
  for (const auto& n : names) width = std::max(width, n.size() + 1);
  auto pad = [&](std::string s) {
    s.resize(std::max(s.size(), width), ' ');
    return s;
  };
  auto emit = [](std::string* out, std::string line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    *out += line;
    out->push_back('\n');
  };
  std::string out, header = pad("");
  for (const auto& n : names) header += pad(n);
  emit(&out, header);
  for (std::size_t r = 0; r < corpora.size(); ++r) {
    std::string line = pad(names[r]);
    for (std::size_t c = 0; c < corpora.size(); ++c) {
      if (c >= r) {
        line += pad("");
        continue;
      }
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.1f",
                    100.0 * CorpusAgreement(corpora[r], corpora[c]).value());
      line += pad(buf);
    }
    emit(&out, line);
  }
  return out;
}

}  // namespace seglm
