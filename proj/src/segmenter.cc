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

#include "seglm/segmenter.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "seglm/error.h"

namespace seglm {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Candidate words of one sentence, indexed by (begin, length).
class WordLattice {
 public:
  WordLattice(const InterpolatedTrigramModel& model, const Sentence& sentence,
              const SegmenterConfig& config)
      : model_(model),
        n_(sentence.size()),
        d_(config.max_word_length),
        spans_(n_ * d_) {
    if (d_ == 0) throw ValidationError("max word length must be >= 1");
    const Lexicon& lex = model.lexicon();
    const UnknownWordModel& unk = model.unknown();
    const std::size_t lex_max = lex.max_word_length();
    for (std::size_t b = 0; b < n_; ++b) {
      for (std::size_t len = 1; len <= d_ && b + len <= n_; ++len) {
        Span& s = spans_[b * d_ + len - 1];
        const auto text = sentence.span(b, b + len);
        if (len <= lex_max) {
          if (auto id = lex.Find(text)) {
            s.id = *id;
            s.usable = true;
            continue;
          }
        }
        if (config.allow_unseen && len <= unk.max_length()) {
          s.id = kUnk;
          s.spelling = unk.LogProb(text);
          s.usable = true;
        }
      }
    }
  }

  std::size_t size() const { return n_; }
  std::size_t max_length() const { return d_; }
  bool usable(std::size_t b, std::size_t len) const {
    return spans_[b * d_ + len - 1].usable;
  }
  WordId id(std::size_t b, std::size_t len) const {
    return spans_[b * d_ + len - 1].id;
  }

  // Same arithmetic as InterpolatedTrigramModel::TokenLogProb, so scores
  // match SentenceLogProb bit for bit. `unk_logprob` is log P(UNK | h).
  double Cost(std::size_t b, std::size_t len, History h,
              double unk_logprob) const {
    const Span& s = spans_[b * d_ + len - 1];
    if (s.id == kUnk) return unk_logprob + s.spelling;
    return model_.WordLogProb(s.id, h);
  }

  double EosCost(History h) const { return model_.WordLogProb(kEos, h); }
  double UnkCost(History h) const { return model_.WordLogProb(kUnk, h); }

 private:
  struct Span {
    WordId id = kUnk;
    double spelling = 0;
    bool usable = false;
  };

  const InterpolatedTrigramModel& model_;
  std::size_t n_;
  std::size_t d_;
  std::vector<Span> spans_;
};

ScoredSegmentation Finish(const WordLattice& lattice, const Sentence& sentence,
                          std::vector<std::size_t> boundaries,
                          double logprob) {
  ScoredSegmentation out{Segmentation(std::move(boundaries), sentence.size()),
                         logprob,
                         {}};
  const auto& seg = out.segmentation;
  for (std::size_t k = 0; k < seg.word_count(); ++k) {
    const std::size_t b = seg.word_begin(k), e = seg.word_end(k);
    if (lattice.id(b, e - b) == kUnk) {
      out.unseen_words.push_back({std::u32string(sentence.span(b, e)), b, e});
    }
  }
  return out;
}

// Score-then-words-then-boundaries order. The boundary comparison is only
// evaluated on exact ties, so its cost is rarely paid.
template <typename BoundariesFn>
bool Better(double score, std::size_t words, double best_score,
            std::size_t best_words, BoundariesFn&& less_boundaries) {
  if (score != best_score) return score > best_score;
  if (words != best_words) return words < best_words;
  return less_boundaries();
}

// DP over states (k, a, b): the last word spans [k-a, k) and the word
// before it spans [k-a-b, k-a). b = 0 means the history there is BOS.
class ExactDecoder {
 public:
  explicit ExactDecoder(const WordLattice& lattice)
      : lattice_(lattice),
        n_(lattice.size()),
        d_(lattice.max_length()),
        score_((n_ + 1) * (d_ + 1) * (d_ + 1), kNegInf),
        words_(score_.size(), 0),
        back_(score_.size(), 0) {}

  std::pair<std::vector<std::size_t>, double> Run() {
    score_[Index(0, 0, 0)] = 0.0;
    for (std::size_t k = 0; k < n_; ++k) {
      for (std::size_t a = (k == 0 ? 0 : 1); a <= std::min(d_, k); ++a) {
        for (std::size_t b = 0; b <= std::min(d_, k - a); ++b) {
          if ((b == 0) != (k == a) && k != 0) continue;
          const std::size_t from = Index(k, a, b);
          if (score_[from] == kNegInf) continue;
          const History h = HistoryOf(k, a, b);
          const double unk = lattice_.UnkCost(h);
          for (std::size_t c = 1; c <= d_ && k + c <= n_; ++c) {
            if (!lattice_.usable(k, c)) continue;
            const double s = score_[from] + lattice_.Cost(k, c, h, unk);
            const std::size_t w = words_[from] + 1;
            const std::size_t to = Index(k + c, c, a);
            if (score_[to] == kNegInf ||
                Better(s, w, score_[to], words_[to], [&] {
                  return Path(k, a, b) < Path(k, a, back_[to]);
                })) {
              score_[to] = s;
              words_[to] = w;
              back_[to] = b;
            }
          }
        }
      }
    }

    double best = kNegInf;
    std::size_t best_words = 0, best_a = 0, best_b = 0;
    bool found = false;
    for (std::size_t a = 1; a <= std::min(d_, n_); ++a) {
      for (std::size_t b = 0; b <= std::min(d_, n_ - a); ++b) {
        const std::size_t idx = Index(n_, a, b);
        if (score_[idx] == kNegInf) continue;
        const double s = score_[idx] + lattice_.EosCost(HistoryOf(n_, a, b));
        if (!found || Better(s, words_[idx], best, best_words, [&] {
              return Path(n_, a, b) < Path(n_, best_a, best_b);
            })) {
          found = true;
          best = s;
          best_words = words_[idx];
          best_a = a;
          best_b = b;
        }
      }
    }
    if (!found) throw Unsegmentable();
    return {Path(n_, best_a, best_b), best};
  }

 private:
  std::size_t Index(std::size_t k, std::size_t a, std::size_t b) const {
    return (k * (d_ + 1) + a) * (d_ + 1) + b;
  }

  History HistoryOf(std::size_t k, std::size_t a, std::size_t b) const {
    History h;
    if (a > 0) h.v = lattice_.id(k - a, a);
    if (b > 0) h.u = lattice_.id(k - a - b, b);
    return h;
  }

  // Boundary list of the best path into state (k, a, b).
  std::vector<std::size_t> Path(std::size_t k, std::size_t a,
                                std::size_t b) const {
    std::vector<std::size_t> out;
    while (k > 0) {
      out.push_back(k);
      const std::size_t prev_b = back_[Index(k, a, b)];
      k -= a;
      a = b;
      b = prev_b;
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  const WordLattice& lattice_;
  std::size_t n_;
  std::size_t d_;
  std::vector<double> score_;
  std::vector<std::size_t> words_;
  std::vector<std::size_t> back_;
};

struct PaperState {
  PaperTable table;
  std::vector<History> history;
  std::vector<std::size_t> words;
};

std::vector<std::size_t> PaperPath(const PaperTable& t, std::size_t k) {
  std::vector<std::size_t> out;
  while (k > 0) {
    out.push_back(k);
    k = t.backpointer[k];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

PaperState RunPaper(const WordLattice& lattice) {
  const std::size_t n = lattice.size();
  const std::size_t d = lattice.max_length();
  PaperState st;
  st.table.score.assign(n + 1, kNegInf);
  st.table.backpointer.assign(n + 1, 0);
  st.history.assign(n + 1, History{});
  st.words.assign(n + 1, 0);
  st.table.score[0] = 0.0;
  std::vector<double> unk(n + 1, 0.0);
  unk[0] = lattice.UnkCost(History{});

  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t lo = k > d ? k - d : 0;
    for (std::size_t i = lo; i < k; ++i) {
      if (st.table.score[i] == kNegInf || !lattice.usable(i, k - i)) continue;
      const double s =
          st.table.score[i] + lattice.Cost(i, k - i, st.history[i], unk[i]);
      const std::size_t w = st.words[i] + 1;
      if (st.table.score[k] == kNegInf ||
          Better(s, w, st.table.score[k], st.words[k], [&] {
            return PaperPath(st.table, i) <
                   PaperPath(st.table, st.table.backpointer[k]);
          })) {
        st.table.score[k] = s;
        st.table.backpointer[k] = i;
        st.words[k] = w;
      }
    }
    if (st.table.score[k] != kNegInf) {
      const std::size_t i = st.table.backpointer[k];
      st.history[k] = st.history[i].Shift(lattice.id(i, k - i));
      unk[k] = lattice.UnkCost(st.history[k]);
    }
  }
  return st;
}

}  // namespace

PaperTable BuildPaperTable(const InterpolatedTrigramModel& model,
                           const Sentence& sentence,
                           const SegmenterConfig& config) {
  const WordLattice lattice(model, sentence, config);
  return RunPaper(lattice).table;
}

ScoredSegmentation Segment(const InterpolatedTrigramModel& model,
                           const Sentence& sentence,
                           const SegmenterConfig& config) {
  const WordLattice lattice(model, sentence, config);
  if (config.mode == SegmentMode::kExact) {
    auto [boundaries, score] = ExactDecoder(lattice).Run();
    return Finish(lattice, sentence, std::move(boundaries), score);
  }
  const PaperState st = RunPaper(lattice);
  const std::size_t n = sentence.size();
  if (st.table.score[n] == kNegInf) throw Unsegmentable();
  const double score = st.table.score[n] + lattice.EosCost(st.history[n]);
  return Finish(lattice, sentence, PaperPath(st.table, n), score);
}

std::vector<ScoredSegmentation> SegmentAll(
    const InterpolatedTrigramModel& model, const RawCorpus& corpus,
    const SegmenterConfig& config) {
  std::vector<ScoredSegmentation> out;
  out.reserve(corpus.size());
  for (const auto& s : corpus.sentences) {
    out.push_back(Segment(model, s, config));
  }
  return out;
}

Segmentation Backtrace(std::span<const std::size_t> p) {
  const std::size_t n = p.size();
  if (n == 0) throw ValidationError("empty backpointer table");
  std::vector<std::size_t> out;
  std::size_t k = n;
  while (k > 0) {
    out.push_back(k);
    const std::size_t prev = p[k - 1];
    if (prev >= k) throw ValidationError("backpointer does not move left");
    k = prev;
  }
  std::reverse(out.begin(), out.end());
  return Segmentation(std::move(out), n);
}

Segmentation GreedyLongestMatch(const Lexicon& lexicon,
                                const Sentence& sentence,
                                std::size_t max_length) {
  const std::size_t n = sentence.size();
  const std::size_t longest = std::min(max_length, lexicon.max_word_length());
  std::vector<std::size_t> boundaries;
  std::size_t pos = 0;
  while (pos < n) {
    std::size_t take = 1;
    for (std::size_t len = std::min(longest, n - pos); len >= 1; --len) {
      if (lexicon.Contains(sentence.span(pos, pos + len))) {
        take = len;
        break;
      }
    }
    pos += take;
    boundaries.push_back(pos);
  }
  return Segmentation(std::move(boundaries), n);
}

SegmentedCorpus GreedySegmentCorpus(const Lexicon& lexicon,
                                    const RawCorpus& corpus,
                                    std::size_t max_length) {
  SegmentedCorpus out;
  out.sentences.reserve(corpus.size());
  for (const auto& s : corpus.sentences) {
    out.sentences.emplace_back(s, GreedyLongestMatch(lexicon, s, max_length));
  }
  return out;
}

void ForEachSegmentation(std::size_t n, std::size_t d,
                         const std::function<void(const Segmentation&)>& fn) {
  if (n > kMaxEnumerationLength) throw TooLong(n, kMaxEnumerationLength);
  if (n == 0 || d == 0) throw ValidationError("n and d must be >= 1");
  std::vector<std::size_t> boundaries;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == n) {
      fn(Segmentation(boundaries, n));
      return;
    }
    for (std::size_t len = 1; len <= d && pos + len <= n; ++len) {
      boundaries.push_back(pos + len);
      rec(pos + len);
      boundaries.pop_back();
    }
  };
  rec(0);
}

std::vector<Segmentation> EnumerateSegmentations(std::size_t n,
                                                 std::size_t d) {
  std::vector<Segmentation> out;
  ForEachSegmentation(n, d, [&](const Segmentation& s) { out.push_back(s); });
  return out;
}

}  // namespace seglm
