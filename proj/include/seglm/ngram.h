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

// Trigram count tables and the deleted-interpolation mixture over them.
// Nothing here knows about surface strings; the word model and the
// character baseline both build on these id-level pieces.

#ifndef SEGLM_NGRAM_H_
#define SEGLM_NGRAM_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <unordered_map>
#include <vector>

#include "seglm/lexicon.h"

namespace seglm {

// Two preceding tokens; `u` is the older one. Sentence starts are padded
// with BOS.
struct History {
  WordId u = kBos;
  WordId v = kBos;

  static constexpr History None() { return {kNoContext, kNoContext}; }
  History Shift(WordId next) const { return {v, next}; }
  friend bool operator==(const History&, const History&) = default;
};

// Event counts for a BOS BOS w1 .. wm EOS padded stream. Only predicted
// tokens (words and EOS) are counted, so BOS never appears as a unigram.
class NGramCounts {
 public:
  using Key = std::uint64_t;

  static constexpr Key Pack(WordId a, WordId b) {
    return (Key{a} << 21) | b;
  }
  static constexpr Key Pack(WordId a, WordId b, WordId c) {
    return (Key{a} << 42) | (Key{b} << 21) | c;
  }
  static constexpr WordId Unpack(Key key, int slot) {
    return static_cast<WordId>((key >> (21 * slot)) & ((Key{1} << 21) - 1));
  }

  void AddSentence(std::span<const WordId> words);
  void AddUnigram(WordId w, std::uint64_t n) {
    Bump(unigram_, w, n);
    total_ += n;
  }
  void AddBigram(WordId u, WordId v, std::uint64_t n) {
    Bump(bigram_, Pack(u, v), n);
  }
  void AddTrigram(WordId u, WordId v, WordId w, std::uint64_t n) {
    Bump(trigram_, Pack(u, v, w), n);
  }
  void Merge(const NGramCounts& other);

  std::uint64_t unigram(WordId w) const { return Get(unigram_, w); }
  std::uint64_t bigram(WordId u, WordId v) const {
    return Get(bigram_, Pack(u, v));
  }
  std::uint64_t trigram(WordId u, WordId v, WordId w) const {
    return Get(trigram_, Pack(u, v, w));
  }
  std::uint64_t total_tokens() const { return total_; }

  const std::unordered_map<WordId, std::uint64_t>& unigrams() const {
    return unigram_;
  }
  const std::unordered_map<Key, std::uint64_t>& bigrams() const {
    return bigram_;
  }
  const std::unordered_map<Key, std::uint64_t>& trigrams() const {
    return trigram_;
  }

  // Σ unigram = total; bigram(u,v) <= unigram(u) for u != BOS;
  // trigram(u,v,w) <= bigram(u,v) unless (u,v) = (BOS,BOS).
  bool CheckConsistency() const;

  friend bool operator==(const NGramCounts& a, const NGramCounts& b) {
    return a.total_ == b.total_ && a.unigram_ == b.unigram_ &&
           a.bigram_ == b.bigram_ && a.trigram_ == b.trigram_;
  }

 private:
  template <typename Map, typename K>
  static void Bump(Map& m, K key, std::uint64_t n) {
    if (n == 0) return;
    m[key] += n;
  }
  template <typename Map, typename K>
  static std::uint64_t Get(const Map& m, K key) {
    auto it = m.find(key);
    return it == m.end() ? 0 : it->second;
  }

  std::unordered_map<WordId, std::uint64_t> unigram_;
  std::unordered_map<Key, std::uint64_t> bigram_;
  std::unordered_map<Key, std::uint64_t> trigram_;
  std::uint64_t total_ = 0;
};

// Interpolation weights for trigram, bigram, unigram and uniform terms.
struct Lambdas {
  double trigram = 0.25;
  double bigram = 0.25;
  double unigram = 0.25;
  double uniform = 0.25;

  std::array<double, 4> ToArray() const {
    return {trigram, bigram, unigram, uniform};
  }
  static Lambdas FromArray(const std::array<double, 4>& a) {
    return {a[0], a[1], a[2], a[3]};
  }
  double Sum() const { return trigram + bigram + unigram + uniform; }
  // Non-negative and summing to one within `tol`.
  bool OnSimplex(double tol = 1e-12) const;

  friend bool operator==(const Lambdas&, const Lambdas&) = default;
};

// P(w | u v) = λ3 f(w|u,v) + λ2 f(w|v) + λ1 f(w) + λ0 / |E|, where E is
// the event set (every id except BOS). A relative frequency whose history
// was never seen has a zero denominator; it takes the next lower-order
// estimate in its place so every history yields a normalized
// distribution.
class InterpolatedTrigram {
 public:
  InterpolatedTrigram() = default;
  InterpolatedTrigram(NGramCounts counts, Lambdas lambdas,
                      std::size_t event_count);

  // The four component probabilities in Lambdas order.
  std::array<double, 4> Components(WordId w, History h) const;
  double Prob(WordId w, History h) const;
  double LogProb(WordId w, History h) const;

  const NGramCounts& counts() const { return counts_; }
  const Lambdas& lambdas() const { return lambdas_; }
  std::size_t event_count() const { return event_count_; }

 private:
  NGramCounts counts_;
  Lambdas lambdas_;
  std::size_t event_count_ = 1;
  // Σ_w c(v, w) and Σ_w c(u, v, w).
  std::unordered_map<WordId, std::uint64_t> bigram_context_;
  std::unordered_map<NGramCounts::Key, std::uint64_t> trigram_context_;
};

struct EmOptions {
  int max_iters = 100;
  // Stop once the mean per-token log-likelihood improves by less than
  // this. Use -infinity to always run max_iters.
  double tol = 1e-7;
  Lambdas init;
};

struct EmResult {
  Lambdas lambdas;
  // Total held-out log-likelihood: entry 0 is at `init`, entry k after
  // the k-th update.
  std::vector<double> log_likelihood;
  int iterations = 0;
};

// EM for the mixture weights on held-out id sequences (unpadded; padding
// and EOS are added here). Throws EmptyHeldout / ValidationError.
EmResult EstimateLambdas(const NGramCounts& train,
                         std::span<const std::vector<WordId>> heldout,
                         std::size_t event_count, const EmOptions& options);

}  // namespace seglm

#endif  // SEGLM_NGRAM_H_
