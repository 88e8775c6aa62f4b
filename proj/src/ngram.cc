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

#include "seglm/ngram.h"

#include <cmath>

#include "seglm/error.h"

namespace seglm {

void NGramCounts::AddSentence(std::span<const WordId> words) {
  History h;
  auto add = [&](WordId w) {
    AddUnigram(w, 1);
    AddBigram(h.v, w, 1);
    AddTrigram(h.u, h.v, w, 1);
    h = h.Shift(w);
  };
  for (WordId w : words) add(w);
  add(kEos);
}

void NGramCounts::Merge(const NGramCounts& other) {
  for (const auto& [k, n] : other.unigram_) AddUnigram(k, n);
  for (const auto& [k, n] : other.bigram_) Bump(bigram_, k, n);
  for (const auto& [k, n] : other.trigram_) Bump(trigram_, k, n);
}

bool NGramCounts::CheckConsistency() const {
  std::uint64_t sum = 0;
  for (const auto& [w, n] : unigram_) {
    if (w == kBos) return false;
    sum += n;
  }
  if (sum != total_) return false;
  for (const auto& [k, n] : bigram_) {
    const WordId u = Unpack(k, 1);
    if (u != kBos && n > unigram(u)) return false;
  }
  for (const auto& [k, n] : trigram_) {
    const WordId u = Unpack(k, 2);
    const WordId v = Unpack(k, 1);
    if (u == kBos && v == kBos) continue;
    if (n > bigram(u, v)) return false;
  }
  return true;
}

bool Lambdas::OnSimplex(double tol) const {
  for (double x : ToArray()) {
    if (!(x >= 0.0) || x > 1.0) return false;
  }
  return std::abs(Sum() - 1.0) <= tol;
}

InterpolatedTrigram::InterpolatedTrigram(NGramCounts counts, Lambdas lambdas,
                                         std::size_t event_count)
    : counts_(std::move(counts)),
      lambdas_(lambdas),
      event_count_(event_count) {
  if (event_count_ == 0) throw ValidationError("event set is empty");
  if (!lambdas_.OnSimplex(1e-9)) {
    throw ValidationError("interpolation weights are not on the simplex");
  }
  for (const auto& [k, n] : counts_.bigrams()) {
    bigram_context_[NGramCounts::Unpack(k, 1)] += n;
  }
  for (const auto& [k, n] : counts_.trigrams()) {
    trigram_context_[k >> 21] += n;
  }
}

std::array<double, 4> InterpolatedTrigram::Components(WordId w,
                                                      History h) const {
  const double uniform = 1.0 / static_cast<double>(event_count_);
  const double total = static_cast<double>(counts_.total_tokens());
  const double f1 =
      total > 0 ? static_cast<double>(counts_.unigram(w)) / total : uniform;

  double f2 = f1;
  if (auto it = bigram_context_.find(h.v); it != bigram_context_.end()) {
    f2 = static_cast<double>(counts_.bigram(h.v, w)) /
         static_cast<double>(it->second);
  }
  double f3 = f2;
  if (auto it = trigram_context_.find(NGramCounts::Pack(h.u, h.v));
      it != trigram_context_.end()) {
    f3 = static_cast<double>(counts_.trigram(h.u, h.v, w)) /
         static_cast<double>(it->second);
  }
  return {f3, f2, f1, uniform};
}

double InterpolatedTrigram::Prob(WordId w, History h) const {
  const auto f = Components(w, h);
  return lambdas_.trigram * f[0] + lambdas_.bigram * f[1] +
         lambdas_.unigram * f[2] + lambdas_.uniform * f[3];
}

double InterpolatedTrigram::LogProb(WordId w, History h) const {
  return std::log(Prob(w, h));
}

EmResult EstimateLambdas(const NGramCounts& train,
                         std::span<const std::vector<WordId>> heldout,
                         std::size_t event_count, const EmOptions& options) {
  if (heldout.empty()) throw EmptyHeldout();
  if (options.max_iters < 1) throw ValidationError("max_iters must be >= 1");
  if (!options.init.OnSimplex(1e-9)) {
    throw ValidationError("initial weights are not on the simplex");
  }
  // Components do not depend on the weights, so evaluate them once.
  const InterpolatedTrigram probe(train, Lambdas{}, event_count);
  std::vector<std::array<double, 4>> comps;
  for (const auto& sentence : heldout) {
    History h;
    for (WordId w : sentence) {
      comps.push_back(probe.Components(w, h));
      h = h.Shift(w);
    }
    comps.push_back(probe.Components(kEos, h));
  }
  const double n_tokens = static_cast<double>(comps.size());

  auto lambda = options.init.ToArray();
  auto log_likelihood = [&](const std::array<double, 4>& l) {
    double ll = 0.0;
    for (const auto& f : comps) {
      ll += std::log(l[0] * f[0] + l[1] * f[1] + l[2] * f[2] + l[3] * f[3]);
    }
    return ll;
  };

  EmResult result;
  result.log_likelihood.push_back(log_likelihood(lambda));
  for (int iter = 0; iter < options.max_iters; ++iter) {
    std::array<double, 4> expected{};
    for (const auto& f : comps) {
      const double p =
          lambda[0] * f[0] + lambda[1] * f[1] + lambda[2] * f[2] +
          lambda[3] * f[3];
      for (int k = 0; k < 4; ++k) expected[k] += lambda[k] * f[k] / p;
    }
    for (int k = 0; k < 4; ++k) lambda[k] = expected[k] / n_tokens;
    // Renormalize away accumulated rounding.
    const double sum = lambda[0] + lambda[1] + lambda[2] + lambda[3];
    for (double& x : lambda) x /= sum;

    const double ll = log_likelihood(lambda);
    const double gain = (ll - result.log_likelihood.back()) / n_tokens;
    result.log_likelihood.push_back(ll);
    result.iterations = iter + 1;
    if (gain < options.tol) break;
  }
  result.lambdas = Lambdas::FromArray(lambda);
  return result;
}

}  // namespace seglm
