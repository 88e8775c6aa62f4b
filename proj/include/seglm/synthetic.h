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

// Synthetic word-discovery benchmarks: sentences are i.i.d. draws from a
// weighted lexicon glued together without delimiters, and a few frequent
// words are withheld from the starting vocabulary.

#ifndef SEGLM_SYNTHETIC_H_
#define SEGLM_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seglm/corpus.h"
#include "seglm/lexicon.h"

namespace seglm {

struct WeightedWord {
  std::u32string word;
  double weight = 1.0;
};

// "word<TAB>weight" or "word" (weight 1) per line.
std::vector<WeightedWord> ParseWeightedLexicon(std::string_view text);
std::vector<WeightedWord> LoadWeightedLexicon(
    const std::filesystem::path& path);
std::string FormatWeightedLexicon(std::span<const WeightedWord> words);

struct LexiconOptions {
  std::size_t words = 200;
  std::size_t alphabet = 400;
  // Relative frequency of word lengths 1, 2, 3, 4.
  std::vector<double> length_weights = {0.15, 0.55, 0.22, 0.08};
  // Zipf exponent for the word weights.
  double zipf = 1.0;
  // First code point of the alphabet (CJK Unified Ideographs).
  char32_t first_char = U'一';
  std::uint64_t seed = 42;
};

// Distinct random words over a contiguous block of code points with
// Zipf weights by rank.
std::vector<WeightedWord> MakeSyntheticLexicon(const LexiconOptions& options);

struct BenchmarkOptions {
  std::size_t sentences = 5000;
  std::size_t hide = 20;
  std::size_t min_hidden_frequency = 10;
  std::size_t min_words = 3;
  std::size_t max_words = 12;
  std::uint64_t seed = 42;
};

struct Benchmark {
  SegmentedCorpus gold;
  // Sorted by code point.
  std::vector<std::u32string> hidden;
  // Lexicon minus the hidden words, in lexicon order.
  Lexicon vocabulary;
};

// Hidden words are drawn uniformly from the lexicon words whose sampled
// corpus frequency is at least min_hidden_frequency. Throws
// ValidationError when too few qualify.
Benchmark GenerateBenchmark(std::span<const WeightedWord> lexicon,
                            const BenchmarkOptions& options);

// Writes raw.txt, gold.txt, hidden.txt, vocab.txt and meta.tsv.
void WriteBenchmark(const Benchmark& benchmark,
                    const BenchmarkOptions& options,
                    const std::filesystem::path& dir);

}  // namespace seglm

#endif  // SEGLM_SYNTHETIC_H_
