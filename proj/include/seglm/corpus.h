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

// Raw and segmented corpora.
//
// A character is a Unicode scalar value. A Segmentation stores the
// 1-based index of the last character of every word, so for a sentence
// C1..Cn the boundary list is x1 < x2 < ... < xm = n and word k covers
// characters x(k-1)+1 .. x(k) with x0 = 0. In 0-based half-open terms
// word k is the span [x(k-1), x(k)).

#ifndef SEGLM_CORPUS_H_
#define SEGLM_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seglm {

class Sentence {
 public:
  // Throws ValidationError if empty or if it contains whitespace/control.
  explicit Sentence(std::u32string chars);
  static Sentence FromUtf8(std::string_view text);

  std::size_t size() const { return chars_.size(); }
  char32_t operator[](std::size_t i) const { return chars_[i]; }
  std::u32string_view chars() const { return chars_; }
  // 0-based half-open span.
  std::u32string_view span(std::size_t begin, std::size_t end) const {
    return std::u32string_view(chars_).substr(begin, end - begin);
  }
  std::string ToUtf8() const;

  friend bool operator==(const Sentence&, const Sentence&) = default;

 private:
  std::u32string chars_;
};

class Segmentation {
 public:
  // Validates: non-empty, 1 <= x1, strictly ascending, last == n.
  Segmentation(std::vector<std::size_t> boundaries, std::size_t n);
  static Segmentation FromWordLengths(std::span<const std::size_t> lengths);
  // Single word covering the whole sentence.
  static Segmentation Whole(std::size_t n) { return Segmentation({n}, n); }

  const std::vector<std::size_t>& boundaries() const { return boundaries_; }
  std::size_t word_count() const { return boundaries_.size(); }
  std::size_t length() const { return boundaries_.back(); }
  std::size_t word_begin(std::size_t k) const {
    return k == 0 ? 0 : boundaries_[k - 1];
  }
  std::size_t word_end(std::size_t k) const { return boundaries_[k]; }

  std::vector<std::u32string_view> Words(const Sentence& s) const;

  friend bool operator==(const Segmentation&, const Segmentation&) = default;
  friend auto operator<=>(const Segmentation& a, const Segmentation& b) {
    return a.boundaries_ <=> b.boundaries_;
  }

 private:
  std::vector<std::size_t> boundaries_;
};

struct SegmentedSentence {
  Sentence sentence;
  Segmentation segmentation;

  // Throws ValidationError if the segmentation length differs from the
  // sentence length.
  SegmentedSentence(Sentence s, Segmentation seg);
  static SegmentedSentence FromWords(std::span<const std::u32string> words);

  std::vector<std::u32string_view> Words() const {
    return segmentation.Words(sentence);
  }
  std::string ToUtf8() const;

  friend bool operator==(const SegmentedSentence&,
                         const SegmentedSentence&) = default;
};

struct RawCorpus {
  std::vector<Sentence> sentences;
  std::size_t skipped_empty_lines = 0;

  std::size_t size() const { return sentences.size(); }
  bool empty() const { return sentences.empty(); }
};

struct SegmentedCorpus {
  std::vector<SegmentedSentence> sentences;

  std::size_t size() const { return sentences.size(); }
  bool empty() const { return sentences.empty(); }
  std::size_t token_count() const;
  std::size_t char_count() const;
  // Drops the boundaries.
  RawCorpus ToRaw() const;

  friend bool operator==(const SegmentedCorpus& a, const SegmentedCorpus& b) {
    return a.sentences == b.sentences;
  }
};

// One sentence per non-empty line. Empty lines are skipped and counted;
// whitespace inside a line throws WhitespaceInRawLine with its 1-based
// line number. A trailing CR is stripped.
RawCorpus ParseRaw(std::string_view text);
RawCorpus LoadRaw(const std::filesystem::path& path);

// Words separated by exactly one ASCII space; empty lines are skipped.
SegmentedCorpus ParseSegmented(std::string_view text);
SegmentedCorpus LoadSegmented(const std::filesystem::path& path);

std::string FormatSegmented(const SegmentedCorpus& corpus);
void WriteSegmented(const SegmentedCorpus& corpus,
                    const std::filesystem::path& path);

std::string FormatRaw(const RawCorpus& corpus);
void WriteRaw(const RawCorpus& corpus, const std::filesystem::path& path);

// Partition of [0, n) into two index lists whose sizes differ by at most
// one: seeded shuffle, then alternating assignment. Each list is sorted.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> SplitIndices(
    std::size_t n, std::uint64_t seed);

// Throws TooSmall on fewer than two sentences.
std::pair<RawCorpus, RawCorpus> SplitHalves(const RawCorpus& corpus,
                                            std::uint64_t seed);
std::pair<SegmentedCorpus, SegmentedCorpus> SplitHalves(
    const SegmentedCorpus& corpus, std::uint64_t seed);

// File helpers shared by the model and vocabulary readers.
std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view data);

}  // namespace seglm

#endif  // SEGLM_CORPUS_H_
