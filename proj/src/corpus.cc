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

#include "seglm/corpus.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "seglm/error.h"
#include "seglm/utf8.h"

namespace seglm {

namespace {

// Calls fn(line, line_number, byte_offset) for each LF-terminated line.
template <typename Fn>
void ForEachLine(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line, line_no, pos);
    pos = eol + 1;
  }
}

}  // namespace

Sentence::Sentence(std::u32string chars) : chars_(std::move(chars)) {
  if (chars_.empty()) throw ValidationError("sentence must be non-empty");
  for (char32_t c : chars_) {
    if (IsSeparatorOrControl(c)) {
      throw ValidationError("sentence contains whitespace or control char");
    }
  }
}

Sentence Sentence::FromUtf8(std::string_view text) {
  return Sentence(DecodeUtf8(text));
}

std::string Sentence::ToUtf8() const { return EncodeUtf8(chars_); }

Segmentation::Segmentation(std::vector<std::size_t> boundaries, std::size_t n)
    : boundaries_(std::move(boundaries)) {
  if (boundaries_.empty() || boundaries_.front() < 1 ||
      boundaries_.back() != n) {
    throw ValidationError("segmentation must end at the sentence length");
  }
  for (std::size_t k = 1; k < boundaries_.size(); ++k) {
    if (boundaries_[k] <= boundaries_[k - 1]) {
      throw ValidationError("segmentation boundaries must be ascending");
    }
  }
}

Segmentation Segmentation::FromWordLengths(
    std::span<const std::size_t> lengths) {
  std::vector<std::size_t> b;
  b.reserve(lengths.size());
  std::size_t pos = 0;
  for (std::size_t len : lengths) {
    pos += len;
    b.push_back(pos);
  }
  return Segmentation(std::move(b), pos);
}

std::vector<std::u32string_view> Segmentation::Words(const Sentence& s) const {
  std::vector<std::u32string_view> words;
  words.reserve(boundaries_.size());
  for (std::size_t k = 0; k < boundaries_.size(); ++k) {
    words.push_back(s.span(word_begin(k), word_end(k)));
  }
  return words;
}

SegmentedSentence::SegmentedSentence(Sentence s, Segmentation seg)
    : sentence(std::move(s)), segmentation(std::move(seg)) {
  if (segmentation.length() != sentence.size()) {
    throw ValidationError("segmentation does not match sentence length");
  }
}

SegmentedSentence SegmentedSentence::FromWords(
    std::span<const std::u32string> words) {
  std::u32string chars;
  std::vector<std::size_t> lengths;
  for (const auto& w : words) {
    if (w.empty()) throw ValidationError("empty word");
    chars += w;
    lengths.push_back(w.size());
  }
  return SegmentedSentence(Sentence(std::move(chars)),
                           Segmentation::FromWordLengths(lengths));
}

std::string SegmentedSentence::ToUtf8() const {
  std::string out;
  bool first = true;
  for (auto w : Words()) {
    if (!first) out.push_back(' ');
    first = false;
    for (char32_t c : w) AppendUtf8(c, &out);
  }
  return out;
}

std::size_t SegmentedCorpus::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.segmentation.word_count();
  return n;
}

std::size_t SegmentedCorpus::char_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.sentence.size();
  return n;
}

RawCorpus SegmentedCorpus::ToRaw() const {
  RawCorpus raw;
  raw.sentences.reserve(sentences.size());
  for (const auto& s : sentences) raw.sentences.push_back(s.sentence);
  return raw;
}

RawCorpus ParseRaw(std::string_view text) {
  RawCorpus corpus;
  ForEachLine(text, [&](std::string_view line, std::size_t line_no,
                        std::size_t offset) {
    if (line.empty()) {
      ++corpus.skipped_empty_lines;
      return;
    }
    std::u32string chars = DecodeUtf8(line, offset);
    for (char32_t c : chars) {
      if (IsSeparatorOrControl(c)) throw WhitespaceInRawLine(line_no);
    }
    corpus.sentences.emplace_back(std::move(chars));
  });
  return corpus;
}

SegmentedCorpus ParseSegmented(std::string_view text) {
  SegmentedCorpus corpus;
  ForEachLine(text, [&](std::string_view line, std::size_t line_no,
                        std::size_t offset) {
    if (line.empty()) return;
    std::u32string chars = DecodeUtf8(line, offset);
    std::u32string joined;
    joined.reserve(chars.size());
    std::vector<std::size_t> boundaries;
    std::size_t word_len = 0;
    for (char32_t c : chars) {
      if (c == U' ') {
        if (word_len == 0) throw EmptyWord(line_no);
        boundaries.push_back(joined.size());
        word_len = 0;
        continue;
      }
      if (IsSeparatorOrControl(c)) throw WhitespaceInRawLine(line_no);
      joined.push_back(c);
      ++word_len;
    }
    if (word_len == 0) throw EmptyWord(line_no);
    boundaries.push_back(joined.size());
    const std::size_t n = joined.size();
    corpus.sentences.emplace_back(Sentence(std::move(joined)),
                                  Segmentation(std::move(boundaries), n));
  });
  return corpus;
}

std::string FormatSegmented(const SegmentedCorpus& corpus) {
  std::string out;
  for (const auto& s : corpus.sentences) {
    out += s.ToUtf8();
    out.push_back('\n');
  }
  return out;
}

std::string FormatRaw(const RawCorpus& corpus) {
  std::string out;
  for (const auto& s : corpus.sentences) {
    out += s.ToUtf8();
    out.push_back('\n');
  }
  return out;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return std::move(ss).str();
}

void WriteFile(const std::filesystem::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

RawCorpus LoadRaw(const std::filesystem::path& path) {
  return ParseRaw(ReadFile(path));
}

SegmentedCorpus LoadSegmented(const std::filesystem::path& path) {
  return ParseSegmented(ReadFile(path));
}

void WriteSegmented(const SegmentedCorpus& corpus,
                    const std::filesystem::path& path) {
  WriteFile(path, FormatSegmented(corpus));
}

void WriteRaw(const RawCorpus& corpus, const std::filesystem::path& path) {
  WriteFile(path, FormatRaw(corpus));
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> SplitIndices(
    std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> a, b;
  for (std::size_t k = 0; k < n; ++k) (k % 2 == 0 ? a : b).push_back(order[k]);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return {std::move(a), std::move(b)};
}

namespace {

template <typename T>
std::pair<std::vector<T>, std::vector<T>> SplitVector(const std::vector<T>& v,
                                                      std::uint64_t seed) {
  if (v.size() < 2) throw TooSmall("need at least two sentences to split");
  auto [ia, ib] = SplitIndices(v.size(), seed);
  std::vector<T> a, b;
  a.reserve(ia.size());
  b.reserve(ib.size());
  for (auto i : ia) a.push_back(v[i]);
  for (auto i : ib) b.push_back(v[i]);
  return {std::move(a), std::move(b)};
}

}  // namespace

std::pair<RawCorpus, RawCorpus> SplitHalves(const RawCorpus& corpus,
                                            std::uint64_t seed) {
  auto [a, b] = SplitVector(corpus.sentences, seed);
  return {RawCorpus{std::move(a), 0}, RawCorpus{std::move(b), 0}};
}

std::pair<SegmentedCorpus, SegmentedCorpus> SplitHalves(
    const SegmentedCorpus& corpus, std::uint64_t seed) {
  auto [a, b] = SplitVector(corpus.sentences, seed);
  return {SegmentedCorpus{std::move(a)}, SegmentedCorpus{std::move(b)}};
}

}  // namespace seglm
