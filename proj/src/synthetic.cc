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

#include "seglm/synthetic.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <unordered_map>

#include "seglm/error.h"
#include "seglm/utf8.h"

namespace seglm {

std::vector<WeightedWord> ParseWeightedLexicon(std::string_view text) {
  std::vector<WeightedWord> out;
  std::set<std::u32string> seen;
  std::size_t pos = 0, line_no = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t offset = pos;
    pos = eol + 1;
    if (line.empty()) continue;

    WeightedWord w;
    const std::size_t tab = line.find('\t');
    w.word = DecodeUtf8(line.substr(0, tab), offset);
    if (tab != std::string_view::npos) {
      std::string_view num = line.substr(tab + 1);
      auto [ptr, ec] =
          std::from_chars(num.data(), num.data() + num.size(), w.weight);
      if (ec != std::errc() || ptr != num.data() + num.size() ||
          !(w.weight > 0)) {
        throw FormatError("bad weight on lexicon line " +
                          std::to_string(line_no));
      }
    }
    if (w.word.empty()) throw EmptyWord(line_no);
    for (char32_t c : w.word) {
      if (IsSeparatorOrControl(c)) throw WhitespaceInRawLine(line_no);
    }
    if (!seen.insert(w.word).second) {
      throw FormatError("duplicate lexicon word on line " +
                        std::to_string(line_no));
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<WeightedWord> LoadWeightedLexicon(
    const std::filesystem::path& path) {
  return ParseWeightedLexicon(ReadFile(path));
}

std::string FormatWeightedLexicon(std::span<const WeightedWord> words) {
  std::string out;
  for (const auto& w : words) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", w.weight);
    out += EncodeUtf8(w.word);
    out.push_back('\t');
    out += buf;
    out.push_back('\n');
  }
  return out;
}

std::vector<WeightedWord> MakeSyntheticLexicon(const LexiconOptions& options) {
  if (options.words == 0 || options.alphabet == 0 ||
      options.length_weights.empty()) {
    throw ValidationError("lexicon options must be positive");
  }
  std::mt19937_64 rng(options.seed);
  std::discrete_distribution<std::size_t> length(
      options.length_weights.begin(), options.length_weights.end());
  std::uniform_int_distribution<std::size_t> letter(0, options.alphabet - 1);

  std::set<std::u32string> seen;
  std::vector<WeightedWord> out;
  std::size_t attempts = 0;
  while (out.size() < options.words) {
    if (++attempts > 1000 * options.words) {
      throw ValidationError("alphabet too small for the requested lexicon");
    }
    std::u32string w(length(rng) + 1, U'\0');
    for (auto& c : w) c = options.first_char + static_cast<char32_t>(letter(rng));
    if (!seen.insert(w).second) continue;
    const double rank = static_cast<double>(out.size() + 1);
    out.push_back({std::move(w), 1.0 / std::pow(rank, options.zipf)});
  }
  return out;
}

Benchmark GenerateBenchmark(std::span<const WeightedWord> lexicon,
                            const BenchmarkOptions& options) {
  if (lexicon.empty()) throw EmptyVocabulary();
  if (options.sentences == 0) throw ValidationError("need >= 1 sentence");
  if (options.min_words == 0 || options.min_words > options.max_words) {
    throw ValidationError("bad sentence length range");
  }
  std::mt19937_64 rng(options.seed);
  std::vector<double> weights;
  for (const auto& w : lexicon) weights.push_back(w.weight);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::uniform_int_distribution<std::size_t> length(options.min_words,
                                                    options.max_words);

  Benchmark b;
  std::vector<std::size_t> freq(lexicon.size(), 0);
  for (std::size_t s = 0; s < options.sentences; ++s) {
    const std::size_t m = length(rng);
    std::vector<std::u32string> words;
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t i = pick(rng);
      ++freq[i];
      words.push_back(lexicon[i].word);
    }
    b.gold.sentences.push_back(SegmentedSentence::FromWords(words));
  }

  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < lexicon.size(); ++i) {
    if (freq[i] >= options.min_hidden_frequency) eligible.push_back(i);
  }
  if (eligible.size() < options.hide) {
    throw ValidationError("only " + std::to_string(eligible.size()) +
                          " words are frequent enough to hide");
  }
  std::shuffle(eligible.begin(), eligible.end(), rng);
  std::set<std::size_t> hidden(eligible.begin(),
                               eligible.begin() + options.hide);
  for (std::size_t i = 0; i < lexicon.size(); ++i) {
    if (hidden.count(i)) {
      b.hidden.push_back(lexicon[i].word);
    } else {
      b.vocabulary.Add(lexicon[i].word);
    }
  }
  std::sort(b.hidden.begin(), b.hidden.end());
  return b;
}

void WriteBenchmark(const Benchmark& benchmark,
                    const BenchmarkOptions& options,
                    const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string());
  WriteRaw(benchmark.gold.ToRaw(), dir / "raw.txt");
  WriteSegmented(benchmark.gold, dir / "gold.txt");
  std::string hidden;
  for (const auto& w : benchmark.hidden) hidden += EncodeUtf8(w) + "\n";
  WriteFile(dir / "hidden.txt", hidden);
  WriteFile(dir / "vocab.txt", FormatVocabulary(benchmark.vocabulary));
  std::string meta;
  meta += "sentences\t" + std::to_string(options.sentences) + "\n";
  meta += "hide\t" + std::to_string(options.hide) + "\n";
  meta += "min_hidden_frequency\t" +
          std::to_string(options.min_hidden_frequency) + "\n";
  meta += "min_words\t" + std::to_string(options.min_words) + "\n";
  meta += "max_words\t" + std::to_string(options.max_words) + "\n";
  meta += "seed\t" + std::to_string(options.seed) + "\n";
  meta += "tokens\t" + std::to_string(benchmark.gold.token_count()) + "\n";
  meta += "chars\t" + std::to_string(benchmark.gold.char_count()) + "\n";
  WriteFile(dir / "meta.tsv", meta);
}

}  // namespace seglm
