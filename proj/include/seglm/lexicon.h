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

#ifndef SEGLM_LEXICON_H_
#define SEGLM_LEXICON_H_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace seglm {

using WordId = std::uint32_t;

inline constexpr WordId kUnk = 0;
inline constexpr WordId kBos = 1;
inline constexpr WordId kEos = 2;
inline constexpr WordId kFirstWordId = 3;
// Ids are packed 21 bits apiece into n-gram keys.
inline constexpr WordId kMaxWordId = (WordId{1} << 21) - 2;
// Never assigned; a history slot holding it has no counts.
inline constexpr WordId kNoContext = (WordId{1} << 21) - 1;

// Bijection between surface words and dense ids. Ids 0..2 are the UNK
// class, BOS and EOS; they have no surface form. The probability event
// set is every id except BOS.
class Lexicon {
 public:
  Lexicon();
  Lexicon(const Lexicon& other);
  Lexicon& operator=(const Lexicon& other);
  Lexicon(Lexicon&&) noexcept = default;
  Lexicon& operator=(Lexicon&&) noexcept = default;

  // Returns the id of `word`, assigning the next free id if new.
  WordId Add(std::u32string_view word);
  std::optional<WordId> Find(std::u32string_view word) const;
  // Id of `word`, or kUnk.
  WordId Lookup(std::u32string_view word) const {
    auto id = Find(word);
    return id ? *id : kUnk;
  }
  bool Contains(std::u32string_view word) const {
    return Find(word).has_value();
  }

  // Surface form; reserved ids map to "<unk>", "<s>", "</s>".
  const std::u32string& word(WordId id) const { return words_.at(id); }

  // Total ids including the reserved ones.
  std::size_t size() const { return words_.size(); }
  // Surface words only.
  std::size_t word_count() const { return words_.size() - kFirstWordId; }
  // Size of the closed event set: words + UNK + EOS.
  std::size_t event_count() const { return words_.size() - 1; }
  std::size_t max_word_length() const { return max_word_length_; }

  // Surface words in id order.
  std::vector<std::u32string> Words() const;

  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.words_ == b.words_;
  }

 private:
  void Reindex();

  std::deque<std::u32string> words_;
  std::unordered_map<std::u32string_view, WordId> index_;
  std::size_t max_word_length_ = 0;
};

// One word per line, UTF-8. Blank lines are skipped; duplicates collapse.
Lexicon LoadVocabulary(const std::filesystem::path& path);
Lexicon ParseVocabulary(std::string_view text);
std::string FormatVocabulary(const Lexicon& lexicon);

}  // namespace seglm

#endif  // SEGLM_LEXICON_H_
