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

#include "seglm/lexicon.h"

#include <algorithm>

#include "seglm/corpus.h"
#include "seglm/error.h"
#include "seglm/utf8.h"

namespace seglm {

Lexicon::Lexicon() {
  words_ = {U"<unk>", U"<s>", U"</s>"};
}

Lexicon::Lexicon(const Lexicon& other)
    : words_(other.words_), max_word_length_(other.max_word_length_) {
  Reindex();
}

Lexicon& Lexicon::operator=(const Lexicon& other) {
  if (this != &other) {
    words_ = other.words_;
    max_word_length_ = other.max_word_length_;
    Reindex();
  }
  return *this;
}

void Lexicon::Reindex() {
  index_.clear();
  index_.reserve(words_.size());
  for (std::size_t id = kFirstWordId; id < words_.size(); ++id) {
    index_.emplace(std::u32string_view(words_[id]), static_cast<WordId>(id));
  }
}

WordId Lexicon::Add(std::u32string_view word) {
  if (word.empty()) throw ValidationError("cannot add an empty word");
  if (auto it = index_.find(word); it != index_.end()) return it->second;
  if (words_.size() > kMaxWordId) throw ValidationError("lexicon is full");
  const auto id = static_cast<WordId>(words_.size());
  // deque::push_back keeps existing elements in place, so the views held
  // by index_ stay valid.
  words_.emplace_back(word);
  index_.emplace(std::u32string_view(words_.back()), id);
  max_word_length_ = std::max(max_word_length_, word.size());
  return id;
}

std::optional<WordId> Lexicon::Find(std::u32string_view word) const {
  if (auto it = index_.find(word); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<std::u32string> Lexicon::Words() const {
  return {words_.begin() + kFirstWordId, words_.end()};
}

Lexicon ParseVocabulary(std::string_view text) {
  Lexicon lex;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      std::u32string w = DecodeUtf8(line, pos);
      for (char32_t c : w) {
        if (IsSeparatorOrControl(c)) {
          throw FormatError("vocabulary word contains whitespace");
        }
      }
      lex.Add(w);
    }
    pos = eol + 1;
  }
  return lex;
}

Lexicon LoadVocabulary(const std::filesystem::path& path) {
  return ParseVocabulary(ReadFile(path));
}

std::string FormatVocabulary(const Lexicon& lexicon) {
  std::string out;
  for (WordId id = kFirstWordId; id < lexicon.size(); ++id) {
    out += EncodeUtf8(lexicon.word(id));
    out.push_back('\n');
  }
  return out;
}

}  // namespace seglm
