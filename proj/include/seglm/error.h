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

#ifndef SEGLM_ERROR_H_
#define SEGLM_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seglm {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Input bytes are not valid UTF-8.
class EncodingError : public Error {
 public:
  explicit EncodingError(std::size_t byte_offset)
      : Error("invalid UTF-8 at byte offset " + std::to_string(byte_offset)),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Malformed corpus or model file content.
class FormatError : public Error {
 public:
  using Error::Error;
};

class WhitespaceInRawLine : public FormatError {
 public:
  explicit WhitespaceInRawLine(std::size_t line)
      : FormatError("whitespace inside raw sentence on line " +
                    std::to_string(line)),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class EmptyWord : public FormatError {
 public:
  explicit EmptyWord(std::size_t line)
      : FormatError("empty word on line " + std::to_string(line)),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class BadMagic : public FormatError {
 public:
  explicit BadMagic(const std::string& found)
      : FormatError("bad model magic line: '" + found + "'") {}
};

class TruncatedSection : public FormatError {
 public:
  explicit TruncatedSection(std::string section)
      : FormatError("truncated model section " + section),
        section_(std::move(section)) {}
  const std::string& section() const { return section_; }

 private:
  std::string section_;
};

// Arguments or data violate an operation's precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class TooSmall : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class EmptyCorpus : public ValidationError {
 public:
  EmptyCorpus() : ValidationError("corpus is empty") {}
};

class EmptyHeldout : public ValidationError {
 public:
  EmptyHeldout() : ValidationError("held-out corpus is empty") {}
};

class EmptyVocabulary : public ValidationError {
 public:
  EmptyVocabulary() : ValidationError("vocabulary is empty") {}
};

class TooLong : public ValidationError {
 public:
  TooLong(std::size_t length, std::size_t limit)
      : ValidationError("length " + std::to_string(length) +
                        " exceeds limit " + std::to_string(limit)),
        length_(length),
        limit_(limit) {}
  std::size_t length() const { return length_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t length_;
  std::size_t limit_;
};

class Unsegmentable : public ValidationError {
 public:
  Unsegmentable()
      : ValidationError("sentence cannot be tiled by lexicon words") {}
};

class SentenceMismatch : public ValidationError {
 public:
  explicit SentenceMismatch(std::size_t index)
      : ValidationError("segmentations cover different sentences at index " +
                        std::to_string(index)),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// An internal consistency check failed.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace seglm

#endif  // SEGLM_ERROR_H_
