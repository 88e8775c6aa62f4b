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

#include "seglm/model.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <tuple>
#include <unordered_map>

#include "seglm/error.h"
#include "seglm/utf8.h"

namespace seglm {

UnknownWordModel::UnknownWordModel(double gamma, std::size_t max_length)
    : gamma_(gamma), max_length_(max_length) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw ValidationError("length decay must lie in (0, 1)");
  }
  if (max_length == 0) throw ValidationError("max length must be >= 1");
}

void UnknownWordModel::AddText(std::u32string_view text) {
  for (char32_t c : text) AddCharCount(c, 1);
}

void UnknownWordModel::AddCharCount(char32_t c, std::uint64_t n) {
  if (n == 0) return;
  counts_[c] += n;
  total_ += n;
}

double UnknownWordModel::UnseenCharProb() const {
  return 1.0 / static_cast<double>(total_ + counts_.size() + 1);
}

double UnknownWordModel::CharProb(char32_t c) const {
  auto it = counts_.find(c);
  const double n = it == counts_.end() ? 0.0 : static_cast<double>(it->second);
  return (n + 1.0) * UnseenCharProb();
}

double UnknownWordModel::LengthLogProb(std::size_t length) const {
  return std::log1p(-gamma_) +
         static_cast<double>(length - 1) * std::log(gamma_) -
         std::log1p(-std::pow(gamma_, static_cast<double>(max_length_)));
}

double UnknownWordModel::LogProb(std::u32string_view s) const {
  if (s.empty()) throw ValidationError("unseen word must be non-empty");
  if (s.size() > max_length_) throw TooLong(s.size(), max_length_);
  double lp = LengthLogProb(s.size());
  for (char32_t c : s) lp += std::log(CharProb(c));
  return lp;
}

InterpolatedTrigramModel::InterpolatedTrigramModel(Lexicon lexicon,
                                                   NGramCounts counts,
                                                   Lambdas lambdas,
                                                   UnknownWordModel unk)
    : lexicon_(std::move(lexicon)),
      trigram_(std::move(counts), lambdas, lexicon_.event_count()),
      unk_(std::move(unk)) {}

double InterpolatedTrigramModel::UnseenLogProb(std::u32string_view s,
                                               History h) const {
  return trigram_.LogProb(kUnk, h) + unk_.LogProb(s);
}

double InterpolatedTrigramModel::TokenLogProb(std::u32string_view word,
                                              History h, WordId* id) const {
  const WordId w = lexicon_.Lookup(word);
  if (id != nullptr) *id = w;
  return w == kUnk ? UnseenLogProb(word, h) : trigram_.LogProb(w, h);
}

double InterpolatedTrigramModel::SentenceLogProb(
    const Sentence& s, const Segmentation& seg) const {
  double total = 0.0;
  History h;
  for (std::size_t k = 0; k < seg.word_count(); ++k) {
    WordId id;
    total += TokenLogProb(s.span(seg.word_begin(k), seg.word_end(k)), h, &id);
    h = h.Shift(id);
  }
  total += trigram_.LogProb(kEos, h);
  return total;
}

std::vector<std::vector<WordId>> ToIds(const SegmentedCorpus& corpus,
                                       const Lexicon& lexicon) {
  std::vector<std::vector<WordId>> out;
  out.reserve(corpus.size());
  for (const auto& s : corpus.sentences) {
    std::vector<WordId> ids;
    ids.reserve(s.segmentation.word_count());
    for (auto w : s.Words()) ids.push_back(lexicon.Lookup(w));
    out.push_back(std::move(ids));
  }
  return out;
}

NGramCounts CountNGrams(const SegmentedCorpus& corpus,
                        const Lexicon& lexicon) {
  NGramCounts counts;
  for (const auto& ids : ToIds(corpus, lexicon)) counts.AddSentence(ids);
  return counts;
}

EmResult EstimateLambdas(const NGramCounts& train,
                         const SegmentedCorpus& heldout,
                         const Lexicon& lexicon, const EmOptions& options) {
  const auto ids = ToIds(heldout, lexicon);
  return EstimateLambdas(train, ids, lexicon.event_count(), options);
}

double Perplexity(const InterpolatedTrigramModel& model,
                  const SegmentedCorpus& corpus) {
  if (corpus.empty()) throw EmptyCorpus();
  double log_prob = 0.0;
  for (const auto& s : corpus.sentences) log_prob += model.SentenceLogProb(s);
  const double n = static_cast<double>(corpus.token_count() + corpus.size());
  return std::exp(-log_prob / n);
}

Lexicon BuildVocabulary(const SegmentedCorpus& corpus,
                        std::uint64_t min_count) {
  std::vector<std::u32string_view> order;
  std::unordered_map<std::u32string_view, std::uint64_t> freq;
  for (const auto& s : corpus.sentences) {
    for (auto w : s.Words()) {
      if (freq[w]++ == 0) order.push_back(w);
    }
  }
  Lexicon lex;
  for (auto w : order) {
    if (freq[w] >= min_count) lex.Add(w);
  }
  return lex;
}

std::vector<std::size_t> HeldoutIndices(std::size_t n, double fraction,
                                        std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw ValidationError("held-out fraction must lie in (0, 1)");
  }
  if (n < 2) throw TooSmall("need at least two sentences for held-out EM");
  std::size_t k = static_cast<std::size_t>(
      std::llround(fraction * static_cast<double>(n)));
  k = std::clamp<std::size_t>(k, 1, n - 1);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  order.resize(k);
  std::sort(order.begin(), order.end());
  return order;
}

InterpolatedTrigramModel TrainModel(const SegmentedCorpus& corpus,
                                    Lexicon lexicon,
                                    const TrainOptions& options,
                                    EmResult* em_result) {
  if (corpus.empty()) throw EmptyCorpus();
  const auto heldout_idx =
      HeldoutIndices(corpus.size(), options.heldout_fraction, options.seed);
  SegmentedCorpus heldout, train;
  std::size_t next = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (next < heldout_idx.size() && heldout_idx[next] == i) {
      heldout.sentences.push_back(corpus.sentences[i]);
      ++next;
    } else {
      train.sentences.push_back(corpus.sentences[i]);
    }
  }
  EmResult em = EstimateLambdas(CountNGrams(train, lexicon), heldout, lexicon,
                                options.em);
  UnknownWordModel unk(options.gamma, options.max_unseen_length);
  for (const auto& s : corpus.sentences) unk.AddText(s.sentence.chars());
  NGramCounts counts = CountNGrams(corpus, lexicon);
  const Lambdas lambdas = em.lambdas;
  if (em_result != nullptr) *em_result = std::move(em);
  return InterpolatedTrigramModel(std::move(lexicon), std::move(counts),
                                  lambdas, std::move(unk));
}

// ---------------------------------------------------------------------------
// Model file.

namespace {

constexpr std::string_view kMagic = "SEGLM 1";

std::string FormatDouble(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

template <typename T>
void AppendRecord(std::string* out, const T& first) {
  if constexpr (std::is_arithmetic_v<T>) {
    *out += std::to_string(first);
  } else {
    *out += first;
  }
}

template <typename T, typename... Rest>
void AppendRecord(std::string* out, const T& first, const Rest&... rest) {
  AppendRecord(out, first);
  out->push_back('\t');
  AppendRecord(out, rest...);
}

template <typename... Fields>
void AppendLine(std::string* out, const Fields&... fields) {
  AppendRecord(out, fields...);
  out->push_back('\n');
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

std::uint64_t ParseUint(std::string_view s, std::string_view section) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw FormatError("bad integer '" + std::string(s) + "' in section " +
                      std::string(section));
  }
  return v;
}

double ParseDouble(std::string_view s, std::string_view section) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw FormatError("bad number '" + std::string(s) + "' in section " +
                      std::string(section));
  }
  return v;
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool Next(std::string_view* line) {
    if (pos_ >= text_.size()) return false;
    std::size_t eol = text_.find('\n', pos_);
    if (eol == std::string_view::npos) eol = text_.size();
    *line = text_.substr(pos_, eol - pos_);
    pos_ = eol + 1;
    return true;
  }

  // Reads "[name]\t<count>" and returns the count.
  std::size_t Header(const std::string& name) {
    std::string_view line;
    if (!Next(&line)) throw TruncatedSection(name);
    auto fields = SplitTabs(line);
    if (fields.size() != 2 || fields[0] != name) {
      throw FormatError("expected section " + name + ", found '" +
                        std::string(line) + "'");
    }
    return ParseUint(fields[1], name);
  }

  std::vector<std::string_view> Record(const std::string& name,
                                       std::size_t arity) {
    std::string_view line;
    if (!Next(&line) || (!line.empty() && line.front() == '[')) {
      throw TruncatedSection(name);
    }
    auto fields = SplitTabs(line);
    if (fields.size() != arity) {
      throw FormatError("malformed record in section " + name);
    }
    return fields;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string SerializeModel(const InterpolatedTrigramModel& model) {
  std::string out(kMagic);
  out.push_back('\n');

  const Lexicon& lex = model.lexicon();
  AppendLine(&out, std::string("[LEXICON]"), lex.word_count());
  for (WordId id = kFirstWordId; id < lex.size(); ++id) {
    AppendLine(&out, id, EncodeUtf8(lex.word(id)));
  }

  const Lambdas& l = model.lambdas();
  AppendLine(&out, std::string("[LAMBDA]"), 1);
  AppendLine(&out, FormatDouble(l.trigram), FormatDouble(l.bigram),
             FormatDouble(l.unigram), FormatDouble(l.uniform));

  const UnknownWordModel& unk = model.unknown();
  AppendLine(&out, std::string("[UNK]"), unk.char_counts().size() + 1);
  AppendLine(&out, FormatDouble(unk.gamma()), unk.max_length());
  for (const auto& [c, n] : unk.char_counts()) {
    std::string ch;
    AppendUtf8(c, &ch);
    AppendLine(&out, ch, n);
  }

  const NGramCounts& counts = model.counts();
  std::vector<std::pair<WordId, std::uint64_t>> uni(counts.unigrams().begin(),
                                                    counts.unigrams().end());
  std::sort(uni.begin(), uni.end());
  AppendLine(&out, std::string("[1GRAM]"), uni.size());
  for (const auto& [w, n] : uni) AppendLine(&out, w, n);

  // Packed keys sort in (u, v[, w]) order.
  std::vector<std::pair<NGramCounts::Key, std::uint64_t>> bi(
      counts.bigrams().begin(), counts.bigrams().end());
  std::sort(bi.begin(), bi.end());
  AppendLine(&out, std::string("[2GRAM]"), bi.size());
  for (const auto& [k, n] : bi) {
    AppendLine(&out, NGramCounts::Unpack(k, 1), NGramCounts::Unpack(k, 0), n);
  }

  std::vector<std::pair<NGramCounts::Key, std::uint64_t>> tri(
      counts.trigrams().begin(), counts.trigrams().end());
  std::sort(tri.begin(), tri.end());
  AppendLine(&out, std::string("[3GRAM]"), tri.size());
  for (const auto& [k, n] : tri) {
    AppendLine(&out, NGramCounts::Unpack(k, 2), NGramCounts::Unpack(k, 1),
               NGramCounts::Unpack(k, 0), n);
  }
  return out;
}

InterpolatedTrigramModel ParseModel(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  if (!reader.Next(&line) || line != kMagic) {
    throw BadMagic(std::string(line.substr(0, 32)));
  }

  Lexicon lex;
  const std::string lexicon_name = "[LEXICON]";
  for (std::size_t n = reader.Header(lexicon_name), i = 0; i < n; ++i) {
    auto f = reader.Record(lexicon_name, 2);
    const auto id = ParseUint(f[0], lexicon_name);
    const std::u32string word = DecodeUtf8(f[1]);
    if (lex.Find(word) || lex.Add(word) != id) {
      throw FormatError("lexicon ids are not dense and ordered");
    }
  }

  const std::string lambda_name = "[LAMBDA]";
  if (reader.Header(lambda_name) != 1) {
    throw FormatError("[LAMBDA] must hold one record");
  }
  auto lf = reader.Record(lambda_name, 4);
  const Lambdas lambdas{
      ParseDouble(lf[0], lambda_name), ParseDouble(lf[1], lambda_name),
      ParseDouble(lf[2], lambda_name), ParseDouble(lf[3], lambda_name)};

  const std::string unk_name = "[UNK]";
  const std::size_t unk_records = reader.Header(unk_name);
  if (unk_records < 1) throw FormatError("[UNK] is missing its parameters");
  auto params = reader.Record(unk_name, 2);
  UnknownWordModel unk(ParseDouble(params[0], unk_name),
                       ParseUint(params[1], unk_name));
  for (std::size_t i = 1; i < unk_records; ++i) {
    auto f = reader.Record(unk_name, 2);
    const std::u32string c = DecodeUtf8(f[0]);
    if (c.size() != 1) throw FormatError("[UNK] record is not one character");
    unk.AddCharCount(c[0], ParseUint(f[1], unk_name));
  }

  auto check_id = [&](std::uint64_t id, const std::string& section) {
    if (id >= lex.size()) {
      throw FormatError("unknown id in section " + section);
    }
    return static_cast<WordId>(id);
  };

  NGramCounts counts;
  const std::string uni_name = "[1GRAM]";
  for (std::size_t n = reader.Header(uni_name), i = 0; i < n; ++i) {
    auto f = reader.Record(uni_name, 2);
    counts.AddUnigram(check_id(ParseUint(f[0], uni_name), uni_name),
                      ParseUint(f[1], uni_name));
  }
  const std::string bi_name = "[2GRAM]";
  for (std::size_t n = reader.Header(bi_name), i = 0; i < n; ++i) {
    auto f = reader.Record(bi_name, 3);
    counts.AddBigram(check_id(ParseUint(f[0], bi_name), bi_name),
                     check_id(ParseUint(f[1], bi_name), bi_name),
                     ParseUint(f[2], bi_name));
  }
  const std::string tri_name = "[3GRAM]";
  for (std::size_t n = reader.Header(tri_name), i = 0; i < n; ++i) {
    auto f = reader.Record(tri_name, 4);
    counts.AddTrigram(check_id(ParseUint(f[0], tri_name), tri_name),
                      check_id(ParseUint(f[1], tri_name), tri_name),
                      check_id(ParseUint(f[2], tri_name), tri_name),
                      ParseUint(f[3], tri_name));
  }
  if (reader.Next(&line) && !line.empty()) {
    throw FormatError("trailing data after [3GRAM]");
  }
  return InterpolatedTrigramModel(std::move(lex), std::move(counts), lambdas,
                                  std::move(unk));
}

void SaveModel(const InterpolatedTrigramModel& model,
               const std::filesystem::path& path) {
  WriteFile(path, SerializeModel(model));
}

InterpolatedTrigramModel LoadModel(const std::filesystem::path& path) {
  return ParseModel(ReadFile(path));
}

}  // namespace seglm
