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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <string>
#include <vector>

#include "seglm/bootstrap.h"
#include "seglm/corpus.h"
#include "seglm/error.h"
#include "seglm/eval.h"
#include "seglm/model.h"
#include "seglm/segmenter.h"
#include "seglm/utf8.h"

namespace py = pybind11;

namespace seglm {
namespace {

using Words = std::vector<std::string>;

SegmentedSentence FromWords(const Words& words) {
  std::vector<std::u32string> u;
  for (const auto& w : words) u.push_back(DecodeUtf8(w));
  return SegmentedSentence::FromWords(u);
}

SegmentedCorpus FromLines(const std::vector<Words>& lines) {
  SegmentedCorpus c;
  for (const auto& l : lines) c.sentences.push_back(FromWords(l));
  return c;
}

Words ToWords(const Sentence& s, const Segmentation& seg) {
  Words out;
  for (auto w : seg.Words(s)) out.push_back(EncodeUtf8(w));
  return out;
}

SegmentMode ParseMode(const std::string& mode) {
  if (mode == "exact") return SegmentMode::kExact;
  if (mode == "paper") return SegmentMode::kPaper;
  throw ValidationError("mode must be 'exact' or 'paper'");
}

InterpolatedTrigramModel Train(const std::vector<Words>& corpus,
                               std::uint64_t min_count, double heldout,
                               std::uint64_t seed) {
  const auto c = FromLines(corpus);
  TrainOptions opts;
  opts.heldout_fraction = heldout;
  opts.seed = seed;
  return TrainModel(c, BuildVocabulary(c, min_count), opts);
}

py::dict SegmentText(const InterpolatedTrigramModel& m, const std::string& text,
                     const std::string& mode, std::size_t max_word_length,
                     bool allow_unseen) {
  const Sentence s = Sentence::FromUtf8(text);
  const auto r =
      Segment(m, s, {max_word_length, ParseMode(mode), allow_unseen});
  Words unseen;
  for (const auto& w : r.unseen_words) unseen.push_back(EncodeUtf8(w.word));
  py::dict out;
  out["words"] = ToWords(s, r.segmentation);
  out["boundaries"] = r.segmentation.boundaries();
  out["logprob"] = r.logprob;
  out["unseen"] = unseen;
  return out;
}

py::dict RunBootstrap(const std::vector<Words>& t1,
                      const std::vector<std::string>& t2,
                      const std::vector<std::string>& vocab,
                      std::uint64_t threshold, int iterations,
                      std::uint64_t seed) {
  RawCorpus raw;
  for (const auto& line : t2) raw.sentences.push_back(Sentence::FromUtf8(line));
  Lexicon v0;
  for (const auto& w : vocab) v0.Add(DecodeUtf8(w));
  BootstrapConfig cfg;
  cfg.threshold = threshold;
  cfg.iterations = iterations;
  cfg.train.seed = seed;
  Bootstrap bs(FromLines(t1), std::move(raw), std::move(v0), cfg);
  py::list reports;
  for (const auto& r : bs.Run(iterations)) {
    py::dict d;
    d["iteration"] = r.iteration;
    d["vocab_size"] = r.vocab_size;
    d["words_added"] = r.words_added;
    d["perplexity"] = r.perplexity;
    reports.append(d);
  }
  std::vector<Words> discovered;
  for (const auto& it : bs.discovered_log()) {
    Words ws;
    for (const auto& w : it) ws.push_back(EncodeUtf8(w));
    discovered.push_back(ws);
  }
  Words final_vocab;
  for (const auto& w : bs.vocabulary().Words()) {
    final_vocab.push_back(EncodeUtf8(w));
  }
  py::dict out;
  out["reports"] = reports;
  out["discovered"] = discovered;
  out["vocabulary"] = final_vocab;
  return out;
}

}  // namespace
}  // namespace seglm

PYBIND11_MODULE(_seglm, m) {
  using namespace seglm;
  m.doc() = "Word segmentation with an interpolated trigram model";

  auto base = py::register_exception<Error>(m, "SeglmError", PyExc_ValueError);
  py::register_exception<IoError>(m, "SeglmIoError", base.ptr());

  py::class_<Lambdas>(m, "Lambdas")
      .def_readonly("trigram", &Lambdas::trigram)
      .def_readonly("bigram", &Lambdas::bigram)
      .def_readonly("unigram", &Lambdas::unigram)
      .def_readonly("uniform", &Lambdas::uniform)
      .def("__iter__",
           [](const Lambdas& l) { return py::iter(py::cast(l.ToArray())); })
      .def("__repr__", [](const Lambdas& l) {
        return "Lambdas(" + std::to_string(l.trigram) + ", " +
               std::to_string(l.bigram) + ", " + std::to_string(l.unigram) +
               ", " + std::to_string(l.uniform) + ")";
      });

  py::class_<InterpolatedTrigramModel>(m, "Model")
      .def_static("train", &Train, py::arg("corpus"),
                  py::arg("min_count") = 1, py::arg("heldout_fraction") = 0.1,
                  py::arg("seed") = 42,
                  "Train on a list of sentences, each a list of words.")
      .def_static("load", &LoadModel, py::arg("path"))
      .def("save",
           [](const InterpolatedTrigramModel& self,
              const std::filesystem::path& p) { SaveModel(self, p); })
      .def("serialize", &SerializeModel)
      .def_static("parse", &ParseModel)
      .def_property_readonly("lambdas", &InterpolatedTrigramModel::lambdas)
      .def_property_readonly("vocab_size",
                             [](const InterpolatedTrigramModel& self) {
                               return self.lexicon().word_count();
                             })
      .def_property_readonly("event_count",
                             &InterpolatedTrigramModel::event_count)
      .def("segment", &SegmentText, py::arg("text"), py::arg("mode") = "exact",
           py::arg("max_word_length") = 10, py::arg("allow_unseen") = true)
      .def("sentence_logprob",
           [](const InterpolatedTrigramModel& self, const Words& words) {
             return self.SentenceLogProb(FromWords(words));
           })
      .def("perplexity",
           [](const InterpolatedTrigramModel& self,
              const std::vector<Words>& corpus) {
             return Perplexity(self, FromLines(corpus));
           });

  m.def(
      "agreement",
      [](const Words& a, const Words& b) {
        return Agreement(FromWords(a), FromWords(b)).value();
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "corpus_agreement",
      [](const std::vector<Words>& a, const std::vector<Words>& b, bool macro) {
        const auto x = FromLines(a), y = FromLines(b);
        return macro ? CorpusAgreementMacro(x, y)
                     : CorpusAgreement(x, y).value();
      },
      py::arg("a"), py::arg("b"), py::arg("macro") = false);
  m.def(
      "greedy_segment",
      [](const std::vector<std::string>& vocab, const std::string& text,
         std::size_t max_length) {
        Lexicon lex;
        for (const auto& w : vocab) lex.Add(DecodeUtf8(w));
        const Sentence s = Sentence::FromUtf8(text);
        return ToWords(s, GreedyLongestMatch(lex, s, max_length));
      },
      py::arg("vocab"), py::arg("text"), py::arg("max_length") = 10);
  m.def(
      "enumerate_segmentations",
      [](std::size_t n, std::size_t d) {
        std::vector<std::vector<std::size_t>> out;
        for (const auto& s : EnumerateSegmentations(n, d)) {
          out.push_back(s.boundaries());
        }
        return out;
      },
      py::arg("n"), py::arg("max_word_length"));
  m.def("bootstrap", &RunBootstrap, py::arg("t1"), py::arg("t2"),
        py::arg("vocabulary"), py::arg("threshold") = 3,
        py::arg("iterations") = 1, py::arg("seed") = 42);
}
