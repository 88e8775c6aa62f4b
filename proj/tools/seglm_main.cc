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

// seglm: train, segment, bootstrap and evaluate word trigram models.
//
// Exit codes: 0 success, 2 I/O, 3 validation, 4 internal invariant.

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <system_error>

#include "CLI11.hpp"
#include "seglm/bootstrap.h"
#include "seglm/char_model.h"
#include "seglm/corpus.h"
#include "seglm/error.h"
#include "seglm/eval.h"
#include "seglm/model.h"
#include "seglm/segmenter.h"
#include "seglm/synthetic.h"
#include "seglm/utf8.h"

namespace fs = std::filesystem;

namespace {

enum ExitCode { kOk = 0, kIo = 2, kValidation = 3, kInternal = 4 };

// Shortest decimal that round-trips, always with a fraction or exponent.
std::string Decimal(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  std::string s(buf, ptr);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string FormatLambdas(const seglm::Lambdas& l) {
  return Decimal(l.trigram) + " " + Decimal(l.bigram) + " " +
         Decimal(l.unigram) + " " + Decimal(l.uniform);
}

void RequireFile(const std::string& path) {
  if (!fs::is_regular_file(path)) throw seglm::IoError("no such file: " + path);
}

struct TrainArgs {
  std::string in, out;
  std::uint64_t min_count = 1;
  double heldout = 0.1;
  double gamma = seglm::UnknownWordModel::kDefaultGamma;
  std::size_t max_word_len = seglm::UnknownWordModel::kDefaultMaxLength;
  int em_iters = 100;
};

int CmdTrain(const TrainArgs& a, std::uint64_t seed) {
  if (!(a.heldout > 0.0 && a.heldout < 1.0)) {
    throw seglm::ValidationError("--heldout-frac must lie in (0, 1)");
  }
  RequireFile(a.in);
  const auto corpus = seglm::LoadSegmented(a.in);
  if (corpus.empty()) throw seglm::EmptyCorpus();
  seglm::TrainOptions opts;
  opts.heldout_fraction = a.heldout;
  opts.seed = seed;
  opts.gamma = a.gamma;
  opts.max_unseen_length = a.max_word_len;
  opts.em.max_iters = a.em_iters;
  const auto model = seglm::TrainModel(
      corpus, seglm::BuildVocabulary(corpus, a.min_count), opts);
  seglm::SaveModel(model, a.out);
  std::cout << "vocab_size\t" << model.lexicon().word_count() << "\n"
            << "lambda\t" << FormatLambdas(model.lambdas()) << "\n"
            << "train_perplexity\t" << Decimal(seglm::Perplexity(model, corpus))
            << "\n";
  return kOk;
}

struct SegmentArgs {
  std::string model, in, out, mode = "exact", marker = "*", unseen_out;
  std::size_t max_word_len = 10;
  bool mark_unseen = false;
  bool no_unseen = false;
};

seglm::SegmentMode ParseMode(const std::string& m) {
  if (m == "exact") return seglm::SegmentMode::kExact;
  if (m == "paper") return seglm::SegmentMode::kPaper;
  throw seglm::ValidationError("--mode must be exact or paper");
}

int CmdSegment(const SegmentArgs& a) {
  seglm::SegmenterConfig cfg;
  cfg.mode = ParseMode(a.mode);
  cfg.max_word_length = a.max_word_len;
  cfg.allow_unseen = !a.no_unseen;
  if (cfg.max_word_length == 0) {
    throw seglm::ValidationError("--max-word-len must be >= 1");
  }
  RequireFile(a.model);
  RequireFile(a.in);
  const auto model = seglm::LoadModel(a.model);
  const auto raw = seglm::LoadRaw(a.in);

  seglm::SegmentedCorpus out;
  std::string marked;
  double total = 0;
  std::size_t unseen = 0;
  for (const auto& s : raw.sentences) {
    auto best = seglm::Segment(model, s, cfg);
    total += best.logprob;
    unseen += best.unseen_words.size();
    out.sentences.emplace_back(s, best.segmentation);
    if (a.mark_unseen) {
      std::size_t next = 0;
      const auto& seg = out.sentences.back().segmentation;
      for (std::size_t k = 0; k < seg.word_count(); ++k) {
        if (k > 0) marked.push_back(' ');
        marked += seglm::EncodeUtf8(s.span(seg.word_begin(k), seg.word_end(k)));
        if (next < best.unseen_words.size() &&
            best.unseen_words[next].begin == seg.word_begin(k)) {
          marked += a.marker;
          ++next;
        }
      }
      marked.push_back('\n');
    }
  }
  seglm::WriteSegmented(out, a.out);
  if (a.mark_unseen) {
    seglm::WriteFile(a.unseen_out.empty() ? a.out + ".unseen" : a.unseen_out,
                     marked);
  }
  std::cerr << "sentences\t" << out.size() << "\n"
            << "unseen_words\t" << unseen << "\n"
            << "total_logprob\t" << Decimal(total) << "\n";
  return kOk;
}

struct BootstrapArgs {
  std::string t1, t2, vocab, out_dir, eval, gold_t1, gold_t2;
  std::uint64_t threshold = 3;
  int iterations = 1;
  std::size_t max_word_len = 10;
  std::string mode = "exact";
  bool union_training = false;
};

int CmdBootstrap(const BootstrapArgs& a, std::uint64_t seed) {
  if (a.iterations < 1) throw seglm::ValidationError("--iterations >= 1");
  if (a.max_word_len == 0) throw seglm::ValidationError("--max-word-len >= 1");
  const auto mode = ParseMode(a.mode);
  for (const auto* p : {&a.t1, &a.t2, &a.vocab}) RequireFile(*p);
  auto t1 = seglm::LoadSegmented(a.t1);
  auto t2 = seglm::LoadRaw(a.t2);
  auto v0 = seglm::LoadVocabulary(a.vocab);

  seglm::BootstrapConfig cfg;
  cfg.threshold = a.threshold;
  cfg.iterations = a.iterations;
  cfg.segmenter.max_word_length = a.max_word_len;
  cfg.segmenter.mode = mode;
  cfg.train.seed = seed;
  cfg.train.max_unseen_length = a.max_word_len;
  cfg.union_training = a.union_training;

  seglm::Bootstrap bs(std::move(t1), std::move(t2), std::move(v0), cfg);
  if (!a.eval.empty()) {
    RequireFile(a.eval);
    bs.SetEvaluationCorpus(seglm::LoadSegmented(a.eval));
  }
  if (!a.gold_t1.empty()) {
    RequireFile(a.gold_t1);
    bs.SetGold(0, seglm::LoadSegmented(a.gold_t1));
  }
  if (!a.gold_t2.empty()) {
    RequireFile(a.gold_t2);
    bs.SetGold(1, seglm::LoadSegmented(a.gold_t2));
  }

  std::error_code ec;
  fs::create_directories(a.out_dir, ec);
  if (ec) throw seglm::IoError("cannot create " + a.out_dir);
  const fs::path dir(a.out_dir);

  std::string report = "iteration\tvocab_size\twords_added\tperplexity\tagreement\n";
  for (int k = 0; k < a.iterations; ++k) {
    const auto r = bs.RunIteration();
    const int half = r.iteration % 2;
    seglm::SaveModel(bs.model(), dir / ("model_" + std::to_string(r.iteration) +
                                        ".seglm"));
    seglm::WriteSegmented(bs.segmented(half),
                          dir / (half == 1 ? "t2_seg.txt" : "t1_seg.txt"));
    std::string added;
    for (const auto& w : bs.discovered_log().back()) {
      added += seglm::EncodeUtf8(w) + "\n";
    }
    seglm::WriteFile(dir / ("discovered_" + std::to_string(r.iteration) + ".txt"),
                     added);
    const std::string agreement = r.agreement ? Decimal(*r.agreement) : "";
    report += std::to_string(r.iteration) + "\t" +
              std::to_string(r.vocab_size) + "\t" +
              std::to_string(r.words_added) + "\t" + Decimal(r.perplexity) +
              "\t" + agreement + "\n";
    std::cout << "iteration " << r.iteration << ": vocab " << r.vocab_size
              << ", added " << r.words_added << ", perplexity "
              << Decimal(r.perplexity)
              << (r.agreement ? ", agreement " + agreement : "") << "\n";
  }
  seglm::WriteFile(dir / "report.tsv", report);
  return kOk;
}

int CmdPerplexity(const std::string& model_path, const std::string& in) {
  RequireFile(model_path);
  RequireFile(in);
  const auto model = seglm::LoadModel(model_path);
  std::cout << Decimal(seglm::Perplexity(model, seglm::LoadSegmented(in)))
            << "\n";
  return kOk;
}

int CmdAgreement(const std::string& a, const std::string& b, bool macro) {
  RequireFile(a);
  RequireFile(b);
  const auto ca = seglm::LoadSegmented(a);
  const auto cb = seglm::LoadSegmented(b);
  const double v = macro ? seglm::CorpusAgreementMacro(ca, cb)
                         : seglm::CorpusAgreement(ca, cb).value();
  std::cout << Decimal(v) << "\n";
  return kOk;
}

int CmdAgreementMatrix(const std::vector<std::string>& files,
                       const std::vector<std::string>& names) {
  if (!names.empty() && names.size() != files.size()) {
    throw seglm::ValidationError("--names must match --in");
  }
  std::vector<seglm::SegmentedCorpus> corpora;
  for (const auto& f : files) {
    RequireFile(f);
    corpora.push_back(seglm::LoadSegmented(f));
  }
  std::vector<std::string> labels = names;
  if (labels.empty()) {
    for (const auto& f : files) labels.push_back(fs::path(f).stem().string());
  }
  std::cout << seglm::FormatAgreementTable(labels, corpora);
  return kOk;
}

int CmdGen(const std::string& lexicon, const std::string& out_dir,
           seglm::BenchmarkOptions opts) {
  RequireFile(lexicon);
  const auto words = seglm::LoadWeightedLexicon(lexicon);
  const auto bench = seglm::GenerateBenchmark(words, opts);
  seglm::WriteBenchmark(bench, opts, out_dir);
  std::cout << "sentences\t" << bench.gold.size() << "\n"
            << "tokens\t" << bench.gold.token_count() << "\n"
            << "hidden\t" << bench.hidden.size() << "\n";
  return kOk;
}

int CmdMakeLexicon(const std::string& out, seglm::LexiconOptions opts) {
  seglm::WriteFile(out,
                   seglm::FormatWeightedLexicon(seglm::MakeSyntheticLexicon(opts)));
  return kOk;
}

int CmdGreedy(const std::string& vocab, const std::string& in,
              const std::string& out, std::size_t max_len) {
  RequireFile(vocab);
  RequireFile(in);
  if (max_len == 0) throw seglm::ValidationError("--max-word-len >= 1");
  seglm::WriteSegmented(
      seglm::GreedySegmentCorpus(seglm::LoadVocabulary(vocab),
                                 seglm::LoadRaw(in), max_len),
      out);
  return kOk;
}

int CmdSplit(const std::string& in, const std::string& out1,
             const std::string& out2, std::uint64_t seed) {
  RequireFile(in);
  auto [a, b] = seglm::SplitHalves(seglm::LoadSegmented(in), seed);
  seglm::WriteSegmented(a, out1);
  seglm::WriteSegmented(b, out2);
  return kOk;
}

int CmdCharBaseline(const std::string& in, bool segmented, std::uint64_t seed) {
  RequireFile(in);
  const auto raw =
      segmented ? seglm::LoadSegmented(in).ToRaw() : seglm::LoadRaw(in);
  seglm::TrainOptions opts;
  opts.seed = seed;
  std::cout << Decimal(seglm::CharPerplexityBaseline(raw, opts).char_perplexity)
            << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word segmentation and trigram language modeling"};
  app.require_subcommand(1);
  std::uint64_t seed = 42;
  app.add_option("--seed", seed, "Seed for every random choice")
      ->capture_default_str();

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Train a model");
  train_cmd->add_option("--in", train.in, "Segmented corpus")->required();
  train_cmd->add_option("--out", train.out, "Model file")->required();
  train_cmd->add_option("--vocab-min-count", train.min_count,
                        "Minimum count for a vocabulary word")
      ->capture_default_str();
  train_cmd->add_option("--heldout-frac", train.heldout,
                        "Fraction of sentences held out for EM")
      ->capture_default_str();
  train_cmd->add_option("--gamma", train.gamma, "Unseen-word length decay")
      ->capture_default_str();
  train_cmd->add_option("--max-word-len", train.max_word_len,
                        "Longest unseen word")
      ->capture_default_str();
  train_cmd->add_option("--em-iters", train.em_iters, "EM iteration cap")
      ->capture_default_str();

  SegmentArgs seg;
  auto* seg_cmd = app.add_subcommand("segment", "Segment raw text");
  seg_cmd->add_option("--model", seg.model)->required();
  seg_cmd->add_option("--in", seg.in, "Raw corpus")->required();
  seg_cmd->add_option("--out", seg.out, "Segmented output")->required();
  seg_cmd->add_option("--mode", seg.mode, "exact or paper")
      ->capture_default_str();
  seg_cmd->add_option("--max-word-len", seg.max_word_len)
      ->capture_default_str();
  seg_cmd->add_flag("--mark-unseen", seg.mark_unseen,
                    "Write a sidecar with unseen words marked");
  seg_cmd->add_option("--marker", seg.marker, "Suffix for unseen words")
      ->capture_default_str();
  seg_cmd->add_option("--unseen-out", seg.unseen_out,
                      "Sidecar path (default: <out>.unseen)");
  seg_cmd->add_flag("--no-unseen", seg.no_unseen,
                    "Only use lexicon words");

  BootstrapArgs boot;
  auto* boot_cmd =
      app.add_subcommand("bootstrap", "Alternate segmentation and training");
  boot_cmd->add_option("--t1", boot.t1, "Segmented first half")->required();
  boot_cmd->add_option("--t2", boot.t2, "Raw second half")->required();
  boot_cmd->add_option("--vocab", boot.vocab, "Initial vocabulary")->required();
  boot_cmd->add_option("--threshold", boot.threshold,
                       "Add words counted more than this")
      ->capture_default_str();
  boot_cmd->add_option("--iterations", boot.iterations)->capture_default_str();
  boot_cmd->add_option("--out-dir", boot.out_dir)->required();
  boot_cmd->add_option("--max-word-len", boot.max_word_len)
      ->capture_default_str();
  boot_cmd->add_option("--mode", boot.mode)->capture_default_str();
  boot_cmd->add_option("--eval", boot.eval, "Fixed perplexity corpus");
  boot_cmd->add_option("--gold-t1", boot.gold_t1, "Gold segmentation of T1");
  boot_cmd->add_option("--gold-t2", boot.gold_t2, "Gold segmentation of T2");
  boot_cmd->add_flag("--union-training", boot.union_training,
                     "Train on both segmented halves");

  std::string pp_model, pp_in;
  auto* pp_cmd = app.add_subcommand("perplexity", "Perplexity of a corpus");
  pp_cmd->add_option("--model", pp_model)->required();
  pp_cmd->add_option("--in", pp_in)->required();

  std::string agr_a, agr_b;
  bool agr_macro = false;
  auto* agr_cmd = app.add_subcommand("agreement", "Segmentation agreement");
  agr_cmd->add_option("--a", agr_a)->required();
  agr_cmd->add_option("--b", agr_b)->required();
  agr_cmd->add_flag("--macro", agr_macro, "Average per sentence");

  std::vector<std::string> matrix_in, matrix_names;
  auto* matrix_cmd =
      app.add_subcommand("agreement-matrix", "Pairwise agreement table");
  matrix_cmd->add_option("--in", matrix_in)->required()->expected(2, -1);
  matrix_cmd->add_option("--names", matrix_names);

  std::string gen_lexicon, gen_out;
  seglm::BenchmarkOptions gen_opts;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic benchmark");
  gen_cmd->add_option("--lexicon", gen_lexicon, "word<TAB>weight lines")
      ->required();
  gen_cmd->add_option("--sentences", gen_opts.sentences)->capture_default_str();
  gen_cmd->add_option("--hide", gen_opts.hide)->capture_default_str();
  gen_cmd->add_option("--min-hidden-freq", gen_opts.min_hidden_frequency)
      ->capture_default_str();
  gen_cmd->add_option("--min-words", gen_opts.min_words)->capture_default_str();
  gen_cmd->add_option("--max-words", gen_opts.max_words)->capture_default_str();
  gen_cmd->add_option("--out-dir", gen_out)->required();

  std::string lex_out;
  seglm::LexiconOptions lex_opts;
  auto* lex_cmd =
      app.add_subcommand("make-lexicon", "Write a random weighted lexicon");
  lex_cmd->add_option("--words", lex_opts.words)->capture_default_str();
  lex_cmd->add_option("--alphabet", lex_opts.alphabet)->capture_default_str();
  lex_cmd->add_option("--zipf", lex_opts.zipf)->capture_default_str();
  lex_cmd->add_option("--out", lex_out)->required();

  std::string greedy_vocab, greedy_in, greedy_out;
  std::size_t greedy_len = 10;
  auto* greedy_cmd =
      app.add_subcommand("greedy", "Greedy longest-match segmentation");
  greedy_cmd->add_option("--vocab", greedy_vocab)->required();
  greedy_cmd->add_option("--in", greedy_in)->required();
  greedy_cmd->add_option("--out", greedy_out)->required();
  greedy_cmd->add_option("--max-word-len", greedy_len)->capture_default_str();

  std::string split_in, split_a, split_b;
  auto* split_cmd = app.add_subcommand("split", "Split a segmented corpus");
  split_cmd->add_option("--in", split_in)->required();
  split_cmd->add_option("--out1", split_a)->required();
  split_cmd->add_option("--out2", split_b)->required();

  std::string char_in;
  bool char_segmented = false;
  auto* char_cmd = app.add_subcommand(
      "char-perplexity", "Character trigram perplexity baseline");
  char_cmd->add_option("--in", char_in)->required();
  char_cmd->add_flag("--segmented", char_segmented,
                     "Input is segmented; spaces are dropped");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kValidation;
  }

  try {
    if (*train_cmd) {
      train.min_count = std::max<std::uint64_t>(train.min_count, 1);
      return CmdTrain(train, seed);
    }
    if (*seg_cmd) return CmdSegment(seg);
    if (*boot_cmd) return CmdBootstrap(boot, seed);
    if (*pp_cmd) return CmdPerplexity(pp_model, pp_in);
    if (*agr_cmd) return CmdAgreement(agr_a, agr_b, agr_macro);
    if (*matrix_cmd) return CmdAgreementMatrix(matrix_in, matrix_names);
    if (*gen_cmd) {
      gen_opts.seed = seed;
      return CmdGen(gen_lexicon, gen_out, gen_opts);
    }
    if (*lex_cmd) {
      lex_opts.seed = seed;
      return CmdMakeLexicon(lex_out, lex_opts);
    }
    if (*greedy_cmd) return CmdGreedy(greedy_vocab, greedy_in, greedy_out,
                                      greedy_len);
    if (*split_cmd) return CmdSplit(split_in, split_a, split_b, seed);
    if (*char_cmd) return CmdCharBaseline(char_in, char_segmented, seed);
  } catch (const seglm::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const seglm::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const seglm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
