# Copyright 2026 The seglm Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math
import random

import pytest

import seglm


def toy_corpus(n=120, seed=3):
    words = ["a", "b", "c", "ab", "cd", "abc", "d"]
    rng = random.Random(seed)
    return [[rng.choice(words) for _ in range(rng.randint(1, 6))]
            for _ in range(n)]


def test_train_and_segment():
    model = seglm.Model.train(toy_corpus())
    assert model.vocab_size == 7
    assert math.isclose(sum(model.lambdas), 1.0, abs_tol=1e-12)
    out = model.segment("abcdab")
    assert "".join(out["words"]) == "abcdab"
    assert out["boundaries"][-1] == 6
    assert math.isclose(out["logprob"], model.sentence_logprob(out["words"]),
                        rel_tol=0, abs_tol=1e-12)
    paper = model.segment("abcdab", mode="paper")
    assert paper["logprob"] <= out["logprob"] + 1e-12


def test_unseen_words_reported():
    model = seglm.Model.train(toy_corpus())
    out = model.segment("abzzab")
    assert out["unseen"]
    with pytest.raises(seglm.SeglmError):
        model.segment("abzzab", allow_unseen=False)


def test_model_round_trip(tmp_path):
    model = seglm.Model.train(toy_corpus())
    path = tmp_path / "m.seglm"
    model.save(path)
    again = seglm.Model.load(path)
    assert again.serialize() == model.serialize()
    with pytest.raises(seglm.SeglmIoError):
        seglm.Model.load(tmp_path / "missing.seglm")


def test_perplexity_positive():
    corpus = toy_corpus()
    model = seglm.Model.train(corpus)
    assert 1.0 < model.perplexity(corpus) < model.event_count


def test_agreement_example():
    assert math.isclose(seglm.agreement(["ab", "c", "d"], ["ab", "cd"]), 5 / 12)
    assert seglm.corpus_agreement([["ab", "c"]], [["ab", "c"]]) == 1.0
    with pytest.raises(seglm.SeglmError):
        seglm.agreement(["ab"], ["cd"])


def test_greedy_and_enumeration():
    assert seglm.greedy_segment(["a", "ab", "abc", "d"], "abcd") == ["abc", "d"]
    assert sorted(seglm.enumerate_segmentations(3, 3)) == [
        [1, 2, 3], [1, 3], [2, 3], [3]]
    assert len(seglm.enumerate_segmentations(4, 2)) == 5


def test_bootstrap_discovers_word():
    rng = random.Random(5)
    words = ["a", "b", "c", "ab", "cd", "zq"]
    t1 = [[rng.choice(words[:5]) for _ in range(4)] for _ in range(60)]
    t2 = ["".join(rng.choice(words) for _ in range(5)) for _ in range(60)]
    result = seglm.bootstrap(t1, t2, words[:5], threshold=3, iterations=2)
    assert len(result["reports"]) == 2
    sizes = [r["vocab_size"] for r in result["reports"]]
    assert sizes == sorted(sizes)
    assert "zq" in result["vocabulary"]
