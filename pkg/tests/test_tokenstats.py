import json
import math
import random

import pytest

from ltgec.corpus import TextSample
from ltgec.tokenstats import (
    EmptyCorpusError,
    compute_stats,
    render_reports,
    reports_to_json,
    resolve_tokenizer,
    tokenize_bytes,
    tokenize_chars,
    tokenize_words,
)

PROBE = "Lietuva – graži šalis"


class TestTokenizers:
    def test_probe_counts(self):
        # the dash is 3 bytes, ž and š 2 bytes each: 18 ascii + 3 + 2 + 2 = 25
        assert len(tokenize_chars(PROBE)) == 21
        assert len(tokenize_bytes(PROBE)) == 25
        assert len(tokenize_words(PROBE)) == 3

    def test_chars_keeps_everything(self):
        assert tokenize_chars("ab ž") == ["a", "b", " ", "ž"]

    def test_bytes_renders_non_ascii_as_hex(self):
        assert tokenize_bytes("ž") == ["\\xc5", "\\xbe"]
        assert tokenize_bytes("a\tb") == ["a", "\\x09", "b"]
        assert tokenize_bytes("a b") == ["a", " ", "b"]

    def test_words_strip_edges(self):
        assert tokenize_words("„Labas“, pasauli!") == ["Labas", "pasauli"]
        assert tokenize_words("(2020 m.)") == ["2020", "m"]

    def test_words_drop_pure_punctuation(self):
        assert tokenize_words("vienas - du") == ["vienas", "du"]

    def test_words_keep_inner_punctuation(self):
        assert tokenize_words("www.puslapis.lt") == ["www.puslapis.lt"]

    def test_empty_text(self):
        assert tokenize_chars("") == []
        assert tokenize_bytes("") == []
        assert tokenize_words("") == []


class TestResolve:
    def test_known_names(self):
        for name in ("chars", "bytes", "words"):
            resolved, fn = resolve_tokenizer(name)
            assert resolved == name and callable(fn)

    def test_unknown_name(self):
        with pytest.raises(ValueError, match="unknown tokenizer"):
            resolve_tokenizer("sentencepiece")

    def test_custom_callable(self):
        def halves(text):
            mid = len(text) // 2
            return [text[:mid], text[mid:]]

        name, fn = resolve_tokenizer(halves)
        assert name == "halves"
        assert fn("abcd") == ["ab", "cd"]


class TestComputeStats:
    def test_hand_case(self):
        report = compute_stats(["ab", "abcd"], tokenizer="chars")
        assert report.samples == 2
        assert report.total_tokens == 6
        assert report.mean_tokens == 3.0
        assert report.std_tokens == 1.0  # population std of [2, 4]

    def test_accepts_samples_and_strings(self):
        samples = [TextSample("0", "ab"), "abcd"]
        report = compute_stats(samples, tokenizer="chars")
        assert report.total_tokens == 6

    def test_probe_fields(self):
        chars = compute_stats(["x"], tokenizer="chars")
        assert chars.probe_tokens == 21
        words = compute_stats(["x"], tokenizer="words")
        assert words.probe_tokens == 3
        assert words.probe == "Lietuva graži šalis"

    def test_single_sample_std_zero(self):
        report = compute_stats(["labas"], tokenizer="chars")
        assert report.std_tokens == 0.0
        assert report.mean_tokens == 5.0

    def test_matches_two_pass_formula(self):
        rng = random.Random(7)
        texts = ["a" * rng.randrange(0, 400) for _ in range(500)]
        report = compute_stats(texts, tokenizer="chars")
        lengths = [len(t) for t in texts]
        mean = sum(lengths) / len(lengths)
        var = sum((x - mean) ** 2 for x in lengths) / len(lengths)
        assert report.mean_tokens == pytest.approx(mean, abs=1e-9)
        assert report.std_tokens == pytest.approx(math.sqrt(var), abs=1e-9)

    def test_empty_corpus_rejected(self):
        with pytest.raises(EmptyCorpusError):
            compute_stats([], tokenizer="chars")

    def test_custom_tokenizer(self):
        report = compute_stats(["aaa"], tokenizer=lambda t: t.split("a"))
        assert report.total_tokens == 4


class TestOutput:
    def test_render_table(self):
        reports = [compute_stats(["ab", "abcd"], tokenizer=name)
                   for name in ("chars", "bytes", "words")]
        text = render_reports(reports)
        assert "tokenizer" in text
        assert "chars" in text and "bytes" in text and "words" in text
        assert "probe: Lietuva – graži šalis" in text

    def test_json(self):
        reports = [compute_stats(["ab"], tokenizer="chars")]
        data = json.loads(reports_to_json(reports))
        assert data[0]["tokenizer"] == "chars"
        assert data[0]["probe_tokens"] == 21
