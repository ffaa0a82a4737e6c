"""Corpus loading, tokenization, and vocabulary tests."""

import datetime as dt
import random

import pytest

from cbtext.corpus import Channel, Corpus, build_vocab, load_corpus, tokenize, tokenize_corpus
from cbtext.errors import DataError

from conftest import make_doc, make_tokens


class TestLoadCorpus:
    def test_empty_manifest(self, tmp_path):
        manifest = tmp_path / "manifest.csv"
        manifest.write_text("id,channel,date,filename\n")
        corpus = load_corpus(tmp_path, manifest)
        assert len(corpus) == 0

    def test_single_row(self, corpus_dir):
        root, manifest = corpus_dir([("d1", "Speech", "2020-03-03", "good")])
        corpus = load_corpus(root, manifest)
        assert len(corpus) == 1
        doc = corpus.documents[0]
        assert doc.channel is Channel.SPEECH
        assert doc.date == dt.date(2020, 3, 3)
        assert doc.raw_text == "good"

    def test_three_rows_in_manifest_order(self, corpus_dir):
        rows = [
            ("a1", "Announcement", "2020-01-29", "rates held"),
            ("m1", "Minutes", "2020-02-19", "committee met"),
            ("s1", "Speech", "2020-02-07", "remarks given"),
        ]
        root, manifest = corpus_dir(rows)
        corpus = load_corpus(root, manifest)
        assert [d.id for d in corpus.documents] == ["a1", "m1", "s1"]
        assert [d.date.isoformat() for d in corpus.documents] == [
            "2020-01-29", "2020-02-19", "2020-02-07"]
        assert [d.raw_text for d in corpus.documents] == [
            "rates held", "committee met", "remarks given"]

    def test_missing_file_names_row(self, corpus_dir):
        root, manifest = corpus_dir([("d1", "Speech", "2020-03-03", "x")])
        (root / "doc0.txt").unlink()
        with pytest.raises(DataError, match="manifest.csv:2"):
            load_corpus(root, manifest)

    def test_unknown_channel(self, corpus_dir):
        root, manifest = corpus_dir([("d1", "Press", "2020-03-03", "x")])
        with pytest.raises(DataError, match="unknown channel"):
            load_corpus(root, manifest)

    def test_duplicate_id(self, corpus_dir):
        root, manifest = corpus_dir([
            ("d1", "Speech", "2020-03-03", "x"),
            ("d1", "Speech", "2020-03-04", "y"),
        ])
        with pytest.raises(DataError, match="duplicate document id"):
            load_corpus(root, manifest)

    def test_bad_date(self, corpus_dir):
        root, manifest = corpus_dir([("d1", "Speech", "03/03/2020", "x")])
        with pytest.raises(DataError, match="bad date"):
            load_corpus(root, manifest)

    def test_date_outside_window(self, corpus_dir):
        root, manifest = corpus_dir([("d1", "Speech", "2020-03-03", "x")])
        window = (dt.date(2000, 1, 1), dt.date(2019, 12, 31))
        with pytest.raises(DataError, match="outside sample window"):
            load_corpus(root, manifest, sample_window=window)

    def test_channel_parse_case_insensitive(self):
        assert Channel.parse("minutes") is Channel.MINUTES
        assert Channel.parse("Announcement") is Channel.ANNOUNCEMENT


class TestTokenize:
    def test_empty_text(self):
        td = make_tokens("")
        assert td.tokens == ()
        assert td.sentence_spans == ()

    def test_not_good(self):
        td = make_tokens("Not good.")
        assert td.tokens == ("not", "good")
        assert td.sentence_spans == ((0, 2),)

    def test_hyphens_and_two_sentences(self):
        td = make_tokens("SARS-CoV outbreak. Vaccines soon!")
        assert td.tokens == ("sars-cov", "outbreak", "vaccines", "soon")
        assert td.sentence_spans == ((0, 2), (2, 4))

    def test_digits_kept_and_punct_splits(self):
        td = make_tokens("CPI rose 3.5% in Q2; unemployment fell.")
        assert td.tokens == ("cpi", "rose", "3", "5", "in", "q2", "unemployment", "fell")
        # ';' followed by whitespace closes a sentence
        assert td.sentence_spans == ((0, 6), (6, 8))

    def test_leading_trailing_hyphens_stripped(self):
        td = make_tokens("--covid-19-- and -- alone")
        assert td.tokens == ("covid-19", "and", "alone")

    def test_break_char_without_whitespace_is_not_boundary(self):
        td = make_tokens("see www.example.com now. done.")
        assert td.sentence_spans == ((0, len(td.tokens) - 1), (len(td.tokens) - 1, len(td.tokens)))

    def test_deterministic(self):
        text = "The Committee decided; markets reacted! Uncertainty remains?"
        assert make_tokens(text) == make_tokens(text)

    def test_spans_partition_tokens(self):
        rng = random.Random(7)
        alphabet = "ab c.d!e? f;g-h\n2"
        for _ in range(200):
            text = "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 80)))
            td = make_tokens(text)
            covered = []
            for start, end in td.sentence_spans:
                assert start < end, f"empty span in {text!r}"
                covered.extend(range(start, end))
            assert covered == list(range(len(td.tokens))), f"spans do not partition for {text!r}"
            assert all(t and t == t.lower() for t in td.tokens)


class TestBuildVocab:
    def _corpus(self, token_lists):
        docs = [make_doc(" ".join(tokens), doc_id=f"d{i}") for i, tokens in enumerate(token_lists)]
        corpus = Corpus(documents=docs)
        return tokenize_corpus(corpus)

    def test_frequency_then_lex_order(self):
        corpus = self._corpus([["a", "a", "b"]])
        build_vocab(corpus, min_count=1)
        assert corpus.vocab == {"a": 0, "b": 1}

    def test_min_count_filters(self):
        corpus = self._corpus([["a", "a", "b"]])
        build_vocab(corpus, min_count=2)
        assert corpus.vocab == {"a": 0}

    def test_tie_broken_lexicographically(self):
        corpus = self._corpus([["beta", "alpha", "beta", "alpha", "zed"]])
        build_vocab(corpus, min_count=1)
        assert corpus.vocab == {"alpha": 0, "beta": 1, "zed": 2}

    def test_distinct_token_count(self):
        rng = random.Random(11)
        words = ["w%d" % i for i in range(30)]
        token_lists = [[rng.choice(words) for _ in range(50)] for _ in range(3)]
        corpus = self._corpus(token_lists)
        build_vocab(corpus, min_count=1)
        distinct = set()
        for tokens in token_lists:
            distinct.update(tokens)
        assert len(corpus.vocab) == len(distinct)
        assert sorted(corpus.vocab.values()) == list(range(len(distinct)))

    def test_requires_tokenization(self):
        corpus = Corpus(documents=[make_doc("hello")])
        with pytest.raises(DataError, match="not tokenized"):
            build_vocab(corpus)
