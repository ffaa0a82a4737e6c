"""Indicator formula tests: ratio/net/uncertainty scores, shifted polarity,
and the standardized aggregate."""

import datetime as dt
import random

import numpy as np
import pytest

from cbtext.corpus import Channel
from cbtext.lexicon import SentimentLexicon, ValenceShifterTable, WeightedLexicon
from cbtext.sentiment import (
    ScoreRecord,
    aggregate_sentiment,
    net_score,
    polarity_score,
    ratio_score,
    uncertainty_ratio,
)

from conftest import make_tokens

LEX = SentimentLexicon(
    name="demo",
    positive=frozenset({"good", "gain", "strong"}),
    negative=frozenset({"bad", "loss", "weak"}),
    uncertainty=frozenset({"uncertain"}),
)
SHIFTERS = ValenceShifterTable(
    negators=frozenset({"not"}),
    amplifiers={"very": 0.8},
    deamplifiers={"somewhat": 0.5},
)


class TestRatioScore:
    def test_direct(self):
        assert ratio_score(3, 1) == 0.75

    def test_symmetry(self):
        for k in (1, 2, 7, 100):
            assert ratio_score(k, k) == 0.5

    def test_zero_hits_neutral(self):
        assert ratio_score(0, 0) == 0.5

    def test_random_pairs_match_oracle(self):
        rng = random.Random(1)
        for _ in range(1000):
            pos = rng.randrange(0, 500)
            neg = rng.randrange(0, 500)
            expected = 0.5 if pos + neg == 0 else pos / (pos + neg)
            assert abs(ratio_score(pos, neg) - expected) <= 1e-12

    def test_scale_invariance(self):
        rng = random.Random(2)
        for _ in range(200):
            pos = rng.randrange(0, 50)
            neg = rng.randrange(0, 50)
            c = rng.randrange(1, 9)
            assert ratio_score(pos, neg) == ratio_score(c * pos, c * neg)

    def test_negative_count_rejected(self):
        with pytest.raises(ValueError):
            ratio_score(-1, 0)


class TestNetScore:
    def test_zero(self):
        assert net_score(0, 0, 100) == 0.0

    def test_arithmetic(self):
        assert net_score(5, 2, 100) == pytest.approx(0.03, abs=1e-15)

    def test_antisymmetric(self):
        rng = random.Random(3)
        for _ in range(100):
            pos, neg, total = rng.randrange(0, 40), rng.randrange(0, 40), rng.randrange(80, 200)
            assert net_score(pos, neg, total) == -net_score(neg, pos, total)

    def test_empty_document_error(self):
        with pytest.raises(ValueError, match="empty document"):
            net_score(1, 0, 0)

    def test_planted_fixture(self):
        text = "gain gain loss " + "filler " * 17
        td = make_tokens(text)
        pos = sum(1 for t in td.tokens if t in LEX.positive)
        neg = sum(1 for t in td.tokens if t in LEX.negative)
        assert net_score(pos, neg, len(td.tokens)) == pytest.approx((2 - 1) / 20)


class TestUncertaintyRatio:
    def test_zero(self):
        assert uncertainty_ratio(0, 400) == 0.0

    def test_arithmetic(self):
        assert uncertainty_ratio(4, 400) == pytest.approx(0.01, abs=1e-15)

    def test_fixture_matches_hand_count(self):
        td = make_tokens("uncertain times stay uncertain. markets are calm today.")
        assert len(td.tokens) == 8
        unc = sum(1 for t in td.tokens if t in LEX.uncertainty)
        assert uncertainty_ratio(unc, len(td.tokens)) == pytest.approx(2 / 8)

    def test_empty_document_error(self):
        with pytest.raises(ValueError, match="empty document"):
            uncertainty_ratio(0, 0)


class TestPolarityScore:
    def test_plain_positive(self):
        assert polarity_score(make_tokens("good"), LEX, SHIFTERS) == 1.0

    def test_negation(self):
        assert polarity_score(make_tokens("not good"), LEX, SHIFTERS) == -1.0

    def test_amplifier(self):
        assert polarity_score(make_tokens("very good"), LEX, SHIFTERS) == 1.8

    def test_double_negation(self):
        assert polarity_score(make_tokens("not not good"), LEX, SHIFTERS) == 1.0

    def test_deamplifier(self):
        assert polarity_score(make_tokens("somewhat good"), LEX, SHIFTERS) == 0.5

    def test_negated_amplified(self):
        # composition in token order: negate, then amplify magnitude
        assert polarity_score(make_tokens("not very good"), LEX, SHIFTERS) == -1.8

    def test_window_is_sentence_bounded(self):
        # negator in the previous sentence must not flip the next sentence
        assert polarity_score(make_tokens("Not now. Good."), LEX, SHIFTERS) == 1.0

    def test_window_is_three_tokens(self):
        assert polarity_score(make_tokens("not a b c good"), LEX, SHIFTERS) == 1.0
        assert polarity_score(make_tokens("not a b good"), LEX, SHIFTERS) == -1.0

    def test_mean_over_matches(self):
        assert polarity_score(make_tokens("good bad"), LEX, SHIFTERS) == 0.0
        assert polarity_score(make_tokens("good good bad"), LEX, SHIFTERS) == pytest.approx(1 / 3)

    def test_no_matches_is_zero(self):
        assert polarity_score(make_tokens("the committee met"), LEX, SHIFTERS) == 0.0

    def test_appending_neutral_sentences_is_noop(self):
        base = polarity_score(make_tokens("very good. bad."), LEX, SHIFTERS)
        extended = polarity_score(
            make_tokens("very good. bad. the committee met today. rates were held."),
            LEX, SHIFTERS)
        assert base == extended

    def test_weighted_lexicon_base_values(self):
        wlex = WeightedLexicon(name="w", weights={"good": 0.5, "awful": -0.9})
        assert polarity_score(make_tokens("good awful"), wlex, SHIFTERS) == pytest.approx((0.5 - 0.9) / 2)
        assert polarity_score(make_tokens("very good"), wlex, SHIFTERS) == pytest.approx(0.9)
        assert polarity_score(make_tokens("not good"), wlex, SHIFTERS) == pytest.approx(-0.5)


def _records(values_by_indicator, dates, channel=Channel.SPEECH):
    records = []
    for name, values in values_by_indicator.items():
        for date, value in zip(dates, values):
            records.append(ScoreRecord(doc_id=f"{name}-{date}", date=date, channel=channel,
                                       indicator_name=name, value=value))
    return records


class TestAggregateSentiment:
    dates = [dt.date(2020, 3, 2) + dt.timedelta(weeks=i) for i in range(5)]

    def test_all_constant_is_zero(self):
        names = [f"ind{i}" for i in range(8)]
        records = _records({n: [0.3] * 5 for n in names}, self.dates)
        series = aggregate_sentiment(records, names)
        assert all(v == 0.0 for _, v in series.points)
        assert len(series) == 5

    def test_single_trend_divided_by_count(self):
        names = [f"ind{i}" for i in range(8)]
        data = {n: [0.5] * 5 for n in names[:7]}
        trend = [0.0, 1.0, 2.0, 3.0, 4.0]
        data[names[7]] = trend
        records = _records(data, self.dates)
        series = aggregate_sentiment(records, names)
        z = (np.array(trend) - np.mean(trend)) / np.std(trend, ddof=1)
        for (_, got), expected in zip(series.points, z / 8):
            assert got == pytest.approx(expected, abs=1e-12)

    def test_matches_independent_recomputation(self):
        rng = random.Random(8)
        names = [f"ind{i}" for i in range(8)]
        dates = [dt.date(2019, 1, 7) + dt.timedelta(weeks=i) for i in range(30)]
        data = {n: [rng.uniform(-1, 1) for _ in dates] for n in names}
        records = _records(data, dates)
        series = aggregate_sentiment(records, names)

        table = np.array([data[n] for n in names])  # indicators x periods
        mean = table.mean(axis=1, keepdims=True)
        sd = table.std(axis=1, ddof=1, keepdims=True)
        expected = ((table - mean) / sd).mean(axis=0)
        got = np.array([v for _, v in series.points])
        assert np.allclose(got, expected, atol=1e-9)

    def test_channel_weighting(self):
        date = dt.date(2020, 3, 2)
        records = [
            ScoreRecord("a", date, Channel.ANNOUNCEMENT, "x", 1.0),
            ScoreRecord("s", date, Channel.SPEECH, "x", 0.0),
            ScoreRecord("a2", date + dt.timedelta(weeks=1), Channel.ANNOUNCEMENT, "x", 0.0),
        ]
        series = aggregate_sentiment(records, ["x"])
        # week 1 merged value = (3*1 + 1*0)/4 = 0.75; z-scored two-point series
        merged = [0.75, 0.0]
        z = (np.array(merged) - np.mean(merged)) / np.std(merged, ddof=1)
        got = [v for _, v in series.points]
        assert got == pytest.approx(list(z))

    def test_missing_indicator_fatal(self):
        records = _records({"present": [0.1] * 5}, self.dates)
        with pytest.raises(ValueError, match="missing indicator.*absent"):
            aggregate_sentiment(records, ["present", "absent"])
