"""Per-document indicator values: ratio/net/uncertainty scores, valence-shifted
polarity, term counts, and the standardized cross-dictionary aggregate.

Conventions that the formulas leave open and that this module fixes:

* ratio score with zero positive and negative hits is neutral 0.5;
* the valence shifter window is the 3 tokens preceding a sentiment word,
  bounded by the sentence start, applied multiplicatively in token order;
* in the aggregate, an indicator with zero variance standardizes to zeros.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass
from math import sqrt
from typing import TYPE_CHECKING, Iterable, Mapping, Sequence

from .corpus import Channel, TokenizedDocument
from .lexicon import (
    SentimentLexicon,
    TermLexicon,
    ValenceShifterTable,
    WeightedLexicon,
    match_sentiment,
    match_terms,
)

if TYPE_CHECKING:
    from .timeseries import TimeSeries

SHIFTER_WINDOW = 3
DEFAULT_CHANNEL_WEIGHTS: Mapping[Channel, float] = {
    Channel.ANNOUNCEMENT: 3.0,
    Channel.MINUTES: 2.0,
    Channel.SPEECH: 1.0,
}
INDICATOR_KINDS = ("ratio", "net", "uncertainty", "polarity", "term_count")


@dataclass(frozen=True)
class ScoreRecord:
    doc_id: str
    date: dt.date
    channel: Channel
    indicator_name: str
    value: float


def ratio_score(pos: int, neg: int) -> float:
    """pos / (pos + neg); neutral 0.5 when there are no hits at all."""
    if pos < 0 or neg < 0:
        raise ValueError("counts must be nonnegative")
    total = pos + neg
    if total == 0:
        return 0.5
    return pos / total


def net_score(pos: int, neg: int, total_tokens: int) -> float:
    """(pos - neg) / total_tokens; signed, so it can go negative."""
    if total_tokens <= 0:
        raise ValueError("empty document")
    return (pos - neg) / total_tokens


def uncertainty_ratio(unc: int, total_tokens: int) -> float:
    """Share of tokens flagged as uncertainty words."""
    if total_tokens <= 0:
        raise ValueError("empty document")
    return unc / total_tokens


def polarity_score(
    doc: TokenizedDocument,
    lex: SentimentLexicon | WeightedLexicon,
    shifters: ValenceShifterTable,
) -> float:
    """Mean valence-shifted value of matched sentiment words; 0.0 if none match.

    Base values are +1/-1 for class lexicons and the stored weight for
    weighted lexicons. Within the same sentence, each of up to 3 preceding
    tokens adjusts the value in order: a negator flips the sign, an amplifier
    scales magnitude by (1 + boost), a deamplifier scales it by damp.
    """
    if isinstance(lex, WeightedLexicon):
        base = lex.weights.get
    else:
        positive, negative = lex.positive, lex.negative

        def base(token: str) -> float | None:
            if token in positive:
                return 1.0
            if token in negative:
                return -1.0
            return None

    tokens = doc.tokens
    total = 0.0
    matched = 0
    for start, end in doc.sentence_spans:
        for i in range(start, end):
            value = base(tokens[i])
            if value is None:
                continue
            matched += 1
            for j in range(max(start, i - SHIFTER_WINDOW), i):
                word = tokens[j]
                if word in shifters.negators:
                    value = -value
                elif word in shifters.amplifiers:
                    value *= 1.0 + shifters.amplifiers[word]
                elif word in shifters.deamplifiers:
                    value *= shifters.deamplifiers[word]
            total += value
    return total / matched if matched else 0.0


def indicator_value(
    doc: TokenizedDocument,
    kind: str,
    lex: TermLexicon | SentimentLexicon | WeightedLexicon,
    shifters: ValenceShifterTable | None = None,
) -> float:
    """Compute one indicator of the given kind for one tokenized document."""
    if kind == "term_count":
        assert isinstance(lex, TermLexicon)
        return float(match_terms(doc, lex).count)
    if kind == "polarity":
        if shifters is None:
            raise ValueError("polarity indicators need a shifter table")
        assert isinstance(lex, (SentimentLexicon, WeightedLexicon))
        return polarity_score(doc, lex, shifters)
    assert isinstance(lex, SentimentLexicon)
    pos, neg, unc = match_sentiment(doc, lex)
    if kind == "ratio":
        return ratio_score(pos.count, neg.count)
    if kind == "net":
        return net_score(pos.count, neg.count, len(doc.tokens))
    if kind == "uncertainty":
        return uncertainty_ratio(unc.count, len(doc.tokens))
    raise ValueError(f"unknown indicator kind {kind!r}")


def aggregate_sentiment(
    records: Iterable[ScoreRecord],
    indicators: Sequence[str],
    channel_weights: Mapping[Channel, float] | None = None,
    frequency: str = "weekly",
    name: str = "aggregate_sentiment",
) -> "TimeSeries":
    """Equally weighted average of standardized indicator series.

    Documents from different channels falling in the same calendar period are
    merged with ``channel_weights`` (default Announcement:Minutes:Speech =
    3:2:1). Each indicator is z-scored over the full sample (zero-variance
    series standardize to zeros), then the indicators are averaged on their
    common calendar grid.
    """
    from .timeseries import TimeSeries, period_start

    weights = dict(channel_weights or DEFAULT_CHANNEL_WEIGHTS)
    wanted = list(indicators)
    per_indicator: dict[str, dict[dt.date, list[tuple[float, float]]]] = {k: {} for k in wanted}
    for rec in records:
        if rec.indicator_name not in per_indicator:
            continue
        period = period_start(rec.date, frequency)
        w = weights.get(rec.channel, 1.0)
        per_indicator[rec.indicator_name].setdefault(period, []).append((rec.value, w))
    missing = [k for k in wanted if not per_indicator[k]]
    if missing:
        raise ValueError(f"aggregate is missing indicator series: {missing}")

    series: dict[str, dict[dt.date, float]] = {}
    for key in wanted:
        series[key] = {
            period: sum(v * w for v, w in sorted(vals)) / sum(w for _, w in sorted(vals))
            for period, vals in per_indicator[key].items()
        }
    grid = set(series[wanted[0]])
    for key in wanted[1:]:
        grid &= set(series[key])
    if not grid:
        raise ValueError("indicator series share no common calendar periods")
    dates = sorted(grid)

    standardized: dict[str, dict[dt.date, float]] = {}
    for key in wanted:
        values = [series[key][d] for d in dates]
        mean = sum(values) / len(values)
        if len(values) > 1:
            var = sum((v - mean) ** 2 for v in values) / (len(values) - 1)
        else:
            var = 0.0
        sd = sqrt(var)
        if sd == 0.0:
            standardized[key] = {d: 0.0 for d in dates}
        else:
            standardized[key] = {d: (series[key][d] - mean) / sd for d in dates}

    points = [
        (d, sum(standardized[key][d] for key in wanted) / len(wanted)) for d in dates
    ]
    return TimeSeries(name=name, points=points, frequency=frequency)
