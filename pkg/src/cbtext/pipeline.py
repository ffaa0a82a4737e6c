"""Subcommand implementations: each one loads what it needs from the run
config, computes deterministically, and writes delimited tables.

Figure tables follow a documented name contract: the report command looks up
indicator/external series by the names ``ump_terms``, ``covid_terms``,
``fss_score``, ``lm_uncertainty``, ``vix``, ``covid_cases``, ``ffr``,
``neer``, ``unemployment``, and ``fed_assets`` (see README).
"""

from __future__ import annotations

import datetime as dt
import hashlib
import json
import sys
import warnings
from pathlib import Path
from typing import Iterable, Sequence

from . import __version__
from ._util import map_ordered, write_csv
from .config import KIND_SECTIONS, RunConfig, SliceSpec
from .corpus import Channel, Corpus, build_vocab, load_corpus, tokenize_corpus
from .econometrics import adf_test, compare_break_magnitudes, detect_break, fit_var, granger_test, kpss_test, select_lag_bic
from .errors import ConfigError, ToolkitError
from .lexicon import load_sentiment_lexicon, load_shifters, load_term_lexicon, load_weighted_lexicon
from .sentiment import ScoreRecord, aggregate_sentiment, indicator_value
from .timeseries import (
    AlignedPanel,
    TimeSeries,
    align,
    build_series,
    can_resample,
    difference,
    in_recession,
    load_external_csv,
    load_recession_windows,
    period_start,
    resample,
)
from .topics import fit_lda, kl_permutation_test, npmi_coherence, period_topic_distribution, kl_divergence

CHANNEL_ORDER = (Channel.ANNOUNCEMENT, Channel.MINUTES, Channel.SPEECH)


class Runtime:
    """Caches corpus, lexicons, and scores shared by the subcommand bodies."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self._corpus: Corpus | None = None
        self._lexicons: dict[tuple[str, str], object] = {}
        self._shifters = None
        self._records: list[ScoreRecord] | None = None
        self._externals: dict[str, TimeSeries] = {}

    def corpus(self) -> Corpus:
        if self._corpus is None:
            corpus = load_corpus(self.cfg.corpus_root, self.cfg.manifest, self.cfg.sample_window)
            tokenize_corpus(corpus)
            build_vocab(corpus, self.cfg.min_count)
            self._corpus = corpus
        return self._corpus

    def lexicon(self, sections: Sequence[str], key: str):
        for section in sections:
            path = self.cfg.lexicons[section].get(key)
            if path is None:
                continue
            cache_key = (section, key)
            if cache_key not in self._lexicons:
                loader = {
                    "terms": load_term_lexicon,
                    "sentiment": load_sentiment_lexicon,
                    "weighted": load_weighted_lexicon,
                }[section]
                self._lexicons[cache_key] = loader(path, name=key)
            return self._lexicons[cache_key]
        raise ToolkitError(f"lexicon {key!r} not configured")

    def shifters(self):
        if self._shifters is None and self.cfg.shifters is not None:
            self._shifters = load_shifters(self.cfg.shifters)
        return self._shifters

    def scores(self) -> list[ScoreRecord]:
        if self._records is not None:
            return self._records
        cfg = self.cfg
        corpus = self.corpus()
        if not corpus.documents:
            raise ToolkitError("empty corpus: the manifest lists no documents")
        lexicons = {spec.name: self.lexicon(KIND_SECTIONS[spec.kind], spec.lexicon)
                    for spec in cfg.indicators}
        shifters = self.shifters()

        def score_doc(doc) -> list[ScoreRecord]:
            td = corpus.tokenized[doc.id]
            out = []
            for spec in cfg.indicators:
                value = indicator_value(td, spec.kind, lexicons[spec.name], shifters)
                out.append(ScoreRecord(doc_id=doc.id, date=doc.date, channel=doc.channel,
                                       indicator_name=spec.name, value=value))
            return out

        self._records = [rec for chunk in map_ordered(score_doc, corpus.documents) for rec in chunk]
        return self._records

    def external(self, name: str) -> TimeSeries:
        if name not in self._externals:
            for spec in self.cfg.external:
                if spec.name == name:
                    self._externals[name] = load_external_csv(
                        spec.path, spec.date_col, spec.value_col, name=spec.name,
                        frequency=spec.frequency, downsample=spec.downsample,
                    )
                    break
            else:
                raise ToolkitError(f"external series {name!r} not configured")
        return self._externals[name]

    def series(self, name: str, channels: Sequence[Channel] | None = None,
               frequency: str | None = None) -> TimeSeries:
        """An indicator series (merged or filtered channels) or an external series."""
        frequency = frequency or self.cfg.frequency
        if any(spec.name == name for spec in self.cfg.indicators):
            return build_series(self.scores(), name, channels=channels, frequency=frequency)
        series = self.external(name)
        return resample(series, frequency)

    def econ_series(self, name: str, frequency: str | None = None) -> TimeSeries:
        """Like :meth:`series` but honoring the econ differencing flags."""
        series = self.series(name, frequency=frequency)
        if name in self.cfg.econ.difference:
            series = difference(series, 1)
        return series

    def recession_windows(self) -> list[tuple[dt.date, dt.date]]:
        if self.cfg.recessions is None:
            return []
        return load_recession_windows(self.cfg.recessions)


def _out_dir(cfg: RunConfig) -> Path:
    cfg.output_dir.mkdir(parents=True, exist_ok=True)
    return cfg.output_dir


def _panel_rows(panel: AlignedPanel, windows) -> Iterable[list[object]]:
    for i, date in enumerate(panel.dates):
        row: list[object] = [date.isoformat()]
        for name in panel.names:
            cell = panel.variables[name][i]
            row.append("" if cell is None else cell)
        row.append(1 if in_recession(date, windows) else 0)
        yield row


def cmd_ingest(cfg: RunConfig, force: bool = False) -> list[Path]:
    """Write corpus_summary.csv: per-channel text counts and mean token counts."""
    runtime = Runtime(cfg)
    corpus = runtime.corpus()
    if not corpus.documents:
        raise ToolkitError("empty corpus: the manifest lists no documents")
    out = _out_dir(cfg)
    rows = []
    total_docs = 0
    total_tokens = 0
    for channel in CHANNEL_ORDER:
        docs = [d for d in corpus.documents if d.channel == channel]
        tokens = sum(len(corpus.tokenized[d.id].tokens) for d in docs)
        total_docs += len(docs)
        total_tokens += tokens
        mean = tokens / len(docs) if docs else 0.0
        rows.append([channel.value, len(docs), mean])
    rows.append(["Total", total_docs, total_tokens / total_docs if total_docs else 0.0])
    path = out / "corpus_summary.csv"
    write_csv(path, ["channel", "n_texts", "mean_words"], rows, force=force)
    return [path]


def _score_rows(records: Iterable[ScoreRecord]) -> Iterable[list[object]]:
    for rec in records:
        yield [rec.doc_id, rec.date.isoformat(), rec.channel.value, rec.indicator_name, rec.value]


def cmd_score(cfg: RunConfig, force: bool = False) -> list[Path]:
    """Write the long score table and the wide per-frequency series panel."""
    runtime = Runtime(cfg)
    records = runtime.scores()
    out = _out_dir(cfg)
    paths = [out / "scores.csv"]
    write_csv(paths[0], ["doc_id", "date", "channel", "indicator", "value"],
              _score_rows(records), force=force)

    series = [runtime.series(spec.name) for spec in cfg.indicators]
    if cfg.aggregate_indicators:
        series.append(aggregate_sentiment(records, cfg.aggregate_indicators,
                                          cfg.channel_weights or None, frequency=cfg.frequency))
    panel = align(series, cfg.frequency, join="outer")
    series_path = out / f"series_{cfg.frequency}.csv"
    if not force and series_path.exists():
        raise ToolkitError(f"refusing to overwrite {series_path}; pass --force to allow")
    panel.dump(series_path)
    paths.append(series_path)
    return paths


def cmd_counts(cfg: RunConfig, force: bool = False) -> list[Path]:
    """Write counts.csv: the term-count indicators only, in long format."""
    runtime = Runtime(cfg)
    count_names = {spec.name for spec in cfg.indicators if spec.kind == "term_count"}
    if not count_names:
        raise ConfigError("indicators: no term_count indicators configured")
    records = [r for r in runtime.scores() if r.indicator_name in count_names]
    out = _out_dir(cfg)
    path = out / "counts.csv"
    write_csv(path, ["doc_id", "date", "channel", "indicator", "value"],
              _score_rows(records), force=force)
    return [path]


def cmd_series(cfg: RunConfig, force: bool = False) -> list[Path]:
    """Write panel_<frequency>.csv: indicator series plus external series.

    External series coarser than the configured frequency cannot be bucketed
    onto the grid and are skipped with a warning.
    """
    runtime = Runtime(cfg)
    series = [runtime.series(spec.name) for spec in cfg.indicators]
    for spec in cfg.external:
        if can_resample(spec.frequency, cfg.frequency):
            series.append(runtime.series(spec.name))
        else:
            warnings.warn(f"series {spec.name!r} is {spec.frequency}; "
                          f"not representable on the {cfg.frequency} grid, skipped")
    panel = align(series, cfg.frequency, join="outer")
    out = _out_dir(cfg)
    path = out / f"panel_{cfg.frequency}.csv"
    if not force and path.exists():
        raise ToolkitError(f"refusing to overwrite {path}; pass --force to allow")
    panel.dump(path)
    return [path]


def _slice_corpus(corpus: Corpus, spec: SliceSpec, min_count: int) -> Corpus:
    wanted = set(spec.channels)
    docs = [d for d in corpus.documents if d.channel in wanted]
    sliced = Corpus(documents=docs, tokenized={d.id: corpus.tokenized[d.id] for d in docs})
    return build_vocab(sliced, min_count)


def _load_stopwords(path: Path | None) -> frozenset[str]:
    if path is None:
        return frozenset()
    return frozenset(w.strip().lower() for w in path.read_text(encoding="utf-8").split() if w.strip())


def cmd_topics(cfg: RunConfig, force: bool = False) -> list[Path]:
    """Fit LDA per configured slice; dump phi/theta, coherence, and period KL."""
    if cfg.topics is None:
        raise ConfigError("topics: section required for this command")
    tcfg = cfg.topics
    if tcfg.seed is None:
        raise ConfigError("topics.seed: required when topics are requested")
    runtime = Runtime(cfg)
    corpus = runtime.corpus()
    stop_words = _load_stopwords(tcfg.stop_words)
    out = _out_dir(cfg)
    paths: list[Path] = []
    period_rows: list[list[object]] = []
    kl_rows: list[list[object]] = []

    for spec in tcfg.slices:
        sliced = _slice_corpus(corpus, spec, cfg.min_count)
        if not sliced.documents:
            raise ToolkitError(f"topic slice {spec.name!r} selects no documents")
        model = fit_lda(sliced, K=spec.k, alpha=tcfg.alpha, beta=tcfg.beta,
                        iterations=tcfg.iterations, seed=tcfg.seed, stop_words=stop_words)
        slice_dir = out / "topics" / spec.name
        slice_dir.mkdir(parents=True, exist_ok=True)
        inv = {i: t for t, i in model.vocab.items()}
        phi_path = slice_dir / "phi.csv"
        write_csv(phi_path, ["topic", "word", "prob"],
                  ([k, inv[t], float(model.phi[k, t])]
                   for k in range(model.K) for t in range(len(inv))),
                  force=force)
        theta_path = slice_dir / "theta.csv"
        write_csv(theta_path, ["doc_id", "topic", "prob"],
                  ([doc_id, k, float(model.theta[i, k])]
                   for i, doc_id in enumerate(model.doc_ids) for k in range(model.K)),
                  force=force)
        report = npmi_coherence(model, sliced, top_n=tcfg.top_n)
        coher_path = slice_dir / "coherence.csv"
        write_csv(coher_path, ["topic", "npmi", "top_words"],
                  ([k, report.npmi[k], " ".join(report.top_words[k])] for k in range(model.K)),
                  force=force)
        paths.extend([phi_path, theta_path, coher_path])

        distributions = {}
        for window in tcfg.windows:
            try:
                dist = period_topic_distribution(model, sliced, (window.start, window.end),
                                                 label=window.label)
            except ValueError:
                continue  # window empty for this slice
            distributions[window.label] = dist
            for k in range(model.K):
                period_rows.append([spec.name, window.label, k,
                                    tcfg.labels.get(k, f"topic_{k}"), float(dist.probs[k])])
        labels = [w.label for w in tcfg.windows if w.label in distributions]
        for a in labels:
            for b in labels:
                if a == b:
                    continue
                kl = kl_divergence(distributions[a].probs, distributions[b].probs)
                if tcfg.permutation_test:
                    wa = next(w for w in tcfg.windows if w.label == a)
                    wb = next(w for w in tcfg.windows if w.label == b)
                    _, p = kl_permutation_test(model, sliced, (wa.start, wa.end),
                                               (wb.start, wb.end),
                                               n_permutations=tcfg.n_permutations, seed=tcfg.seed)
                    kl_rows.append([spec.name, a, b, kl, p])
                else:
                    kl_rows.append([spec.name, a, b, kl, ""])

    if period_rows:
        path = out / "period_topics.csv"
        write_csv(path, ["slice", "window", "topic", "topic_label", "prob"], period_rows,
                  force=force)
        paths.append(path)
    if kl_rows:
        path = out / "period_kl.csv"
        write_csv(path, ["slice", "window_a", "window_b", "kl", "p_value"], kl_rows,
                  force=force)
        paths.append(path)
    return paths


def _econ_panel(runtime: Runtime) -> AlignedPanel:
    cfg = runtime.cfg
    if not cfg.econ.variables:
        raise ConfigError("econ.variables: required for this command")
    series = [runtime.econ_series(name) for name in cfg.econ.variables]
    return align(series, cfg.frequency, join="inner")


def cmd_econ(cfg: RunConfig, force: bool = False) -> list[Path]:
    """Unit-root tests, BIC lag selection, VAR, Granger pairs, break scan."""
    runtime = Runtime(cfg)
    out = _out_dir(cfg)
    paths: list[Path] = []
    panel = _econ_panel(runtime)
    _, matrix = panel.complete_rows()

    unit_rows = []
    for j, name in enumerate(panel.names):
        col = matrix[:, j]
        for result in (adf_test(col, cfg.econ.adf_max_lag), kpss_test(col)):
            unit_rows.append([name, result.test, result.statistic, result.lags_used,
                              result.p_band, result.reject_at_5pct])
    path = out / "unit_root.csv"
    write_csv(path, ["variable", "test", "statistic", "lags", "p_band", "reject_at_5pct"],
              unit_rows, force=force)
    paths.append(path)

    lag = select_lag_bic(panel, cfg.econ.p_max)
    model = fit_var(panel, lag)
    path = out / "var_report.csv"
    write_csv(path, ["dependent", "independent", "coefficient", "std_error", "t", "p"],
              model.report_rows(), force=force)
    paths.append(path)

    granger_rows = []
    for cause, effect in cfg.econ.granger.pairs:
        pair_series = [runtime.econ_series(cause), runtime.econ_series(effect)]
        pair_panel = align(pair_series, cfg.frequency, join="inner")
        k = select_lag_bic(pair_panel, cfg.econ.granger.p_max)
        result = granger_test(pair_panel, cause, effect, k, scope=cfg.econ.granger.scope)
        granger_rows.append([result.cause, result.effect, result.lag, result.F,
                             result.df_num, result.df_den, result.p_value])
    if granger_rows:
        path = out / "granger.csv"
        write_csv(path, ["cause", "effect", "lag", "F", "df_num", "df_den", "p"],
                  granger_rows, force=force)
        paths.append(path)

    break_rows = []
    magnitudes: dict[str, list[float]] = {}
    for window in cfg.econ.breaks.windows:
        for name in cfg.econ.breaks.series:
            series = runtime.econ_series(name)
            points = [(d, v) for d, v in series.points if window.start <= d <= window.end]
            sliced = TimeSeries(name=name, points=points, frequency=series.frequency)
            result = detect_break(sliced, trim=cfg.econ.breaks.trim)
            magnitudes.setdefault(window.label, []).append(result.magnitude)
            break_rows.append([window.label, name, result.break_date.isoformat(),
                               result.sup_statistic, result.pre_mean, result.post_mean,
                               result.magnitude, result.significant_at_5pct])
    if break_rows:
        path = out / "breaks.csv"
        write_csv(path, ["window", "series", "break_date", "sup_statistic", "pre_mean",
                         "post_mean", "magnitude", "significant_at_5pct"],
                  break_rows, force=force)
        paths.append(path)

    compare_rows = []
    for label_a, label_b in cfg.econ.breaks.compare:
        t, p = compare_break_magnitudes(magnitudes[label_a], magnitudes[label_b])
        compare_rows.append([label_a, label_b, len(magnitudes[label_a]),
                             len(magnitudes[label_b]), t, p])
    if compare_rows:
        path = out / "break_comparison.csv"
        write_csv(path, ["window_a", "window_b", "n_a", "n_b", "t", "p"],
                  compare_rows, force=force)
        paths.append(path)
    return paths


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def cmd_report(cfg: RunConfig, force: bool = False) -> list[Path]:
    """Write the plot-ready figure bundle plus a machine-readable run manifest."""
    runtime = Runtime(cfg)
    out = _out_dir(cfg)
    windows = runtime.recession_windows()
    records = runtime.scores()
    paths: list[Path] = []

    def write_panel(filename: str, panel: AlignedPanel) -> None:
        path = out / filename
        write_csv(path, ["date"] + panel.names + ["recession"], _panel_rows(panel, windows),
                  force=force)
        paths.append(path)

    def merged(names: Sequence[str], channels=None) -> AlignedPanel:
        return align([runtime.series(n, channels=channels) for n in names],
                     cfg.frequency, join="outer")

    # Figure 1 family: sentiment indicator series per channel plus merged.
    sentiment_names = [spec.name for spec in cfg.indicators if spec.kind != "term_count"]
    fig1_rows: list[list[object]] = []
    for channel in list(CHANNEL_ORDER) + [None]:
        channel_label = channel.value if channel else "All"
        channel_filter = [channel] if channel else None
        for name in sentiment_names:
            try:
                series = runtime.series(name, channels=channel_filter)
            except ValueError:
                continue  # channel has no documents
            for date, value in series.points:
                fig1_rows.append([date.isoformat(), channel_label, name, value,
                                  1 if in_recession(date, windows) else 0])
    path = out / "fig1_sentiment.csv"
    write_csv(path, ["date", "channel", "indicator", "value", "recession"], fig1_rows,
              force=force)
    paths.append(path)

    # Topic figures need fitted models per slice.
    if cfg.topics is None:
        raise ConfigError("topics: section required for the report command")
    tcfg = cfg.topics
    if tcfg.seed is None:
        raise ConfigError("topics.seed: required when topics are requested")
    corpus = runtime.corpus()
    stop_words = _load_stopwords(tcfg.stop_words)
    models = {}
    slice_corpora = {}
    for spec in tcfg.slices:
        sliced = _slice_corpus(corpus, spec, cfg.min_count)
        if not sliced.documents:
            raise ToolkitError(f"topic slice {spec.name!r} selects no documents")
        slice_corpora[spec.name] = sliced
        models[spec.name] = fit_lda(sliced, K=spec.k, alpha=tcfg.alpha, beta=tcfg.beta,
                                    iterations=tcfg.iterations, seed=tcfg.seed,
                                    stop_words=stop_words)

    announcement_slices = [s for s in tcfg.slices if s.channels == [Channel.ANNOUNCEMENT]]
    fig3_slice = announcement_slices[0] if announcement_slices else tcfg.slices[0]
    model = models[fig3_slice.name]
    dates = {d.id: d.date for d in slice_corpora[fig3_slice.name].documents}
    fig3_rows = []
    for i, doc_id in enumerate(model.doc_ids):
        for k in range(model.K):
            fig3_rows.append([doc_id, dates[doc_id].isoformat(), k,
                              tcfg.labels.get(k, f"topic_{k}"), float(model.theta[i, k])])
    path = out / "fig3_topics.csv"
    write_csv(path, ["doc_id", "date", "topic", "topic_label", "prob"], fig3_rows,
              force=force)
    paths.append(path)

    fig4_rows = []
    for spec in tcfg.slices:
        model = models[spec.name]
        sliced = slice_corpora[spec.name]
        buckets: dict[dt.date, list[int]] = {}
        for i, doc in enumerate(sliced.documents):
            buckets.setdefault(period_start(doc.date, "monthly"), []).append(i)
        for month in sorted(buckets):
            rows = buckets[month]
            mean = model.theta[rows].mean(axis=0)
            for k in range(model.K):
                fig4_rows.append([spec.name, month.isoformat(), k,
                                  tcfg.labels.get(k, f"topic_{k}"), float(mean[k])])
    path = out / "fig4_topic_trends.csv"
    write_csv(path, ["slice", "date", "topic", "topic_label", "prob"], fig4_rows,
              force=force)
    paths.append(path)

    # Word-count figures per channel plus merged.
    def counts_figure(filename: str, indicator: str, overlay: str) -> None:
        rows: list[list[object]] = []
        overlay_lookup = dict(runtime.series(overlay).points)
        for channel in list(CHANNEL_ORDER) + [None]:
            channel_label = channel.value if channel else "All"
            try:
                series = runtime.series(indicator, channels=[channel] if channel else None)
            except ValueError:
                continue
            for date, value in series.points:
                cell = overlay_lookup.get(date)
                rows.append([date.isoformat(), channel_label, value,
                             "" if cell is None else cell,
                             1 if in_recession(date, windows) else 0])
        path = out / filename
        write_csv(path, ["date", "channel", indicator, overlay, "recession"], rows,
                  force=force)
        paths.append(path)

    counts_figure("fig5_ump_counts.csv", "ump_terms", "fed_assets")
    counts_figure("fig6_covid_counts.csv", "covid_terms", "covid_cases")

    write_panel("fig7_covid_ump_vix.csv",
                merged(["covid_terms", "ump_terms", "covid_cases", "vix"]))
    write_panel("fig8_covid_ump_uncertainty.csv",
                merged(["covid_terms", "ump_terms", "lm_uncertainty", "covid_cases"]))
    write_panel("fig9_covid_ump_fss.csv",
                merged(["covid_terms", "ump_terms", "fss_score", "covid_cases"]))
    write_panel("fig10_fss_announcements.csv",
                merged(["fss_score", "ump_terms", "lm_uncertainty", "vix"],
                       channels=[Channel.ANNOUNCEMENT]))
    write_panel("fig11_fss_minutes.csv",
                merged(["fss_score", "ump_terms", "lm_uncertainty", "vix"],
                       channels=[Channel.MINUTES]))
    write_panel("fig13_financial_stability.csv",
                merged(["fss_score", "ump_terms", "lm_uncertainty", "vix", "ffr"]))
    write_panel("fig14_fss_neer.csv",
                merged(["fss_score", "ump_terms", "lm_uncertainty", "neer", "ffr"],
                       channels=[Channel.ANNOUNCEMENT]))

    if not cfg.aggregate_indicators:
        raise ConfigError("aggregate.indicators: required for the report command")
    agg = aggregate_sentiment(records, cfg.aggregate_indicators, cfg.channel_weights or None,
                              frequency="monthly")
    unemployment = runtime.series("unemployment", frequency="monthly")
    fig15 = align([agg, unemployment], "monthly", join="outer")
    write_panel("fig15_sentiment_unemployment.csv", fig15)

    manifest = {
        "command": "report",
        "package_version": __version__,
        "python_version": ".".join(str(v) for v in sys.version_info[:2]),
        "seed": cfg.seed,
        "topics_seed": cfg.topics.seed,
        "frequency": cfg.frequency,
        "inputs": _input_digests(cfg),
        "outputs": sorted(p.name for p in paths),
    }
    manifest_path = out / "run_manifest.json"
    if not force and manifest_path.exists():
        raise ToolkitError(f"refusing to overwrite {manifest_path}; pass --force to allow")
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n",
                             encoding="utf-8")
    paths.append(manifest_path)
    return paths


def _input_digests(cfg: RunConfig) -> dict[str, str]:
    files: list[Path] = [cfg.manifest]
    for section in cfg.lexicons.values():
        files.extend(section.values())
    if cfg.shifters is not None:
        files.append(cfg.shifters)
    for spec in cfg.external:
        files.append(spec.path)
    if cfg.recessions is not None:
        files.append(cfg.recessions)
    if cfg.topics is not None and cfg.topics.stop_words is not None:
        files.append(cfg.topics.stop_words)
    return {f"{path.parent.name}/{path.name}": _sha256(path) for path in sorted(set(files))}


COMMANDS = {
    "ingest": cmd_ingest,
    "score": cmd_score,
    "topics": cmd_topics,
    "counts": cmd_counts,
    "series": cmd_series,
    "econ": cmd_econ,
    "report": cmd_report,
}
