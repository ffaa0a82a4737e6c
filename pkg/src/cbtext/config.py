"""Run configuration: one YAML file drives every pipeline subcommand.

Validation is strict: unknown keys, missing files, and type mismatches raise
:class:`ConfigError` with the dotted field path, which the CLI maps to exit
code 2. Lexicon paths may use the ``builtin:`` prefix to reference files
shipped with the package (``builtin:ump_terms``, ``builtin:covid_terms``,
``builtin:stopwords``).
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

import yaml

from .corpus import Channel
from .errors import ConfigError
from .lexicon import builtin_lexicon_path
from .sentiment import INDICATOR_KINDS
from .timeseries import DOWNSAMPLE_POLICIES, FREQUENCIES

KIND_SECTIONS = {
    "ratio": ("sentiment",),
    "net": ("sentiment",),
    "uncertainty": ("sentiment",),
    "polarity": ("sentiment", "weighted"),
    "term_count": ("terms",),
}


@dataclass
class IndicatorSpec:
    name: str
    kind: str
    lexicon: str


@dataclass
class ExternalSeriesSpec:
    name: str
    path: Path
    date_col: str = "date"
    value_col: str = "value"
    frequency: str = "daily"
    downsample: str = "mean"


@dataclass
class WindowSpec:
    label: str
    start: dt.date
    end: dt.date


@dataclass
class SliceSpec:
    name: str
    channels: list[Channel]
    k: int


@dataclass
class TopicsConfig:
    k: int = 6
    alpha: float | None = None
    beta: float = 0.01
    iterations: int = 2000
    seed: int | None = None
    top_n: int = 10
    stop_words: Path | None = None
    slices: list[SliceSpec] = field(default_factory=list)
    windows: list[WindowSpec] = field(default_factory=list)
    permutation_test: bool = False
    n_permutations: int = 1000
    labels: dict[int, str] = field(default_factory=dict)


@dataclass
class GrangerConfig:
    pairs: list[tuple[str, str]] = field(default_factory=list)
    scope: str = "bivariate"
    p_max: int = 4


@dataclass
class BreaksConfig:
    series: list[str] = field(default_factory=list)
    windows: list[WindowSpec] = field(default_factory=list)
    trim: float = 0.15
    compare: list[tuple[str, str]] = field(default_factory=list)


@dataclass
class EconConfig:
    variables: list[str] = field(default_factory=list)
    difference: list[str] = field(default_factory=list)
    p_max: int = 2
    adf_max_lag: int = 6
    granger: GrangerConfig = field(default_factory=GrangerConfig)
    breaks: BreaksConfig = field(default_factory=BreaksConfig)


@dataclass
class RunConfig:
    corpus_root: Path
    manifest: Path
    sample_window: tuple[dt.date, dt.date] | None
    lexicons: dict[str, dict[str, Path]]  # section -> key -> path
    shifters: Path | None
    indicators: list[IndicatorSpec]
    frequency: str
    aggregate_indicators: list[str]
    channel_weights: dict[Channel, float]
    external: list[ExternalSeriesSpec]
    topics: TopicsConfig | None
    econ: EconConfig
    recessions: Path | None
    output_dir: Path
    seed: int
    min_count: int = 1


def _require(mapping: Mapping[str, Any], key: str, path: str) -> Any:
    if key not in mapping:
        raise ConfigError(f"{path}.{key}: required field missing")
    return mapping[key]


def _check_keys(mapping: Mapping[str, Any], allowed: set[str], path: str) -> None:
    unknown = sorted(set(mapping) - allowed)
    if unknown:
        raise ConfigError(f"{path}.{unknown[0]}: unknown field")


def _as_mapping(value: Any, path: str) -> Mapping[str, Any]:
    if not isinstance(value, Mapping):
        raise ConfigError(f"{path}: expected a mapping")
    return value


def _as_date(value: Any, path: str) -> dt.date:
    if isinstance(value, dt.date):
        return value
    try:
        return dt.date.fromisoformat(str(value))
    except ValueError as exc:
        raise ConfigError(f"{path}: bad date {value!r}") from exc


def _as_int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{path}: expected an integer, got {value!r}")
    return value


def _resolve_path(value: Any, base: Path, path: str, must_exist: bool = True) -> Path:
    if not isinstance(value, str) or not value:
        raise ConfigError(f"{path}: expected a file path")
    if value.startswith("builtin:"):
        try:
            return builtin_lexicon_path(value[len("builtin:") :])
        except Exception as exc:
            raise ConfigError(f"{path}: {exc}") from exc
    resolved = (base / value).resolve() if not Path(value).is_absolute() else Path(value)
    if must_exist and not resolved.exists():
        raise ConfigError(f"{path}: file not found: {resolved}")
    return resolved


def _parse_window(raw: Any, path: str, with_label: bool) -> WindowSpec:
    mapping = _as_mapping(raw, path)
    allowed = {"start", "end"} | ({"label"} if with_label else set())
    _check_keys(mapping, allowed, path)
    start = _as_date(_require(mapping, "start", path), f"{path}.start")
    end = _as_date(_require(mapping, "end", path), f"{path}.end")
    if start > end:
        raise ConfigError(f"{path}: start after end")
    label = str(mapping.get("label", f"{start.isoformat()}..{end.isoformat()}"))
    return WindowSpec(label=label, start=start, end=end)


def load_config(
    config_path: str | Path,
    seed_override: int | None = None,
    out_override: str | None = None,
) -> RunConfig:
    """Parse and validate a YAML run configuration."""
    config_path = Path(config_path)
    if not config_path.is_file():
        raise ConfigError(f"config: file not found: {config_path}")
    base = config_path.parent
    try:
        raw = yaml.safe_load(config_path.read_text(encoding="utf-8"))
    except yaml.YAMLError as exc:
        raise ConfigError(f"config: not valid YAML: {exc}") from exc
    root = _as_mapping(raw, "config")
    _check_keys(
        root,
        {
            "corpus", "lexicons", "indicators", "frequency", "aggregate",
            "external", "topics", "econ", "recessions", "output_dir", "seed",
        },
        "config",
    )

    corpus_map = _as_mapping(_require(root, "corpus", "config"), "corpus")
    _check_keys(corpus_map, {"root", "manifest", "sample_window", "min_count"}, "corpus")
    corpus_root = _resolve_path(_require(corpus_map, "root", "corpus"), base, "corpus.root")
    manifest = _resolve_path(_require(corpus_map, "manifest", "corpus"), base, "corpus.manifest")
    sample_window = None
    if "sample_window" in corpus_map:
        w = _parse_window(corpus_map["sample_window"], "corpus.sample_window", with_label=False)
        sample_window = (w.start, w.end)
    min_count = _as_int(corpus_map.get("min_count", 1), "corpus.min_count")

    lex_map = _as_mapping(_require(root, "lexicons", "config"), "lexicons")
    _check_keys(lex_map, {"terms", "sentiment", "weighted", "shifters"}, "lexicons")
    lexicons: dict[str, dict[str, Path]] = {"terms": {}, "sentiment": {}, "weighted": {}}
    for section in ("terms", "sentiment", "weighted"):
        for key, value in _as_mapping(lex_map.get(section, {}), f"lexicons.{section}").items():
            lexicons[section][str(key)] = _resolve_path(value, base, f"lexicons.{section}.{key}")
    shifters = None
    if "shifters" in lex_map:
        shifters = _resolve_path(lex_map["shifters"], base, "lexicons.shifters")

    indicators: list[IndicatorSpec] = []
    raw_indicators = _require(root, "indicators", "config")
    if not isinstance(raw_indicators, list) or not raw_indicators:
        raise ConfigError("indicators: expected a non-empty list")
    seen_names: set[str] = set()
    for i, item in enumerate(raw_indicators):
        path = f"indicators[{i}]"
        mapping = _as_mapping(item, path)
        _check_keys(mapping, {"name", "kind", "lexicon"}, path)
        name = str(_require(mapping, "name", path))
        kind = str(_require(mapping, "kind", path))
        lexicon = str(_require(mapping, "lexicon", path))
        if name in seen_names:
            raise ConfigError(f"{path}.name: duplicate indicator {name!r}")
        seen_names.add(name)
        if kind not in INDICATOR_KINDS:
            raise ConfigError(f"{path}.kind: unknown kind {kind!r}")
        sections = KIND_SECTIONS[kind]
        if not any(lexicon in lexicons[s] for s in sections):
            raise ConfigError(
                f"{path}.lexicon: {lexicon!r} not found in lexicons.{' or lexicons.'.join(sections)}"
            )
        if kind == "polarity" and shifters is None:
            raise ConfigError(f"{path}: polarity indicators need lexicons.shifters")
        indicators.append(IndicatorSpec(name=name, kind=kind, lexicon=lexicon))

    frequency = str(root.get("frequency", "weekly"))
    if frequency not in FREQUENCIES:
        raise ConfigError(f"frequency: unknown frequency {frequency!r}")

    agg_map = _as_mapping(root.get("aggregate", {}), "aggregate")
    _check_keys(agg_map, {"indicators", "channel_weights"}, "aggregate")
    aggregate_indicators = [str(v) for v in agg_map.get("indicators", [])]
    for i, name in enumerate(aggregate_indicators):
        if name not in seen_names:
            raise ConfigError(f"aggregate.indicators[{i}]: unknown indicator {name!r}")
    channel_weights: dict[Channel, float] = {}
    for key, value in _as_mapping(agg_map.get("channel_weights", {}), "aggregate.channel_weights").items():
        try:
            channel = Channel.parse(str(key))
        except ValueError as exc:
            raise ConfigError(f"aggregate.channel_weights.{key}: {exc}") from exc
        channel_weights[channel] = float(value)

    external: list[ExternalSeriesSpec] = []
    for i, item in enumerate(root.get("external", []) or []):
        path = f"external[{i}]"
        mapping = _as_mapping(item, path)
        _check_keys(mapping, {"name", "path", "date_col", "value_col", "frequency", "downsample"}, path)
        spec = ExternalSeriesSpec(
            name=str(_require(mapping, "name", path)),
            path=_resolve_path(_require(mapping, "path", path), base, f"{path}.path"),
            date_col=str(mapping.get("date_col", "date")),
            value_col=str(mapping.get("value_col", "value")),
            frequency=str(mapping.get("frequency", "daily")),
            downsample=str(mapping.get("downsample", "mean")),
        )
        if spec.frequency not in FREQUENCIES:
            raise ConfigError(f"{path}.frequency: unknown frequency {spec.frequency!r}")
        if spec.downsample not in DOWNSAMPLE_POLICIES:
            raise ConfigError(f"{path}.downsample: unknown policy {spec.downsample!r}")
        if spec.name in seen_names or any(e.name == spec.name for e in external):
            raise ConfigError(f"{path}.name: duplicate series name {spec.name!r}")
        external.append(spec)
    series_names = seen_names | {e.name for e in external}

    topics_cfg: TopicsConfig | None = None
    if "topics" in root:
        tmap = _as_mapping(root["topics"], "topics")
        _check_keys(
            tmap,
            {"k", "alpha", "beta", "iterations", "seed", "top_n", "stop_words",
             "slices", "windows", "permutation_test", "n_permutations", "labels"},
            "topics",
        )
        topics_cfg = TopicsConfig(
            k=_as_int(tmap.get("k", 6), "topics.k"),
            alpha=float(tmap["alpha"]) if tmap.get("alpha") is not None else None,
            beta=float(tmap.get("beta", 0.01)),
            iterations=_as_int(tmap.get("iterations", 2000), "topics.iterations"),
            seed=_as_int(tmap["seed"], "topics.seed") if "seed" in tmap and tmap["seed"] is not None else None,
            top_n=_as_int(tmap.get("top_n", 10), "topics.top_n"),
            permutation_test=bool(tmap.get("permutation_test", False)),
            n_permutations=_as_int(tmap.get("n_permutations", 1000), "topics.n_permutations"),
        )
        if "stop_words" in tmap:
            topics_cfg.stop_words = _resolve_path(tmap["stop_words"], base, "topics.stop_words")
        for i, item in enumerate(tmap.get("slices", []) or []):
            path = f"topics.slices[{i}]"
            mapping = _as_mapping(item, path)
            _check_keys(mapping, {"name", "channels", "k"}, path)
            channels = []
            for j, ch in enumerate(_require(mapping, "channels", path)):
                try:
                    channels.append(Channel.parse(str(ch)))
                except ValueError as exc:
                    raise ConfigError(f"{path}.channels[{j}]: {exc}") from exc
            topics_cfg.slices.append(
                SliceSpec(
                    name=str(_require(mapping, "name", path)),
                    channels=channels,
                    k=_as_int(mapping.get("k", topics_cfg.k), f"{path}.k"),
                )
            )
        for i, item in enumerate(tmap.get("windows", []) or []):
            topics_cfg.windows.append(_parse_window(item, f"topics.windows[{i}]", with_label=True))
        for key, value in _as_mapping(tmap.get("labels", {}), "topics.labels").items():
            topics_cfg.labels[_as_int(key, "topics.labels")] = str(value)
        if not topics_cfg.slices:
            topics_cfg.slices.append(SliceSpec(name="all", channels=list(Channel), k=topics_cfg.k))

    econ_cfg = EconConfig()
    if "econ" in root:
        emap = _as_mapping(root["econ"], "econ")
        _check_keys(emap, {"variables", "difference", "p_max", "adf_max_lag", "granger", "breaks"}, "econ")
        econ_cfg.variables = [str(v) for v in emap.get("variables", [])]
        for i, name in enumerate(econ_cfg.variables):
            if name not in series_names:
                raise ConfigError(f"econ.variables[{i}]: unknown indicator or external series {name!r}")
        econ_cfg.difference = [str(v) for v in emap.get("difference", [])]
        for i, name in enumerate(econ_cfg.difference):
            if name not in series_names:
                raise ConfigError(f"econ.difference[{i}]: unknown indicator or external series {name!r}")
        econ_cfg.p_max = _as_int(emap.get("p_max", 2), "econ.p_max")
        econ_cfg.adf_max_lag = _as_int(emap.get("adf_max_lag", 6), "econ.adf_max_lag")
        if "granger" in emap:
            gmap = _as_mapping(emap["granger"], "econ.granger")
            _check_keys(gmap, {"pairs", "scope", "p_max"}, "econ.granger")
            for i, pair in enumerate(gmap.get("pairs", []) or []):
                if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                    raise ConfigError(f"econ.granger.pairs[{i}]: expected [cause, effect]")
                cause, effect = str(pair[0]), str(pair[1])
                for name in (cause, effect):
                    if name not in series_names:
                        raise ConfigError(f"econ.granger.pairs[{i}]: unknown series {name!r}")
                econ_cfg.granger.pairs.append((cause, effect))
            econ_cfg.granger.scope = str(gmap.get("scope", "bivariate"))
            if econ_cfg.granger.scope not in ("bivariate", "panel"):
                raise ConfigError(f"econ.granger.scope: unknown scope {econ_cfg.granger.scope!r}")
            econ_cfg.granger.p_max = _as_int(gmap.get("p_max", 4), "econ.granger.p_max")
        if "breaks" in emap:
            bmap = _as_mapping(emap["breaks"], "econ.breaks")
            _check_keys(bmap, {"series", "windows", "trim", "compare"}, "econ.breaks")
            econ_cfg.breaks.series = [str(v) for v in bmap.get("series", [])]
            for i, name in enumerate(econ_cfg.breaks.series):
                if name not in series_names:
                    raise ConfigError(f"econ.breaks.series[{i}]: unknown series {name!r}")
            for i, item in enumerate(bmap.get("windows", []) or []):
                econ_cfg.breaks.windows.append(_parse_window(item, f"econ.breaks.windows[{i}]", with_label=True))
            econ_cfg.breaks.trim = float(bmap.get("trim", 0.15))
            labels = {w.label for w in econ_cfg.breaks.windows}
            for i, pair in enumerate(bmap.get("compare", []) or []):
                if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                    raise ConfigError(f"econ.breaks.compare[{i}]: expected [window_a, window_b]")
                a, b = str(pair[0]), str(pair[1])
                for label in (a, b):
                    if label not in labels:
                        raise ConfigError(f"econ.breaks.compare[{i}]: unknown window label {label!r}")
                econ_cfg.breaks.compare.append((a, b))

    recessions = None
    if "recessions" in root and root["recessions"] is not None:
        recessions = _resolve_path(root["recessions"], base, "recessions")

    if "output_dir" not in root:
        raise ConfigError("output_dir: required field missing")
    out_dir = Path(out_override) if out_override else Path(str(root["output_dir"]))
    if not out_dir.is_absolute():
        out_dir = (base / out_dir) if out_override is None else out_dir

    seed = seed_override if seed_override is not None else root.get("seed")
    if seed is None:
        raise ConfigError("seed: required field missing")
    seed = _as_int(seed, "seed")
    if topics_cfg is not None and topics_cfg.seed is None:
        topics_cfg.seed = seed

    return RunConfig(
        corpus_root=corpus_root,
        manifest=manifest,
        sample_window=sample_window,
        lexicons=lexicons,
        shifters=shifters,
        indicators=indicators,
        frequency=frequency,
        aggregate_indicators=aggregate_indicators,
        channel_weights=channel_weights,
        external=external,
        topics=topics_cfg,
        econ=econ_cfg,
        recessions=recessions,
        output_dir=out_dir,
        seed=seed,
        min_count=min_count,
    )
