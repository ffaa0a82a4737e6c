"""Lexicon loading and matching against token streams.

Four dictionary shapes are supported:

* term lexicons (``.lex``): one phrase per line, 1..4 tokens, a trailing
  ``*`` on the final token switches that token to prefix matching;
* sentiment lexicons: ``word,class`` lines with class in
  {positive, negative, uncertainty};
* weighted lexicons: ``word,weight`` lines with weight in [-1, 1];
* valence shifter tables: ``word,kind[,value]`` lines with kind in
  {negator, amplifier, deamplifier}.

Term matching is greedy left-to-right longest-match: a token consumed by a
multi-token phrase cannot also count for a shorter entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .corpus import TokenizedDocument
from .errors import DataError

DEFAULT_AMPLIFIER_BOOST = 0.8
DEFAULT_DEAMPLIFIER_DAMP = 0.5
MAX_PATTERN_TOKENS = 4


@dataclass(frozen=True)
class LexEntry:
    pattern: tuple[str, ...]
    prefix: bool  # prefix matching on the final token


@dataclass(frozen=True)
class MatchResult:
    count: int
    spans: tuple[tuple[int, int], ...]  # (token_start, token_len), sorted, non-overlapping


@dataclass
class TermLexicon:
    name: str
    entries: list[LexEntry]
    _by_first: dict[str, list[LexEntry]] = field(init=False, repr=False)
    _prefixes: list[str] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not self.entries:
            raise DataError(f"term lexicon {self.name!r} has no entries")
        by_first: dict[str, list[LexEntry]] = {}
        prefixes: list[str] = []
        for entry in self.entries:
            if len(entry.pattern) == 1 and entry.prefix:
                prefixes.append(entry.pattern[0])
            else:
                by_first.setdefault(entry.pattern[0], []).append(entry)
        for candidates in by_first.values():
            candidates.sort(key=lambda e: -len(e.pattern))
        self._by_first = by_first
        self._prefixes = sorted(prefixes)

    def match_length_at(self, tokens: tuple[str, ...], i: int) -> int:
        """Longest entry length matching at position ``i`` (0 if none)."""
        n = len(tokens)
        for entry in self._by_first.get(tokens[i], ()):
            pattern = entry.pattern
            length = len(pattern)
            if i + length > n:
                continue
            if all(tokens[i + j] == pattern[j] for j in range(length - 1)):
                last = tokens[i + length - 1]
                if (last.startswith(pattern[-1]) if entry.prefix else last == pattern[-1]):
                    return length
        token = tokens[i]
        for prefix in self._prefixes:
            if token.startswith(prefix):
                return 1
        return 0


@dataclass
class SentimentLexicon:
    name: str
    positive: frozenset[str]
    negative: frozenset[str]
    uncertainty: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        overlap = self.positive & self.negative
        if overlap:
            raise DataError(f"sentiment lexicon {self.name!r}: words in both classes: {sorted(overlap)[:5]}")


@dataclass
class WeightedLexicon:
    name: str
    weights: dict[str, float]

    def __post_init__(self) -> None:
        bad = {w: v for w, v in self.weights.items() if not -1.0 <= v <= 1.0}
        if bad:
            raise DataError(f"weighted lexicon {self.name!r}: weights outside [-1, 1]: {sorted(bad)[:5]}")


@dataclass
class ValenceShifterTable:
    negators: frozenset[str]
    amplifiers: dict[str, float]  # word -> boost > 0
    deamplifiers: dict[str, float]  # word -> damp in (0, 1]

    def __post_init__(self) -> None:
        keys = [self.negators, set(self.amplifiers), set(self.deamplifiers)]
        for i in range(3):
            for j in range(i + 1, 3):
                overlap = keys[i] & keys[j]
                if overlap:
                    raise DataError(f"shifter table: words in two kinds: {sorted(overlap)[:5]}")


def load_term_lexicon(path: str | Path, name: str | None = None) -> TermLexicon:
    """Parse a ``.lex`` file; trailing ``*`` marks prefix match on the final token."""
    path = Path(path)
    entries: list[LexEntry] = []
    seen: set[tuple[str, ...]] = set()
    for lineno, raw in enumerate(_read_lines(path), start=1):
        line = raw.strip().lower()
        if not line:
            raise DataError(f"{path}:{lineno}: empty entry")
        prefix = line.endswith("*")
        if prefix:
            line = line[:-1]
        if "*" in line:
            raise DataError(f"{path}:{lineno}: '*' is only allowed at the end of the final token")
        pattern = tuple(line.split())
        if not pattern or not all(pattern):
            raise DataError(f"{path}:{lineno}: empty entry")
        if len(pattern) > MAX_PATTERN_TOKENS:
            raise DataError(f"{path}:{lineno}: pattern longer than {MAX_PATTERN_TOKENS} tokens")
        if pattern in seen:
            raise DataError(f"{path}:{lineno}: duplicate pattern {' '.join(pattern)!r}")
        seen.add(pattern)
        entries.append(LexEntry(pattern=pattern, prefix=prefix))
    if not entries:
        raise DataError(f"{path}: empty lexicon file")
    return TermLexicon(name=name or path.stem, entries=entries)


def load_sentiment_lexicon(path: str | Path, name: str | None = None) -> SentimentLexicon:
    """Parse ``word,class`` lines, class in {positive, negative, uncertainty}."""
    path = Path(path)
    classes: dict[str, set[str]] = {"positive": set(), "negative": set(), "uncertainty": set()}
    for lineno, raw in enumerate(_read_lines(path), start=1):
        parts = [p.strip().lower() for p in raw.strip().split(",")]
        if len(parts) != 2 or not parts[0]:
            raise DataError(f"{path}:{lineno}: expected 'word,class'")
        word, cls = parts
        if cls not in classes:
            raise DataError(f"{path}:{lineno}: unknown class {cls!r}")
        classes[cls].add(word)
    return SentimentLexicon(
        name=name or path.stem,
        positive=frozenset(classes["positive"]),
        negative=frozenset(classes["negative"]),
        uncertainty=frozenset(classes["uncertainty"]),
    )


def load_weighted_lexicon(path: str | Path, name: str | None = None) -> WeightedLexicon:
    """Parse ``word,weight`` lines with weight in [-1, 1]."""
    path = Path(path)
    weights: dict[str, float] = {}
    for lineno, raw in enumerate(_read_lines(path), start=1):
        parts = [p.strip() for p in raw.strip().split(",")]
        if len(parts) != 2 or not parts[0]:
            raise DataError(f"{path}:{lineno}: expected 'word,weight'")
        try:
            value = float(parts[1])
        except ValueError as exc:
            raise DataError(f"{path}:{lineno}: bad weight {parts[1]!r}") from exc
        if not -1.0 <= value <= 1.0:
            raise DataError(f"{path}:{lineno}: weight {value} outside [-1, 1]")
        weights[parts[0].lower()] = value
    if not weights:
        raise DataError(f"{path}: empty lexicon file")
    return WeightedLexicon(name=name or path.stem, weights=weights)


def load_shifters(path: str | Path) -> ValenceShifterTable:
    """Parse ``word,kind[,value]`` lines into a valence shifter table.

    Amplifiers default to boost 0.8 and deamplifiers to damp 0.5 when no
    per-word value is supplied.
    """
    path = Path(path)
    negators: set[str] = set()
    amplifiers: dict[str, float] = {}
    deamplifiers: dict[str, float] = {}
    for lineno, raw in enumerate(_read_lines(path), start=1):
        parts = [p.strip() for p in raw.strip().split(",")]
        if len(parts) not in (2, 3) or not parts[0]:
            raise DataError(f"{path}:{lineno}: expected 'word,kind[,value]'")
        word, kind = parts[0].lower(), parts[1].lower()
        value_text = parts[2] if len(parts) == 3 else None
        if kind == "negator":
            if value_text is not None:
                raise DataError(f"{path}:{lineno}: negator takes no value")
            negators.add(word)
        elif kind in ("amplifier", "deamplifier"):
            if value_text is None:
                value = DEFAULT_AMPLIFIER_BOOST if kind == "amplifier" else DEFAULT_DEAMPLIFIER_DAMP
            else:
                try:
                    value = float(value_text)
                except ValueError as exc:
                    raise DataError(f"{path}:{lineno}: bad value {value_text!r}") from exc
            if kind == "amplifier" and value <= 0:
                raise DataError(f"{path}:{lineno}: amplifier boost must be > 0")
            if kind == "deamplifier" and not 0 < value <= 1:
                raise DataError(f"{path}:{lineno}: deamplifier damp must be in (0, 1]")
            (amplifiers if kind == "amplifier" else deamplifiers)[word] = value
        else:
            raise DataError(f"{path}:{lineno}: unknown kind {kind!r}")
    return ValenceShifterTable(
        negators=frozenset(negators), amplifiers=amplifiers, deamplifiers=deamplifiers
    )


def match_terms(doc: TokenizedDocument, lex: TermLexicon) -> MatchResult:
    """Greedy left-to-right longest-match of ``lex`` phrases in ``doc``."""
    tokens = doc.tokens
    spans: list[tuple[int, int]] = []
    i = 0
    n = len(tokens)
    while i < n:
        length = lex.match_length_at(tokens, i)
        if length:
            spans.append((i, length))
            i += length
        else:
            i += 1
    return MatchResult(count=len(spans), spans=tuple(spans))


def match_sentiment(
    doc: TokenizedDocument, lex: SentimentLexicon
) -> tuple[MatchResult, MatchResult, MatchResult]:
    """Unigram exact matching per class; each token matches at most one class.

    When a word appears in both uncertainty and a polarity class the polarity
    class wins (priority positive > negative > uncertainty).
    """
    hits: dict[str, list[tuple[int, int]]] = {"positive": [], "negative": [], "uncertainty": []}
    for i, token in enumerate(doc.tokens):
        if token in lex.positive:
            hits["positive"].append((i, 1))
        elif token in lex.negative:
            hits["negative"].append((i, 1))
        elif token in lex.uncertainty:
            hits["uncertainty"].append((i, 1))
    return tuple(  # type: ignore[return-value]
        MatchResult(count=len(spans), spans=tuple(spans))
        for spans in (hits["positive"], hits["negative"], hits["uncertainty"])
    )


def builtin_lexicon_path(name: str) -> Path:
    """Path of a lexicon file shipped with the package (e.g. 'ump_terms')."""
    candidate = Path(__file__).parent / "data" / f"{name}.lex"
    if not candidate.is_file():
        candidate = Path(__file__).parent / "data" / f"{name}.txt"
    if not candidate.is_file():
        raise DataError(f"no builtin lexicon named {name!r}")
    return candidate


def _read_lines(path: Path) -> list[str]:
    if not path.is_file():
        raise DataError(f"lexicon file not found: {path}")
    text = path.read_text(encoding="utf-8")
    lines = text.splitlines()
    if not any(line.strip() for line in lines):
        raise DataError(f"{path}: empty lexicon file")
    return lines
