"""Corpus loading, normalization, and tokenization for dated communications.

Documents arrive as plain-text files listed in a comma-separated manifest
(``id,channel,date,filename``). Tokenization lowercases, keeps digits and
internal hyphens (so "sars-cov" survives as one token), splits on all other
punctuation, and marks sentence boundaries at '.', '!', '?', ';' followed by
whitespace or end of text.
"""

from __future__ import annotations

import csv
import datetime as dt
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from ._util import map_ordered
from .errors import DataError

MANIFEST_COLUMNS = ("id", "channel", "date", "filename")


class Channel(Enum):
    ANNOUNCEMENT = "Announcement"
    MINUTES = "Minutes"
    SPEECH = "Speech"

    @classmethod
    def parse(cls, text: str) -> "Channel":
        wanted = text.strip().lower()
        for member in cls:
            if member.value.lower() == wanted:
                return member
        raise ValueError(f"unknown channel {text!r}")


@dataclass(frozen=True)
class Document:
    id: str
    channel: Channel
    date: dt.date
    raw_text: str


@dataclass(frozen=True)
class TokenizedDocument:
    doc_id: str
    tokens: tuple[str, ...]
    sentence_spans: tuple[tuple[int, int], ...]


@dataclass
class TokenizerRules:
    """Normalization knobs; defaults implement the documented convention."""

    sentence_breaks: str = ".!?;"


@dataclass
class Corpus:
    documents: list[Document] = field(default_factory=list)
    tokenized: dict[str, TokenizedDocument] = field(default_factory=dict)
    vocab: dict[str, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.documents)

    def document(self, doc_id: str) -> Document:
        for doc in self.documents:
            if doc.id == doc_id:
                return doc
        raise KeyError(doc_id)


def load_corpus(
    root_path: str | Path,
    manifest_path: str | Path,
    sample_window: tuple[dt.date, dt.date] | None = None,
) -> Corpus:
    """Read the manifest and one text file per row; tokenization is separate.

    Fatal conditions: missing/duplicate manifest columns, duplicate document
    ids, unknown channel strings, unparseable dates, dates outside
    ``sample_window``, and missing text files. Errors name the offending row.
    """
    root = Path(root_path)
    manifest = Path(manifest_path)
    if not manifest.is_file():
        raise DataError(f"manifest not found: {manifest}")
    documents: list[Document] = []
    seen_ids: set[str] = set()
    with open(manifest, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [c for c in MANIFEST_COLUMNS if c not in header]
        if missing:
            raise DataError(f"{manifest}: manifest missing columns {missing}")
        for lineno, row in enumerate(reader, start=2):
            doc_id = (row["id"] or "").strip()
            if not doc_id:
                raise DataError(f"{manifest}:{lineno}: empty document id")
            if doc_id in seen_ids:
                raise DataError(f"{manifest}:{lineno}: duplicate document id {doc_id!r}")
            seen_ids.add(doc_id)
            try:
                channel = Channel.parse(row["channel"] or "")
            except ValueError as exc:
                raise DataError(f"{manifest}:{lineno}: {exc}") from exc
            try:
                date = dt.date.fromisoformat((row["date"] or "").strip())
            except ValueError as exc:
                raise DataError(f"{manifest}:{lineno}: bad date {row['date']!r} (expected YYYY-MM-DD)") from exc
            if sample_window is not None and not (sample_window[0] <= date <= sample_window[1]):
                raise DataError(
                    f"{manifest}:{lineno}: date {date.isoformat()} outside sample window "
                    f"{sample_window[0].isoformat()}..{sample_window[1].isoformat()}"
                )
            text_path = root / (row["filename"] or "").strip()
            if not text_path.is_file():
                raise DataError(f"{manifest}:{lineno}: text file not found: {text_path}")
            raw_text = text_path.read_text(encoding="utf-8")
            documents.append(Document(id=doc_id, channel=channel, date=date, raw_text=raw_text))
    return Corpus(documents=documents)


def tokenize(doc: Document, rules: TokenizerRules | None = None) -> TokenizedDocument:
    """Lowercase and split ``doc.raw_text`` into tokens and sentence spans.

    Word characters are alphanumerics plus '-'; leading/trailing hyphens are
    stripped so "--x--" yields "x" and bare runs of hyphens vanish. Sentence
    spans partition [0, len(tokens)); sentences that contain no tokens are
    dropped.
    """
    rules = rules or TokenizerRules()
    breaks = set(rules.sentence_breaks)
    text = doc.raw_text.lower()
    n = len(text)
    tokens: list[str] = []
    spans: list[tuple[int, int]] = []
    sent_start = 0
    word: list[str] = []

    def flush() -> None:
        if word:
            token = "".join(word).strip("-")
            word.clear()
            if token:
                tokens.append(token)

    for i, ch in enumerate(text):
        if ch.isalnum() or ch == "-":
            word.append(ch)
            continue
        flush()
        if ch in breaks and (i + 1 == n or text[i + 1].isspace()):
            if len(tokens) > sent_start:
                spans.append((sent_start, len(tokens)))
                sent_start = len(tokens)
    flush()
    if len(tokens) > sent_start:
        spans.append((sent_start, len(tokens)))
    return TokenizedDocument(doc_id=doc.id, tokens=tuple(tokens), sentence_spans=tuple(spans))


def tokenize_corpus(corpus: Corpus, rules: TokenizerRules | None = None) -> Corpus:
    """Tokenize every document in place (parallel-safe, order-preserving)."""
    results = map_ordered(lambda doc: tokenize(doc, rules), corpus.documents)
    corpus.tokenized = {td.doc_id: td for td in results}
    return corpus


def build_vocab(corpus: Corpus, min_count: int = 1) -> Corpus:
    """Assign dense ids to tokens with corpus frequency >= min_count.

    Ids follow descending frequency, ties broken lexicographically.
    """
    missing = [doc.id for doc in corpus.documents if doc.id not in corpus.tokenized]
    if missing:
        raise DataError(f"cannot build vocab; documents not tokenized: {missing[:5]}")
    counts: Counter[str] = Counter()
    for doc in corpus.documents:
        counts.update(corpus.tokenized[doc.id].tokens)
    kept = sorted(
        (token for token, c in counts.items() if c >= min_count),
        key=lambda token: (-counts[token], token),
    )
    corpus.vocab = {token: i for i, token in enumerate(kept)}
    return corpus
