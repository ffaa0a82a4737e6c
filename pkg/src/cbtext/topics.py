"""LDA by collapsed Gibbs sampling with coherence and divergence diagnostics.

The sampler is single-threaded and fully seeded: a fixed (corpus, K, alpha,
beta, iterations, seed) tuple reproduces phi and theta bit for bit. Documents
are swept in corpus order, so permuting the manifest may change the draw.
"""

from __future__ import annotations

import datetime as dt
import random
import warnings
from dataclasses import dataclass
from math import log
from typing import Iterable, Sequence

import numpy as np

from .corpus import Corpus
from .errors import DataError

NPMI_EPS = 1e-12
KL_EPS = 1e-10
DEFAULT_BETA = 0.01
DEFAULT_ITERATIONS = 2000
DEFAULT_TOP_N = 10


@dataclass
class TopicModel:
    K: int
    alpha: float
    beta: float
    phi: np.ndarray  # K x V topic-word probabilities
    theta: np.ndarray  # D x K document-topic probabilities
    seed: int
    iterations: int
    doc_ids: list[str]
    vocab: dict[str, int]  # fit vocabulary: token -> phi column

    def doc_index(self, doc_id: str) -> int:
        try:
            return self.doc_ids.index(doc_id)
        except ValueError:
            raise KeyError(f"unknown document {doc_id!r}") from None


@dataclass
class CoherenceReport:
    npmi: list[float]  # one value per topic, in [-1, 1]
    top_words: list[list[str]]


@dataclass
class PeriodTopicDistribution:
    label: str
    probs: np.ndarray  # length K, sums to 1


def fit_lda(
    corpus: Corpus,
    K: int,
    alpha: float | None = None,
    beta: float = DEFAULT_BETA,
    iterations: int = DEFAULT_ITERATIONS,
    seed: int = 0,
    stop_words: Iterable[str] = (),
) -> TopicModel:
    """Collapsed Gibbs sampling; phi/theta come from the final-state counts.

    Stop words (and tokens outside the corpus vocab) are dropped from the fit
    vocabulary. alpha defaults to 50/K.
    """
    if K < 2:
        raise ValueError("K must be >= 2")
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    if not corpus.vocab:
        raise ValueError("corpus vocab not built; call build_vocab first")
    if K > len(corpus.documents):
        raise ValueError(f"K={K} exceeds document count {len(corpus.documents)}")
    if alpha is None:
        alpha = 50.0 / K
    if alpha <= 0 or beta <= 0:
        raise ValueError("alpha and beta must be positive")

    stop = set(stop_words)
    kept = [t for t, _ in sorted(corpus.vocab.items(), key=lambda kv: kv[1]) if t not in stop]
    vocab = {t: i for i, t in enumerate(kept)}
    V = len(vocab)
    if V < K:
        raise ValueError(f"usable vocabulary size {V} smaller than K={K}")

    doc_ids: list[str] = []
    docs: list[list[int]] = []
    for doc in corpus.documents:
        tokenized = corpus.tokenized.get(doc.id)
        if tokenized is None:
            raise DataError(f"document {doc.id!r} not tokenized")
        doc_ids.append(doc.id)
        docs.append([vocab[t] for t in tokenized.tokens if t in vocab])

    rng = random.Random(seed)
    D = len(docs)
    n_tk = [[0] * K for _ in range(V)]  # word-topic counts, indexed [term][topic]
    n_dk = [[0] * K for _ in range(D)]
    n_k = [0] * K
    assignments: list[list[int]] = []
    total_tokens = 0
    for d, tokens in enumerate(docs):
        z_d = []
        row_d = n_dk[d]
        for t in tokens:
            k = rng.randrange(K)
            z_d.append(k)
            n_tk[t][k] += 1
            row_d[k] += 1
            n_k[k] += 1
        assignments.append(z_d)
        total_tokens += len(tokens)

    beta_v = beta * V
    cum = [0.0] * K
    for _ in range(iterations):
        for d, tokens in enumerate(docs):
            row_d = n_dk[d]
            z_d = assignments[d]
            for i, t in enumerate(tokens):
                k = z_d[i]
                row_t = n_tk[t]
                row_t[k] -= 1
                row_d[k] -= 1
                n_k[k] -= 1
                total = 0.0
                for j in range(K):
                    total += (row_t[j] + beta) / (n_k[j] + beta_v) * (row_d[j] + alpha)
                    cum[j] = total
                u = rng.random() * total
                k = 0
                while cum[k] < u:
                    k += 1
                z_d[i] = k
                row_t[k] += 1
                row_d[k] += 1
                n_k[k] += 1
        if __debug__:
            assert sum(n_k) == total_tokens, "topic count table out of sync"

    tk = np.array(n_tk, dtype=float)  # V x K
    phi = (tk.T + beta) / (tk.sum(axis=0)[:, None] + beta_v)
    dk = np.array(n_dk, dtype=float)  # D x K
    theta = (dk + alpha) / (dk.sum(axis=1)[:, None] + alpha * K)
    return TopicModel(
        K=K,
        alpha=alpha,
        beta=beta,
        phi=phi,
        theta=theta,
        seed=seed,
        iterations=iterations,
        doc_ids=doc_ids,
        vocab=vocab,
    )


def topic_probabilities(model: TopicModel, doc_id: str) -> np.ndarray:
    """The fitted document-topic distribution for one document."""
    return model.theta[model.doc_index(doc_id)].copy()


def top_topics(model: TopicModel, n: int) -> list[int]:
    """Topic ids ranked by corpus-wide mean theta, ties broken by id."""
    if n > model.K:
        raise ValueError(f"n={n} exceeds K={model.K}")
    means = model.theta.mean(axis=0)
    order = sorted(range(model.K), key=lambda k: (-means[k], k))
    return order[:n]


def top_topic_words(model: TopicModel, topic: int, n: int) -> list[str]:
    """The n most probable words of one topic (ties broken by vocab id)."""
    inv = {i: t for t, i in model.vocab.items()}
    row = model.phi[topic]
    order = sorted(range(len(row)), key=lambda t: (-row[t], t))
    return [inv[t] for t in order[:n]]


def npmi_coherence(model: TopicModel, corpus: Corpus, top_n: int = DEFAULT_TOP_N) -> CoherenceReport:
    """Mean normalized PMI over unordered top-word pairs, per topic.

    Probabilities are Boolean document frequencies: P(w) is the fraction of
    documents containing w, P(wi, wj) the fraction containing both. Top words
    absent from the corpus are excluded with a warning.
    """
    if top_n < 2:
        raise ValueError("top_n must be >= 2")
    doc_sets = [frozenset(corpus.tokenized[doc.id].tokens) for doc in corpus.documents]
    n_docs = len(doc_sets)
    if n_docs == 0:
        raise ValueError("empty corpus")

    npmi_values: list[float] = []
    all_top_words: list[list[str]] = []
    for k in range(model.K):
        words = top_topic_words(model, k, top_n)
        all_top_words.append(words)
        doc_freq = {w: sum(1 for s in doc_sets if w in s) for w in words}
        present = [w for w in words if doc_freq[w] > 0]
        absent = [w for w in words if doc_freq[w] == 0]
        if absent:
            warnings.warn(f"topic {k}: top words absent from corpus, excluded: {absent}")
        pair_scores: list[float] = []
        for a in range(len(present)):
            for b in range(a + 1, len(present)):
                wi, wj = present[a], present[b]
                p_i = doc_freq[wi] / n_docs
                p_j = doc_freq[wj] / n_docs
                both = sum(1 for s in doc_sets if wi in s and wj in s)
                p_ij = both / n_docs
                numer = log(p_ij + NPMI_EPS) - log(p_i + NPMI_EPS) - log(p_j + NPMI_EPS)
                denom = -log(p_ij + NPMI_EPS)
                pair_scores.append(numer / denom)
        if pair_scores:
            npmi_values.append(sum(pair_scores) / len(pair_scores))
        else:
            warnings.warn(f"topic {k}: no scorable word pairs; coherence set to 0")
            npmi_values.append(0.0)
    return CoherenceReport(npmi=npmi_values, top_words=all_top_words)


def kl_divergence(p: Sequence[float] | np.ndarray, q: Sequence[float] | np.ndarray) -> float:
    """KL(P || Q) in nats; Q is epsilon-smoothed and renormalized first."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape != q.shape or p.ndim != 1:
        raise ValueError(f"length mismatch: {p.shape} vs {q.shape}")
    for name, dist in (("P", p), ("Q", q)):
        if (dist < 0).any():
            raise ValueError(f"{name} has negative entries")
        if abs(dist.sum() - 1.0) > 1e-9:
            raise ValueError(f"{name} sums to {dist.sum()!r}, not 1")
    q_s = q + KL_EPS
    q_s /= q_s.sum()
    mask = p > 0
    return float(np.sum(p[mask] * np.log(p[mask] / q_s[mask])))


def period_topic_distribution(
    model: TopicModel,
    corpus: Corpus,
    window: tuple[dt.date, dt.date],
    label: str | None = None,
) -> PeriodTopicDistribution:
    """Mean theta over documents dated within ``window``, renormalized."""
    start, end = window
    rows = [
        model.doc_index(doc.id)
        for doc in corpus.documents
        if start <= doc.date <= end and doc.id in set(model.doc_ids)
    ]
    if not rows:
        raise ValueError(f"no documents in window {start.isoformat()}..{end.isoformat()}")
    probs = model.theta[rows].mean(axis=0)
    probs = probs / probs.sum()
    return PeriodTopicDistribution(
        label=label or f"{start.isoformat()}..{end.isoformat()}", probs=probs
    )


def kl_permutation_test(
    model: TopicModel,
    corpus: Corpus,
    window_a: tuple[dt.date, dt.date],
    window_b: tuple[dt.date, dt.date],
    n_permutations: int = 1000,
    seed: int = 0,
) -> tuple[float, float]:
    """Document-label permutation test for a period KL divergence.

    This is a stand-in significance gauge, not a reconstruction of any
    published procedure: the observed KL between the two windows is compared
    with the KL distribution after shuffling document-window labels.
    Returns (observed KL, permutation p-value).
    """
    ids = list(model.doc_ids)
    dates = {doc.id: doc.date for doc in corpus.documents}
    group_a = [i for i, doc_id in enumerate(ids) if window_a[0] <= dates[doc_id] <= window_a[1]]
    group_b = [i for i, doc_id in enumerate(ids) if window_b[0] <= dates[doc_id] <= window_b[1]]
    if not group_a or not group_b:
        raise ValueError("both windows must contain at least one document")

    def window_kl(rows_a: list[int], rows_b: list[int]) -> float:
        pa = model.theta[rows_a].mean(axis=0)
        pb = model.theta[rows_b].mean(axis=0)
        return kl_divergence(pa / pa.sum(), pb / pb.sum())

    observed = window_kl(group_a, group_b)
    pool = group_a + group_b
    n_a = len(group_a)
    rng = random.Random(seed)
    hits = 0
    for _ in range(n_permutations):
        rng.shuffle(pool)
        if window_kl(pool[:n_a], pool[n_a:]) >= observed:
            hits += 1
    return observed, (1 + hits) / (1 + n_permutations)
