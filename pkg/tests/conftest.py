"""Shared test helpers and paths."""

import datetime as dt
import random
from pathlib import Path

import numpy as np
import pytest

from cbtext.corpus import Channel, Corpus, Document, build_vocab, tokenize, tokenize_corpus

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = REPO_ROOT / "fixtures"

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One visible pass/fail line per acceptance criterion."""
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def make_doc(text, doc_id="d1", channel=Channel.SPEECH, date=dt.date(2020, 3, 2)):
    return Document(id=doc_id, channel=channel, date=date, raw_text=text)


def make_tokens(text, **kwargs):
    """Tokenized document straight from raw text."""
    return tokenize(make_doc(text, **kwargs))


def generate_lda_corpus(K=3, V=30, D=200, doc_len=50, seed=123):
    """Synthetic corpus drawn from known topic-word distributions.

    Topics concentrate on disjoint vocabulary blocks (90% of the mass on the
    own block), documents mix topics via a sparse Dirichlet. Returns
    (corpus, true_phi, token_names) with corpus tokenized and vocab built.
    """
    rng = random.Random(seed)
    tokens = [f"w{i:02d}" for i in range(V)]
    block = V // K
    phi = np.full((K, V), 0.1 / (V - block))
    for k in range(K):
        phi[k, k * block : (k + 1) * block] = 0.9 / block
    phi /= phi.sum(axis=1, keepdims=True)

    def dirichlet(alpha, size):
        draws = [rng.gammavariate(alpha, 1.0) for _ in range(size)]
        total = sum(draws)
        return [d / total for d in draws]

    def categorical(probs):
        u = rng.random()
        acc = 0.0
        for i, p in enumerate(probs):
            acc += p
            if u < acc:
                return i
        return len(probs) - 1

    documents = []
    doc_topics = []
    for d in range(D):
        theta = dirichlet(0.3, K)
        words = []
        for _ in range(doc_len):
            k = categorical(theta)
            words.append(tokens[categorical(phi[k])])
        doc_topics.append(int(np.argmax(theta)))
        documents.append(Document(id=f"doc{d:03d}", channel=Channel.SPEECH,
                                  date=dt.date(2020, 1, 1) + dt.timedelta(days=d),
                                  raw_text=" ".join(words)))
    corpus = Corpus(documents=documents)
    tokenize_corpus(corpus)
    build_vocab(corpus)
    return corpus, phi, tokens, doc_topics


def model_phi_in_generator_order(model, tokens):
    """Reorder fitted phi columns to the generator's token order."""
    cols = [model.vocab[t] for t in tokens]
    return model.phi[:, cols]


def hungarian_tv(true_phi, fit_phi):
    """Mean per-topic total-variation distance after best topic matching.

    Returns (mean_tv, permutation) where permutation[k_true] = matched fit topic.
    """
    from scipy.optimize import linear_sum_assignment

    K = true_phi.shape[0]
    cost = np.zeros((K, K))
    for i in range(K):
        for j in range(K):
            cost[i, j] = 0.5 * np.abs(true_phi[i] - fit_phi[j]).sum()
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].mean()), {int(r): int(c) for r, c in zip(rows, cols)}


def simulate_var(coef_matrices, n, rng, intercept=None, burn=100):
    """Draw from a VAR with unit-variance gaussian shocks.

    ``coef_matrices`` is a list of (m, m) arrays A_1..A_p with entry (r, c)
    being the effect of variable c on variable r.
    """
    coef_matrices = [np.asarray(A, dtype=float) for A in coef_matrices]
    m = coef_matrices[0].shape[0]
    p = len(coef_matrices)
    intercept = np.zeros(m) if intercept is None else np.asarray(intercept, dtype=float)
    Y = np.zeros((n + burn + p, m))
    for t in range(p, n + burn + p):
        value = intercept + rng.standard_normal(m)
        for lag, A in enumerate(coef_matrices, start=1):
            value = value + A @ Y[t - lag]
        Y[t] = value
    return Y[burn + p :]


@pytest.fixture
def corpus_dir(tmp_path):
    """Factory writing a manifest plus text files; returns (root, manifest)."""

    def build(rows):
        root = tmp_path / "corpus"
        root.mkdir(exist_ok=True)
        lines = ["id,channel,date,filename"]
        for i, (doc_id, channel, date, text) in enumerate(rows):
            filename = f"doc{i}.txt"
            (root / filename).write_text(text, encoding="utf-8")
            lines.append(f"{doc_id},{channel},{date},{filename}")
        manifest = root / "manifest.csv"
        manifest.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return root, manifest

    return build
