"""Skip-gram with negative sampling, trained single-threaded for determinism."""

from __future__ import annotations

import numpy as np

from ..errors import DataError
from .matrix import EmbeddingMatrix


def _sigmoid(x):
    return 1.0 / (1.0 + np.exp(-x))


def pair_loss_and_grads(w, c_pos, c_negs):
    """Loss and gradients for one (center, context, negatives) sample.

    loss = -log sigmoid(w.c_pos) - sum_k log sigmoid(-w.c_neg_k)
    Returns (loss, grad_w, grad_c_pos, grad_c_negs).
    """
    s_pos = _sigmoid(np.dot(w, c_pos))
    s_negs = _sigmoid(c_negs @ w)
    loss = -np.log(s_pos) - np.sum(np.log(1.0 - s_negs))
    grad_w = (s_pos - 1.0) * c_pos + s_negs @ c_negs
    grad_c_pos = (s_pos - 1.0) * w
    grad_c_negs = np.outer(s_negs, w)
    return loss, grad_w, grad_c_pos, grad_c_negs


def build_token_index(corpus) -> dict[str, int]:
    """Tokens indexed by descending count, lexicographic tie-break."""
    counts: dict[str, int] = {}
    for sent in corpus:
        for tok in sent:
            counts[tok] = counts.get(tok, 0) + 1
    ranked = sorted(counts, key=lambda t: (-counts[t], t))
    return {tok: i for i, tok in enumerate(ranked)}


def noise_distribution(corpus, token_index) -> np.ndarray:
    """Unigram^0.75 sampling distribution over the vocabulary."""
    counts = np.zeros(len(token_index))
    for sent in corpus:
        for tok in sent:
            counts[token_index[tok]] += 1
    weights = counts ** 0.75
    return weights / weights.sum()


def train_word2vec_sgns(corpus, dim=100, window=5, k_neg=5, epochs=5,
                        lr=0.025, seed=0) -> EmbeddingMatrix:
    """Train skip-gram word vectors against unigram^0.75 noise samples."""
    token_index = build_token_index(corpus)
    vocab_size = len(token_index)
    if vocab_size < 2:
        raise DataError("skip-gram needs a vocabulary of at least 2 tokens")
    noise = noise_distribution(corpus, token_index)
    noise_cdf = np.cumsum(noise)

    rng = np.random.default_rng(seed)
    w_in = (rng.random((vocab_size, dim)) - 0.5) / dim
    w_out = np.zeros((vocab_size, dim))

    encoded = [[token_index[t] for t in sent] for sent in corpus if len(sent) > 0]
    for _ in range(epochs):
        for sent in encoded:
            n = len(sent)
            for pos, center in enumerate(sent):
                ctx = [sent[j] for j in range(max(0, pos - window),
                                              min(n, pos + window + 1)) if j != pos]
                if not ctx:
                    continue
                m = len(ctx)
                negs = np.searchsorted(noise_cdf, rng.random((m, k_neg)))
                targets = np.concatenate([np.asarray(ctx), negs.ravel()])
                labels = np.concatenate([np.ones(m), np.zeros(m * k_neg)])
                outs = w_out[targets]
                scores = _sigmoid(outs @ w_in[center])
                gerr = (scores - labels) * lr
                grad_center = gerr @ outs
                np.subtract.at(w_out, targets, np.outer(gerr, w_in[center]))
                w_in[center] -= grad_center
    return EmbeddingMatrix(rows=w_in, token_index=token_index)
