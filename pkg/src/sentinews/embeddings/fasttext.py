"""Subword character n-gram embeddings (skip-gram objective).

A word's vector is the exact sum of the hashed bucket vectors of its
character n-grams; this makes vectors well-defined for words never seen
in training.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import DataError
from .word2vec import _sigmoid, build_token_index, noise_distribution

DEFAULT_MINN = 3
DEFAULT_MAXN = 6
DEFAULT_BUCKETS = 1 << 17

_FNV_OFFSET = 0x811C9DC5
_FNV_PRIME = 0x01000193


def fnv1a(data: str) -> int:
    """32-bit FNV-1a over UTF-8 bytes."""
    h = _FNV_OFFSET
    for byte in data.encode("utf-8"):
        h ^= byte
        h = (h * _FNV_PRIME) & 0xFFFFFFFF
    return h


def char_ngrams(word: str, minn: int = DEFAULT_MINN, maxn: int = DEFAULT_MAXN) -> set[str]:
    """All substrings of the boundary-wrapped word with lengths minn..maxn,
    plus the wrapped full token."""
    wrapped = f"<{word}>"
    grams = {wrapped}
    for n in range(minn, maxn + 1):
        for start in range(0, len(wrapped) - n + 1):
            grams.add(wrapped[start:start + n])
    return grams


@dataclass(frozen=True)
class SubwordTable:
    buckets: np.ndarray  # B x d
    minn: int = DEFAULT_MINN
    maxn: int = DEFAULT_MAXN
    hash_name: str = "fnv1a-32"

    @property
    def bucket_count(self) -> int:
        return self.buckets.shape[0]

    @property
    def dim(self) -> int:
        return self.buckets.shape[1]

    def bucket_ids(self, word: str) -> list[int]:
        grams = sorted(char_ngrams(word, self.minn, self.maxn))
        return [fnv1a(g) % self.bucket_count for g in grams]


def fasttext_word_vector(word: str, table: SubwordTable) -> np.ndarray:
    """Exact sum of the bucket vectors of the word's n-grams."""
    total = np.zeros(table.dim)
    for bucket in table.bucket_ids(word):
        total += table.buckets[bucket]
    return total


def train_fasttext(corpus, dim=100, minn=DEFAULT_MINN, maxn=DEFAULT_MAXN,
                   bucket_count=DEFAULT_BUCKETS, window=5, k_neg=5,
                   epochs=5, lr=0.025, seed=0) -> SubwordTable:
    """Skip-gram negative sampling with subword-sum center representations."""
    token_index = build_token_index(corpus)
    vocab_size = len(token_index)
    if vocab_size < 2:
        raise DataError("subword training needs a vocabulary of at least 2 tokens")
    noise = noise_distribution(corpus, token_index)
    noise_cdf = np.cumsum(noise)

    rng = np.random.default_rng(seed)
    buckets = (rng.random((bucket_count, dim)) - 0.5) / dim
    w_out = np.zeros((vocab_size, dim))
    table = SubwordTable(buckets=buckets, minn=minn, maxn=maxn)

    word_buckets = {}
    for tok, idx in token_index.items():
        word_buckets[idx] = np.asarray(table.bucket_ids(tok))

    encoded = [[token_index[t] for t in sent] for sent in corpus if len(sent) > 0]
    for _ in range(epochs):
        for sent in encoded:
            n = len(sent)
            for pos, center in enumerate(sent):
                ctx = [sent[j] for j in range(max(0, pos - window),
                                              min(n, pos + window + 1)) if j != pos]
                if not ctx:
                    continue
                ids = word_buckets[center]
                center_vec = buckets[ids].sum(axis=0)
                m = len(ctx)
                negs = np.searchsorted(noise_cdf, rng.random((m, k_neg)))
                targets = np.concatenate([np.asarray(ctx), negs.ravel()])
                labels = np.concatenate([np.ones(m), np.zeros(m * k_neg)])
                outs = w_out[targets]
                scores = _sigmoid(outs @ center_vec)
                gerr = (scores - labels) * lr
                grad_center = gerr @ outs
                np.subtract.at(w_out, targets, np.outer(gerr, center_vec))
                np.subtract.at(buckets, ids, grad_center)
    return table
