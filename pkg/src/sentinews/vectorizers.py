"""Vocabulary fitting, bag-of-words, TF-IDF, integer sequences, padding.

Vocabulary indices run 1..V, assigned by descending total count with
lexicographic tie-break; index 0 is reserved for padding and
out-of-vocabulary tokens.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyDatasetError

DEFAULT_MAXLEN = 50


@dataclass(frozen=True)
class Vocabulary:
    word_index: dict[str, int]
    word_counts: dict[str, int]
    word_docs: dict[str, int]
    document_count: int
    max_words: int | None = None

    @property
    def size(self) -> int:
        return len(self.word_index)

    def to_json(self) -> str:
        return json.dumps({
            "word_index": self.word_index,
            "word_counts": self.word_counts,
            "word_docs": self.word_docs,
            "document_count": self.document_count,
            "max_words": self.max_words,
        })

    @classmethod
    def from_json(cls, text: str) -> "Vocabulary":
        obj = json.loads(text)
        return cls(
            word_index=obj["word_index"],
            word_counts=obj["word_counts"],
            word_docs=obj["word_docs"],
            document_count=obj["document_count"],
            max_words=obj["max_words"],
        )


@dataclass(frozen=True)
class DocVector:
    """Sparse (index, weight) pairs with strictly increasing indices."""
    indices: tuple[int, ...]
    weights: tuple[float, ...]
    normalized: bool = False

    def to_dense(self, size: int) -> np.ndarray:
        dense = np.zeros(size, dtype=np.float64)
        for i, w in zip(self.indices, self.weights):
            dense[i - 1] = w
        return dense


def fit_vocabulary(corpus, max_words: int | None = None) -> Vocabulary:
    """Count tokens and document frequencies; index the most frequent tokens."""
    if not corpus:
        raise EmptyDatasetError("cannot fit vocabulary on an empty corpus")
    counts: dict[str, int] = {}
    docs: dict[str, int] = {}
    for seq in corpus:
        tokens = list(seq)
        for tok in tokens:
            counts[tok] = counts.get(tok, 0) + 1
        for tok in set(tokens):
            docs[tok] = docs.get(tok, 0) + 1
    ranked = sorted(counts, key=lambda t: (-counts[t], t))
    if max_words is not None:
        ranked = ranked[:max_words]
    word_index = {tok: i for i, tok in enumerate(ranked, start=1)}
    return Vocabulary(
        word_index=word_index,
        word_counts=counts,
        word_docs=docs,
        document_count=len(corpus),
        max_words=max_words,
    )


def bow_vector(doc, vocab: Vocabulary) -> DocVector:
    """Raw in-document counts over indexed tokens; unindexed tokens ignored."""
    counts: dict[int, float] = {}
    for tok in doc:
        idx = vocab.word_index.get(tok)
        if idx is not None:
            counts[idx] = counts.get(idx, 0.0) + 1.0
    indices = tuple(sorted(counts))
    return DocVector(indices=indices, weights=tuple(counts[i] for i in indices))


def idf(vocab: Vocabulary) -> dict[str, float]:
    """Smoothed inverse document frequency: ln((1+N)/(1+df)) + 1."""
    n = vocab.document_count
    return {
        tok: math.log((1.0 + n) / (1.0 + vocab.word_docs[tok])) + 1.0
        for tok in vocab.word_index
    }


def tfidf_matrix(corpus, vocab: Vocabulary) -> list[DocVector]:
    """count x idf per token, each document L2-normalized."""
    idf_map = idf(vocab)
    idf_by_index = {vocab.word_index[t]: w for t, w in idf_map.items()}
    out = []
    for doc in corpus:
        counts = bow_vector(doc, vocab)
        weights = [c * idf_by_index[i] for i, c in zip(counts.indices, counts.weights)]
        norm = math.sqrt(sum(w * w for w in weights))
        if norm > 0:
            weights = [w / norm for w in weights]
        out.append(DocVector(indices=counts.indices, weights=tuple(weights),
                             normalized=True))
    return out


def texts_to_sequences(corpus, vocab: Vocabulary) -> list[list[int]]:
    """Map tokens through word_index, dropping out-of-vocabulary tokens."""
    return [
        [vocab.word_index[tok] for tok in doc if tok in vocab.word_index]
        for doc in corpus
    ]


def pad_sequences(seqs, maxlen: int = DEFAULT_MAXLEN) -> np.ndarray:
    """Left-pad with zeros; sequences longer than maxlen keep their head."""
    out = np.zeros((len(seqs), maxlen), dtype=np.int64)
    for row, seq in enumerate(seqs):
        kept = list(seq)[:maxlen]
        if kept:
            out[row, maxlen - len(kept):] = kept
    return out


def export_matrix_csv(vectors: list[DocVector], vocab: Vocabulary, path) -> None:
    """Dense CSV export: header of tokens in index order, one row per document."""
    tokens = sorted(vocab.word_index, key=vocab.word_index.get)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(",".join(tokens) + "\n")
        for vec in vectors:
            fh.write(",".join(f"{x:.10g}" for x in vec.to_dense(vocab.size)) + "\n")
