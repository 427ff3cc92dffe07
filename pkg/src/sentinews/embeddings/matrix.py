"""Embedding matrix container and query operations."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DataError, ParseError


@dataclass(frozen=True)
class EmbeddingMatrix:
    rows: np.ndarray  # V x d
    token_index: dict[str, int]

    @property
    def dim(self) -> int:
        return self.rows.shape[1]

    def __contains__(self, token: str) -> bool:
        return token in self.token_index

    def vector(self, token: str) -> np.ndarray:
        return self.rows[self.token_index[token]]

    @property
    def tokens(self) -> list[str]:
        return sorted(self.token_index, key=self.token_index.get)


def cosine_similarity(a: np.ndarray, b: np.ndarray) -> float:
    na = np.linalg.norm(a)
    nb = np.linalg.norm(b)
    if na == 0.0 or nb == 0.0:
        raise ValueError("cosine similarity undefined for zero vector")
    return float(np.clip(np.dot(a, b) / (na * nb), -1.0, 1.0))


def _ranked_neighbors(target: np.ndarray, emb: EmbeddingMatrix, exclude: set[str], n: int):
    norms = np.linalg.norm(emb.rows, axis=1)
    tnorm = np.linalg.norm(target)
    if tnorm == 0.0:
        raise ValueError("cannot rank neighbors of a zero vector")
    sims = emb.rows @ target
    with np.errstate(divide="ignore", invalid="ignore"):
        sims = np.where(norms > 0, sims / (norms * tnorm), -np.inf)
    pairs = [
        (tok, float(sims[i]))
        for tok, i in emb.token_index.items()
        if tok not in exclude and np.isfinite(sims[i])
    ]
    pairs.sort(key=lambda p: (-p[1], p[0]))
    return pairs[:n]


def most_similar(word: str, emb: EmbeddingMatrix, n: int = 10):
    """Closest tokens by cosine; the query itself is excluded."""
    if word not in emb.token_index:
        raise KeyError(word)
    return _ranked_neighbors(emb.vector(word), emb, {word}, n)


def analogy(a: str, b: str, c: str, emb: EmbeddingMatrix, n: int = 10):
    """Nearest tokens to vec(a) - vec(b) + vec(c), excluding a, b and c."""
    target = emb.vector(a) - emb.vector(b) + emb.vector(c)
    return _ranked_neighbors(target, emb, {a, b, c}, n)


def load_pretrained_text(path) -> EmbeddingMatrix:
    """Text format: one "token v1 ... vd" entry per line, consistent d."""
    tokens: list[str] = []
    vectors: list[np.ndarray] = []
    dim = None
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            parts = line.rstrip("\n").split(" ")
            if len(parts) < 2:
                raise ParseError("expected token followed by values", lineno)
            token, values = parts[0], parts[1:]
            if dim is None:
                dim = len(values)
            elif len(values) != dim:
                raise ParseError(
                    f"expected {dim} values, got {len(values)}", lineno
                )
            try:
                vec = np.array([float(v) for v in values], dtype=np.float64)
            except ValueError:
                raise ParseError("non-numeric vector component", lineno) from None
            tokens.append(token)
            vectors.append(vec)
    if not tokens:
        raise DataError(f"no vectors in {path}")
    return EmbeddingMatrix(
        rows=np.vstack(vectors),
        token_index={tok: i for i, tok in enumerate(tokens)},
    )


def save_text(emb: EmbeddingMatrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for tok in emb.tokens:
            vec = " ".join(repr(float(v)) for v in emb.vector(tok))
            fh.write(f"{tok} {vec}\n")


def load_sentence_vectors(path):
    """CSV id,v1,...,vd of externally produced fixed-length sentence encodings."""
    ids: list[str] = []
    vectors: list[np.ndarray] = []
    dim = None
    seen = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            rid, values = parts[0], parts[1:]
            if rid in seen:
                raise DataError(f"duplicate record id {rid!r}")
            if dim is None:
                dim = len(values)
            elif len(values) != dim:
                raise ParseError(f"expected {dim} values, got {len(values)}", lineno)
            seen.add(rid)
            ids.append(rid)
            vectors.append(np.array([float(v) for v in values], dtype=np.float64))
    return list(zip(ids, vectors))


def embedding_layer_matrix(vocab, pretrained: EmbeddingMatrix, dim: int):
    """(V+1) x dim matrix with row i = pretrained vector of index-i token.

    Row 0 and rows for tokens missing from the pretrained matrix are zero.
    Returns (matrix, coverage_ratio).
    """
    size = vocab.size
    matrix = np.zeros((size + 1, dim), dtype=np.float64)
    matched = 0
    for token, index in vocab.word_index.items():
        if token in pretrained.token_index:
            vec = pretrained.vector(token)
            if vec.shape[0] != dim:
                raise DataError(
                    f"pretrained dim {vec.shape[0]} != requested {dim}"
                )
            matrix[index] = vec
            matched += 1
    coverage = matched / size if size else 0.0
    return matrix, coverage


def pca_project_2d(emb: EmbeddingMatrix, words):
    """Top-2 principal components of the mean-centered selected rows."""
    selected = [w for w in words if w in emb.token_index]
    data = np.vstack([emb.vector(w) for w in selected])
    centered = data - data.mean(axis=0)
    cov = centered.T @ centered / max(len(selected) - 1, 1)
    eigvals, eigvecs = np.linalg.eigh(cov)
    order = np.argsort(eigvals)[::-1][:2]
    components = eigvecs[:, order]
    # Deterministic sign: largest-magnitude loading positive.
    for k in range(components.shape[1]):
        pivot = np.argmax(np.abs(components[:, k]))
        if components[pivot, k] < 0:
            components[:, k] = -components[:, k]
    coords = centered @ components
    if coords.shape[1] < 2:
        coords = np.hstack([coords, np.zeros((coords.shape[0], 1))])
    return [(w, float(coords[i, 0]), float(coords[i, 1])) for i, w in enumerate(selected)]
