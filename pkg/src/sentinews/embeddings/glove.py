"""Co-occurrence counting and weighted least-squares embedding fit.

Minimizes J = sum_{ij: X_ij > 0} f(X_ij) (w_i . wt_j + b_i + bt_j - ln X_ij)^2
with f(x) = min(1, (x / x_max)^alpha), by per-cell AdaGrad steps.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from ..errors import DataError
from .matrix import EmbeddingMatrix
from .word2vec import build_token_index

DEFAULT_X_MAX = 100.0
DEFAULT_ALPHA = 0.75


@dataclass(frozen=True)
class CooccurrenceTable:
    cells: dict[tuple[int, int], float]
    window: int
    token_index: dict[str, int]
    symmetric: bool = True

    def dump_csv(self, path) -> None:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["i", "j", "x"])
            for (i, j), x in sorted(self.cells.items()):
                writer.writerow([i, j, repr(x)])


def build_cooccurrence(corpus, window: int = 5) -> CooccurrenceTable:
    """X_ij incremented by 1/distance for pairs within the window; symmetric."""
    token_index = build_token_index(corpus)
    cells: dict[tuple[int, int], float] = {}
    for sent in corpus:
        ids = [token_index[t] for t in sent]
        for pos, center in enumerate(ids):
            for off in range(1, window + 1):
                j = pos + off
                if j >= len(ids):
                    break
                other = ids[j]
                inc = 1.0 / off
                cells[(center, other)] = cells.get((center, other), 0.0) + inc
                cells[(other, center)] = cells.get((other, center), 0.0) + inc
    return CooccurrenceTable(cells=cells, window=window, token_index=token_index)


def weighting(x: float, x_max: float = DEFAULT_X_MAX, alpha: float = DEFAULT_ALPHA) -> float:
    return min(1.0, (x / x_max) ** alpha)


@dataclass
class GloveModel:
    w: np.ndarray       # V x d center vectors
    w_tilde: np.ndarray  # V x d context vectors
    b: np.ndarray
    b_tilde: np.ndarray
    token_index: dict[str, int]

    def cell_prediction(self, i: int, j: int) -> float:
        return float(self.w[i] @ self.w_tilde[j] + self.b[i] + self.b_tilde[j])

    def embedding(self) -> EmbeddingMatrix:
        """Final word vector = w + w_tilde."""
        return EmbeddingMatrix(rows=self.w + self.w_tilde, token_index=dict(self.token_index))


def glove_loss(model: GloveModel, table: CooccurrenceTable,
               x_max: float = DEFAULT_X_MAX, alpha: float = DEFAULT_ALPHA) -> float:
    total = 0.0
    for (i, j), x in table.cells.items():
        diff = model.cell_prediction(i, j) - np.log(x)
        total += weighting(x, x_max, alpha) * diff * diff
    return total


def fit_glove(table: CooccurrenceTable, dim=100, x_max=DEFAULT_X_MAX,
              alpha=DEFAULT_ALPHA, epochs=25, lr=0.05, seed=0):
    """AdaGrad fit over the nonzero cells; returns (GloveModel, per-epoch losses)."""
    if not table.cells:
        raise DataError("empty co-occurrence table")
    vocab_size = len(table.token_index)
    rng = np.random.default_rng(seed)
    model = GloveModel(
        w=(rng.random((vocab_size, dim)) - 0.5) / dim,
        w_tilde=(rng.random((vocab_size, dim)) - 0.5) / dim,
        b=np.zeros(vocab_size),
        b_tilde=np.zeros(vocab_size),
        token_index=dict(table.token_index),
    )
    acc_w = np.ones_like(model.w)
    acc_wt = np.ones_like(model.w_tilde)
    acc_b = np.ones_like(model.b)
    acc_bt = np.ones_like(model.b_tilde)

    cells = sorted(table.cells.items())
    log_x = {key: np.log(x) for key, x in cells}
    weights = {key: weighting(x, x_max, alpha) for key, x in cells}

    losses = []
    for _ in range(epochs):
        for (i, j), _x in cells:
            diff = model.cell_prediction(i, j) - log_x[(i, j)]
            g = weights[(i, j)] * diff
            gw = g * model.w_tilde[j]
            gwt = g * model.w[i]
            model.w[i] -= lr * gw / np.sqrt(acc_w[i])
            model.w_tilde[j] -= lr * gwt / np.sqrt(acc_wt[j])
            model.b[i] -= lr * g / np.sqrt(acc_b[i])
            model.b_tilde[j] -= lr * g / np.sqrt(acc_bt[j])
            acc_w[i] += gw * gw
            acc_wt[j] += gwt * gwt
            acc_b[i] += g * g
            acc_bt[j] += g * g
        losses.append(glove_loss(model, table, x_max, alpha))
    return model, losses


def train_glove(table: CooccurrenceTable, dim=100, x_max=DEFAULT_X_MAX,
                alpha=DEFAULT_ALPHA, epochs=25, lr=0.05, seed=0) -> EmbeddingMatrix:
    model, _losses = fit_glove(table, dim=dim, x_max=x_max, alpha=alpha,
                               epochs=epochs, lr=lr, seed=seed)
    return model.embedding()
