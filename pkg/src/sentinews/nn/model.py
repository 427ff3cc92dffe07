"""Network assembly, training loop, checkpointing, and prediction.

A network is embedding (optional) -> recurrent (SimpleRNN or LSTM) ->
dropout -> dense(relu) -> dense(1, sigmoid). Training is single-threaded
mini-batch BPTT with global-norm clipping, Adam, and early stopping on
validation loss.
"""

from __future__ import annotations

import json
import struct
from dataclasses import dataclass, field, asdict

import numpy as np

from ..corpus import SplitSpec, split as split_records
from .layers import DenseLayer, DropoutLayer, EmbeddingLayer, LSTMLayer, SimpleRNNLayer
from .losses import bce_loss, bce_loss_grad
from .optim import AdamState, adam_step, clip_gradients

CHECKPOINT_MAGIC = b"SNCK"


@dataclass
class NetworkConfig:
    recurrent: str = "lstm"  # "lstm" | "rnn"
    hidden_units: int = 64
    dense_units: int = 512
    dropout: float = 0.5
    vocab_size: int | None = None      # id-sequence input: embedding is (V+1) x dim
    embedding_dim: int | None = None
    embedding_trainable: bool = True
    input_dim: int | None = None       # dense-vector input (no embedding layer)
    lr: float = 1e-3
    epochs: int = 10
    batch_size: int = 32
    seed: int = 0
    threshold: float = 0.5
    patience: int = 5
    max_norm: float = 5.0

    def __post_init__(self):
        if self.recurrent not in ("lstm", "rnn"):
            raise ValueError(f"unknown recurrent type {self.recurrent!r}")
        if not 0.0 <= self.dropout < 1.0:
            raise ValueError("dropout must be in [0, 1)")
        if (self.vocab_size is None) == (self.input_dim is None):
            raise ValueError("set exactly one of vocab_size (ids) or input_dim (dense)")
        if self.vocab_size is not None and self.embedding_dim is None:
            raise ValueError("embedding_dim required with vocab_size")

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, obj):
        return cls(**obj)


@dataclass
class TrainReport:
    train_loss: list = field(default_factory=list)
    train_acc: list = field(default_factory=list)
    val_loss: list = field(default_factory=list)
    val_acc: list = field(default_factory=list)
    best_epoch: int | None = None
    stop_reason: str = "not_started"

    @property
    def epochs_run(self):
        return len(self.train_loss)

    def to_json(self) -> str:
        return json.dumps({
            "train_loss": self.train_loss,
            "train_acc": self.train_acc,
            "val_loss": self.val_loss,
            "val_acc": self.val_acc,
            "best_epoch": self.best_epoch,
            "stop_reason": self.stop_reason,
        })


class Network:
    def __init__(self, layers):
        self.layers = layers

    def forward(self, x, train=True):
        out = x
        for layer in self.layers:
            out = layer.forward(out, train=train)
        return out[:, 0]

    def backward(self, dprob):
        dout = dprob[:, None]
        for layer in reversed(self.layers):
            dout = layer.backward(dout)
        return dout

    def zero_grads(self):
        for layer in self.layers:
            layer.zero_grads()

    def params(self) -> dict:
        merged = {}
        for layer in self.layers:
            merged.update(layer.params())
        return merged

    def grads(self) -> dict:
        merged = {}
        for layer in self.layers:
            merged.update(layer.grads())
        return merged

    def all_arrays(self) -> dict:
        """Every weight array, including non-trainable ones, for checkpoints."""
        merged = {}
        for layer in self.layers:
            if isinstance(layer, EmbeddingLayer):
                merged["embedding.weights"] = layer.weights
            else:
                merged.update(layer.params())
        return merged


def build_network(cfg: NetworkConfig, dtype=np.float32, pretrained=None,
                  dropout_rng=None) -> Network:
    rng = np.random.default_rng([cfg.seed, 0])
    layers = []
    if cfg.vocab_size is not None:
        if pretrained is not None:
            weights = np.asarray(pretrained, dtype=dtype).copy()
            emb = EmbeddingLayer(weights, trainable=cfg.embedding_trainable)
        else:
            emb = EmbeddingLayer.init(cfg.vocab_size + 1, cfg.embedding_dim, rng,
                                      dtype=dtype, trainable=cfg.embedding_trainable)
        layers.append(emb)
        rec_input = cfg.embedding_dim
    else:
        rec_input = cfg.input_dim
    rec_cls = LSTMLayer if cfg.recurrent == "lstm" else SimpleRNNLayer
    layers.append(rec_cls.init(rec_input, cfg.hidden_units, rng, dtype=dtype))
    layers.append(DropoutLayer(cfg.dropout,
                               rng=dropout_rng or np.random.default_rng([cfg.seed, 2])))
    layers.append(DenseLayer.init(cfg.hidden_units, cfg.dense_units, rng,
                                  activation="relu", dtype=dtype, name="dense"))
    layers.append(DenseLayer.init(cfg.dense_units, 1, rng,
                                  activation="sigmoid", dtype=dtype, name="output"))
    return Network(layers)


@dataclass
class ModelCheckpoint:
    config: NetworkConfig
    arrays: dict
    vocab_hash: str = ""

    def save(self, path) -> None:
        names = list(self.arrays)
        header = json.dumps({
            "config": self.config.to_dict(),
            "vocab_hash": self.vocab_hash,
            "arrays": [{"name": n, "shape": list(self.arrays[n].shape)} for n in names],
        }).encode("utf-8")
        with open(path, "wb") as fh:
            fh.write(CHECKPOINT_MAGIC)
            fh.write(struct.pack("<Q", len(header)))
            fh.write(header)
            for n in names:
                fh.write(np.ascontiguousarray(self.arrays[n], dtype="<f4").tobytes())

    @classmethod
    def load(cls, path) -> "ModelCheckpoint":
        with open(path, "rb") as fh:
            magic = fh.read(4)
            if magic != CHECKPOINT_MAGIC:
                raise ValueError(f"not a checkpoint file: {path}")
            (header_len,) = struct.unpack("<Q", fh.read(8))
            header = json.loads(fh.read(header_len).decode("utf-8"))
            arrays = {}
            for spec in header["arrays"]:
                shape = tuple(spec["shape"])
                count = int(np.prod(shape)) if shape else 1
                buf = fh.read(count * 4)
                arrays[spec["name"]] = np.frombuffer(buf, dtype="<f4").reshape(shape).copy()
        return cls(config=NetworkConfig.from_dict(header["config"]),
                   arrays=arrays, vocab_hash=header["vocab_hash"])

    def to_network(self) -> Network:
        net = build_network(self.config, dtype=np.float32)
        _load_arrays(net, self.arrays)
        return net


def _load_arrays(net: Network, arrays: dict) -> None:
    targets = net.all_arrays()
    for name, value in arrays.items():
        target = targets[name]
        target[...] = value.astype(target.dtype)


def _snapshot(net: Network) -> dict:
    return {n: a.copy() for n, a in net.all_arrays().items()}


def _prepare_input(X):
    X = np.asarray(X)
    if np.issubdtype(X.dtype, np.integer):
        return X
    X = X.astype(np.float32)
    if X.ndim == 2:
        X = X[:, None, :]  # dense document vectors become length-1 sequences
    return X


def _evaluate(net: Network, X, y, threshold, batch_size=256):
    losses = []
    correct = 0
    for start in range(0, len(y), batch_size):
        xb = X[start:start + batch_size]
        yb = y[start:start + batch_size]
        probs = net.forward(xb, train=False)
        losses.append(bce_loss(probs, yb) * len(yb))
        correct += int(np.sum((probs > threshold).astype(int) == yb))
    return sum(losses) / len(y), correct / len(y)


def train(cfg: NetworkConfig, X, y, split_spec: SplitSpec, pretrained=None,
          callbacks=None, vocab_hash=""):
    """Train a classifier; returns (best ModelCheckpoint, TrainReport)."""
    y = np.asarray(y)
    if y.size == 0:
        raise ValueError("empty training set")
    if not np.isin(y, (0, 1)).all():
        raise ValueError("labels must be 0 or 1")
    X = _prepare_input(X)

    indices = list(range(len(y)))
    train_idx, val_idx = split_records(indices, split_spec)
    if not val_idx:
        val_idx = train_idx  # degenerate split on tiny datasets
    X_train, y_train = X[train_idx], y[train_idx]
    X_val, y_val = X[val_idx], y[val_idx]

    net = build_network(cfg, dtype=np.float32, pretrained=pretrained)
    shuffle_rng = np.random.default_rng([cfg.seed, 1])
    adam = AdamState()
    report = TrainReport(stop_reason="completed")
    best = ModelCheckpoint(config=cfg, arrays=_snapshot(net), vocab_hash=vocab_hash)
    best_val = np.inf
    stale = 0

    for epoch in range(cfg.epochs):
        order = np.arange(len(y_train))
        shuffle_rng.shuffle(order)
        epoch_loss = 0.0
        epoch_correct = 0
        for start in range(0, len(order), cfg.batch_size):
            batch = order[start:start + cfg.batch_size]
            xb, yb = X_train[batch], y_train[batch]
            net.zero_grads()
            probs = net.forward(xb, train=True)
            epoch_loss += bce_loss(probs, yb) * len(yb)
            epoch_correct += int(np.sum((probs > cfg.threshold).astype(int) == yb))
            net.backward(bce_loss_grad(probs, yb).astype(np.float32))
            grads = clip_gradients(net.grads(), cfg.max_norm)
            trainable = {n: p for n, p in net.params().items() if n in grads}
            adam_step(trainable, grads, adam, lr=cfg.lr)
        report.train_loss.append(epoch_loss / len(y_train))
        report.train_acc.append(epoch_correct / len(y_train))

        val_loss, val_acc = _evaluate(net, X_val, y_val, cfg.threshold)
        report.val_loss.append(val_loss)
        report.val_acc.append(val_acc)

        if callbacks:
            for cb in callbacks:
                cb(epoch, report)

        if val_loss < best_val:
            best_val = val_loss
            best = ModelCheckpoint(config=cfg, arrays=_snapshot(net),
                                   vocab_hash=vocab_hash)
            report.best_epoch = epoch
            stale = 0
        else:
            stale += 1
            if stale >= cfg.patience:
                report.stop_reason = "early_stopping"
                break

    if cfg.epochs == 0:
        report.stop_reason = "not_started"
    return best, report


def predict(checkpoint: ModelCheckpoint, X, batch_size=256) -> np.ndarray:
    """Pure inference: probabilities in (0, 1)."""
    net = checkpoint.to_network()
    X = _prepare_input(X)
    outputs = []
    for start in range(0, len(X), batch_size):
        outputs.append(net.forward(X[start:start + batch_size], train=False))
    return np.concatenate(outputs) if outputs else np.empty(0)


def classify(prob, threshold: float = 0.5) -> np.ndarray:
    """Strict inequality: exactly-threshold probabilities map to class 0."""
    return (np.asarray(prob) > threshold).astype(int)
