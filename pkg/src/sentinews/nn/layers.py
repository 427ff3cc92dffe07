"""Network layers with explicit forward/backward passes.

Every layer exposes params() and grads() as name->array dicts so the
optimizer, gradient clipping, and checkpointing can treat the whole
network as a flat parameter collection.
"""

from __future__ import annotations

import numpy as np


def sigmoid(x):
    out = np.empty_like(x)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


def _glorot_uniform(rng, fan_in, fan_out, shape, dtype):
    limit = np.sqrt(6.0 / (fan_in + fan_out))
    return ((rng.random(shape) * 2.0 - 1.0) * limit).astype(dtype)


class Layer:
    trainable = True

    def params(self) -> dict:
        return {}

    def grads(self) -> dict:
        return {}

    def zero_grads(self):
        for g in self.grads().values():
            g[...] = 0.0


class EmbeddingLayer(Layer):
    """Row-gather of token ids; id 0 maps to row 0 (the padding row)."""

    def __init__(self, weights: np.ndarray, trainable: bool = True):
        self.weights = weights
        self.trainable = trainable
        self.d_weights = np.zeros_like(weights)
        self._ids = None

    @classmethod
    def init(cls, vocab_size, dim, rng, dtype=np.float32, trainable=True):
        w = _glorot_uniform(rng, vocab_size, dim, (vocab_size, dim), dtype)
        w[0] = 0.0
        return cls(w, trainable=trainable)

    def forward(self, ids, train=True):
        self._ids = ids
        return self.weights[ids]

    def backward(self, dout):
        if self.trainable:
            np.add.at(self.d_weights, self._ids, dout)
        return None  # integer input has no gradient

    def params(self):
        return {"embedding.weights": self.weights} if self.trainable else {}

    def grads(self):
        return {"embedding.weights": self.d_weights} if self.trainable else {}


class SimpleRNNLayer(Layer):
    """h_t = tanh(W x_t + U h_{t-1} + b); returns the final hidden state."""

    def __init__(self, w_x, w_h, b):
        self.w_x = w_x
        self.w_h = w_h
        self.b = b
        self.d_w_x = np.zeros_like(w_x)
        self.d_w_h = np.zeros_like(w_h)
        self.d_b = np.zeros_like(b)
        self._cache = None

    @classmethod
    def init(cls, input_dim, hidden, rng, dtype=np.float32):
        w_x = _glorot_uniform(rng, input_dim, hidden, (input_dim, hidden), dtype)
        # Scaled-uniform recurrent weights keep the spectral radius modest.
        w_h = _glorot_uniform(rng, hidden, hidden, (hidden, hidden), dtype)
        b = np.zeros(hidden, dtype=dtype)
        return cls(w_x, w_h, b)

    def forward(self, x, train=True):
        n, t, _ = x.shape
        hidden = self.b.shape[0]
        hs = np.zeros((n, t + 1, hidden), dtype=x.dtype)
        for step in range(t):
            hs[:, step + 1] = np.tanh(
                x[:, step] @ self.w_x + hs[:, step] @ self.w_h + self.b
            )
        self._cache = (x, hs)
        return hs[:, t]

    def backward(self, d_last):
        x, hs = self._cache
        n, t, _ = x.shape
        dx = np.zeros_like(x)
        dh = d_last.copy()
        for step in range(t - 1, -1, -1):
            dz = dh * (1.0 - hs[:, step + 1] ** 2)
            self.d_w_x += x[:, step].T @ dz
            self.d_w_h += hs[:, step].T @ dz
            self.d_b += dz.sum(axis=0)
            dx[:, step] = dz @ self.w_x.T
            dh = dz @ self.w_h.T
        return dx

    def params(self):
        return {"rnn.w_x": self.w_x, "rnn.w_h": self.w_h, "rnn.b": self.b}

    def grads(self):
        return {"rnn.w_x": self.d_w_x, "rnn.w_h": self.d_w_h, "rnn.b": self.d_b}


class LSTMLayer(Layer):
    """Standard gates: i, f, o = sigmoid, g = tanh; c_t = f*c + i*g, h_t = o*tanh(c_t)."""

    def __init__(self, w_x, w_h, b):
        self.w_x = w_x  # input_dim x 4h, gate order (i, f, g, o)
        self.w_h = w_h  # h x 4h
        self.b = b      # 4h
        self.d_w_x = np.zeros_like(w_x)
        self.d_w_h = np.zeros_like(w_h)
        self.d_b = np.zeros_like(b)
        self._cache = None

    @classmethod
    def init(cls, input_dim, hidden, rng, dtype=np.float32):
        w_x = _glorot_uniform(rng, input_dim, hidden, (input_dim, 4 * hidden), dtype)
        w_h = _glorot_uniform(rng, hidden, hidden, (hidden, 4 * hidden), dtype)
        b = np.zeros(4 * hidden, dtype=dtype)
        b[hidden:2 * hidden] = 1.0  # forget-gate bias
        return cls(w_x, w_h, b)

    def forward(self, x, train=True):
        n, t, _ = x.shape
        hidden = self.w_h.shape[0]
        hs = np.zeros((n, t + 1, hidden), dtype=x.dtype)
        cs = np.zeros((n, t + 1, hidden), dtype=x.dtype)
        gates = np.zeros((n, t, 4 * hidden), dtype=x.dtype)
        for step in range(t):
            z = x[:, step] @ self.w_x + hs[:, step] @ self.w_h + self.b
            i = sigmoid(z[:, :hidden])
            f = sigmoid(z[:, hidden:2 * hidden])
            g = np.tanh(z[:, 2 * hidden:3 * hidden])
            o = sigmoid(z[:, 3 * hidden:])
            cs[:, step + 1] = f * cs[:, step] + i * g
            hs[:, step + 1] = o * np.tanh(cs[:, step + 1])
            gates[:, step] = np.concatenate([i, f, g, o], axis=1)
        self._cache = (x, hs, cs, gates)
        return hs[:, t]

    def backward(self, d_last):
        x, hs, cs, gates = self._cache
        n, t, _ = x.shape
        hidden = self.w_h.shape[0]
        dx = np.zeros_like(x)
        dh = d_last.copy()
        dc = np.zeros((n, hidden), dtype=x.dtype)
        for step in range(t - 1, -1, -1):
            i = gates[:, step, :hidden]
            f = gates[:, step, hidden:2 * hidden]
            g = gates[:, step, 2 * hidden:3 * hidden]
            o = gates[:, step, 3 * hidden:]
            c_t = cs[:, step + 1]
            tanh_c = np.tanh(c_t)
            do = dh * tanh_c
            dc = dc + dh * o * (1.0 - tanh_c ** 2)
            di = dc * g
            df = dc * cs[:, step]
            dg = dc * i
            dz = np.concatenate([
                di * i * (1.0 - i),
                df * f * (1.0 - f),
                dg * (1.0 - g ** 2),
                do * o * (1.0 - o),
            ], axis=1)
            self.d_w_x += x[:, step].T @ dz
            self.d_w_h += hs[:, step].T @ dz
            self.d_b += dz.sum(axis=0)
            dx[:, step] = dz @ self.w_x.T
            dh = dz @ self.w_h.T
            dc = dc * f
        return dx

    def params(self):
        return {"lstm.w_x": self.w_x, "lstm.w_h": self.w_h, "lstm.b": self.b}

    def grads(self):
        return {"lstm.w_x": self.d_w_x, "lstm.w_h": self.d_w_h, "lstm.b": self.d_b}


class DropoutLayer(Layer):
    """Inverted dropout: survivors scaled by 1/(1-p); identity at inference."""

    trainable = False

    def __init__(self, p: float, rng=None):
        if not 0.0 <= p < 1.0:
            raise ValueError(f"dropout probability must be in [0,1), got {p}")
        self.p = p
        self.rng = rng or np.random.default_rng(0)
        self._mask = None

    def forward(self, x, train=True):
        if not train or self.p == 0.0:
            self._mask = None
            return x
        keep = 1.0 - self.p
        self._mask = (self.rng.random(x.shape) < keep).astype(x.dtype) / keep
        return x * self._mask

    def backward(self, dout):
        if self._mask is None:
            return dout
        return dout * self._mask


class DenseLayer(Layer):
    def __init__(self, w, b, activation="linear", name="dense"):
        if activation not in ("linear", "relu", "sigmoid"):
            raise ValueError(f"unknown activation {activation!r}")
        self.w = w
        self.b = b
        self.activation = activation
        self.name = name
        self.d_w = np.zeros_like(w)
        self.d_b = np.zeros_like(b)
        self._cache = None

    @classmethod
    def init(cls, input_dim, units, rng, activation="linear",
             dtype=np.float32, name="dense"):
        w = _glorot_uniform(rng, input_dim, units, (input_dim, units), dtype)
        b = np.zeros(units, dtype=dtype)
        return cls(w, b, activation=activation, name=name)

    def forward(self, x, train=True):
        z = x @ self.w + self.b
        if self.activation == "relu":
            out = np.maximum(z, 0.0)
        elif self.activation == "sigmoid":
            out = sigmoid(z)
        else:
            out = z
        self._cache = (x, z, out)
        return out

    def backward(self, dout):
        x, z, out = self._cache
        if self.activation == "relu":
            dz = dout * (z > 0)
        elif self.activation == "sigmoid":
            dz = dout * out * (1.0 - out)
        else:
            dz = dout
        self.d_w += x.T @ dz
        self.d_b += dz.sum(axis=0)
        return dz @ self.w.T

    def params(self):
        return {f"{self.name}.w": self.w, f"{self.name}.b": self.b}

    def grads(self):
        return {f"{self.name}.w": self.d_w, f"{self.name}.b": self.d_b}
