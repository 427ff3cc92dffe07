"""Finite-difference gradient verification.

Runs the whole network in float64 with dropout in inference mode and
compares analytic BPTT gradients against central differences.
"""

from __future__ import annotations

import numpy as np

from .losses import bce_loss, bce_loss_grad
from .model import Network, NetworkConfig, build_network, _prepare_input


def relative_error(analytic: float, numeric: float) -> float:
    scale = max(abs(analytic), abs(numeric))
    if scale < 1e-12:
        return 0.0
    return abs(analytic - numeric) / scale


def gradient_check(net: Network, X, y, epsilon: float = 1e-5,
                   max_entries: int | None = None, seed: int = 0) -> dict:
    """Return per-parameter max relative error between BPTT and central diff.

    Arrays in ``net`` must be float64; float32 lacks the headroom for
    epsilon-sized perturbations.
    """
    X = _prepare_input(X)
    if np.issubdtype(X.dtype, np.floating):
        X = X.astype(np.float64)
    y = np.asarray(y)
    for name, p in net.params().items():
        if p.dtype != np.float64:
            raise ValueError(f"gradient check requires float64 params ({name})")

    def loss():
        return bce_loss(net.forward(X, train=False), y)

    net.zero_grads()
    probs = net.forward(X, train=False)
    net.backward(bce_loss_grad(probs, y))
    analytic = {n: g.copy() for n, g in net.grads().items()}

    rng = np.random.default_rng(seed)
    errors = {}
    for name, p in net.params().items():
        flat = p.reshape(-1)
        idx = np.arange(flat.size)
        if max_entries is not None and flat.size > max_entries:
            idx = rng.choice(flat.size, size=max_entries, replace=False)
        worst = 0.0
        a_flat = analytic[name].reshape(-1)
        for i in idx:
            orig = flat[i]
            flat[i] = orig + epsilon
            plus = loss()
            flat[i] = orig - epsilon
            minus = loss()
            flat[i] = orig
            numeric = (plus - minus) / (2.0 * epsilon)
            worst = max(worst, relative_error(a_flat[i], numeric))
        errors[name] = worst
    return errors


def check_config(cfg: NetworkConfig, X, y, epsilon: float = 1e-5,
                 max_entries: int | None = 200, seed: int = 0) -> dict:
    """Build a float64 network from ``cfg`` and gradient-check it."""
    net = build_network(cfg, dtype=np.float64)
    return gradient_check(net, X, y, epsilon=epsilon,
                          max_entries=max_entries, seed=seed)
