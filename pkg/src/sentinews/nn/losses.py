"""Binary cross-entropy with clamped probabilities."""

from __future__ import annotations

import numpy as np

EPS = 1e-7


def bce_loss(pred, label):
    """Mean of -[y ln p + (1-y) ln(1-p)] with p clamped to [EPS, 1-EPS]."""
    p = np.clip(np.asarray(pred, dtype=np.float64), EPS, 1.0 - EPS)
    y = np.asarray(label, dtype=np.float64)
    return float(np.mean(-(y * np.log(p) + (1.0 - y) * np.log(1.0 - p))))


def bce_loss_grad(pred, label):
    """dL/dp per element (mean reduction): (p - y) / (p (1 - p) N)."""
    p = np.clip(np.asarray(pred, dtype=np.float64), EPS, 1.0 - EPS)
    y = np.asarray(label, dtype=np.float64)
    return ((p - y) / (p * (1.0 - p))) / p.size
