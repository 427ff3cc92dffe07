"""Binary classification metrics and report rendering.

Convention for the 2x2 confusion matrix: rows are true labels, columns are
predicted labels, index 0 = negative, index 1 = positive. Zero-denominator
rates are reported as 0.0 and the affected metric is flagged.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

CLASS_NAMES = ("negative", "positive")


def _validate(y_true, y_pred):
    y_true = np.asarray(y_true).astype(int)
    y_pred = np.asarray(y_pred).astype(int)
    if y_true.shape != y_pred.shape:
        raise ValueError("y_true and y_pred must have the same length")
    for arr, name in ((y_true, "y_true"), (y_pred, "y_pred")):
        if arr.size and not np.isin(arr, (0, 1)).all():
            raise ValueError(f"{name} must contain only 0/1 labels")
    return y_true, y_pred


def confusion_matrix(y_true, y_pred) -> np.ndarray:
    """2x2 integer matrix; cell [i, j] counts true class i predicted as j."""
    y_true, y_pred = _validate(y_true, y_pred)
    matrix = np.zeros((2, 2), dtype=int)
    for t, p in zip(y_true, y_pred):
        matrix[t, p] += 1
    return matrix


@dataclass
class EvalReport:
    confusion: np.ndarray
    precision: dict
    recall: dict
    f1: dict
    support: dict
    accuracy: float
    macro_precision: float
    macro_recall: float
    macro_f1: float
    undefined: list = field(default_factory=list)  # metrics that hit 0/0

    def to_dict(self) -> dict:
        return {
            "confusion": self.confusion.tolist(),
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "support": self.support,
            "accuracy": self.accuracy,
            "macro_precision": self.macro_precision,
            "macro_recall": self.macro_recall,
            "macro_f1": self.macro_f1,
            "undefined": self.undefined,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        """Aligned plain-text table in the usual classification-report layout."""
        lines = [f"{'':>12} {'precision':>9} {'recall':>9} {'f1-score':>9} {'support':>9}"]
        for name in CLASS_NAMES:
            lines.append(
                f"{name:>12} {self.precision[name]:>9.4f} {self.recall[name]:>9.4f}"
                f" {self.f1[name]:>9.4f} {self.support[name]:>9d}"
            )
        total = sum(self.support.values())
        lines.append("")
        lines.append(f"{'accuracy':>12} {'':>9} {'':>9} {self.accuracy:>9.4f} {total:>9d}")
        lines.append(
            f"{'macro avg':>12} {self.macro_precision:>9.4f} {self.macro_recall:>9.4f}"
            f" {self.macro_f1:>9.4f} {total:>9d}"
        )
        if self.undefined:
            lines.append("")
            lines.append("undefined (0/0 reported as 0): " + ", ".join(self.undefined))
        return "\n".join(lines)


def _safe_rate(numer, denom, flag_name, undefined):
    if denom == 0:
        undefined.append(flag_name)
        return 0.0
    return numer / denom


def report(y_true, y_pred) -> EvalReport:
    y_true, y_pred = _validate(y_true, y_pred)
    if y_true.size == 0:
        raise ValueError("cannot evaluate an empty sample")
    conf = confusion_matrix(y_true, y_pred)
    undefined = []
    precision, recall, f1, support = {}, {}, {}, {}
    for cls, name in enumerate(CLASS_NAMES):
        tp = int(conf[cls, cls])
        fp = int(conf[1 - cls, cls])
        fn = int(conf[cls, 1 - cls])
        p = _safe_rate(tp, tp + fp, f"precision_{name}", undefined)
        r = _safe_rate(tp, tp + fn, f"recall_{name}", undefined)
        f = _safe_rate(2 * p * r, p + r, f"f1_{name}", undefined)
        precision[name], recall[name], f1[name] = p, r, f
        support[name] = int(conf[cls].sum())
    return EvalReport(
        confusion=conf,
        precision=precision,
        recall=recall,
        f1=f1,
        support=support,
        accuracy=float(np.trace(conf)) / conf.sum(),
        macro_precision=sum(precision.values()) / 2.0,
        macro_recall=sum(recall.values()) / 2.0,
        macro_f1=sum(f1.values()) / 2.0,
        undefined=undefined,
    )
