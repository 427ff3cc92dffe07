import itertools
import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sentinews.metrics import confusion_matrix, report


def test_confusion_perfect_and_all_wrong():
    assert confusion_matrix([0, 1, 1], [0, 1, 1]).tolist() == [[1, 0], [0, 2]]
    assert confusion_matrix([0, 1], [1, 0]).tolist() == [[0, 1], [1, 0]]


def test_confusion_hand_fixture():
    # TP=3, FP=1, FN=2, TN=4 (positive = class 1)
    y_true = [1] * 5 + [0] * 5
    y_pred = [1, 1, 1, 0, 0, 1, 0, 0, 0, 0]
    conf = confusion_matrix(y_true, y_pred)
    assert conf[1, 1] == 3 and conf[0, 1] == 1 and conf[1, 0] == 2 and conf[0, 0] == 4
    assert conf.sum() == 10


def test_report_hand_fixture():
    y_true = [1] * 5 + [0] * 5
    y_pred = [1, 1, 1, 0, 0, 1, 0, 0, 0, 0]
    rep = report(y_true, y_pred)
    assert rep.precision["positive"] == pytest.approx(0.75)
    assert rep.recall["positive"] == pytest.approx(0.6)
    assert rep.f1["positive"] == pytest.approx(2 * 0.75 * 0.6 / 1.35)
    assert rep.accuracy == pytest.approx(0.7)
    assert rep.support == {"negative": 5, "positive": 5}
    assert not rep.undefined


def test_report_single_class_zero_division_flagged():
    rep = report([1, 1, 1], [1, 1, 1])
    assert rep.precision["positive"] == 1.0
    assert rep.recall["positive"] == 1.0
    assert rep.precision["negative"] == 0.0
    assert "precision_negative" in rep.undefined
    assert "f1_negative" in rep.undefined


def test_report_rejects_bad_input():
    with pytest.raises(ValueError):
        report([0, 1], [0])
    with pytest.raises(ValueError):
        report([0, 2], [0, 1])
    with pytest.raises(ValueError):
        report([], [])


def test_permutation_invariance():
    rng = np.random.default_rng(0)
    y_true = rng.integers(0, 2, 30)
    y_pred = rng.integers(0, 2, 30)
    base = report(y_true, y_pred)
    perm = rng.permutation(30)
    shuffled = report(y_true[perm], y_pred[perm])
    assert base.to_dict() == shuffled.to_dict()


def test_brute_force_recount_oracle():
    rng = np.random.default_rng(123)
    for _ in range(1000):
        n = int(rng.integers(1, 12))
        y_true = rng.integers(0, 2, n)
        y_pred = rng.integers(0, 2, n)
        rep = report(y_true, y_pred)
        for cls, name in ((0, "negative"), (1, "positive")):
            tp = sum(1 for t, p in zip(y_true, y_pred) if t == cls and p == cls)
            fp = sum(1 for t, p in zip(y_true, y_pred) if t != cls and p == cls)
            fn = sum(1 for t, p in zip(y_true, y_pred) if t == cls and p != cls)
            prec = tp / (tp + fp) if tp + fp else 0.0
            rec = tp / (tp + fn) if tp + fn else 0.0
            f1 = 2 * prec * rec / (prec + rec) if prec + rec else 0.0
            assert rep.precision[name] == prec
            assert rep.recall[name] == rec
            assert rep.f1[name] == f1
        assert rep.accuracy == sum(t == p for t, p in zip(y_true, y_pred)) / n


def test_f1_between_precision_and_recall():
    for y_true, y_pred in itertools.product(
            itertools.product((0, 1), repeat=4), repeat=2):
        rep = report(list(y_true), list(y_pred))
        for name in ("negative", "positive"):
            p, r, f = rep.precision[name], rep.recall[name], rep.f1[name]
            if p > 0 and r > 0:
                assert min(p, r) - 1e-12 <= f <= max(p, r) + 1e-12


def test_json_and_text_rendering():
    rep = report([0, 1, 1, 0], [0, 1, 0, 0])
    parsed = json.loads(rep.to_json())
    assert parsed["accuracy"] == rep.accuracy
    text = rep.to_text()
    assert "precision" in text and "macro avg" in text
    assert f"{rep.accuracy:.4f}" in text


@given(st.lists(st.tuples(st.integers(0, 1), st.integers(0, 1)),
                min_size=1, max_size=40))
def test_rates_in_unit_interval(pairs):
    y_true = [t for t, _ in pairs]
    y_pred = [p for _, p in pairs]
    rep = report(y_true, y_pred)
    values = (list(rep.precision.values()) + list(rep.recall.values())
              + list(rep.f1.values()) + [rep.accuracy, rep.macro_f1])
    assert all(0.0 <= v <= 1.0 for v in values)
    assert rep.confusion.sum() == len(pairs)
