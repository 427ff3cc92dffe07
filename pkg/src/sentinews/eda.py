"""Exploratory statistics: term frequencies, sentence lengths, label counts,
stopword shares, and skewness classification.

Percentiles use linear interpolation between order statistics; outliers are
values strictly below P10 or strictly above P90. Skewness is the
Fisher-Pearson coefficient g1 = m3 / m2^(3/2), labelled positively or
negatively skewed beyond +/-0.5.
"""

from __future__ import annotations

import csv
import json
from collections import Counter
from dataclasses import dataclass

import numpy as np

PERCENTILE_LEVELS = (10, 25, 50, 75, 90)
SKEW_THRESHOLD = 0.5


@dataclass(frozen=True)
class DistributionSummary:
    count: int
    mean: float
    std: float
    percentiles: dict          # level -> value, levels 10/25/50/75/90
    outliers_low: tuple        # values strictly below P10
    outliers_high: tuple       # values strictly above P90
    skewness: float
    skew_label: str

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "mean": self.mean,
            "std": self.std,
            "percentiles": {str(k): v for k, v in self.percentiles.items()},
            "outliers_low": list(self.outliers_low),
            "outliers_high": list(self.outliers_high),
            "skewness": self.skewness,
            "skew_label": self.skew_label,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def top_frequencies(corpus, n, exclude_stopwords=False, stopwords=None):
    """Ranked (token, count) list, count descending then token ascending.

    ``corpus`` is an iterable of token sequences. Result length is
    min(n, distinct tokens) — ties at rank n are broken lexicographically.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if exclude_stopwords and stopwords is None:
        raise ValueError("exclude_stopwords requires a stopword collection")
    stop = set(stopwords) if exclude_stopwords else ()
    counts = Counter()
    for tokens in corpus:
        counts.update(t for t in tokens if t not in stop)
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[:n]


def skewness(values):
    """Fisher-Pearson g1 with a qualitative label."""
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise ValueError("skewness of an empty sample is undefined")
    centered = arr - arr.mean()
    m2 = float(np.mean(centered**2))
    denom = m2**1.5  # can underflow to 0 for near-constant samples
    if denom == 0.0:
        g1 = 0.0
    else:
        g1 = float(np.mean(centered**3)) / denom
    if g1 > SKEW_THRESHOLD:
        label = "positively_skewed"
    elif g1 < -SKEW_THRESHOLD:
        label = "negatively_skewed"
    else:
        label = "approximately_normal"
    return g1, label


def summarize(values) -> DistributionSummary:
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise ValueError("cannot summarize an empty sample")
    pcts = {lvl: float(np.percentile(arr, lvl)) for lvl in PERCENTILE_LEVELS}
    g1, label = skewness(arr)
    return DistributionSummary(
        count=int(arr.size),
        mean=float(arr.mean()),
        std=float(arr.std()),
        percentiles=pcts,
        outliers_low=tuple(float(v) for v in sorted(arr[arr < pcts[10]])),
        outliers_high=tuple(float(v) for v in sorted(arr[arr > pcts[90]])),
        skewness=g1,
        skew_label=label,
    )


def sentence_length_summary(corpus) -> DistributionSummary:
    """Distribution of per-document token counts."""
    return summarize([len(tokens) for tokens in corpus])


def sentiment_distribution(labels) -> dict:
    """Counts per class; always contains keys 0 and 1."""
    counts = {0: 0, 1: 0}
    for label in labels:
        key = int(label)
        if key not in counts:
            raise ValueError(f"unexpected label {label!r}")
        counts[key] += 1
    return counts


def stopword_share(corpus, stopwords):
    """Per-document (stopword_count, share) plus a summary of the counts."""
    stop = set(stopwords)
    per_doc = []
    for tokens in corpus:
        hits = sum(1 for t in tokens if t in stop)
        share = hits / len(tokens) if tokens else 0.0
        per_doc.append((hits, share))
    summary = summarize([hits for hits, _ in per_doc]) if per_doc else None
    return per_doc, summary


def export_frequencies_csv(pairs, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["token", "count"])
        writer.writerows(pairs)


def export_lengths_csv(corpus, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["doc_index", "length"])
        for i, tokens in enumerate(corpus):
            writer.writerow([i, len(tokens)])


def export_sentiment_counts_csv(counts, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["label", "count"])
        for label in sorted(counts):
            writer.writerow([label, counts[label]])
