"""Command-line orchestration of the sentiment pipeline.

Every subcommand reads a JSON config file (``--config``), optionally
overridden by flags, and writes its artifacts into an output directory
(``--out``, or the OUTPUT_DIR environment variable). Invalid configuration
exits with status 2, data problems with status 3; both print a
machine-readable error JSON {code, message, context} to stderr.

Artifact formats shared between subcommands:
  headlines.csv   date,ticker,text        (ticker doubles as the join key)
  cleaned.csv     date,ticker,tokens      (tokens space-joined)
  scores.csv      date,ticker,neg,neu,pos,compound,label
  predictions.csv y_true,prob
  comparison.csv  embedding,model,accuracy,precision,recall,f1,epochs,runtime

The ``runtime`` column of comparison.csv is a deterministic work measure
(total optimizer steps), so identical configs produce byte-identical files;
wall-clock timings go to grid_timings.log alongside it.
"""

from __future__ import annotations

import argparse
import csv
import datetime as dt
import json
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import corpus as corpus_mod
from . import eda as eda_mod
from . import metrics as metrics_mod
from . import signals as signals_mod
from . import textprep
from . import vectorizers
from .embeddings import matrix as emb_matrix
from .embeddings.fasttext import train_fasttext
from .embeddings.glove import build_cooccurrence, train_glove
from .embeddings.word2vec import train_word2vec_sgns
from .errors import ConfigError, DataError
from .lexicon import label as label_compound, load_lexicon, polarity_scores
from .nn import ModelCheckpoint, NetworkConfig, classify, predict, train

EXIT_CONFIG = 2
EXIT_DATA = 3

EMBEDDING_CHOICES = ("bow", "tfidf", "word2vec", "glove", "fasttext",
                     "pretrained", "sentence_vectors")
MODEL_CHOICES = ("rnn", "lstm")


# ---------------------------------------------------------------------------
# config plumbing

def _load_config(path) -> dict:
    if path is None:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            cfg = json.load(fh)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}")
    if not isinstance(cfg, dict):
        raise ConfigError("config root must be a JSON object")
    return cfg


def _merged(args, keys) -> dict:
    """Config values overridden by any non-None argparse flags."""
    cfg = dict(_load_config(args.config))
    for key in keys:
        value = getattr(args, key, None)
        if value is not None:
            cfg[key] = value
    return cfg


def _require(cfg: dict, key: str):
    if key not in cfg or cfg[key] in (None, ""):
        raise ConfigError(f"missing required config key: {key}")
    return cfg[key]


def _existing_path(cfg: dict, key: str) -> Path:
    path = Path(_require(cfg, key))
    if not path.exists():
        raise ConfigError(f"{key} path does not exist: {path}")
    return path


def _out_dir(args) -> Path:
    out = args.out or os.environ.get("OUTPUT_DIR") or "out"
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _clean_config(cfg: dict) -> textprep.CleanConfig:
    opts = cfg.get("clean", {})
    if not isinstance(opts, dict):
        raise ConfigError("'clean' must be an object of CleanConfig fields")
    try:
        return textprep.CleanConfig(**opts)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid clean options: {exc}")


# ---------------------------------------------------------------------------
# shared artifact I/O

def _write_csv(path, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def _read_table(path, required) -> list[dict]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        fields = reader.fieldnames or []
        missing = [c for c in required if c not in fields]
        if missing:
            raise DataError(f"{path}: missing columns {missing}")
        return list(reader)


def _read_corpus(path) -> list[dict]:
    """cleaned.csv rows with tokens split back into tuples."""
    rows = _read_table(path, ("date", "ticker", "tokens"))
    for row in rows:
        row["tokens"] = tuple(row["tokens"].split())
    return rows


def _read_scores(path) -> list[dict]:
    rows = _read_table(path, ("date", "ticker", "compound", "label"))
    for row in rows:
        row["compound"] = float(row["compound"])
    return rows


# ---------------------------------------------------------------------------
# subcommands

def cmd_ingest(args) -> int:
    cfg = _merged(args, ("headlines", "ohlcv", "date_column", "text_column", "source"))
    out = _out_dir(args)
    artifacts = {}
    if "headlines" not in cfg and "ohlcv" not in cfg:
        raise ConfigError("ingest needs 'headlines' and/or 'ohlcv'")
    if "headlines" in cfg:
        path = _existing_path(cfg, "headlines")
        records, report = corpus_mod.load_headlines(
            path,
            date_column=cfg.get("date_column", "date"),
            text_column=cfg.get("text_column", "text"),
            source=cfg.get("source", "news"),
        )
        _write_csv(out / "headlines.csv", ["date", "ticker", "text"],
                   [[r.date.isoformat(), r.source, r.text] for r in records])
        (out / "ingest_report.json").write_text(report.to_json())
        artifacts["headlines"] = report.rows_kept
    if "ohlcv" in cfg:
        path = _existing_path(cfg, "ohlcv")
        bars, report = corpus_mod.load_ohlcv(path)
        _write_csv(out / "bars.csv",
                   ["date", "open", "high", "low", "close", "adj_close", "volume", "name"],
                   [[b.date.isoformat(), b.open, b.high, b.low, b.close,
                     b.adj_close, b.volume, b.name] for b in bars])
        (out / "ohlcv_report.json").write_text(report.to_json())
        artifacts["bars"] = report.rows_kept
    print(json.dumps({"status": "ok", "rows": artifacts, "out": str(out)}))
    return 0


def cmd_clean(args) -> int:
    cfg = _merged(args, ("input",))
    out = _out_dir(args)
    clean_cfg = _clean_config(cfg)
    rows = _read_table(_existing_path(cfg, "input"), ("date", "ticker", "text"))
    cleaned = [
        [row["date"], row["ticker"],
         " ".join(textprep.clean_pipeline(row["text"], clean_cfg).tokens)]
        for row in rows
    ]
    _write_csv(out / "cleaned.csv", ["date", "ticker", "tokens"], cleaned)
    print(json.dumps({"status": "ok", "rows": len(cleaned), "out": str(out)}))
    return 0


def cmd_score(args) -> int:
    cfg = _merged(args, ("input", "lexicon", "threshold"))
    out = _out_dir(args)
    threshold = float(cfg.get("threshold", 0.0))
    if threshold < 0:
        raise ConfigError("threshold must be non-negative")
    lex = load_lexicon(cfg.get("lexicon"))
    rows = _read_table(_existing_path(cfg, "input"), ("date", "ticker", "text"))
    scored = []
    for row in rows:
        s = polarity_scores(row["text"], lex)
        lbl = label_compound(s.compound, threshold)
        scored.append([row["date"], row["ticker"], repr(s.neg), repr(s.neu),
                       repr(s.pos), repr(s.compound), lbl.name.lower()])
    _write_csv(out / "scores.csv",
               ["date", "ticker", "neg", "neu", "pos", "compound", "label"], scored)
    print(json.dumps({"status": "ok", "rows": len(scored), "out": str(out)}))
    return 0


def cmd_eda(args) -> int:
    cfg = _merged(args, ("input", "scores", "top_n"))
    out = _out_dir(args)
    rows = _read_corpus(_existing_path(cfg, "input"))
    corpus = [row["tokens"] for row in rows]
    stopwords = textprep.load_stopwords(cfg.get("stopword_path"))

    top = eda_mod.top_frequencies(corpus, int(cfg.get("top_n", 50)),
                                  exclude_stopwords=bool(cfg.get("exclude_stopwords", False)),
                                  stopwords=stopwords)
    eda_mod.export_frequencies_csv(top, out / "frequencies.csv")
    eda_mod.export_lengths_csv(corpus, out / "lengths.csv")

    summary = {"sentence_length": eda_mod.sentence_length_summary(corpus).to_dict()}
    _, stop_summary = eda_mod.stopword_share(corpus, stopwords)
    if stop_summary is not None:
        summary["stopword_counts"] = stop_summary.to_dict()

    if cfg.get("scores"):
        score_rows = _read_scores(_existing_path(cfg, "scores"))
        labels = [1 if r["label"] == "positive" else 0
                  for r in score_rows if r["label"] != "neutral"]
        counts = eda_mod.sentiment_distribution(labels)
        eda_mod.export_sentiment_counts_csv(counts, out / "sentiment_counts.csv")
        summary["sentiment_counts"] = {str(k): v for k, v in counts.items()}
        g1, skew_label = eda_mod.skewness([r["compound"] for r in score_rows])
        summary["compound_skewness"] = {"g1": g1, "label": skew_label}

    (out / "summary.json").write_text(json.dumps(summary, indent=2))
    print(json.dumps({"status": "ok", "documents": len(corpus), "out": str(out)}))
    return 0


def _train_embedding_matrix(method, corpus, cfg) -> emb_matrix.EmbeddingMatrix:
    dim = int(cfg.get("dim", 100))
    window = int(cfg.get("window", 5))
    epochs = int(cfg.get("epochs", 5))
    seed = int(cfg.get("seed", 0))
    if method == "word2vec":
        return train_word2vec_sgns(corpus, dim=dim, window=window,
                                   k_neg=int(cfg.get("k_neg", 5)),
                                   epochs=epochs, lr=float(cfg.get("lr", 0.025)),
                                   seed=seed)
    if method == "glove":
        table = build_cooccurrence(corpus, window=window)
        return train_glove(table, dim=dim, epochs=int(cfg.get("epochs", 25)),
                           lr=float(cfg.get("lr", 0.05)), seed=seed)
    if method == "fasttext":
        return train_fasttext(corpus, dim=dim, window=window,
                              k_neg=int(cfg.get("k_neg", 5)), epochs=epochs,
                              lr=float(cfg.get("lr", 0.025)), seed=seed,
                              bucket_count=int(cfg.get("bucket_count", 1 << 17)))
    raise ConfigError(f"unknown embedding method {method!r}")


def cmd_train_embedding(args) -> int:
    cfg = _merged(args, ("input", "method", "dim", "epochs", "seed"))
    out = _out_dir(args)
    method = _require(cfg, "method")
    if method not in ("word2vec", "glove", "fasttext"):
        raise ConfigError(f"method must be word2vec|glove|fasttext, got {method!r}")
    corpus = [row["tokens"] for row in _read_corpus(_existing_path(cfg, "input"))]
    emb = _train_embedding_matrix(method, corpus, cfg)
    emb_matrix.save_text(emb, out / "vectors.txt")
    (out / "embedding_report.json").write_text(json.dumps({
        "method": method, "dim": emb.dim, "tokens": len(emb.token_index),
    }))
    print(json.dumps({"status": "ok", "tokens": len(emb.token_index), "out": str(out)}))
    return 0


def _labeled_rows(cfg):
    """Join cleaned corpus with VADER labels, dropping the neutral band."""
    corpus_rows = _read_corpus(_existing_path(cfg, "corpus"))
    score_rows = _read_scores(_existing_path(cfg, "scores"))
    if len(corpus_rows) != len(score_rows):
        raise DataError(
            f"corpus has {len(corpus_rows)} rows but scores has {len(score_rows)};"
            " both must come from the same headlines file"
        )
    docs, labels = [], []
    for c_row, s_row in zip(corpus_rows, score_rows):
        if s_row["label"] == "neutral":
            continue
        docs.append(c_row["tokens"])
        labels.append(1 if s_row["label"] == "positive" else 0)
    if not docs:
        raise DataError("no labeled rows remain after dropping the neutral band")
    return docs, np.array(labels, dtype=int)


def _build_features(embedding, docs, cfg):
    """Featurize documents for the network.

    Returns (X, pretrained, net_kwargs) where net_kwargs carries the
    input-shape fields of NetworkConfig.
    """
    maxlen = int(cfg.get("maxlen", vectorizers.DEFAULT_MAXLEN))
    max_words = cfg.get("max_words", 2000)
    max_words = int(max_words) if max_words else None
    dim = int(cfg.get("dim", 100))

    if embedding in ("bow", "tfidf"):
        vocab = vectorizers.fit_vocabulary(docs, max_words=max_words)
        if embedding == "bow":
            vecs = [vectorizers.bow_vector(doc, vocab) for doc in docs]
        else:
            vecs = vectorizers.tfidf_matrix(docs, vocab)
        X = np.stack([v.to_dense(vocab.size) for v in vecs]).astype(np.float32)
        return X, None, {"input_dim": vocab.size}

    if embedding == "sentence_vectors":
        pairs = emb_matrix.load_sentence_vectors(_existing_path(cfg, "sentence_vectors"))
        if len(pairs) != len(docs):
            raise DataError(
                f"sentence_vectors has {len(pairs)} rows for {len(docs)} labeled documents"
            )
        X = np.stack([vec for _, vec in pairs]).astype(np.float32)
        return X, None, {"input_dim": X.shape[1]}

    if embedding == "pretrained":
        emb = emb_matrix.load_pretrained_text(_existing_path(cfg, "vectors"))
        dim = emb.dim
    elif embedding in ("word2vec", "glove", "fasttext"):
        emb = _train_embedding_matrix(embedding, docs, cfg.get("embedding_options", cfg))
        dim = emb.dim
    else:
        raise ConfigError(f"unknown embedding {embedding!r}")

    vocab = vectorizers.fit_vocabulary(docs, max_words=max_words)
    X = vectorizers.pad_sequences(vectorizers.texts_to_sequences(docs, vocab), maxlen)
    pretrained, coverage = emb_matrix.embedding_layer_matrix(vocab, emb, dim)
    kwargs = {"vocab_size": vocab.size, "embedding_dim": dim,
              "embedding_trainable": bool(cfg.get("embedding_trainable", True))}
    return X, pretrained, kwargs


def _network_config(cfg, model, net_kwargs, seed) -> NetworkConfig:
    if model not in MODEL_CHOICES:
        raise ConfigError(f"model must be one of {MODEL_CHOICES}, got {model!r}")
    try:
        return NetworkConfig(
            recurrent=model,
            hidden_units=int(cfg.get("hidden_units", 64)),
            dense_units=int(cfg.get("dense_units", 512)),
            dropout=float(cfg.get("dropout", 0.5)),
            lr=float(cfg.get("lr", 1e-3)),
            epochs=int(cfg.get("epochs", 10)),
            batch_size=int(cfg.get("batch_size", 32)),
            seed=seed,
            threshold=float(cfg.get("threshold", 0.5)),
            patience=int(cfg.get("patience", 5)),
            **net_kwargs,
        )
    except ValueError as exc:
        raise ConfigError(str(exc))


def _train_cell(cfg, embedding, model, docs, labels, seed, split_spec):
    X, pretrained, net_kwargs = _build_features(embedding, docs, cfg)
    net_cfg = _network_config(cfg, model, net_kwargs, seed)
    ckpt, report = train(net_cfg, X, labels, split_spec, pretrained=pretrained)

    indices = list(range(len(labels)))
    _, val_idx = corpus_mod.split(indices, split_spec)
    if not val_idx:
        val_idx = indices
    probs = predict(ckpt, X[val_idx])
    y_pred = classify(probs, net_cfg.threshold)
    eval_report = metrics_mod.report(labels[val_idx], y_pred)
    return ckpt, report, eval_report, labels[val_idx], probs


def cmd_train_model(args) -> int:
    cfg = _merged(args, ("corpus", "scores", "embedding", "model", "epochs", "seed"))
    out = _out_dir(args)
    embedding = _require(cfg, "embedding")
    if embedding not in EMBEDDING_CHOICES:
        raise ConfigError(f"embedding must be one of {EMBEDDING_CHOICES}, got {embedding!r}")
    model = cfg.get("model", "lstm")
    seed = int(cfg.get("seed", 0))
    split_spec = corpus_mod.SplitSpec(float(cfg.get("val_fraction", 0.2)), seed=seed)

    docs, labels = _labeled_rows(cfg)
    ckpt, report, eval_report, y_val, probs = _train_cell(
        cfg, embedding, model, docs, labels, seed, split_spec)

    ckpt.save(out / "model.ckpt")
    (out / "train_report.json").write_text(report.to_json())
    (out / "eval_report.json").write_text(eval_report.to_json())
    (out / "eval_report.txt").write_text(eval_report.to_text() + "\n")
    _write_csv(out / "predictions.csv", ["y_true", "prob"],
               [[int(t), repr(float(p))] for t, p in zip(y_val, probs)])
    print(json.dumps({"status": "ok", "epochs": report.epochs_run,
                      "val_accuracy": eval_report.accuracy, "out": str(out)}))
    return 0


def cmd_evaluate(args) -> int:
    cfg = _merged(args, ("predictions", "threshold"))
    out = _out_dir(args)
    rows = _read_table(_existing_path(cfg, "predictions"), ("y_true",))
    y_true = [int(r["y_true"]) for r in rows]
    if rows and "y_pred" in rows[0]:
        y_pred = [int(r["y_pred"]) for r in rows]
    elif rows and "prob" in rows[0]:
        threshold = float(cfg.get("threshold", 0.5))
        y_pred = classify([float(r["prob"]) for r in rows], threshold).tolist()
    else:
        raise DataError("predictions file needs a y_pred or prob column")
    eval_report = metrics_mod.report(y_true, y_pred)
    (out / "eval_report.json").write_text(eval_report.to_json())
    (out / "eval_report.txt").write_text(eval_report.to_text() + "\n")
    print(json.dumps({"status": "ok", "accuracy": eval_report.accuracy, "out": str(out)}))
    return 0


def cmd_signals(args) -> int:
    cfg = _merged(args, ("scores", "ohlcv", "threshold"))
    out = _out_dir(args)
    threshold = float(cfg.get("threshold", 0.0))
    score_rows = _read_scores(_existing_path(cfg, "scores"))
    scores = [(dt.date.fromisoformat(r["date"]), r["ticker"], r["compound"])
              for r in score_rows]
    bars = []
    if cfg.get("ohlcv"):
        bars, _ = corpus_mod.load_ohlcv(_existing_path(cfg, "ohlcv"))
    records, unmatched = signals_mod.join_signals(scores, bars, threshold)
    written = signals_mod.emit_chart_data(records, out)
    (out / "signals_report.json").write_text(json.dumps({
        "scores_in": len(scores), "signals_out": len(records), "unmatched": unmatched,
    }))
    print(json.dumps({"status": "ok", "signals": len(records),
                      "unmatched": unmatched, "out": str(out)}))
    return 0


def cmd_grid(args) -> int:
    cfg = _merged(args, ("corpus", "scores", "epochs", "seed"))
    out = _out_dir(args)
    embeddings = cfg.get("embeddings", ["bow", "tfidf"])
    models = cfg.get("models", ["rnn", "lstm"])
    for emb in embeddings:
        if emb not in EMBEDDING_CHOICES:
            raise ConfigError(f"unknown embedding {emb!r} in grid")
    for model in models:
        if model not in MODEL_CHOICES:
            raise ConfigError(f"unknown model {model!r} in grid")
    master_seed = int(cfg.get("seed", 0))
    split_spec = corpus_mod.SplitSpec(float(cfg.get("val_fraction", 0.2)),
                                      seed=master_seed)
    docs, labels = _labeled_rows(cfg)
    train_idx, _ = corpus_mod.split(list(range(len(labels))), split_spec)
    n_train = len(train_idx)

    rows = []
    timings = []
    for index, (embedding, model) in enumerate(
            (e, m) for e in embeddings for m in models):
        cell_seed = master_seed * 10_000 + index
        started = time.perf_counter()
        ckpt, report, eval_report, _, _ = _train_cell(
            cfg, embedding, model, docs, labels, cell_seed, split_spec)
        elapsed = time.perf_counter() - started
        # deterministic work measure: optimizer steps = batches/epoch * epochs
        batches = -(-n_train // ckpt.config.batch_size)
        steps = batches * report.epochs_run
        rows.append([embedding, model,
                     f"{eval_report.accuracy:.6f}",
                     f"{eval_report.macro_precision:.6f}",
                     f"{eval_report.macro_recall:.6f}",
                     f"{eval_report.macro_f1:.6f}",
                     report.epochs_run, steps])
        timings.append(f"{embedding},{model},{elapsed:.3f}s")
        (out / f"cell_{embedding}_{model}_report.json").write_text(report.to_json())
    _write_csv(out / "comparison.csv",
               ["embedding", "model", "accuracy", "precision", "recall", "f1",
                "epochs", "runtime"], rows)
    (out / "grid_timings.log").write_text("\n".join(timings) + "\n")
    print(json.dumps({"status": "ok", "cells": len(rows), "out": str(out)}))
    return 0


# ---------------------------------------------------------------------------
# parser

def _add_common(parser):
    parser.add_argument("--config", help="JSON config file")
    parser.add_argument("--out", help="output directory (default: out)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sentinews",
        description="News-sentiment pipeline: ingest, clean, score, train, signal.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="load and validate headline/OHLCV CSVs")
    _add_common(p)
    p.add_argument("--headlines")
    p.add_argument("--ohlcv")
    p.add_argument("--date-column", dest="date_column")
    p.add_argument("--text-column", dest="text_column")
    p.add_argument("--source")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("clean", help="run the text-cleaning pipeline")
    _add_common(p)
    p.add_argument("--input")
    p.set_defaults(func=cmd_clean)

    p = sub.add_parser("score", help="lexicon sentiment scores per headline")
    _add_common(p)
    p.add_argument("--input")
    p.add_argument("--lexicon")
    p.add_argument("--threshold", type=float)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("eda", help="exploratory statistics and exports")
    _add_common(p)
    p.add_argument("--input")
    p.add_argument("--scores")
    p.add_argument("--top-n", dest="top_n", type=int)
    p.set_defaults(func=cmd_eda)

    p = sub.add_parser("train-embedding", help="train word2vec/glove/fasttext vectors")
    _add_common(p)
    p.add_argument("--input")
    p.add_argument("--method")
    p.add_argument("--dim", type=int)
    p.add_argument("--epochs", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_train_embedding)

    p = sub.add_parser("train-model", help="train one (embedding, model) classifier")
    _add_common(p)
    p.add_argument("--corpus")
    p.add_argument("--scores")
    p.add_argument("--embedding")
    p.add_argument("--model")
    p.add_argument("--epochs", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_train_model)

    p = sub.add_parser("evaluate", help="metrics report from a predictions file")
    _add_common(p)
    p.add_argument("--predictions")
    p.add_argument("--threshold", type=float)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("signals", help="buy/sell/hold signals joined with prices")
    _add_common(p)
    p.add_argument("--scores")
    p.add_argument("--ohlcv")
    p.add_argument("--threshold", type=float)
    p.set_defaults(func=cmd_signals)

    p = sub.add_parser("grid", help="embedding x model comparison grid")
    _add_common(p)
    p.add_argument("--corpus")
    p.add_argument("--scores")
    p.add_argument("--epochs", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_grid)

    return parser


def _emit_error(code: str, exc: Exception) -> None:
    payload = {"code": code, "message": str(exc),
               "context": {"type": type(exc).__name__}}
    print(json.dumps(payload), file=sys.stderr)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        _emit_error("config_error", exc)
        return EXIT_CONFIG
    except DataError as exc:
        _emit_error("data_error", exc)
        return EXIT_DATA
    except FileNotFoundError as exc:
        _emit_error("config_error", exc)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
