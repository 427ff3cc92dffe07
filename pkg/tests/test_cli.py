import csv
import datetime as dt
import json
import random

import pytest

from sentinews.cli import main
from sentinews.signals import read_signals_csv


def make_dataset(tmp_path, n=40):
    """Raw headline + price CSVs with a clear sentiment/price structure."""
    random.seed(11)
    pos = ["profits soar as growth beats hopes",
           "shares surge on strong good earnings",
           "great rally and happy investors win"]
    neg = ["shares crash amid panic and fear",
           "weak slump deepens the bad loss",
           "terrible failure as markets plunge"]
    headlines = tmp_path / "headlines_raw.csv"
    d0 = dt.date(2021, 3, 1)
    with open(headlines, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["date", "text"])
        for i in range(n):
            base = (pos if i % 2 == 0 else neg)[i % 3].split()
            random.shuffle(base)
            writer.writerow([(d0 + dt.timedelta(days=i)).isoformat(),
                             " ".join(base) + f" item{i}"])
    prices = tmp_path / "prices.csv"
    with open(prices, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["Date", "Open", "High", "Low", "Close",
                         "Adj Close", "Volume", "Name"])
        px = 50.0
        for i in range(n):
            px += random.uniform(-1, 1)
            writer.writerow([(d0 + dt.timedelta(days=i)).isoformat(),
                             px, px + 1, px - 1, px + 0.5, px + 0.5, 1000, "news"])
    return headlines, prices


@pytest.fixture
def pipeline(tmp_path):
    headlines, prices = make_dataset(tmp_path)
    out = tmp_path / "out"
    assert main(["ingest", "--headlines", str(headlines),
                 "--ohlcv", str(prices), "--out", str(out)]) == 0
    assert main(["clean", "--input", str(out / "headlines.csv"),
                 "--out", str(out)]) == 0
    assert main(["score", "--input", str(out / "headlines.csv"),
                 "--out", str(out)]) == 0
    return out, headlines, prices


def test_ingest_conservation(pipeline):
    out, _, _ = pipeline
    report = json.loads((out / "ingest_report.json").read_text())
    assert report["rows_in"] == report["rows_kept"] + (
        report["dropped_missing"] + report["dropped_duplicate"]
        + report["dropped_invariant"])
    with open(out / "headlines.csv", newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == report["rows_kept"]


def test_clean_and_score_row_alignment(pipeline):
    out, _, _ = pipeline
    with open(out / "cleaned.csv", newline="") as fh:
        cleaned = list(csv.DictReader(fh))
    with open(out / "scores.csv", newline="") as fh:
        scores = list(csv.DictReader(fh))
    assert len(cleaned) == len(scores) == 40
    assert {r["label"] for r in scores} <= {"positive", "negative", "neutral"}


def test_eda_outputs(pipeline, tmp_path):
    out, _, _ = pipeline
    eda_out = tmp_path / "eda"
    assert main(["eda", "--input", str(out / "cleaned.csv"),
                 "--scores", str(out / "scores.csv"), "--out", str(eda_out)]) == 0
    summary = json.loads((eda_out / "summary.json").read_text())
    assert "sentence_length" in summary and "sentiment_counts" in summary
    with open(eda_out / "frequencies.csv", newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert rows and all(int(r["count"]) > 0 for r in rows)


def test_train_embedding_round_trip(pipeline, tmp_path):
    out, _, _ = pipeline
    emb_out = tmp_path / "emb"
    assert main(["train-embedding", "--input", str(out / "cleaned.csv"),
                 "--method", "word2vec", "--dim", "8", "--epochs", "1",
                 "--out", str(emb_out)]) == 0
    from sentinews.embeddings.matrix import load_pretrained_text
    emb = load_pretrained_text(emb_out / "vectors.txt")
    assert emb.dim == 8


def test_train_model_and_evaluate(pipeline, tmp_path):
    out, _, _ = pipeline
    model_out = tmp_path / "model"
    assert main(["train-model", "--corpus", str(out / "cleaned.csv"),
                 "--scores", str(out / "scores.csv"), "--embedding", "bow",
                 "--model", "lstm", "--epochs", "3", "--seed", "1",
                 "--out", str(model_out)]) == 0
    assert (model_out / "model.ckpt").exists()
    report = json.loads((model_out / "eval_report.json").read_text())
    assert 0.0 <= report["accuracy"] <= 1.0
    eval_out = tmp_path / "eval"
    assert main(["evaluate", "--predictions", str(model_out / "predictions.csv"),
                 "--out", str(eval_out)]) == 0
    again = json.loads((eval_out / "eval_report.json").read_text())
    assert again["accuracy"] == report["accuracy"]


def test_signals_conservation(pipeline, tmp_path):
    out, _, prices = pipeline
    sig_out = tmp_path / "sig"
    assert main(["signals", "--scores", str(out / "scores.csv"),
                 "--ohlcv", str(prices), "--out", str(sig_out)]) == 0
    report = json.loads((sig_out / "signals_report.json").read_text())
    assert report["scores_in"] == report["signals_out"]
    records = read_signals_csv(sig_out / "signals.csv")
    assert len(records) == report["signals_out"]
    assert (sig_out / "news_signals.svg").exists()


def grid_config(out, tmp_path, name):
    cfg = {
        "corpus": str(out / "cleaned.csv"),
        "scores": str(out / "scores.csv"),
        "embeddings": ["bow", "tfidf"],
        "models": ["rnn", "lstm"],
        "epochs": 2, "seed": 5, "hidden_units": 8, "dense_units": 8,
    }
    path = tmp_path / name
    path.write_text(json.dumps(cfg))
    return path


def test_grid_shape_and_determinism(pipeline, tmp_path):
    out, _, _ = pipeline
    cfg = grid_config(out, tmp_path, "grid.json")
    g1, g2 = tmp_path / "g1", tmp_path / "g2"
    assert main(["grid", "--config", str(cfg), "--out", str(g1)]) == 0
    assert main(["grid", "--config", str(cfg), "--out", str(g2)]) == 0
    first = (g1 / "comparison.csv").read_bytes()
    assert first == (g2 / "comparison.csv").read_bytes()
    with open(g1 / "comparison.csv", newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 4
    assert {(r["embedding"], r["model"]) for r in rows} == {
        ("bow", "rnn"), ("bow", "lstm"), ("tfidf", "rnn"), ("tfidf", "lstm")}


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    assert main(["grid", "--config", str(bad), "--out", str(tmp_path / "x")]) == 2
    err = json.loads(capsys.readouterr().err)
    assert err["code"] == "config_error"

    assert main(["clean", "--input", str(tmp_path / "missing.csv"),
                 "--out", str(tmp_path / "x")]) == 2
    err = json.loads(capsys.readouterr().err)
    assert err["code"] == "config_error"

    short = tmp_path / "short.csv"
    short.write_text("date,ticker\n2020-01-01,x\n")
    assert main(["clean", "--input", str(short),
                 "--out", str(tmp_path / "x")]) == 3
    err = json.loads(capsys.readouterr().err)
    assert err["code"] == "data_error"


def test_unknown_embedding_is_config_error(pipeline, tmp_path):
    out, _, _ = pipeline
    assert main(["train-model", "--corpus", str(out / "cleaned.csv"),
                 "--scores", str(out / "scores.csv"), "--embedding", "magic",
                 "--out", str(tmp_path / "x")]) == 2
