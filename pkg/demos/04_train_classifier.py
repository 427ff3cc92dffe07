"""Train the numpy LSTM on lexicon-labeled synthetic headlines.

Builds a small labeled set by scoring generated headlines with the
lexicon, trains an LSTM over token ids, and prints the evaluation table.
"""

import random

import numpy as np

from sentinews.lexicon import load_lexicon, polarity_scores
from sentinews.metrics import report
from sentinews.nn.model import NetworkConfig, SplitSpec, classify, predict, train
from sentinews.textprep import CleanConfig, clean_pipeline
from sentinews.vectorizers import fit_vocabulary, pad_sequences, texts_to_sequences

POSITIVE = ["profits soar as growth beats hopes",
            "shares surge on strong good earnings",
            "great rally and happy investors win"]
NEGATIVE = ["shares crash amid panic and fear",
            "weak slump deepens the bad loss",
            "terrible failure as markets plunge"]


def build_dataset(n=200, seed=11):
    rng = random.Random(seed)
    lex = load_lexicon()
    cfg = CleanConfig(stem=False, lemmatize=False)
    docs, labels = [], []
    for i in range(n):
        words = (POSITIVE if i % 2 == 0 else NEGATIVE)[i % 3].split()
        rng.shuffle(words)
        text = " ".join(words)
        compound = polarity_scores(text, lex).compound
        if compound == 0.0:
            continue
        docs.append(tuple(clean_pipeline(text, cfg)))
        labels.append(1 if compound > 0 else 0)
    return docs, np.array(labels)


def main():
    docs, y = build_dataset()
    vocab = fit_vocabulary(docs)
    X = pad_sequences(texts_to_sequences(docs, vocab), maxlen=8)

    cfg = NetworkConfig(recurrent="lstm", hidden_units=16, dense_units=16,
                        dropout=0.2, vocab_size=len(vocab.word_index) + 1,
                        embedding_dim=8, epochs=25, lr=5e-3, seed=0)
    state, train_report = train(cfg, X, y, SplitSpec(0.2, seed=0))
    print(f"stopped after epoch {train_report.epochs_run} "
          f"({train_report.stop_reason}), "
          f"best val acc {max(train_report.val_acc):.3f}")

    y_pred = classify(predict(state, X), threshold=cfg.threshold)
    print(report(y, y_pred).to_text())


if __name__ == "__main__":
    main()
